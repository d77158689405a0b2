//! Error type shared by every module.

use thiserror::Error;

/// Result alias used across the crate.
pub type Result<T> = std::result::Result<T, ArthurError>;

/// Every failure the engine reports.
///
/// Variants fall into three families, see [`ArthurError::family`]:
/// malformed or out-of-contract input, exhausted orbit budgets, and
/// broken internal invariants (which always indicate a bug).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArthurError {
    /// A segment or extended segment violates its own shape constraints.
    #[error("invalid segment: {0}")]
    InvalidSegment(String),

    /// A pair or sequence of supports is not admissible.
    #[error("not admissible: {0}")]
    NotAdmissible(String),

    /// Row exchange requested on supports that are not nested.
    #[error("supports {0} and {1} are not nested")]
    Incomparable(String, String),

    /// An exchange position outside `0..len-1`.
    #[error("exchange index {index} out of range for a sequence of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    /// A set that was required to be an interval is not one.
    #[error("not an interval: {0}")]
    NotAnInterval(String),

    /// The orbit closure grew past the configured cap.
    #[error("orbit exceeded the cap of {cap} members")]
    CapExceeded { cap: usize },

    /// An operation that requires a non-vanishing input got a vanishing one.
    #[error("vanishing input: {0}")]
    Vanishing(String),

    /// A row violates the admissibility condition (P).
    #[error("row {rho}: order is not admissible at positions {first} and {second}")]
    OrderNotAdmissible {
        rho: String,
        first: usize,
        second: usize,
    },

    /// A row violates (P'), required before characters can be read off.
    #[error("row {rho}: order violates (P') at positions {first} and {second}")]
    OrderNotPPrime {
        rho: String,
        first: usize,
        second: usize,
    },

    /// `A + B < 0` for some segment.
    #[error("row {rho}, segment {index}: A + B is negative")]
    NegativeCenter { rho: String, index: usize },

    /// A summand is not of good parity for the group.
    #[error("bad parity: {0}")]
    BadParity(String),

    /// The global sign product is -1.
    #[error("sign condition fails: product of row signs is -1")]
    SignConditionFailed,

    /// Endpoints of a segment or row do not share a fractional part.
    #[error("row {rho}, segment {index}: endpoints are not congruent mod 1")]
    EndpointMismatch { rho: String, index: usize },

    /// The summed dimension does not match the group.
    #[error("dimension mismatch: group needs {expected}, parameter has {actual}")]
    DimensionMismatch { expected: i64, actual: i64 },

    /// Cuspidal registry problems and dangling references.
    #[error("cuspidal: {0}")]
    Cuspidal(String),

    /// A row that the operation needs is absent.
    #[error("no row for cuspidal {0}")]
    MissingRow(String),

    /// The parameter already contains the summand being induced.
    #[error("parameter already contains {rho} x S_{a} x S_{b}")]
    ContainsSummand { rho: String, a: i64, b: i64 },

    /// Any other out-of-contract input.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An orbit contained zero or several (P'') members.
    #[error("internal: orbit has {count} members satisfying (P'')")]
    CanonicalNotUnique { count: usize },

    /// A set proven to be an interval was not one.
    #[error("internal: interval violation: {0}")]
    IntervalViolation(String),

    /// A computed character broke the component-group constraints.
    #[error("internal: character invariant broken: {0}")]
    CharacterInvariant(String),

    /// The bound |m+ - m-| <= 1 failed.
    #[error("internal: sign counts ({plus}, {minus}) differ by more than one")]
    SignCountBound { plus: usize, minus: usize },
}

/// Coarse classification used for exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorFamily {
    Input,
    Cap,
    Internal,
}

impl ArthurError {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        use ArthurError::*;
        match self {
            InvalidSegment(_) => "InvalidSegment",
            NotAdmissible(_) => "NotAdmissible",
            Incomparable(..) => "Incomparable",
            IndexOutOfRange { .. } => "IndexOutOfRange",
            NotAnInterval(_) => "NotAnInterval",
            CapExceeded { .. } => "CapExceeded",
            Vanishing(_) => "Vanishing",
            OrderNotAdmissible { .. } => "OrderNotAdmissible",
            OrderNotPPrime { .. } => "OrderNotPPrime",
            NegativeCenter { .. } => "NegativeCenter",
            BadParity(_) => "BadParity",
            SignConditionFailed => "SignConditionFailed",
            EndpointMismatch { .. } => "EndpointMismatch",
            DimensionMismatch { .. } => "DimensionMismatch",
            Cuspidal(_) => "Cuspidal",
            MissingRow(_) => "MissingRow",
            ContainsSummand { .. } => "ContainsSummand",
            InvalidInput(_) => "InvalidInput",
            CanonicalNotUnique { .. } => "CanonicalNotUnique",
            IntervalViolation(_) => "IntervalViolation",
            CharacterInvariant(_) => "CharacterInvariant",
            SignCountBound { .. } => "SignCountBound",
        }
    }

    pub fn family(&self) -> ErrorFamily {
        use ArthurError::*;
        match self {
            CapExceeded { .. } => ErrorFamily::Cap,
            CanonicalNotUnique { .. }
            | IntervalViolation(_)
            | CharacterInvariant(_)
            | SignCountBound { .. } => ErrorFamily::Internal,
            _ => ErrorFamily::Input,
        }
    }
}
