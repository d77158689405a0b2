//! Integer segments and (virtual) extended segments over them.
//!
//! A [`ZSegment`] `[A,B]` is the run `A, A-1, ..., B` with `A >= B`. A
//! [`VExtZSeg`] decorates it with an integer `l <= b/2` (where `b = A-B+1`)
//! and a sign `eta`; it is *extended* (an [`ExtZSeg`]) when `l >= 0`.
//! When `b = 2l` the sign carries no information and is stored as `+1`.
//!
//! Over a fixed support the extended segments are totally ordered
//!
//! ```text
//! (0,+) > (1,+) > ... > (floor(b/2), +/-) > ... > (1,-) > (0,-)
//! ```
//!
//! and [`VExtZSeg::rank`] is the position in that order (0 for `(0,+)`),
//! extended to virtual segments so that it is a bijection onto `Z`.
//! Two segments are adjacent exactly when their ranks differ by one.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{ArthurError, Result};
use crate::halfint::Sign;

/// The integer segment `[A,B]`, `A >= B`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSegment", into = "RawSegment")]
pub struct ZSegment {
    hi: i64,
    lo: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSegment {
    #[serde(rename = "A")]
    hi: i64,
    #[serde(rename = "B")]
    lo: i64,
}

impl TryFrom<RawSegment> for ZSegment {
    type Error = ArthurError;
    fn try_from(raw: RawSegment) -> Result<Self> {
        ZSegment::new(raw.hi, raw.lo)
    }
}

impl From<ZSegment> for RawSegment {
    fn from(d: ZSegment) -> Self {
        RawSegment { hi: d.hi, lo: d.lo }
    }
}

impl ZSegment {
    pub fn new(hi: i64, lo: i64) -> Result<Self> {
        if hi < lo {
            return Err(ArthurError::InvalidSegment(format!("[{hi},{lo}] has A < B")));
        }
        Ok(ZSegment { hi, lo })
    }

    /// The upper endpoint `A`.
    pub fn hi(self) -> i64 {
        self.hi
    }

    /// The lower endpoint `B`.
    pub fn lo(self) -> i64 {
        self.lo
    }

    /// `b = A - B + 1`, never zero.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> i64 {
        self.hi - self.lo + 1
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(self, other: ZSegment) -> bool {
        self.hi <= other.hi && self.lo >= other.lo
    }

    /// `self ⊆ other` or `other ⊆ self`.
    pub fn is_nested_with(self, other: ZSegment) -> bool {
        self.is_subset_of(other) || other.is_subset_of(self)
    }

    pub fn shift(self, t: i64) -> ZSegment {
        ZSegment {
            hi: self.hi + t,
            lo: self.lo + t,
        }
    }
}

/// `(first, second)` may appear in this order: not `A1 > A2 and B1 > B2`.
pub fn admissible_pair(first: ZSegment, second: ZSegment) -> bool {
    !(first.hi > second.hi && first.lo > second.lo)
}

impl fmt::Display for ZSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.hi, self.lo)
    }
}

impl fmt::Debug for ZSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A virtual extended segment `([A,B], l, eta)` with `l <= b/2`.
///
/// Always canonical: `eta = +1` whenever `b = 2l`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawExt", into = "RawExt")]
pub struct VExtZSeg {
    seg: ZSegment,
    l: i64,
    eta: Sign,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawExt {
    #[serde(rename = "A")]
    hi: i64,
    #[serde(rename = "B")]
    lo: i64,
    l: i64,
    eta: Sign,
}

impl TryFrom<RawExt> for VExtZSeg {
    type Error = ArthurError;
    fn try_from(raw: RawExt) -> Result<Self> {
        VExtZSeg::new(ZSegment::new(raw.hi, raw.lo)?, raw.l, raw.eta)
    }
}

impl From<VExtZSeg> for RawExt {
    fn from(e: VExtZSeg) -> Self {
        RawExt {
            hi: e.seg.hi,
            lo: e.seg.lo,
            l: e.l,
            eta: e.eta,
        }
    }
}

const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

impl VExtZSeg {
    /// Fails if `2l > b`.
    pub fn new(seg: ZSegment, l: i64, eta: Sign) -> Result<Self> {
        if 2 * l > seg.len() {
            return Err(ArthurError::InvalidSegment(format!(
                "l = {l} exceeds half the length of {seg}"
            )));
        }
        let eta = if 2 * l == seg.len() { Sign::Plus } else { eta };
        Ok(VExtZSeg { seg, l, eta })
    }

    /// Shorthand for tests and fixtures; panics on invalid data.
    pub fn of(hi: i64, lo: i64, l: i64, eta: i64) -> Self {
        let eta = Sign::from_value(eta).expect("eta must be +1 or -1");
        VExtZSeg::new(ZSegment::new(hi, lo).unwrap(), l, eta).unwrap()
    }

    pub fn support(self) -> ZSegment {
        self.seg
    }

    pub fn l(self) -> i64 {
        self.l
    }

    /// The canonical sign.
    pub fn eta(self) -> Sign {
        self.eta
    }

    /// `b = A - B + 1`, never zero.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> i64 {
        self.seg.len()
    }

    pub fn is_extended(self) -> bool {
        self.l >= 0
    }

    /// Whether the sign is identified away (`b = 2l`).
    pub fn sign_is_free(self) -> bool {
        2 * self.l == self.seg.len()
    }

    /// All representatives of the sign.
    pub fn lifts(self) -> &'static [Sign] {
        if self.sign_is_free() {
            &BOTH
        } else {
            match self.eta {
                Sign::Plus => &BOTH[..1],
                Sign::Minus => &BOTH[1..],
            }
        }
    }

    /// Position in the total order over the support; `(0,+)` has rank 0,
    /// `(0,-)` has rank `b`, virtual segments fall outside `0..=b`.
    pub fn rank(self) -> i64 {
        match self.eta {
            Sign::Plus => self.l,
            Sign::Minus => self.seg.len() - self.l,
        }
    }

    /// Inverse of [`VExtZSeg::rank`].
    pub fn from_rank(seg: ZSegment, rank: i64) -> VExtZSeg {
        let b = seg.len();
        if 2 * rank <= b {
            VExtZSeg::new(seg, rank, Sign::Plus).expect("rank below b/2")
        } else {
            VExtZSeg::new(seg, b - rank, Sign::Minus).expect("rank above b/2")
        }
    }

    pub fn shift(self, t: i64) -> VExtZSeg {
        VExtZSeg {
            seg: self.seg.shift(t),
            ..self
        }
    }

    /// Same segment with the sign replaced (and re-canonicalized).
    pub fn with_eta(self, eta: Sign) -> VExtZSeg {
        VExtZSeg::new(self.seg, self.l, eta).expect("l unchanged")
    }
}

impl PartialOrd for VExtZSeg {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VExtZSeg {
    /// Support first, then rank in the total order.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.seg, self.rank()).cmp(&(other.seg, other.rank()))
    }
}

impl fmt::Display for VExtZSeg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign_is_free() {
            write!(f, "({},{},*)", self.seg, self.l)
        } else {
            write!(f, "({},{},{})", self.seg, self.l, self.eta)
        }
    }
}

impl fmt::Debug for VExtZSeg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An extended segment: a [`VExtZSeg`] with `l >= 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "VExtZSeg", into = "VExtZSeg")]
pub struct ExtZSeg(VExtZSeg);

impl TryFrom<VExtZSeg> for ExtZSeg {
    type Error = ArthurError;
    fn try_from(e: VExtZSeg) -> Result<Self> {
        if e.is_extended() {
            Ok(ExtZSeg(e))
        } else {
            Err(ArthurError::InvalidSegment(format!("{e} is virtual")))
        }
    }
}

impl From<ExtZSeg> for VExtZSeg {
    fn from(e: ExtZSeg) -> Self {
        e.0
    }
}

impl Deref for ExtZSeg {
    type Target = VExtZSeg;
    fn deref(&self) -> &VExtZSeg {
        &self.0
    }
}

impl ExtZSeg {
    pub fn new(seg: ZSegment, l: i64, eta: Sign) -> Result<Self> {
        VExtZSeg::new(seg, l, eta)?.try_into()
    }

    /// Shorthand for tests and fixtures; panics on invalid data.
    pub fn of(hi: i64, lo: i64, l: i64, eta: i64) -> Self {
        VExtZSeg::of(hi, lo, l, eta).try_into().unwrap()
    }

    pub fn virt(self) -> VExtZSeg {
        self.0
    }
}

impl fmt::Display for ExtZSeg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for ExtZSeg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// All `A - B + 2` extended segments over `delta`, descending in the total order.
pub fn enumerate_eseg(delta: ZSegment) -> Vec<ExtZSeg> {
    (0..=delta.len())
        .map(|r| ExtZSeg(VExtZSeg::from_rank(delta, r)))
        .collect()
}

/// Adjacency, evaluated on lifts.
pub fn is_adjacent(e1: VExtZSeg, e2: VExtZSeg) -> bool {
    if e1.seg != e2.seg {
        return false;
    }
    let step = (e1.l - e2.l).abs() == 1
        && e1
            .lifts()
            .iter()
            .any(|s1| e2.lifts().contains(s1));
    let middle = e1.len() % 2 == 1
        && e1.l == e2.l
        && 2 * e1.l == e1.len() - 1
        && e1.eta != e2.eta;
    step || middle
}

/// Whether the members share a support, are distinct, and chain by adjacency.
pub fn is_interval(members: &[VExtZSeg]) -> bool {
    let Some(first) = members.first() else {
        return true;
    };
    if members.iter().any(|e| e.seg != first.seg) {
        return false;
    }
    let ranks: BTreeSet<i64> = members.iter().map(|e| e.rank()).collect();
    if ranks.len() != members.len() {
        return false;
    }
    let lo = *ranks.first().unwrap();
    let hi = *ranks.last().unwrap();
    hi - lo + 1 == ranks.len() as i64
}

/// `e†`: same support and `l`, sign flipped by `(-1)^{A-B}`.
pub fn dagger(e: ExtZSeg) -> ExtZSeg {
    let flip = Sign::parity(e.seg.hi - e.seg.lo);
    ExtZSeg(e.0.with_eta(e.eta * flip))
}

/// Translate both endpoints by `t`.
pub fn shift(e: VExtZSeg, t: i64) -> VExtZSeg {
    e.shift(t)
}

/// A set of extended segments over one support forming an interval.
///
/// Members are kept in descending total order (ascending rank).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EsegInterval {
    delta: ZSegment,
    members: Vec<ExtZSeg>,
}

impl EsegInterval {
    pub fn new(delta: ZSegment, members: impl IntoIterator<Item = ExtZSeg>) -> Result<Self> {
        let mut members: Vec<ExtZSeg> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|e| e.support() != delta) {
            return Err(ArthurError::NotAnInterval(format!(
                "{bad} does not have support {delta}"
            )));
        }
        members.sort_by_key(|e| e.rank());
        let as_virtual: Vec<VExtZSeg> = members.iter().map(|e| e.0).collect();
        if !is_interval(&as_virtual) {
            return Err(ArthurError::NotAnInterval(format!("{as_virtual:?} over {delta}")));
        }
        Ok(EsegInterval { delta, members })
    }

    pub fn empty(delta: ZSegment) -> Self {
        EsegInterval {
            delta,
            members: Vec::new(),
        }
    }

    /// The whole of `Eseg_delta`.
    pub fn full(delta: ZSegment) -> Self {
        EsegInterval {
            delta,
            members: enumerate_eseg(delta),
        }
    }

    /// Members with ranks in `lo..=hi`, clipped to `0..=b`.
    fn from_rank_range(delta: ZSegment, lo: i64, hi: i64) -> Self {
        let lo = lo.max(0);
        let hi = hi.min(delta.len());
        let members = (lo..=hi)
            .map(|r| ExtZSeg(VExtZSeg::from_rank(delta, r)))
            .collect();
        EsegInterval { delta, members }
    }

    pub fn delta(&self) -> ZSegment {
        self.delta
    }

    pub fn members(&self) -> &[ExtZSeg] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: VExtZSeg) -> bool {
        self.members.iter().any(|m| m.0 == e)
    }

    /// Set intersection; always an interval.
    pub fn intersect(&self, other: &EsegInterval) -> EsegInterval {
        let members = self
            .members
            .iter()
            .filter(|e| other.members.contains(e))
            .copied()
            .collect();
        EsegInterval {
            delta: self.delta,
            members,
        }
    }

    fn rank_bounds(&self) -> Option<(i64, i64)> {
        Some((self.members.first()?.rank(), self.members.last()?.rank()))
    }
}

impl fmt::Debug for EsegInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.delta, self.members)
    }
}

/// Intervals adjacent to `s`.
///
/// `s` is lifted to virtual intervals by optionally adding one virtual
/// neighbour on each open side; each lift is shifted by one step in both
/// directions and cut back to `Eseg_delta`.
pub fn adjacent_intervals(s: &EsegInterval) -> BTreeSet<EsegInterval> {
    let delta = s.delta;
    let b = delta.len();
    let lifts: Vec<(i64, i64)> = match s.rank_bounds() {
        None => vec![(-1, -1), (b + 1, b + 1)],
        Some((p, q)) => {
            let lows = if p == 0 { vec![p, p - 1] } else { vec![p] };
            let highs = if q == b { vec![q, q + 1] } else { vec![q] };
            lows.iter()
                .flat_map(|&lo| highs.iter().map(move |&hi| (lo, hi)))
                .collect()
        }
    };
    lifts
        .into_iter()
        .flat_map(|(lo, hi)| [(lo - 1, hi - 1), (lo + 1, hi + 1)])
        .map(|(lo, hi)| EsegInterval::from_rank_range(delta, lo, hi))
        .collect()
}
