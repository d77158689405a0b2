//! Decomposition of the unitary induction `u_rho(a,b) ⋊ pi(E)`,
//! reducibility, and signed component counts.

use serde::Serialize;

use crate::error::{ArthurError, Result};
use crate::halfint::{HalfInt, Sign};
use crate::multisegment::{character, good_parity, pi_nonzero, Cuspidal, ExtMultiSegment, Row};
use crate::segments::{enumerate_eseg, ExtZSeg, ZSegment};
use crate::sequences::{canonical_p2, insert_into_p2, ZSeq};

/// One irreducible constituent, labelled by the inserted ℤ-level segment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub inserted: ExtZSeg,
    pub multisegment: ExtMultiSegment,
}

/// The segment `[A,B]_rho` attached to `rho ⊗ S_a ⊗ S_b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InsertedSupport {
    #[serde(rename = "A")]
    pub hi: HalfInt,
    #[serde(rename = "B")]
    pub lo: HalfInt,
}

impl InsertedSupport {
    /// `A = (a+b)/2 - 1`, `B = (a-b)/2`.
    pub fn of(a: i64, b: i64) -> Self {
        InsertedSupport {
            hi: HalfInt::from_twice(a + b - 2),
            lo: HalfInt::from_twice(a - b),
        }
    }

    pub fn zlevel(self) -> ZSegment {
        ZSegment::new(self.hi.floor(), self.lo.floor()).expect("A >= B")
    }
}

/// The constituents in the total order of their inserted segments.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InductionResult {
    pub rho: String,
    pub a: i64,
    pub b: i64,
    pub inserted_support: InsertedSupport,
    pub components: Vec<Component>,
}

impl InductionResult {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

fn check_triple(a: i64, b: i64) -> Result<()> {
    if a < 1 || b < 1 {
        return Err(ArthurError::InvalidInput(format!("a = {a}, b = {b} must be positive")));
    }
    Ok(())
}

fn require_nonzero(e: &ExtMultiSegment, cap: usize) -> Result<()> {
    if pi_nonzero(e, cap)? {
        Ok(())
    } else {
        Err(ArthurError::Vanishing("pi(E) is zero".to_string()))
    }
}

/// Constituents of `u_rho(a,b) ⋊ pi(E)`, one per non-vanishing insertion.
pub fn induce(e: &ExtMultiSegment, rho: &Cuspidal, a: i64, b: i64, cap: usize) -> Result<InductionResult> {
    check_triple(a, b)?;
    require_nonzero(e, cap)?;
    if !good_parity(rho, a, b, e.group.kind) {
        return Err(ArthurError::BadParity(format!(
            "{} x S_{a} x S_{b} for {:?}",
            rho.name, e.group.kind
        )));
    }
    if let Some(existing) = e.row(&rho.name) {
        if existing.rho != *rho {
            return Err(ArthurError::Cuspidal(format!("{} differs from the row's cuspidal", rho.name)));
        }
    }
    let support = InsertedSupport::of(a, b);
    let offset = support.lo.frac();
    let row_index = e.rows.iter().position(|r| r.rho.name == rho.name);
    let p2 = match row_index {
        Some(i) => canonical_p2(&e.rows[i].zlevel()?, cap)?,
        None => ZSeq::empty(),
    };
    let group = e.group.grown(2 * rho.dim * a * b);

    let mut components = Vec::new();
    for ins in enumerate_eseg(support.zlevel()) {
        let row = Row::from_zlevel(rho, &insert_into_p2(&p2, ins), offset)?;
        let mut rows = e.rows.clone();
        match row_index {
            Some(i) => rows[i] = row,
            None => rows.push(row),
        }
        let candidate = ExtMultiSegment::new(group, rows);
        if pi_nonzero(&candidate, cap)? {
            components.push(Component {
                inserted: ins,
                multisegment: candidate,
            });
        }
    }
    Ok(InductionResult {
        rho: rho.name.clone(),
        a,
        b,
        inserted_support: support,
        components,
    })
}

/// Whether `u_rho(a,b) ⋊ pi(E)` is reducible.
pub fn is_reducible(e: &ExtMultiSegment, rho: &Cuspidal, a: i64, b: i64, cap: usize) -> Result<bool> {
    check_triple(a, b)?;
    if !good_parity(rho, a, b, e.group.kind) {
        require_nonzero(e, cap)?;
        return Ok(false);
    }
    Ok(induce(e, rho, a, b, cap)?.len() > 1)
}

/// Numbers `(m+, m-)` of constituents whose character at `rho ⊗ S_a ⊗ S_b`
/// is `+1` and `-1`.
pub fn sign_counts(e: &ExtMultiSegment, rho: &Cuspidal, a: i64, b: i64, cap: usize) -> Result<(usize, usize)> {
    check_triple(a, b)?;
    if e.contains_summand(&rho.name, a, b) {
        return Err(ArthurError::ContainsSummand {
            rho: rho.name.clone(),
            a,
            b,
        });
    }
    require_nonzero(e, cap)?;
    let base = e.normalized_p2(cap)?;
    let result = induce(&base, rho, a, b, cap)?;
    let (mut plus, mut minus) = (0usize, 0usize);
    for c in &result.components {
        let value = character(&c.multisegment, cap)?
            .get(&rho.name, a, b)
            .expect("inserted class carries a value");
        match value {
            Sign::Plus => plus += 1,
            Sign::Minus => minus += 1,
        }
    }
    if plus.abs_diff(minus) > 1 {
        return Err(ArthurError::SignCountBound { plus, minus });
    }
    Ok((plus, minus))
}
