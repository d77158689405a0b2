//! Hermitian and unitary membership for representations given in the
//! decomposed form `(x nu-factors) x (bad-parity factors) ⋊ pi(E)`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{ArthurError, Result};
use crate::halfint::Exponent;
use crate::induction::is_reducible;
use crate::multisegment::{good_parity, pi_nonzero, Cuspidal, ExtMultiSegment, GroupType};

/// A non-unitary factor `u_rho(a,b) |.|^x` with `0 < x < 1/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuEntry {
    pub rho: Cuspidal,
    pub a: i64,
    pub b: i64,
    pub x: Exponent,
}

/// A unitary factor `u_rho(a,b)` of bad parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BpEntry {
    pub rho: Cuspidal,
    pub a: i64,
    pub b: i64,
}

/// A representation in decomposed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct APlusRep {
    pub group: GroupType,
    pub nu: Vec<NuEntry>,
    pub bp: Vec<BpEntry>,
    pub gp: ExtMultiSegment,
}

/// Reducibility data for one `nu` index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub index: usize,
    pub reducible: bool,
    pub class_cardinality: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitarityVerdict {
    pub hermitian: bool,
    pub unitary: bool,
    pub witnesses: Vec<Witness>,
}

impl APlusRep {
    /// Checks the shape constraints of every part.
    pub fn validate(&self, cap: usize) -> Result<()> {
        for (i, n) in self.nu.iter().enumerate() {
            if n.a < 1 || n.b < 1 {
                return Err(ArthurError::InvalidInput(format!("nu[{i}]: a and b must be positive")));
            }
            if !n.x.is_complementary() {
                return Err(ArthurError::InvalidInput(format!("nu[{i}]: x = {} is not in (0, 1/2)", n.x)));
            }
        }
        for (i, p) in self.bp.iter().enumerate() {
            if p.a < 1 || p.b < 1 {
                return Err(ArthurError::InvalidInput(format!("bp[{i}]: a and b must be positive")));
            }
            if good_parity(&p.rho, p.a, p.b, self.group.kind) {
                return Err(ArthurError::InvalidInput(format!("bp[{i}]: {} x S_{} x S_{} is of good parity", p.rho.name, p.a, p.b)));
            }
        }
        if self.gp.group.kind != self.group.kind {
            return Err(ArthurError::InvalidInput("gp is for a different group kind".to_string()));
        }
        let outer: i64 = self.nu.iter().map(|n| 2 * n.rho.dim * n.a * n.b).sum::<i64>()
            + self.bp.iter().map(|p| 2 * p.rho.dim * p.a * p.b).sum::<i64>();
        let actual = self.gp.group.dual_dim() + outer;
        if actual != self.group.dual_dim() {
            return Err(ArthurError::DimensionMismatch {
                expected: self.group.dual_dim(),
                actual,
            });
        }
        if !pi_nonzero(&self.gp, cap)? {
            return Err(ArthurError::InvalidInput("pi(gp) is zero".to_string()));
        }
        Ok(())
    }
}

/// Whether every non-self-dual class `(rho, a, b, x)` in `nu` is matched by
/// `(rho^v, a, b, x)` with the same multiplicity.
pub fn is_hermitian(pi: &APlusRep) -> bool {
    let mut count: HashMap<(&str, i64, i64, Exponent), i64> = HashMap::new();
    for n in &pi.nu {
        *count.entry((n.rho.name.as_str(), n.a, n.b, n.x)).or_default() += 1;
    }
    pi.nu.iter().filter(|n| !n.rho.is_selfdual()).all(|n| {
        let own = count[&(n.rho.name.as_str(), n.a, n.b, n.x)];
        let dual = count
            .get(&(n.rho.dual_name(), n.a, n.b, n.x))
            .copied()
            .unwrap_or(0);
        own == dual
    })
}

/// The unitarity verdict with per-index witnesses.
pub fn is_unitary(pi: &APlusRep, cap: usize) -> Result<UnitarityVerdict> {
    pi.validate(cap)?;
    let hermitian = is_hermitian(pi);
    let mut class_size: BTreeMap<(&str, i64, i64), usize> = BTreeMap::new();
    for n in &pi.nu {
        *class_size.entry((n.rho.name.as_str(), n.a, n.b)).or_default() += 1;
    }
    let mut reducible_cache: BTreeMap<(&str, i64, i64), bool> = BTreeMap::new();
    let mut witnesses = Vec::with_capacity(pi.nu.len());
    for (index, n) in pi.nu.iter().enumerate() {
        let key = (n.rho.name.as_str(), n.a, n.b);
        let reducible = match reducible_cache.get(&key) {
            Some(&r) => r,
            None => {
                let r = good_parity(&n.rho, n.a, n.b, pi.group.kind)
                    && is_reducible(&pi.gp, &n.rho, n.a, n.b, cap)?;
                reducible_cache.insert(key, r);
                r
            }
        };
        witnesses.push(Witness {
            index,
            reducible,
            class_cardinality: class_size[&key],
        });
    }
    let unitary = hermitian && witnesses.iter().all(|w| !w.reducible || w.class_cardinality % 2 == 0);
    Ok(UnitarityVerdict {
        hermitian,
        unitary,
        witnesses,
    })
}
