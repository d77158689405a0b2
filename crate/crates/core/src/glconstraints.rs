//! Even-cardinality constraint on the non-tempered exponents of a local
//! component of a self-dual cuspidal representation of `GL_N`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::halfint::Exponent;
use crate::multisegment::{Cuspidal, SelfDuality};

/// Type of the global self-dual representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GlobalType {
    Orthogonal,
    Symplectic,
}

impl GlobalType {
    pub fn duality(self) -> SelfDuality {
        match self {
            GlobalType::Orthogonal => SelfDuality::Orthogonal,
            GlobalType::Symplectic => SelfDuality::Symplectic,
        }
    }
}

/// A non-unitary factor `u_rho(a,1) |.|^x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GLNuFactor {
    pub rho: Cuspidal,
    pub a: i64,
    pub x: Exponent,
}

/// A tempered factor `u_rho(a,1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GLTemperedFactor {
    pub rho: Cuspidal,
    pub a: i64,
}

/// The local component in Tadić shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GLLocalComponent {
    pub global_type: GlobalType,
    pub nu: Vec<GLNuFactor>,
    pub tempered: Vec<GLTemperedFactor>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintReport {
    pub ok: bool,
    pub violations: Vec<usize>,
}

/// Self-duality type of the Speh factor `u_rho(a,1)`.
pub fn speh_type(rho: &Cuspidal, a: i64) -> SelfDuality {
    match (rho.selfdual, a.rem_euclid(2) == 1) {
        (SelfDuality::None, _) => SelfDuality::None,
        (SelfDuality::Orthogonal, true) | (SelfDuality::Symplectic, false) => SelfDuality::Orthogonal,
        (SelfDuality::Orthogonal, false) | (SelfDuality::Symplectic, true) => SelfDuality::Symplectic,
    }
}

/// Indices of `nu` whose class has the global type, is absent from the
/// tempered part, and occurs an odd number of times.
pub fn check_constraint(c: &GLLocalComponent) -> ConstraintReport {
    let mut count: HashMap<(&str, i64), usize> = HashMap::new();
    for n in &c.nu {
        *count.entry((n.rho.name.as_str(), n.a)).or_default() += 1;
    }
    let violations: Vec<usize> = c
        .nu
        .iter()
        .enumerate()
        .filter(|(_, n)| {
            speh_type(&n.rho, n.a) == c.global_type.duality()
                && !c.tempered.iter().any(|t| t.rho.name == n.rho.name && t.a == n.a)
                && count[&(n.rho.name.as_str(), n.a)] % 2 == 1
        })
        .map(|(i, _)| i)
        .collect();
    ConstraintReport {
        ok: violations.is_empty(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi() -> Cuspidal {
        Cuspidal::new("chi", 1, SelfDuality::Orthogonal)
    }

    fn one() -> Cuspidal {
        Cuspidal::new("1", 1, SelfDuality::Orthogonal)
    }

    fn nu(rho: &Cuspidal, a: i64) -> GLNuFactor {
        GLNuFactor {
            rho: rho.clone(),
            a,
            x: Exponent::new(1, 4),
        }
    }

    fn temp(rho: &Cuspidal, a: i64) -> GLTemperedFactor {
        GLTemperedFactor { rho: rho.clone(), a }
    }

    #[test]
    fn speh_type_examples() {
        assert_eq!(speh_type(&chi(), 1), SelfDuality::Orthogonal);
        assert_eq!(speh_type(&chi(), 2), SelfDuality::Symplectic);
        assert_eq!(speh_type(&Cuspidal::with_dual("r", 2, "rv"), 3), SelfDuality::None);
        let s = Cuspidal::new("s", 2, SelfDuality::Symplectic);
        assert_eq!(speh_type(&s, 2), SelfDuality::Orthogonal);
        assert_eq!(speh_type(&s, 1), SelfDuality::Symplectic);
    }

    #[test]
    fn constraint_examples() {
        let orth = |nu, tempered| GLLocalComponent {
            global_type: GlobalType::Orthogonal,
            nu,
            tempered,
        };
        let r = check_constraint(&orth(vec![nu(&chi(), 1)], vec![temp(&one(), 1)]));
        assert_eq!(r, ConstraintReport { ok: false, violations: vec![0] });
        assert!(!check_constraint(&orth(vec![nu(&chi(), 1)], vec![])).ok);
        assert!(check_constraint(&orth(vec![nu(&chi(), 1), nu(&chi(), 1)], vec![])).ok);
        assert!(check_constraint(&orth(vec![nu(&chi(), 1)], vec![temp(&chi(), 1)])).ok);
    }

    #[test]
    fn symplectic_type_ignores_orthogonal_factors() {
        let c = GLLocalComponent {
            global_type: GlobalType::Symplectic,
            nu: vec![nu(&chi(), 1), nu(&chi(), 2)],
            tempered: vec![],
        };
        assert_eq!(check_constraint(&c).violations, [1]);
    }
}
