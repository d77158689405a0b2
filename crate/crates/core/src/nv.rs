//! Pairwise non-vanishing, the support order, one-sided NV sets, and the
//! row-exchange operator on ordered pairs.

use crate::error::{ArthurError, Result};
use crate::halfint::Sign;
use crate::segments::{
    admissible_pair, enumerate_eseg, EsegInterval, ExtZSeg, VExtZSeg, ZSegment,
};

/// `(-1)^{A1-B1} * eta1 * eta2` for the given lifts.
pub fn epsilon(first: ZSegment, eta1: Sign, eta2: Sign) -> Sign {
    Sign::parity(first.hi() - first.lo()) * eta1 * eta2
}

fn check_admissible(d1: ZSegment, d2: ZSegment) -> Result<()> {
    if admissible_pair(d1, d2) {
        Ok(())
    } else {
        Err(ArthurError::NotAdmissible(format!("({d1}, {d2})")))
    }
}

/// All applicable case conditions for one choice of lifts.
fn conditions_hold(e1: VExtZSeg, eta1: Sign, e2: VExtZSeg, eta2: Sign) -> bool {
    let (d1, d2) = (e1.support(), e2.support());
    let (a1, b1, a2, b2) = (d1.hi(), d1.lo(), d2.hi(), d2.lo());
    let (l1, l2) = (e1.l(), e2.l());
    let (len1, len2) = (d1.len(), d2.len());
    let plus = epsilon(d1, eta1, eta2) == Sign::Plus;

    let below = a1 <= a2 && b1 <= b2;
    let inside = a1 <= a2 && b1 >= b2;
    let outside = a1 >= a2 && b1 <= b2;

    let ok_below = !below
        || if plus {
            b1 + l1 <= b2 + l2 && a1 - l1 <= a2 - l2
        } else {
            a1 - l1 < b2 + l2
        };
    let ok_inside = !inside
        || if plus {
            0 <= l2 - l1 && l2 - l1 <= len2 - len1
        } else {
            l1 + l2 >= len1
        };
    let ok_outside = !outside
        || if plus {
            0 <= l1 - l2 && l1 - l2 <= len1 - len2
        } else {
            l1 + l2 >= len2
        };
    ok_below && ok_inside && ok_outside
}

/// Whether `(e1, e2)` is a non-vanishing pair.
///
/// Virtual arguments vanish. Signs are quantified existentially over lifts.
pub fn nv_pair(e1: VExtZSeg, e2: VExtZSeg) -> Result<bool> {
    check_admissible(e1.support(), e2.support())?;
    Ok(nv_pair_admissible(e1, e2))
}

/// [`nv_pair`] for a pair already known to be admissible.
pub(crate) fn nv_pair_admissible(e1: VExtZSeg, e2: VExtZSeg) -> bool {
    if !e1.is_extended() || !e2.is_extended() {
        return false;
    }
    e1.lifts().iter().any(|&eta1| {
        e2.lifts()
            .iter()
            .any(|&eta2| conditions_hold(e1, eta1, e2, eta2))
    })
}

/// The verdict for one fixed pair of lifts.
pub fn nv_pair_with_lifts(e1: VExtZSeg, eta1: Sign, e2: VExtZSeg, eta2: Sign) -> Result<bool> {
    check_admissible(e1.support(), e2.support())?;
    if !e1.is_extended() || !e2.is_extended() {
        return Ok(false);
    }
    Ok(conditions_hold(e1, eta1, e2, eta2))
}

/// `d1 ⪯ d2`: containment, or incomparable with `B1 < B2`.
pub fn precedes(d1: ZSegment, d2: ZSegment) -> Result<bool> {
    check_admissible(d1, d2)?;
    Ok(d1.is_subset_of(d2) || (!d2.is_subset_of(d1) && d1.lo() < d2.lo()))
}

fn collect_interval(delta: ZSegment, members: Vec<ExtZSeg>) -> Result<EsegInterval> {
    EsegInterval::new(delta, members).map_err(|e| ArthurError::IntervalViolation(e.to_string()))
}

/// `{ e' in Eseg_delta2 : NV(e, e') != 0 }`; empty for a non-admissible order.
pub fn nv_right_set(e: ExtZSeg, delta2: ZSegment) -> Result<EsegInterval> {
    if !admissible_pair(e.support(), delta2) {
        return Ok(EsegInterval::empty(delta2));
    }
    let members = enumerate_eseg(delta2)
        .into_iter()
        .filter(|c| nv_pair_admissible(*e, **c))
        .collect();
    collect_interval(delta2, members)
}

/// `{ e' in Eseg_delta1 : NV(e', e) != 0 }`; empty for a non-admissible order.
pub fn nv_left_set(delta1: ZSegment, e: ExtZSeg) -> Result<EsegInterval> {
    if !admissible_pair(delta1, e.support()) {
        return Ok(EsegInterval::empty(delta1));
    }
    let members = enumerate_eseg(delta1)
        .into_iter()
        .filter(|c| nv_pair_admissible(**c, *e))
        .collect();
    collect_interval(delta1, members)
}

/// Row exchange `R(e1, e2) = (e2', e1')` on the canonical lifts.
pub fn row_exchange(e1: VExtZSeg, e2: VExtZSeg) -> Result<(VExtZSeg, VExtZSeg)> {
    row_exchange_with_lifts(e1, e1.eta(), e2, e2.eta())
}

/// Row exchange evaluated with explicit sign representatives.
pub fn row_exchange_with_lifts(
    e1: VExtZSeg,
    eta1: Sign,
    e2: VExtZSeg,
    eta2: Sign,
) -> Result<(VExtZSeg, VExtZSeg)> {
    let (d1, d2) = (e1.support(), e2.support());
    let (len1, len2) = (d1.len(), d2.len());
    let (l1, l2) = (e1.l(), e2.l());
    let plus = epsilon(d1, eta1, eta2) == Sign::Plus;
    let par1 = Sign::parity(d1.hi() - d1.lo());
    let par2 = Sign::parity(d2.hi() - d2.lo());

    let (l1n, eta1n, l2n, eta2n) = if d1.is_subset_of(d2) {
        let gap = len1 - 2 * l1;
        let (l2n, eta2n) = if plus && len2 - 2 * l2 < 2 * gap {
            (len2 - (l2 + gap), par1 * eta2)
        } else if plus {
            (l2 + gap, -(par1 * eta2))
        } else {
            (l2 - gap, -(par1 * eta2))
        };
        (l1, par2 * eta1, l2n, eta2n)
    } else if d2.is_subset_of(d1) {
        let gap = len2 - 2 * l2;
        let (l1n, eta1n) = if plus && len1 - 2 * l1 < 2 * gap {
            (len1 - (l1 + gap), par2 * eta1)
        } else if plus {
            (l1 + gap, -(par2 * eta1))
        } else {
            (l1 - gap, -(par2 * eta1))
        };
        (l1n, eta1n, l2, par1 * eta2)
    } else {
        return Err(ArthurError::Incomparable(d1.to_string(), d2.to_string()));
    };

    let out2 = VExtZSeg::new(d2, l2n, eta2n)?;
    let out1 = VExtZSeg::new(d1, l1n, eta1n)?;
    Ok((out2, out1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::segments::dagger;

    fn v(hi: i64, lo: i64, l: i64, eta: i64) -> VExtZSeg {
        VExtZSeg::of(hi, lo, l, eta)
    }

    fn seg(hi: i64, lo: i64) -> ZSegment {
        ZSegment::new(hi, lo).unwrap()
    }

    #[test]
    fn nv_pair_examples() {
        assert!(nv_pair(v(0, 0, 0, 1), v(0, 0, 0, 1)).unwrap());
        assert!(!nv_pair(v(0, 0, 0, 1), v(0, 0, 0, -1)).unwrap());
        assert!(nv_pair(v(0, 0, 0, 1), v(1, 1, 0, -1)).unwrap());
    }

    #[test]
    fn nv_pair_rejects_non_admissible_and_virtual() {
        assert!(matches!(
            nv_pair(v(1, 1, 0, 1), v(0, 0, 0, 1)),
            Err(ArthurError::NotAdmissible(_))
        ));
        assert!(!nv_pair(v(1, 0, -1, 1), v(1, 0, 0, 1)).unwrap());
    }

    #[test]
    fn precedes_examples() {
        assert!(precedes(seg(1, 1), seg(1, 0)).unwrap());
        assert!(precedes(seg(1, 0), seg(2, 1)).unwrap());
        assert!(precedes(seg(1, 0), seg(1, 0)).unwrap());
        assert!(!precedes(seg(1, 0), seg(1, 1)).unwrap());
        assert!(precedes(seg(1, 1), seg(0, 0)).is_err());
    }

    #[test]
    fn right_set_examples() {
        let s = nv_right_set(ExtZSeg::of(1, 0, 1, 1), seg(1, 0)).unwrap();
        assert_eq!(s.members(), [ExtZSeg::of(1, 0, 1, 1)]);

        let s = nv_right_set(ExtZSeg::of(0, 0, 0, 1), seg(1, 1)).unwrap();
        assert_eq!(s, EsegInterval::full(seg(1, 1)));

        let s = nv_right_set(ExtZSeg::of(1, 1, 0, 1), seg(0, 0)).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn left_set_examples() {
        let s = nv_left_set(seg(1, 0), ExtZSeg::of(1, 0, 1, 1)).unwrap();
        assert_eq!(s.members(), [ExtZSeg::of(1, 0, 1, 1)]);

        let s = nv_left_set(seg(0, 0), ExtZSeg::of(1, 1, 0, 1)).unwrap();
        assert_eq!(s, EsegInterval::full(seg(0, 0)));

        let s = nv_left_set(seg(1, 1), ExtZSeg::of(0, 0, 0, 1)).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn row_exchange_examples() {
        assert_eq!(
            row_exchange(v(1, 0, 1, 1), v(1, 0, 0, 1)).unwrap(),
            (v(1, 0, 0, 1), v(1, 0, 1, 1))
        );
        assert_eq!(
            row_exchange(v(1, 0, 0, 1), v(0, 0, 0, 1)).unwrap(),
            (v(0, 0, 0, -1), v(1, 0, -1, -1))
        );
        let e = ExtZSeg::of(2, 0, 1, 1);
        assert_eq!(
            row_exchange(e.virt(), dagger(e).virt()).unwrap(),
            (e.virt(), dagger(e).virt())
        );
        assert_eq!(
            row_exchange(v(1, 1, 0, 1), v(1, 0, 0, 1)).unwrap(),
            (v(1, 0, 1, 1), v(1, 1, 0, -1))
        );
    }

    #[test]
    fn row_exchange_requires_nesting() {
        assert!(matches!(
            row_exchange(v(0, 0, 0, 1), v(1, 1, 0, 1)),
            Err(ArthurError::Incomparable(..))
        ));
    }

    #[test]
    fn dagger_is_the_only_same_support_partner() {
        for len in 1..=6 {
            let d = seg(len - 1, 0);
            for e in enumerate_eseg(d) {
                let s = nv_right_set(e, d).unwrap();
                assert_eq!(s.members(), [dagger(e)], "{e}");
            }
        }
    }
}
