//! Properties of extended segments, intervals, pairwise non-vanishing and
//! the row-exchange operator.

use arthur_core::nv::{
    nv_left_set, nv_pair, nv_pair_with_lifts, nv_right_set, precedes, row_exchange,
    row_exchange_with_lifts,
};
use arthur_core::segments::{
    adjacent_intervals, admissible_pair, dagger, enumerate_eseg, is_adjacent, is_interval,
};
use arthur_core::{EsegInterval, ExtZSeg, VExtZSeg, ZSegment};
use arthur_validation::*;
use proptest::prelude::*;

/// Every interval over `delta`, found by filtering all subsets.
fn all_intervals(delta: ZSegment) -> Vec<EsegInterval> {
    let elems = enumerate_eseg(delta);
    (0u32..1 << elems.len())
        .filter_map(|mask| {
            let subset = elems
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| *e);
            EsegInterval::new(delta, subset).ok()
        })
        .collect()
}

fn deltas_up_to(max_len: i64) -> Vec<ZSegment> {
    (1..=max_len).map(|b| seg(b - 1, 0)).collect()
}

fn virt(s: &EsegInterval) -> Vec<VExtZSeg> {
    s.members().iter().map(|e| e.virt()).collect()
}

proptest! {
    #[test]
    fn enumerate_has_length_plus_one_members(lo in -4i64..4, len in 1i64..=6) {
        let d = seg(lo + len - 1, lo);
        let elems = enumerate_eseg(d);
        prop_assert_eq!(elems.len() as i64, d.hi() - d.lo() + 2);
        for w in elems.windows(2) {
            prop_assert!(is_adjacent(w[0].virt(), w[1].virt()));
        }
        for e in elems {
            prop_assert_eq!(dagger(dagger(e)), e);
        }
    }

    #[test]
    fn adjacency_is_symmetric_and_irreflexive(
        lo in -2i64..2,
        len in 1i64..=6,
        i in 0usize..16,
        j in 0usize..16,
    ) {
        let d = seg(lo + len - 1, lo);
        let pool = virtual_over(d, 2);
        let (x, y) = (pool[i % pool.len()], pool[j % pool.len()]);
        prop_assert_eq!(is_adjacent(x, y), is_adjacent(y, x));
        prop_assert!(!is_adjacent(x, x));
    }
}

#[test]
fn at_most_three_adjacent_intervals() {
    for d in deltas_up_to(5) {
        for s in all_intervals(d) {
            let adj = adjacent_intervals(&s);
            assert!(adj.len() <= 3, "{s:?} has {} adjacent intervals", adj.len());
        }
    }
}

#[test]
fn intersections_of_intervals_are_intervals() {
    for d in deltas_up_to(5) {
        let all = all_intervals(d);
        for s1 in &all {
            for s2 in &all {
                let meet = s1.intersect(s2);
                assert!(is_interval(&virt(&meet)), "{s1:?} ∩ {s2:?}");
                assert!(EsegInterval::new(d, meet.members().iter().copied()).is_ok());
            }
        }
    }
}

#[test]
fn dagger_is_the_unique_nonvanishing_partner() {
    for d in deltas_up_to(6) {
        for e in enumerate_eseg(d) {
            let partners: Vec<ExtZSeg> = enumerate_eseg(d)
                .into_iter()
                .filter(|p| nv_pair(e.virt(), p.virt()).unwrap())
                .collect();
            assert_eq!(partners, [dagger(e)], "{e}");
        }
    }
}

/// Pairs of extended segments with supports inside `[hi, lo]` in an admissible order.
fn admissible_pairs(hi: i64, lo: i64) -> Vec<(VExtZSeg, VExtZSeg)> {
    let all = extended_within(hi, lo);
    let mut out = Vec::new();
    for &x in &all {
        for &y in &all {
            if admissible_pair(x.support(), y.support()) {
                out.push((x, y));
            }
        }
    }
    out
}

fn nested(x: VExtZSeg, y: VExtZSeg) -> bool {
    x.support().is_nested_with(y.support())
}

#[test]
fn verdicts_and_exchanges_do_not_depend_on_lifts() {
    let mut free = 0;
    for (x, y) in admissible_pairs(3, 0) {
        if !x.sign_is_free() && !y.sign_is_free() {
            continue;
        }
        free += 1;
        let verdicts: Vec<bool> = x
            .lifts()
            .iter()
            .flat_map(|&s1| y.lifts().iter().map(move |&s2| nv_pair_with_lifts(x, s1, y, s2).unwrap()))
            .collect();
        assert!(verdicts.iter().all(|&v| v == verdicts[0]), "{x} {y}");
        if nested(x, y) {
            let outs: Vec<_> = x
                .lifts()
                .iter()
                .flat_map(|&s1| y.lifts().iter().map(move |&s2| row_exchange_with_lifts(x, s1, y, s2).unwrap()))
                .collect();
            assert!(outs.iter().all(|o| *o == outs[0]), "{x} {y}: {outs:?}");
        }
    }
    assert!(free > 0);
}

#[test]
fn exchange_is_an_involution_on_nonvanishing_and_strictly_nested_pairs() {
    for (x, y) in admissible_pairs(3, -1) {
        if !nested(x, y) {
            continue;
        }
        if x.support() != y.support() || nv_pair(x, y).unwrap() {
            let (y2, x2) = row_exchange(x, y).unwrap();
            assert_eq!(row_exchange(y2, x2).unwrap(), (x, y), "{x} {y}");
        }
    }
}

#[test]
fn exchange_is_not_an_involution_on_equal_vanishing_supports() {
    let (x, y) = (VExtZSeg::of(0, 0, 0, 1), VExtZSeg::of(0, 0, 0, -1));
    assert!(!nv_pair(x, y).unwrap());
    let once = row_exchange(x, y).unwrap();
    assert_eq!(once, (VExtZSeg::of(0, 0, -1, 1), VExtZSeg::of(0, 0, 0, 1)));
    let twice = row_exchange(once.0, once.1).unwrap();
    assert_ne!(twice, (x, y));
}

#[test]
fn exchange_preserves_nonvanishing() {
    for (x, y) in admissible_pairs(3, -1) {
        if !nested(x, y) || !nv_pair(x, y).unwrap() {
            continue;
        }
        let (y2, x2) = row_exchange(x, y).unwrap();
        assert!(x2.is_extended() && y2.is_extended(), "{x} {y}");
        assert!(nv_pair(y2, x2).unwrap(), "{x} {y} -> {y2} {x2}");
    }
}

#[test]
fn one_sided_sets_are_intervals() {
    for d1 in segments_within(4, -1) {
        for d2 in segments_within(4, -1) {
            for e in enumerate_eseg(d1) {
                let right = nv_right_set(e, d2).unwrap();
                assert!(is_interval(&virt(&right)));
                if admissible_pair(d1, d2) {
                    assert!(!right.is_empty(), "{e} -> {d2}");
                }
            }
            for e in enumerate_eseg(d2) {
                let left = nv_left_set(d1, e).unwrap();
                assert!(is_interval(&virt(&left)));
                if admissible_pair(d1, d2) {
                    assert!(!left.is_empty(), "{d1} <- {e}");
                }
            }
        }
    }
}

#[test]
fn singleton_one_sided_sets_mean_equal_supports() {
    for (x, y) in admissible_pairs(3, -1) {
        if !nv_pair(x, y).unwrap() {
            continue;
        }
        let (d1, d2) = (x.support(), y.support());
        let ex = ExtZSeg::try_from(x).unwrap();
        let ey = ExtZSeg::try_from(y).unwrap();
        if precedes(d1, d2).unwrap() {
            assert_eq!(nv_right_set(ex, d2).unwrap().len() == 1, d1 == d2, "{x} {y}");
        }
        if admissible_pair(d2, d1) && precedes(d2, d1).unwrap() {
            assert_eq!(nv_left_set(d1, ey).unwrap().len() == 1, d1 == d2, "{x} {y}");
        }
    }
}

#[test]
fn adjacent_inputs_give_adjacent_one_sided_sets() {
    let supports = segments_within(3, -1);
    for &d1 in &supports {
        for &d2 in &supports {
            if !admissible_pair(d1, d2) {
                continue;
            }
            let left = enumerate_eseg(d1);
            for w in left.windows(2) {
                let s1 = nv_right_set(w[0], d2).unwrap();
                let s2 = nv_right_set(w[1], d2).unwrap();
                assert!(adjacent_intervals(&s1).contains(&s2), "{} {} over {d2}", w[0], w[1]);
            }
            let right = enumerate_eseg(d2);
            for w in right.windows(2) {
                let s1 = nv_left_set(d1, w[0]).unwrap();
                let s2 = nv_left_set(d1, w[1]).unwrap();
                assert!(adjacent_intervals(&s1).contains(&s2), "{d1} under {} {}", w[0], w[1]);
            }
        }
    }
}

#[test]
fn exchange_is_injective_and_keeps_adjacency_in_each_slot() {
    let supports = segments_within(3, 0);
    for &d1 in &supports {
        for &d2 in &supports {
            if !admissible_pair(d1, d2) || !d1.is_nested_with(d2) {
                continue;
            }
            for &y in &virtual_over(d2, 2) {
                let xs = virtual_over(d1, 2);
                let images: Vec<VExtZSeg> = xs.iter().map(|&x| row_exchange(x, y).unwrap().1).collect();
                check_slot(&xs, &images, d1, "left");
            }
            for &x in &virtual_over(d1, 2) {
                let ys = virtual_over(d2, 2);
                let images: Vec<VExtZSeg> = ys.iter().map(|&y| row_exchange(x, y).unwrap().0).collect();
                check_slot(&ys, &images, d2, "right");
            }
        }
    }
}

fn check_slot(inputs: &[VExtZSeg], images: &[VExtZSeg], d: ZSegment, slot: &str) {
    for i in 0..inputs.len() {
        assert_eq!(images[i].support(), d);
        for j in 0..inputs.len() {
            if i != j {
                assert_ne!(images[i], images[j], "{slot}: {} and {} collide", inputs[i], inputs[j]);
            }
            if is_adjacent(inputs[i], inputs[j]) {
                assert!(is_adjacent(images[i], images[j]), "{slot}: {} ~ {}", inputs[i], inputs[j]);
            }
        }
    }
}
