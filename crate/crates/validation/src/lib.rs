//! Seeded instance generators shared by the property tests and the
//! acceptance suite.

use arthur_core::multisegment::{
    Cuspidal, ExtMultiSegment, ExtSegment, GroupKind, GroupType, Row, SelfDuality,
};
use arthur_core::sequences::r_k;
use arthur_core::{HalfInt, Sign, VExtZSeg, ZSeq, ZSegment};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CAP: usize = 100_000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn chi() -> Cuspidal {
    Cuspidal::new("chi", 1, SelfDuality::Orthogonal)
}

pub fn one() -> Cuspidal {
    Cuspidal::new("1", 1, SelfDuality::Orthogonal)
}

pub fn sympl() -> Cuspidal {
    Cuspidal::new("s", 2, SelfDuality::Symplectic)
}

pub fn seg(hi: i64, lo: i64) -> ZSegment {
    ZSegment::new(hi, lo).unwrap()
}

/// Every segment `[A,B]` with `lo <= B <= A <= hi`.
pub fn segments_within(hi: i64, lo: i64) -> Vec<ZSegment> {
    let mut out = Vec::new();
    for b in lo..=hi {
        for a in b..=hi {
            out.push(seg(a, b));
        }
    }
    out
}

/// Every extended segment (all `l >= 0` and signs) over the support.
pub fn extended_over(d: ZSegment) -> Vec<VExtZSeg> {
    (0..=d.len()).map(|r| VExtZSeg::from_rank(d, r)).collect()
}

/// Every extended segment with support inside `[hi, lo]`.
pub fn extended_within(hi: i64, lo: i64) -> Vec<VExtZSeg> {
    segments_within(hi, lo)
        .into_iter()
        .flat_map(extended_over)
        .collect()
}

/// Every member of the support's lattice with `-depth <= l`, virtual included.
pub fn virtual_over(d: ZSegment, depth: i64) -> Vec<VExtZSeg> {
    let mut out = Vec::new();
    for l in -depth..=d.len() / 2 {
        for eta in [Sign::Plus, Sign::Minus] {
            let v = VExtZSeg::new(d, l, eta).unwrap();
            if !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out
}

pub fn random_segment(rng: &mut ChaCha8Rng, hi: i64, lo: i64) -> ZSegment {
    let b = rng.random_range(lo..=hi);
    let a = rng.random_range(b..=hi);
    seg(a, b)
}

pub fn random_extended(rng: &mut ChaCha8Rng, d: ZSegment) -> VExtZSeg {
    VExtZSeg::from_rank(d, rng.random_range(0..=d.len()))
}

/// A random order in which no item lies strictly below an earlier one.
pub fn linear_extension<T: Clone>(rng: &mut ChaCha8Rng, mut pool: Vec<T>, support: impl Fn(&T) -> (i64, i64)) -> Vec<T> {
    let mut out = Vec::with_capacity(pool.len());
    while !pool.is_empty() {
        let minimal: Vec<usize> = (0..pool.len())
            .filter(|&i| {
                let (ai, bi) = support(&pool[i]);
                !pool.iter().any(|p| {
                    let (a, b) = support(p);
                    a < ai && b < bi
                })
            })
            .collect();
        let pick = *minimal.choose(rng).expect("a finite poset has minimal elements");
        out.push(pool.remove(pick));
    }
    out
}

/// An admissible sequence of `1..=max_n` extended segments inside `[hi, lo]`.
pub fn random_zseq(rng: &mut ChaCha8Rng, max_n: usize, hi: i64, lo: i64) -> ZSeq {
    let n = rng.random_range(1..=max_n);
    let pool: Vec<VExtZSeg> = (0..n)
        .map(|_| {
            let d = random_segment(rng, hi, lo);
            random_extended(rng, d)
        })
        .collect();
    let items = linear_extension(rng, pool, |e| (e.support().hi(), e.support().lo()));
    ZSeq::new(items).expect("linear extension is admissible")
}

/// A sequence whose supports shrink along the sequence.
pub fn random_nested_chain(rng: &mut ChaCha8Rng, max_n: usize, hi: i64, lo: i64) -> ZSeq {
    let n = rng.random_range(1..=max_n);
    let mut d = random_segment(rng, hi, lo);
    let mut items = vec![random_extended(rng, d)];
    for _ in 1..n {
        d = random_segment(rng, d.hi(), d.lo());
        items.push(random_extended(rng, d));
    }
    ZSeq::new(items).expect("nested chains are admissible")
}

/// Apply one random defined row exchange, if any position allows it.
pub fn random_exchange(rng: &mut ChaCha8Rng, s: &ZSeq) -> Option<ZSeq> {
    let items = s.items();
    let ks: Vec<usize> = (0..items.len().saturating_sub(1))
        .filter(|&k| items[k].support().is_nested_with(items[k + 1].support()))
        .collect();
    let k = *ks.choose(rng)?;
    Some(r_k(s, k).expect("nested supports exchange"))
}

/// How segments inside one row are ordered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    /// A random admissible order.
    Random,
    /// `B` ascending, then `A` descending.
    P2,
}

/// Whether the cuspidal needs half-integral endpoints for the group kind.
pub fn half_integral(rho: &Cuspidal, kind: GroupKind) -> bool {
    matches!(
        (kind, rho.selfdual),
        (GroupKind::SOodd, SelfDuality::Orthogonal) | (GroupKind::Sp, SelfDuality::Symplectic)
    )
}

/// Every good-parity segment of the row with doubled endpoints in `[lo2, hi2]`
/// and non-negative center.
pub fn row_supports(rho: &Cuspidal, kind: GroupKind, hi2: i64, lo2: i64) -> Vec<(i64, i64)> {
    let parity = i64::from(half_integral(rho, kind));
    let mut out = Vec::new();
    for l2 in lo2..=hi2 {
        for h2 in l2..=hi2 {
            if l2.rem_euclid(2) == parity && (h2 - l2) % 2 == 0 && h2 + l2 >= 0 {
                out.push((h2, l2));
            }
        }
    }
    out
}

/// Every `ExtSegment` over doubled endpoints `(h2, l2)`.
pub fn segment_choices(h2: i64, l2: i64) -> Vec<ExtSegment> {
    let b = (h2 - l2) / 2 + 1;
    (0..=b)
        .map(|r| {
            let z = VExtZSeg::from_rank(seg(0, 1 - b), r);
            ExtSegment::new(HalfInt::from_twice(h2), HalfInt::from_twice(l2), z.l(), z.eta()).unwrap()
        })
        .collect()
}

/// Sort a row into (P'') order.
pub fn p2_order(segments: &mut [ExtSegment]) {
    segments.sort_by(|x, y| x.lo().cmp(&y.lo()).then(y.hi().cmp(&x.hi())));
}

/// The group whose dual dimension matches the rows, if the parity allows one.
pub fn fitting_group(kind: GroupKind, rows: &[Row]) -> Option<GroupType> {
    let dim: i64 = rows
        .iter()
        .flat_map(|r| r.segments.iter().map(move |s| r.rho.dim * s.a() * s.b()))
        .sum();
    match kind {
        GroupKind::SOodd if dim % 2 == 0 => Some(GroupType::new(kind, dim / 2)),
        GroupKind::Sp if dim % 2 == 1 => Some(GroupType::new(kind, (dim - 1) / 2)),
        _ => None,
    }
}

/// A random structurally valid multi-segment with `1..=max_segments`
/// segments over the cuspidals `chi` and `s`, endpoints doubled in `[-3, 5]`.
pub fn random_multisegment(rng: &mut ChaCha8Rng, max_segments: usize, order: Order) -> ExtMultiSegment {
    loop {
        let kind = if rng.random_bool(0.5) { GroupKind::SOodd } else { GroupKind::Sp };
        let n = rng.random_range(1..=max_segments);
        let cusps = [chi(), sympl()];
        let mut pools: Vec<Vec<ExtSegment>> = vec![Vec::new(), Vec::new()];
        for _ in 0..n {
            let which = if rng.random_bool(0.7) { 0 } else { 1 };
            let supports = row_supports(&cusps[which], kind, 5, -3);
            let &(h2, l2) = supports.choose(rng).unwrap();
            let s = *segment_choices(h2, l2).choose(rng).unwrap();
            pools[which].push(s);
        }
        let mut rows = Vec::new();
        for (rho, pool) in cusps.iter().zip(pools) {
            if pool.is_empty() {
                continue;
            }
            let mut segments = match order {
                Order::Random => linear_extension(rng, pool, |s| (s.hi().twice(), s.lo().twice())),
                Order::P2 => pool,
            };
            if order == Order::P2 {
                p2_order(&mut segments);
            }
            rows.push(Row::new(rho, segments));
        }
        let Some(group) = fitting_group(kind, &rows) else {
            continue;
        };
        let e = ExtMultiSegment::new(group, rows);
        if e.validate().is_ok() {
            return e;
        }
    }
}

/// As [`random_multisegment`], additionally requiring `pi(E) != 0`.
pub fn random_nonzero_multisegment(rng: &mut ChaCha8Rng, max_segments: usize, order: Order) -> ExtMultiSegment {
    loop {
        let e = random_multisegment(rng, max_segments, order);
        if arthur_core::multisegment::pi_nonzero(&e, CAP).unwrap() {
            return e;
        }
    }
}

/// Proptest settings without on-disk failure persistence.
pub fn config(cases: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config {
        cases,
        failure_persistence: None,
        ..Default::default()
    }
}
