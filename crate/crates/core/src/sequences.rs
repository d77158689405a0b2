//! Admissible sequences of virtual extended segments, their row-exchange
//! orbits, and the sequence-level non-vanishing criterion.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ArthurError, Result};
use crate::nv::{nv_pair_admissible, row_exchange};
use crate::segments::{admissible_pair, dagger, EsegInterval, ExtZSeg, VExtZSeg};

/// Default bound on orbit size.
pub const DEFAULT_CAP: usize = 1_000_000;

/// An admissible sequence: no later item lies strictly below an earlier one.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<VExtZSeg>", into = "Vec<VExtZSeg>")]
pub struct ZSeq {
    items: Vec<VExtZSeg>,
}

impl TryFrom<Vec<VExtZSeg>> for ZSeq {
    type Error = ArthurError;
    fn try_from(items: Vec<VExtZSeg>) -> Result<Self> {
        ZSeq::new(items)
    }
}

impl From<ZSeq> for Vec<VExtZSeg> {
    fn from(s: ZSeq) -> Self {
        s.items
    }
}

impl ZSeq {
    pub fn new(items: Vec<VExtZSeg>) -> Result<Self> {
        for (i, ei) in items.iter().enumerate() {
            for (j, ej) in items.iter().enumerate().skip(i + 1) {
                if !admissible_pair(ei.support(), ej.support()) {
                    return Err(ArthurError::NotAdmissible(format!(
                        "positions {i} and {j}: {} precedes {}",
                        ei.support(),
                        ej.support()
                    )));
                }
            }
        }
        Ok(ZSeq { items })
    }

    pub fn empty() -> Self {
        ZSeq { items: Vec::new() }
    }

    pub fn items(&self) -> &[VExtZSeg] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Translate every support by `t`.
    pub fn shift(&self, t: i64) -> ZSeq {
        ZSeq {
            items: self.items.iter().map(|e| e.shift(t)).collect(),
        }
    }

    /// `B` non-decreasing, and `A` non-increasing where `B` ties.
    pub fn satisfies_p2(&self) -> bool {
        self.items.windows(2).all(|w| {
            let (d1, d2) = (w[0].support(), w[1].support());
            d1.lo() < d2.lo() || (d1.lo() == d2.lo() && d1.hi() >= d2.hi())
        })
    }

    /// Supports shrink along the sequence.
    pub fn is_nested_chain(&self) -> bool {
        self.items
            .windows(2)
            .all(|w| w[1].support().is_subset_of(w[0].support()))
    }

    fn sort_key(&self) -> String {
        serde_json::to_string(self).expect("sequence serializes")
    }
}

impl fmt::Debug for ZSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.items).finish()
    }
}

/// Exchange positions `k` and `k + 1` (zero-based).
pub fn r_k(s: &ZSeq, k: usize) -> Result<ZSeq> {
    if k + 1 >= s.items.len() {
        return Err(ArthurError::IndexOutOfRange {
            index: k,
            len: s.items.len(),
        });
    }
    let (second, first) = row_exchange(s.items[k], s.items[k + 1])?;
    let mut items = s.items.clone();
    items[k] = second;
    items[k + 1] = first;
    Ok(ZSeq { items })
}

/// Sequences one row exchange away from `s`.
fn neighbours(s: &ZSeq) -> impl Iterator<Item = ZSeq> + '_ {
    (0..s.items.len().saturating_sub(1))
        .filter(|&k| s.items[k].support().is_nested_with(s.items[k + 1].support()))
        .map(move |k| r_k(s, k).expect("nested supports exchange"))
}

/// The row-exchange equivalence class of a sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub seed: ZSeq,
    /// Sorted by serialized form.
    pub members: Vec<ZSeq>,
    pub cap: usize,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &ZSeq) -> bool {
        self.members.contains(s)
    }
}

/// Breadth-first walk; `visit` returning `false` stops the walk early.
fn walk(s: &ZSeq, cap: usize, mut visit: impl FnMut(&ZSeq) -> bool) -> Result<Option<HashSet<ZSeq>>> {
    let mut seen: HashSet<ZSeq> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(s.clone());
    queue.push_back(s.clone());
    while let Some(cur) = queue.pop_front() {
        if !visit(&cur) {
            return Ok(None);
        }
        for next in neighbours(&cur) {
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(ArthurError::CapExceeded { cap });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(Some(seen))
}

/// Closure of `{s}` under every defined `r_k`.
pub fn orbit(s: &ZSeq, cap: usize) -> Result<Orbit> {
    let seen = walk(s, cap, |_| true)?.expect("walk never stops early");
    let mut members: Vec<(String, ZSeq)> = seen.into_iter().map(|m| (m.sort_key(), m)).collect();
    members.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Orbit {
        seed: s.clone(),
        members: members.into_iter().map(|(_, m)| m).collect(),
        cap,
    })
}

/// Every consecutive pair is non-vanishing.
pub fn tilde_nv(s: &ZSeq) -> bool {
    s.items
        .windows(2)
        .all(|w| nv_pair_admissible(w[0], w[1]))
}

/// Every member of the orbit passes [`tilde_nv`].
///
/// Nested chains are decided by [`tilde_nv`] alone; debug builds confirm
/// the shortcut against the orbit.
pub fn nv_seq(s: &ZSeq, cap: usize) -> Result<bool> {
    if s.is_nested_chain() {
        let verdict = tilde_nv(s);
        #[cfg(debug_assertions)]
        {
            let full = walk(s, cap, tilde_nv).map(|r| r.is_some());
            if let Ok(full) = full {
                debug_assert_eq!(full, verdict, "nested-chain shortcut disagrees on {s:?}");
            }
        }
        return Ok(verdict);
    }
    nv_seq_by_orbit(s, cap)
}

/// [`nv_seq`] without the nested-chain shortcut.
pub fn nv_seq_by_orbit(s: &ZSeq, cap: usize) -> Result<bool> {
    Ok(walk(s, cap, tilde_nv)?.is_some())
}

/// The unique orbit member in (P'') form.
pub fn canonical_p2(s: &ZSeq, cap: usize) -> Result<ZSeq> {
    if !nv_seq(s, cap)? {
        return Err(ArthurError::Vanishing(format!("{s:?} fails the non-vanishing criterion")));
    }
    let mut found: Vec<ZSeq> = orbit(s, cap)?
        .members
        .into_iter()
        .filter(ZSeq::satisfies_p2)
        .collect();
    if found.len() != 1 {
        return Err(ArthurError::CanonicalNotUnique { count: found.len() });
    }
    Ok(found.pop().unwrap())
}

/// Position at which `(e, e†)` enters a (P'') sequence: before the first
/// item whose `B` exceeds `B(e)`.
pub fn insertion_index(p2: &ZSeq, e: ExtZSeg) -> usize {
    p2.items
        .iter()
        .position(|x| x.support().lo() > e.support().lo())
        .unwrap_or(p2.items.len())
}

/// Insert `(e, e†)` into an already-canonical (P'') sequence.
pub fn insert_into_p2(p2: &ZSeq, e: ExtZSeg) -> ZSeq {
    let j = insertion_index(p2, e);
    let mut items = p2.items.clone();
    items.splice(j..j, [e.virt(), dagger(e).virt()]);
    ZSeq { items }
}

/// `E_e`: the (P'') form of `s` with `(e, e†)` inserted.
pub fn insert_pair(s: &ZSeq, e: ExtZSeg, cap: usize) -> Result<ZSeq> {
    let p2 = canonical_p2(s, cap)?;
    Ok(insert_into_p2(&p2, e))
}

/// The candidates `e` for which `E_e` is non-vanishing.
pub fn nv_set(s: &ZSeq, candidates: &EsegInterval, cap: usize) -> Result<EsegInterval> {
    let p2 = canonical_p2(s, cap)?;
    let mut kept = Vec::new();
    for &e in candidates.members() {
        if nv_seq(&insert_into_p2(&p2, e), cap)? {
            kept.push(e);
        }
    }
    EsegInterval::new(candidates.delta(), kept)
        .map_err(|err| ArthurError::IntervalViolation(err.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::segments::ZSegment;

    fn v(hi: i64, lo: i64, l: i64, eta: i64) -> VExtZSeg {
        VExtZSeg::of(hi, lo, l, eta)
    }

    fn seq(items: &[VExtZSeg]) -> ZSeq {
        ZSeq::new(items.to_vec()).unwrap()
    }

    #[test]
    fn admissibility_is_enforced() {
        assert!(ZSeq::new(vec![v(1, 1, 0, 1), v(0, 0, 0, 1)]).is_err());
        assert!(ZSeq::new(vec![v(0, 0, 0, 1), v(1, 1, 0, 1)]).is_ok());
    }

    #[test]
    fn r_k_examples() {
        let s = seq(&[v(1, 0, 1, 1), v(1, 0, 0, 1)]);
        assert_eq!(r_k(&s, 0).unwrap(), seq(&[v(1, 0, 0, 1), v(1, 0, 1, 1)]));
        let s = seq(&[v(1, 1, 0, 1), v(1, 0, 0, 1)]);
        assert_eq!(r_k(&s, 0).unwrap(), seq(&[v(1, 0, 1, 1), v(1, 1, 0, -1)]));
        let s = seq(&[v(0, 0, 0, 1), v(1, 1, 0, 1)]);
        assert!(matches!(r_k(&s, 0), Err(ArthurError::Incomparable(..))));
        assert!(matches!(r_k(&s, 1), Err(ArthurError::IndexOutOfRange { .. })));
    }

    #[test]
    fn orbit_examples() {
        let s = seq(&[v(0, 0, 0, 1), v(1, 1, 0, 1)]);
        assert_eq!(orbit(&s, 100).unwrap().len(), 1);
        let s = seq(&[v(1, 1, 0, 1), v(1, 0, 0, 1)]);
        assert_eq!(orbit(&s, 100).unwrap().len(), 2);
        let e = ExtZSeg::of(1, 0, 0, 1);
        let s = seq(&[e.virt(), dagger(e).virt()]);
        assert_eq!(orbit(&s, 100).unwrap().len(), 1);
    }

    #[test]
    fn orbit_cap_is_hard() {
        let s = seq(&[v(1, 1, 0, 1), v(1, 0, 0, 1)]);
        assert_eq!(orbit(&s, 1), Err(ArthurError::CapExceeded { cap: 1 }));
    }

    #[test]
    fn orbit_ordering_is_deterministic() {
        let s = seq(&[v(1, 1, 0, 1), v(1, 0, 0, 1)]);
        let o1 = orbit(&s, 100).unwrap();
        let o2 = orbit(&o1.members[1], 100).unwrap();
        assert_eq!(o1.members, o2.members);
    }

    #[test]
    fn tilde_nv_examples() {
        assert!(tilde_nv(&seq(&[v(0, 0, 0, 1), v(1, 1, 0, 1)])));
        assert!(!tilde_nv(&seq(&[v(1, 0, 0, 1), v(0, 0, 0, 1)])));
        assert!(tilde_nv(&seq(&[v(2, 0, 1, 1)])));
    }

    #[test]
    fn nv_seq_examples() {
        assert!(nv_seq(&seq(&[v(1, 1, 0, 1), v(1, 0, 0, 1)]), 100).unwrap());
        assert!(!nv_seq(&seq(&[v(1, 0, 0, 1), v(0, 0, 0, 1)]), 100).unwrap());
        for len in 1..=4 {
            for e in crate::segments::enumerate_eseg(ZSegment::new(len - 1, 0).unwrap()) {
                assert!(nv_seq(&seq(&[e.virt(), dagger(e).virt()]), 100).unwrap());
            }
        }
    }

    #[test]
    fn canonical_p2_examples() {
        let s = seq(&[v(1, 1, 0, 1), v(1, 0, 0, 1)]);
        assert_eq!(canonical_p2(&s, 100).unwrap(), seq(&[v(1, 0, 1, 1), v(1, 1, 0, -1)]));
        let p = seq(&[v(1, 0, 1, 1), v(1, 1, 0, -1)]);
        assert_eq!(canonical_p2(&p, 100).unwrap(), p);
        let bad = seq(&[v(1, 0, 0, 1), v(0, 0, 0, 1)]);
        assert!(matches!(canonical_p2(&bad, 100), Err(ArthurError::Vanishing(_))));
    }

    #[test]
    fn insert_pair_examples() {
        let e = ExtZSeg::of(0, 0, 0, 1);
        assert_eq!(
            insert_pair(&ZSeq::empty(), e, 100).unwrap(),
            seq(&[v(0, 0, 0, 1), v(0, 0, 0, 1)])
        );
        let s = seq(&[v(1, 1, 0, 1)]);
        assert_eq!(
            insert_pair(&s, e, 100).unwrap(),
            seq(&[v(0, 0, 0, 1), v(0, 0, 0, 1), v(1, 1, 0, 1)])
        );
        let s = seq(&[v(0, 0, 0, 1)]);
        let e = ExtZSeg::of(1, 1, 0, -1);
        assert_eq!(
            insert_pair(&s, e, 100).unwrap(),
            seq(&[v(0, 0, 0, 1), v(1, 1, 0, -1), v(1, 1, 0, -1)])
        );
    }

    #[test]
    fn nv_set_examples() {
        let d = ZSegment::new(1, 0).unwrap();
        let all = EsegInterval::full(d);
        assert_eq!(nv_set(&ZSeq::empty(), &all, 100).unwrap(), all);

        let d = ZSegment::new(1, 1).unwrap();
        let got = nv_set(&seq(&[v(1, 1, 0, 1)]), &EsegInterval::full(d), 100).unwrap();
        assert_eq!(got.members(), [ExtZSeg::of(1, 1, 0, 1)]);
    }
}
