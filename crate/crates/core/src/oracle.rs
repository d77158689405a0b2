//! Brute-force reference implementations.
//!
//! Nothing here calls the main decision paths for its verdicts: segments
//! are plain integer tuples, the pair criterion, the exchange operator and
//! the orbit walk are written out again, and intervals are classified from
//! the adjacency definition rather than a rank embedding. Main-path results
//! are only read to be compared against.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{ArthurError, Result};
use crate::halfint::{HalfInt, Sign};
use crate::multisegment::{
    character, good_parity, pi_nonzero, same_pi, ArthurParameter, Character, ExtMultiSegment, ExtSegment, Row,
};
use crate::segments::{adjacent_intervals, EsegInterval, ExtZSeg, VExtZSeg, ZSegment};
use crate::sequences::{nv_seq, ZSeq};

/// `(A, B, l, eta)` with `eta = +1` whenever `b = 2l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Item {
    hi: i64,
    lo: i64,
    l: i64,
    eta: i64,
}

impl Item {
    fn new(hi: i64, lo: i64, l: i64, eta: i64) -> Item {
        let b = hi - lo + 1;
        Item {
            hi,
            lo,
            l,
            eta: if 2 * l == b { 1 } else { eta },
        }
    }

    fn of(e: VExtZSeg) -> Item {
        let d = e.support();
        Item::new(d.hi(), d.lo(), e.l(), e.eta().value())
    }

    fn to_value(self) -> VExtZSeg {
        let eta = Sign::from_value(self.eta).expect("eta is a sign");
        VExtZSeg::new(ZSegment::new(self.hi, self.lo).expect("A >= B"), self.l, eta).expect("l <= b/2")
    }

    fn b(self) -> i64 {
        self.hi - self.lo + 1
    }

    fn lifts(self) -> Vec<i64> {
        if 2 * self.l == self.b() {
            vec![1, -1]
        } else {
            vec![self.eta]
        }
    }

    fn inside(self, other: Item) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }
}

fn pow_sign(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn admissible(items: &[Item]) -> bool {
    (0..items.len()).all(|i| {
        (i + 1..items.len()).all(|j| !(items[j].hi < items[i].hi && items[j].lo < items[i].lo))
    })
}

/// The pair criterion with every applicable clause and every lift tried.
fn pair_ok(x: Item, y: Item) -> bool {
    if x.l < 0 || y.l < 0 {
        return false;
    }
    for &e1 in &x.lifts() {
        for &e2 in &y.lifts() {
            let eps = pow_sign(x.hi - x.lo) * e1 * e2;
            let mut ok = true;
            if x.hi <= y.hi && x.lo <= y.lo {
                ok &= if eps == 1 {
                    x.lo + x.l <= y.lo + y.l && x.hi - x.l <= y.hi - y.l
                } else {
                    x.hi - x.l < y.lo + y.l
                };
            }
            if x.hi <= y.hi && x.lo >= y.lo {
                ok &= if eps == 1 {
                    y.l - x.l >= 0 && y.l - x.l <= y.b() - x.b()
                } else {
                    x.l + y.l >= x.b()
                };
            }
            if x.hi >= y.hi && x.lo <= y.lo {
                ok &= if eps == 1 {
                    x.l - y.l >= 0 && x.l - y.l <= x.b() - y.b()
                } else {
                    x.l + y.l >= y.b()
                };
            }
            if ok {
                return true;
            }
        }
    }
    false
}

/// One exchange; `x` is first, the result is `(y', x')`.
fn exchange(x: Item, y: Item) -> (Item, Item) {
    let eps = pow_sign(x.hi - x.lo) * x.eta * y.eta;
    let (dx, dy) = (x.b() - 2 * x.l, y.b() - 2 * y.l);
    if x.inside(y) {
        let nx = Item::new(x.hi, x.lo, x.l, pow_sign(y.hi - y.lo) * x.eta);
        let flip = pow_sign(x.hi - x.lo);
        let ny = if eps == 1 && dy < 2 * dx {
            Item::new(y.hi, y.lo, y.b() - (y.l + dx), flip * y.eta)
        } else if eps == 1 {
            Item::new(y.hi, y.lo, y.l + dx, -flip * y.eta)
        } else {
            Item::new(y.hi, y.lo, y.l - dx, -flip * y.eta)
        };
        (ny, nx)
    } else {
        let ny = Item::new(y.hi, y.lo, y.l, pow_sign(x.hi - x.lo) * y.eta);
        let flip = pow_sign(y.hi - y.lo);
        let nx = if eps == 1 && dx < 2 * dy {
            Item::new(x.hi, x.lo, x.b() - (x.l + dy), flip * x.eta)
        } else if eps == 1 {
            Item::new(x.hi, x.lo, x.l + dy, -flip * x.eta)
        } else {
            Item::new(x.hi, x.lo, x.l - dy, -flip * x.eta)
        };
        (ny, nx)
    }
}

/// Depth-first walk over the orbit. Stops with `Ok(None)` as soon as
/// `keep` rejects a member: orbits of vanishing sequences may be infinite.
fn walk(seed: &[Item], cap: usize, keep: impl Fn(&[Item]) -> bool) -> Result<Option<BTreeSet<Vec<Item>>>> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![seed.to_vec()];
    seen.insert(seed.to_vec());
    while let Some(cur) = stack.pop() {
        if !keep(&cur) {
            return Ok(None);
        }
        for k in 0..cur.len().saturating_sub(1) {
            let (x, y) = (cur[k], cur[k + 1]);
            if !(x.inside(y) || y.inside(x)) {
                continue;
            }
            let (ny, nx) = exchange(x, y);
            let mut next = cur.clone();
            next[k] = ny;
            next[k + 1] = nx;
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(ArthurError::CapExceeded { cap });
                }
                seen.insert(next.clone());
                stack.push(next);
            }
        }
    }
    Ok(Some(seen))
}

/// The orbit of a non-vanishing sequence.
fn closure(seed: &[Item], cap: usize) -> Result<BTreeSet<Vec<Item>>> {
    walk(seed, cap, chain_ok)?.ok_or_else(|| ArthurError::Vanishing("sequence fails the criterion".to_string()))
}

fn chain_ok(items: &[Item]) -> bool {
    items.windows(2).all(|w| pair_ok(w[0], w[1]))
}

fn items_of(s: &[VExtZSeg]) -> Vec<Item> {
    s.iter().map(|&e| Item::of(e)).collect()
}

fn brute_nv_items(items: &[Item], cap: usize) -> Result<bool> {
    if !admissible(items) {
        return Err(ArthurError::NotAdmissible("sequence".to_string()));
    }
    Ok(walk(items, cap, chain_ok)?.is_some())
}

/// Every member of the full orbit passes the consecutive pair test.
pub fn brute_nv_seq(s: &[VExtZSeg], cap: usize) -> Result<bool> {
    brute_nv_items(&items_of(s), cap)
}

/// Number of orbit members satisfying (P''); the sequence must not vanish.
pub fn brute_p2_count(s: &[VExtZSeg], cap: usize) -> Result<usize> {
    Ok(closure(&items_of(s), cap)?.iter().filter(|m| p2(m)).count())
}

/// Size of the orbit of a non-vanishing sequence.
pub fn brute_orbit_size(s: &[VExtZSeg], cap: usize) -> Result<usize> {
    Ok(closure(&items_of(s), cap)?.len())
}

/// Consecutive pairs only.
pub fn brute_tilde_nv(s: &[VExtZSeg]) -> bool {
    chain_ok(&items_of(s))
}

/// The exchange operator on a pair, for cross-checking.
pub fn brute_exchange(x: VExtZSeg, y: VExtZSeg) -> Option<(VExtZSeg, VExtZSeg)> {
    let (x, y) = (Item::of(x), Item::of(y));
    if !(x.inside(y) || y.inside(x)) {
        return None;
    }
    let (ny, nx) = exchange(x, y);
    Some((ny.to_value(), nx.to_value()))
}

/// The pair criterion, for cross-checking.
pub fn brute_nv_pair(x: VExtZSeg, y: VExtZSeg) -> bool {
    pair_ok(Item::of(x), Item::of(y))
}

fn p2(items: &[Item]) -> bool {
    items
        .windows(2)
        .all(|w| w[0].lo < w[1].lo || (w[0].lo == w[1].lo && w[0].hi >= w[1].hi))
}

fn floor_half(h: HalfInt) -> i64 {
    h.twice().div_euclid(2)
}

fn z_items(row: &Row) -> Vec<Item> {
    row.segments
        .iter()
        .map(|s| Item::new(floor_half(s.hi()), floor_half(s.lo()), s.l(), s.eta().value()))
        .collect()
}

/// Inequality (★) in doubled units.
fn star(row: &Row) -> bool {
    let mut alpha = 0;
    for s in &row.segments {
        let twice_lo = s.lo().twice();
        let holds = if twice_lo.rem_euclid(2) == 0 {
            twice_lo / 2 + s.l() >= 0
        } else {
            let b = (s.hi().twice() - twice_lo) / 2 + 1;
            let lifts: &[i64] = if 2 * s.l() == b { &[1, -1] } else if s.eta() == Sign::Plus { &[1] } else { &[-1] };
            lifts.iter().any(|&eta| twice_lo + 2 * s.l() >= pow_sign(alpha + 1) * eta)
        };
        if !holds {
            return false;
        }
        alpha += (s.hi().twice() + twice_lo) / 2 + 1;
    }
    true
}

/// Non-vanishing of `pi(E)` for a structurally valid `E`.
pub fn brute_pi_nonzero(e: &ExtMultiSegment, cap: usize) -> Result<bool> {
    for row in &e.rows {
        if !star(row) || !brute_nv_items(&z_items(row), cap)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Eseg_[hi,lo]` from the largest element down.
fn eseg(hi: i64, lo: i64) -> Vec<Item> {
    let b = hi - lo + 1;
    let x = b / 2;
    let mut out: Vec<Item> = (0..=x).map(|l| Item::new(hi, lo, l, 1)).collect();
    let top = if b % 2 == 1 { x } else { x - 1 };
    out.extend((0..=top).rev().map(|l| Item::new(hi, lo, l, -1)));
    out
}

fn dagger(e: Item) -> Item {
    Item::new(e.hi, e.lo, e.l, pow_sign(e.hi - e.lo) * e.eta)
}

/// Constituents of the induction, each tagged with its inserted segment.
pub fn brute_induce(
    e: &ExtMultiSegment,
    rho: &crate::multisegment::Cuspidal,
    a: i64,
    b: i64,
    cap: usize,
) -> Result<Vec<(VExtZSeg, ExtMultiSegment)>> {
    let (twice_hi, twice_lo) = (a + b - 2, a - b);
    let offset = HalfInt::from_twice(twice_lo.rem_euclid(2));
    let (zhi, zlo) = (twice_hi.div_euclid(2), twice_lo.div_euclid(2));
    let pos = e.rows.iter().position(|r| r.rho.name == rho.name);
    let base: Vec<Item> = match pos {
        Some(i) => {
            let found: Vec<Vec<Item>> = closure(&z_items(&e.rows[i]), cap)?
                .into_iter()
                .filter(|m| p2(m))
                .collect();
            if found.len() != 1 {
                return Err(ArthurError::CanonicalNotUnique { count: found.len() });
            }
            found.into_iter().next().unwrap()
        }
        None => Vec::new(),
    };
    let mut group = e.group;
    group.n += rho.dim * a * b;
    let mut out = Vec::new();
    for ins in eseg(zhi, zlo) {
        let j = base.iter().position(|x| x.lo > ins.lo).unwrap_or(base.len());
        let mut items = base.clone();
        items.splice(j..j, [ins, dagger(ins)]);
        let segments = items
            .iter()
            .map(|it| {
                ExtSegment::new(
                    HalfInt::from_int(it.hi) + offset,
                    HalfInt::from_int(it.lo) + offset,
                    it.l,
                    Sign::from_value(it.eta).expect("sign"),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        let mut rows = e.rows.clone();
        let row = Row::new(rho, segments);
        match pos {
            Some(i) => rows[i] = row,
            None => rows.push(row),
        }
        let candidate = ExtMultiSegment::new(group, rows);
        if brute_pi_nonzero(&candidate, cap)? {
            out.push((ins.to_value(), candidate));
        }
    }
    Ok(out)
}

/// A disagreement or a failed property, replayable from `input`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub property: String,
    pub input: Value,
    pub expected: Value,
    pub actual: Value,
}

impl Counterexample {
    pub fn new(property: &str, input: Value, expected: Value, actual: Value) -> Self {
        Counterexample {
            property: property.to_string(),
            input,
            expected,
            actual,
        }
    }

    /// One JSON line.
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("counterexample serializes")
    }
}

/// Agreement of [`brute_nv_seq`] and the main criterion on one sequence.
pub fn compare_nv_seq(s: &ZSeq, cap: usize) -> Result<Option<Counterexample>> {
    let expected = brute_nv_seq(s.items(), cap)?;
    let actual = nv_seq(s, cap)?;
    Ok((expected != actual).then(|| {
        Counterexample::new("nv_seq", json!(s), json!(expected), json!(actual))
    }))
}

/// Agreement on every two-item admissible sequence over supports inside
/// `[2,0]` with `l` in `{0,1}`.
pub fn two_item_table(cap: usize) -> Result<Vec<(ZSeq, bool, bool)>> {
    let mut items = Vec::new();
    for hi in 0..=2 {
        for lo in 0..=hi {
            for l in 0..=1 {
                if 2 * l > hi - lo + 1 {
                    continue;
                }
                for eta in [1, -1] {
                    let it = Item::new(hi, lo, l, eta);
                    if !items.contains(&it) {
                        items.push(it);
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    for &x in &items {
        for &y in &items {
            if !admissible(&[x, y]) {
                continue;
            }
            let s = ZSeq::new(vec![x.to_value(), y.to_value()])?;
            let brute = brute_nv_items(&[x, y], cap)?;
            let main = nv_seq(&s, cap)?;
            out.push((s, brute, main));
        }
    }
    Ok(out)
}

/// Elements of `VEseg_delta` with `l >= -2`, plus the real ones.
fn window(hi: i64, lo: i64) -> Vec<Item> {
    let mut out = Vec::new();
    for l in [-2, -1] {
        out.push(Item::new(hi, lo, l, 1));
        out.push(Item::new(hi, lo, l, -1));
    }
    out.extend(eseg(hi, lo));
    out
}

/// Adjacency straight from the definition.
fn adjacent(x: Item, y: Item) -> bool {
    if (x.hi, x.lo) != (y.hi, y.lo) || x == y {
        return false;
    }
    let b = x.b();
    let step = x.lifts().iter().any(|e1| y.lifts().contains(e1)) && (x.l - y.l).abs() == 1;
    let middle = b % 2 == 1 && x.l == (b - 1) / 2 && y.l == x.l && x.eta == -y.eta;
    step || middle
}

/// Whether the members can be listed with consecutive ones adjacent.
fn has_chain(members: &[Item]) -> bool {
    let m = members.len();
    if m <= 1 {
        return true;
    }
    let full = (1usize << m) - 1;
    let mut reach = vec![vec![false; m]; 1 << m];
    for i in 0..m {
        reach[1 << i][i] = true;
    }
    for mask in 1..=full {
        for last in 0..m {
            if !reach[mask][last] {
                continue;
            }
            for next in 0..m {
                if mask >> next & 1 == 0 && adjacent(members[last], members[next]) {
                    reach[mask | 1 << next][next] = true;
                }
            }
        }
    }
    reach[full].iter().any(|&r| r)
}

fn subset(all: &[Item], mask: usize) -> Vec<Item> {
    all.iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &x)| x)
        .collect()
}

fn real_part(s: &[Item]) -> Vec<Item> {
    s.iter().copied().filter(|x| x.l >= 0).collect()
}

fn to_values(s: &[Item]) -> Vec<VExtZSeg> {
    s.iter().map(|x| x.to_value()).collect()
}

fn sorted(mut s: Vec<Item>) -> Vec<Item> {
    s.sort();
    s
}

/// One interval and the intervals adjacent to it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AdjacencyEntry {
    pub interval: Vec<VExtZSeg>,
    pub adjacent: Vec<Vec<VExtZSeg>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CensusReport {
    pub delta: ZSegment,
    pub elements: Vec<VExtZSeg>,
    pub subsets: usize,
    pub intervals: usize,
    pub non_intervals: Vec<Vec<VExtZSeg>>,
    pub adjacency: Vec<AdjacencyEntry>,
    pub counterexamples: Vec<Counterexample>,
}

/// Every subset of `Eseg_delta` classified from the definitions, checked
/// clause by clause and against the main implementation.
pub fn exhaustive_interval_census(delta: ZSegment) -> Result<CensusReport> {
    if delta.len() > 5 {
        return Err(ArthurError::InvalidInput(format!("{delta} is longer than 5")));
    }
    let (hi, lo) = (delta.hi(), delta.lo());
    let real = eseg(hi, lo);
    let win = window(hi, lo);
    let mut counterexamples = Vec::new();

    let mut virtual_intervals: Vec<Vec<Item>> = Vec::new();
    for mask in 1..1usize << win.len() {
        let s = subset(&win, mask);
        if has_chain(&s) {
            virtual_intervals.push(sorted(s));
        }
    }
    let vset: BTreeSet<Vec<Item>> = virtual_intervals.iter().cloned().collect();

    let mut adjacency: BTreeMap<Vec<Item>, BTreeSet<Vec<Item>>> = BTreeMap::new();
    for s1 in &virtual_intervals {
        for s2 in &virtual_intervals {
            if s1.len() != s2.len() {
                continue;
            }
            let union: BTreeSet<Item> = s1.iter().chain(s2).copied().collect();
            if union.len() != s1.len() + 1 {
                continue;
            }
            if !vset.contains(&union.into_iter().collect::<Vec<_>>()) {
                continue;
            }
            adjacency
                .entry(real_part(s1))
                .or_default()
                .insert(real_part(s2));
        }
    }

    let mut intervals: Vec<Vec<Item>> = Vec::new();
    let mut non_intervals = Vec::new();
    for mask in 0..1usize << real.len() {
        let s = subset(&real, mask);
        let by_definition = has_chain(&s);
        let main = EsegInterval::new(delta, s.iter().map(|x| ExtZSeg::try_from(x.to_value()).expect("real")))
            .is_ok();
        if by_definition != main {
            counterexamples.push(Counterexample::new(
                "interval",
                json!(to_values(&s)),
                json!(by_definition),
                json!(main),
            ));
        }
        if by_definition {
            intervals.push(sorted(s));
        } else {
            non_intervals.push(to_values(&s));
        }
    }

    let mut entries = Vec::new();
    for s in &intervals {
        let adj: BTreeSet<Vec<Item>> = adjacency.get(s).cloned().unwrap_or_default();
        if let Some(bad) = adj.iter().find(|t| !has_chain(t)) {
            counterexamples.push(Counterexample::new(
                "adjacent interval is an interval",
                json!(to_values(s)),
                json!(true),
                json!(to_values(bad)),
            ));
        }
        let members = s.iter().map(|x| ExtZSeg::try_from(x.to_value()).expect("real"));
        let main_interval = EsegInterval::new(delta, members).expect("classified as interval");
        let main_adj: BTreeSet<Vec<Item>> = adjacent_intervals(&main_interval)
            .iter()
            .map(|t| sorted(t.members().iter().map(|e| Item::of(e.virt())).collect()))
            .collect();
        if main_adj != adj {
            counterexamples.push(Counterexample::new(
                "adjacent_intervals",
                json!(to_values(s)),
                json!(adj.iter().map(|t| to_values(t)).collect::<Vec<_>>()),
                json!(main_adj.iter().map(|t| to_values(t)).collect::<Vec<_>>()),
            ));
        }
        if !s.is_empty() && adj.len() > 3 {
            counterexamples.push(Counterexample::new(
                "at most three adjacent intervals",
                json!(to_values(s)),
                json!(3),
                json!(adj.len()),
            ));
        }
        entries.push((s.clone(), adj));
    }

    let nonempty: Vec<&Vec<Item>> = intervals.iter().filter(|s| !s.is_empty()).collect();
    for s1 in &nonempty {
        for s2 in &nonempty {
            let meet: Vec<Item> = s1.iter().copied().filter(|x| s2.contains(x)).collect();
            if !has_chain(&meet) {
                counterexamples.push(Counterexample::new(
                    "intersection is an interval",
                    json!([to_values(s1), to_values(s2)]),
                    json!(true),
                    json!(to_values(&meet)),
                ));
            }
            if s1.len() > 1 && s2.len() > 1 && meet.len() == 1 {
                for s1p in adjacency.get(*s1).into_iter().flatten() {
                    let k = s1p.iter().filter(|x| s2.contains(x)).count();
                    if k > 0 && k != 2 {
                        counterexamples.push(Counterexample::new(
                            "adjacent meets in two",
                            json!([to_values(s1), to_values(s2), to_values(s1p)]),
                            json!(2),
                            json!(k),
                        ));
                    }
                }
            }
        }
    }

    Ok(CensusReport {
        delta,
        elements: to_values(&real),
        subsets: 1 << real.len(),
        intervals: intervals.len(),
        non_intervals,
        adjacency: entries
            .into_iter()
            .map(|(s, adj)| AdjacencyEntry {
                interval: to_values(&s),
                adjacent: adj.iter().map(|t| to_values(t)).collect(),
            })
            .collect(),
        counterexamples,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub candidates: usize,
    pub packet_size: usize,
    pub members: Vec<ExtMultiSegment>,
    pub characters: Vec<Character>,
    pub collisions: Vec<(usize, usize)>,
    pub counterexamples: Vec<Counterexample>,
}

/// Every `(l, eta)` choice for one support, without duplicates.
fn choices(b: i64) -> Vec<(i64, Sign)> {
    let mut out = Vec::new();
    for l in 0..=b / 2 {
        out.push((l, Sign::Plus));
        if 2 * l != b {
            out.push((l, Sign::Minus));
        }
    }
    out
}

/// Enumerate the packet of `psi` over one fixed order per row.
///
/// Rows are sorted by `B` ascending and `A` descending, which satisfies
/// both (P) and (P').
pub fn packet_sweep(psi: &ArthurParameter, max_rows: usize, cap: usize) -> Result<SweepReport> {
    if psi.summands.len() > max_rows {
        return Err(ArthurError::InvalidInput(format!(
            "{} summands exceed the limit of {max_rows}",
            psi.summands.len()
        )));
    }
    psi.validate()?;
    for s in &psi.summands {
        if !s.x.is_zero() || !good_parity(&s.rho, s.a, s.b, psi.group.kind) {
            return Err(ArthurError::BadParity(format!("{} x S_{} x S_{}", s.rho.name, s.a, s.b)));
        }
    }
    let mut by_rho: Vec<(crate::multisegment::Cuspidal, Vec<(HalfInt, HalfInt)>)> = Vec::new();
    for s in &psi.summands {
        let seg = (HalfInt::from_twice(s.a + s.b - 2), HalfInt::from_twice(s.a - s.b));
        match by_rho.iter_mut().find(|(r, _)| r.name == s.rho.name) {
            Some((_, v)) => v.push(seg),
            None => by_rho.push((s.rho.clone(), vec![seg])),
        }
    }
    for (_, v) in &mut by_rho {
        v.sort_by(|x, y| x.1.cmp(&y.1).then(y.0.cmp(&x.0)));
    }
    let slots: Vec<(usize, HalfInt, HalfInt)> = by_rho
        .iter()
        .enumerate()
        .flat_map(|(r, (_, v))| v.iter().map(move |&(hi, lo)| (r, hi, lo)))
        .collect();
    let options: Vec<Vec<(i64, Sign)>> = slots
        .iter()
        .map(|&(_, hi, lo)| choices((hi - lo).floor() + 1))
        .collect();

    let mut members = Vec::new();
    let mut counterexamples = Vec::new();
    let mut candidates = 0;
    let mut pick = vec![0usize; slots.len()];
    loop {
        let mut rows: Vec<Row> = by_rho.iter().map(|(rho, _)| Row::new(rho, Vec::new())).collect();
        for (k, &(r, hi, lo)) in slots.iter().enumerate() {
            let (l, eta) = options[k][pick[k]];
            rows[r].segments.push(ExtSegment::new(hi, lo, l, eta)?);
        }
        let e = ExtMultiSegment::new(psi.group, rows);
        if e.validate().is_ok() {
            candidates += 1;
            let expected = brute_pi_nonzero(&e, cap)?;
            let actual = pi_nonzero(&e, cap)?;
            if expected != actual {
                counterexamples.push(Counterexample::new(
                    "pi_nonzero",
                    json!(e),
                    json!(expected),
                    json!(actual),
                ));
            }
            if expected {
                members.push(e);
            }
        }
        let mut k = 0;
        loop {
            if k == pick.len() {
                let characters = members
                    .iter()
                    .map(|m| character(m, cap))
                    .collect::<Result<Vec<_>>>()?;
                let mut collisions = Vec::new();
                for i in 0..members.len() {
                    for j in i + 1..members.len() {
                        if same_pi(&members[i], &members[j], cap)? {
                            collisions.push((i, j));
                            counterexamples.push(Counterexample::new(
                                "multiplicity one",
                                json!([members[i], members[j]]),
                                json!(false),
                                json!(true),
                            ));
                        }
                    }
                }
                return Ok(SweepReport {
                    candidates,
                    packet_size: members.len(),
                    members,
                    characters,
                    collisions,
                    counterexamples,
                });
            }
            pick[k] += 1;
            if pick[k] < options[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multisegment::{ArthurSummand, Cuspidal, GroupKind, GroupType, SelfDuality};

    fn v(hi: i64, lo: i64, l: i64, eta: i64) -> VExtZSeg {
        VExtZSeg::of(hi, lo, l, eta)
    }

    #[test]
    fn agrees_on_small_examples() {
        assert!(brute_nv_seq(&[v(0, 0, 0, 1)], 100).unwrap());
        for s in [
            vec![v(0, 0, 0, 1), v(0, 0, 0, 1)],
            vec![v(0, 0, 0, 1), v(0, 0, 0, -1)],
            vec![v(1, 1, 0, 1), v(1, 0, 0, 1)],
            vec![v(0, 0, 0, 1), v(1, 1, 0, -1)],
        ] {
            let z = ZSeq::new(s).unwrap();
            assert_eq!(compare_nv_seq(&z, 100).unwrap(), None, "{z:?}");
        }
    }

    #[test]
    fn two_item_table_agrees() {
        let table = two_item_table(1000).unwrap();
        assert!(!table.is_empty());
        for (s, brute, main) in table {
            assert_eq!(brute, main, "{s:?}");
        }
    }

    #[test]
    fn census_small() {
        let r = exhaustive_interval_census(ZSegment::new(1, 0).unwrap()).unwrap();
        assert_eq!(r.elements.len(), 3);
        assert_eq!(r.subsets, 8);
        assert_eq!(r.intervals, 7);
        assert_eq!(r.non_intervals.len(), 1);
        assert!(r.counterexamples.is_empty(), "{:?}", r.counterexamples);

        let r = exhaustive_interval_census(ZSegment::new(0, 0).unwrap()).unwrap();
        assert_eq!((r.elements.len(), r.subsets, r.intervals), (2, 4, 4));
        assert!(r.counterexamples.is_empty());
    }

    #[test]
    fn sweep_examples() {
        let chi = Cuspidal::new("chi", 1, SelfDuality::Orthogonal);
        let so = |n| GroupType::new(GroupKind::SOodd, n);
        let psi = ArthurParameter {
            group: so(2),
            summands: vec![ArthurSummand::new(&chi, 2, 1), ArthurSummand::new(&chi, 2, 1)],
        };
        let r = packet_sweep(&psi, 4, 1000).unwrap();
        assert_eq!(r.packet_size, 2);
        assert!(r.counterexamples.is_empty());

        let psi = ArthurParameter {
            group: so(1),
            summands: vec![ArthurSummand::new(&chi, 1, 2)],
        };
        assert_eq!(packet_sweep(&psi, 4, 1000).unwrap().packet_size, 1);

        let psi = ArthurParameter {
            group: so(0),
            summands: vec![],
        };
        assert_eq!(packet_sweep(&psi, 4, 1000).unwrap().packet_size, 1);
    }
}
