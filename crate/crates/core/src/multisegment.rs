//! Cuspidal symbols, local Arthur parameters, extended multi-segments,
//! the non-vanishing test for `pi(E)` and its component-group character.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ArthurError, Result};
use crate::halfint::{Exponent, HalfInt, Sign};
use crate::segments::{VExtZSeg, ZSegment};
use crate::sequences::{nv_seq, orbit, ZSeq};

/// Self-duality type of a cuspidal symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SelfDuality {
    Orthogonal,
    Symplectic,
    None,
}

/// An irreducible unitary supercuspidal representation of `GL_dim`,
/// tracked as a named symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Cuspidal {
    pub name: String,
    pub dim: i64,
    pub selfdual: SelfDuality,
    /// Name of the contragredient; present exactly when not self-dual.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual: Option<String>,
}

impl Cuspidal {
    pub fn new(name: &str, dim: i64, selfdual: SelfDuality) -> Self {
        Cuspidal {
            name: name.to_string(),
            dim,
            selfdual,
            dual: None,
        }
    }

    /// A non-self-dual symbol whose contragredient is `dual`.
    pub fn with_dual(name: &str, dim: i64, dual: &str) -> Self {
        Cuspidal {
            name: name.to_string(),
            dim,
            selfdual: SelfDuality::None,
            dual: Some(dual.to_string()),
        }
    }

    pub fn is_selfdual(&self) -> bool {
        self.selfdual != SelfDuality::None
    }

    /// Name of the contragredient (the name itself when self-dual).
    pub fn dual_name(&self) -> &str {
        self.dual.as_deref().unwrap_or(&self.name)
    }
}

/// The declared cuspidal symbols, in declaration order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CuspidalRegistry {
    list: Vec<Cuspidal>,
    index: HashMap<String, usize>,
}

impl CuspidalRegistry {
    pub fn new(list: Vec<Cuspidal>) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, c) in list.iter().enumerate() {
            if index.insert(c.name.clone(), i).is_some() {
                return Err(ArthurError::Cuspidal(format!("duplicate name {}", c.name)));
            }
            if c.dim < 1 {
                return Err(ArthurError::Cuspidal(format!("{}: dimension must be positive", c.name)));
            }
            if c.dim == 1 && c.selfdual == SelfDuality::Symplectic {
                return Err(ArthurError::Cuspidal(format!(
                    "{}: a self-dual character is orthogonal",
                    c.name
                )));
            }
        }
        for c in &list {
            match (&c.selfdual, &c.dual) {
                (SelfDuality::None, None) => {
                    return Err(ArthurError::Cuspidal(format!("{}: missing dual", c.name)))
                }
                (SelfDuality::None, Some(d)) => {
                    let Some(&j) = index.get(d) else {
                        return Err(ArthurError::Cuspidal(format!("{}: unknown dual {d}", c.name)));
                    };
                    let other = &list[j];
                    if d == &c.name
                        || other.dual.as_deref() != Some(c.name.as_str())
                        || other.selfdual != SelfDuality::None
                        || other.dim != c.dim
                    {
                        return Err(ArthurError::Cuspidal(format!(
                            "{} and {d} do not form a dual pair",
                            c.name
                        )));
                    }
                }
                (_, Some(d)) if d != &c.name => {
                    return Err(ArthurError::Cuspidal(format!(
                        "{}: a self-dual symbol cannot have dual {d}",
                        c.name
                    )))
                }
                _ => {}
            }
        }
        Ok(CuspidalRegistry { list, index })
    }

    pub fn get(&self, name: &str) -> Result<&Cuspidal> {
        self.index
            .get(name)
            .map(|&i| &self.list[i])
            .ok_or_else(|| ArthurError::Cuspidal(format!("unknown cuspidal {name}")))
    }

    pub fn cuspidals(&self) -> &[Cuspidal] {
        &self.list
    }
}

/// `Sp(2n)` or split `SO(2n+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupKind {
    Sp,
    SOodd,
}

/// A group of the given kind and rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupType {
    pub kind: GroupKind,
    pub n: i64,
}

impl GroupType {
    pub fn new(kind: GroupKind, n: i64) -> Self {
        GroupType { kind, n }
    }

    /// Dimension `N` of the dual-side representation: `2n+1` for `Sp`, `2n` for `SOodd`.
    pub fn dual_dim(self) -> i64 {
        match self.kind {
            GroupKind::Sp => 2 * self.n + 1,
            GroupKind::SOodd => 2 * self.n,
        }
    }

    /// Same kind with `N` increased by `extra` (which must be even).
    pub fn grown(self, extra: i64) -> GroupType {
        GroupType {
            kind: self.kind,
            n: self.n + extra / 2,
        }
    }
}

/// Whether `rho ⊗ S_a ⊗ S_b` is of good parity for the group kind.
pub fn good_parity(rho: &Cuspidal, a: i64, b: i64, kind: GroupKind) -> bool {
    let odd = (a + b).rem_euclid(2) == 1;
    matches!(
        (kind, odd, rho.selfdual),
        (GroupKind::SOodd, true, SelfDuality::Orthogonal)
            | (GroupKind::SOodd, false, SelfDuality::Symplectic)
            | (GroupKind::Sp, false, SelfDuality::Orthogonal)
            | (GroupKind::Sp, true, SelfDuality::Symplectic)
    )
}

/// A summand `rho |.|^x ⊗ S_a ⊗ S_b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArthurSummand {
    pub rho: Cuspidal,
    pub a: i64,
    pub b: i64,
    pub x: Exponent,
}

impl ArthurSummand {
    pub fn new(rho: &Cuspidal, a: i64, b: i64) -> Self {
        ArthurSummand {
            rho: rho.clone(),
            a,
            b,
            x: Exponent::ZERO,
        }
    }

    pub fn class(&self) -> SummandClass {
        SummandClass {
            rho: self.rho.name.clone(),
            a: self.a,
            b: self.b,
        }
    }
}

/// Isomorphism class `(rho, a, b)` of an unramified summand.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SummandClass {
    pub rho: String,
    pub a: i64,
    pub b: i64,
}

/// A formal sum of summands for a fixed group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArthurParameter {
    pub group: GroupType,
    pub summands: Vec<ArthurSummand>,
}

impl ArthurParameter {
    pub fn dimension(&self) -> i64 {
        self.summands.iter().map(|s| s.rho.dim * s.a * s.b).sum()
    }

    pub fn validate(&self) -> Result<()> {
        let actual = self.dimension();
        if actual != self.group.dual_dim() {
            return Err(ArthurError::DimensionMismatch {
                expected: self.group.dual_dim(),
                actual,
            });
        }
        let mut balance: BTreeMap<(String, i64, i64, Exponent), i64> = BTreeMap::new();
        for s in &self.summands {
            if s.a < 1 || s.b < 1 {
                return Err(ArthurError::InvalidInput(format!("{}: a and b must be positive", s.rho.name)));
            }
            if !s.x.is_bounded() {
                return Err(ArthurError::InvalidInput(format!("{}: |x| must be below 1/2", s.rho.name)));
            }
            *balance.entry((s.rho.name.clone(), s.a, s.b, s.x)).or_default() += 1;
            *balance
                .entry((s.rho.dual_name().to_string(), s.a, s.b, -s.x))
                .or_default() -= 1;
        }
        if let Some(((rho, a, b, x), _)) = balance.iter().find(|(_, &v)| v != 0) {
            return Err(ArthurError::InvalidInput(format!(
                "summand ({rho}, {a}, {b}, {x}) has no dual partner"
            )));
        }
        Ok(())
    }

    /// Multiplicity of each good-parity class with `x = 0`.
    pub fn good_parity_classes(&self) -> BTreeMap<SummandClass, usize> {
        let mut out = BTreeMap::new();
        for s in &self.summands {
            if s.x.is_zero() && good_parity(&s.rho, s.a, s.b, self.group.kind) {
                *out.entry(s.class()).or_default() += 1;
            }
        }
        out
    }
}

/// A character of the component group: a sign on each good-parity class.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    pub values: BTreeMap<SummandClass, Sign>,
}

impl Character {
    pub fn get(&self, rho: &str, a: i64, b: i64) -> Option<Sign> {
        self.values
            .get(&SummandClass {
                rho: rho.to_string(),
                a,
                b,
            })
            .copied()
    }
}

#[derive(Serialize)]
struct CharacterEntry<'a> {
    rho: &'a str,
    a: i64,
    b: i64,
    sign: Sign,
}

impl Serialize for Character {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.values.iter().map(|(c, &sign)| CharacterEntry {
            rho: &c.rho,
            a: c.a,
            b: c.b,
            sign,
        }))
    }
}

/// All characters: sign functions on good-parity classes whose product over
/// indices, counted with multiplicity, is `+1`.
pub fn characters_of(psi: &ArthurParameter) -> Result<Vec<Character>> {
    if let Some(s) = psi.summands.iter().find(|s| !s.x.is_zero()) {
        return Err(ArthurError::InvalidInput(format!(
            "{}: characters need x = 0 on every summand",
            s.rho.name
        )));
    }
    let classes: Vec<(SummandClass, usize)> = psi.good_parity_classes().into_iter().collect();
    let k = classes.len();
    if k > 20 {
        return Err(ArthurError::InvalidInput(format!("{k} good-parity classes is too many to enumerate")));
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << k) {
        let mut product = Sign::Plus;
        let mut values = BTreeMap::new();
        for (bit, (class, mult)) in classes.iter().enumerate() {
            let sign = if mask >> bit & 1 == 1 { Sign::Minus } else { Sign::Plus };
            product = product * sign.pow(*mult as i64);
            values.insert(class.clone(), sign);
        }
        if product == Sign::Plus {
            out.push(Character { values });
        }
    }
    out.sort();
    Ok(out)
}

/// An extended segment `([A,B]_rho, l, eta)` with half-integral endpoints.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSegment", into = "RawSegment")]
pub struct ExtSegment {
    hi: HalfInt,
    lo: HalfInt,
    l: i64,
    eta: Sign,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSegment {
    #[serde(rename = "A")]
    hi: HalfInt,
    #[serde(rename = "B")]
    lo: HalfInt,
    l: i64,
    eta: Sign,
}

impl TryFrom<RawSegment> for ExtSegment {
    type Error = ArthurError;
    fn try_from(r: RawSegment) -> Result<Self> {
        ExtSegment::new(r.hi, r.lo, r.l, r.eta)
    }
}

impl From<ExtSegment> for RawSegment {
    fn from(s: ExtSegment) -> Self {
        RawSegment {
            hi: s.hi,
            lo: s.lo,
            l: s.l,
            eta: s.eta,
        }
    }
}

impl ExtSegment {
    /// Requires `A >= B`, `A - B` integral and `0 <= l <= b/2`.
    pub fn new(hi: HalfInt, lo: HalfInt, l: i64, eta: Sign) -> Result<Self> {
        if hi < lo || !(hi - lo).is_integral() {
            return Err(ArthurError::InvalidSegment(format!(
                "[{hi},{lo}] needs A >= B with A - B integral"
            )));
        }
        let b = (hi - lo).floor() + 1;
        if l < 0 || 2 * l > b {
            return Err(ArthurError::InvalidSegment(format!("l = {l} outside 0..=b/2 for b = {b}")));
        }
        let eta = if 2 * l == b { Sign::Plus } else { eta };
        Ok(ExtSegment { hi, lo, l, eta })
    }

    /// Endpoints given as doubled integers; panics on invalid data.
    pub fn of(hi_twice: i64, lo_twice: i64, l: i64, eta: i64) -> Self {
        let eta = Sign::from_value(eta).expect("eta must be +1 or -1");
        ExtSegment::new(HalfInt::from_twice(hi_twice), HalfInt::from_twice(lo_twice), l, eta).unwrap()
    }

    pub fn hi(self) -> HalfInt {
        self.hi
    }

    pub fn lo(self) -> HalfInt {
        self.lo
    }

    pub fn l(self) -> i64 {
        self.l
    }

    pub fn eta(self) -> Sign {
        self.eta
    }

    /// `a = A + B + 1`.
    pub fn a(self) -> i64 {
        (self.hi + self.lo).floor() + 1
    }

    /// `b = A - B + 1`.
    pub fn b(self) -> i64 {
        (self.hi - self.lo).floor() + 1
    }

    pub fn lifts(self) -> Vec<Sign> {
        if 2 * self.l == self.b() {
            vec![Sign::Plus, Sign::Minus]
        } else {
            vec![self.eta]
        }
    }

    /// `([floor A, floor B], l, eta)`.
    pub fn zlevel(self) -> VExtZSeg {
        let seg = ZSegment::new(self.hi.floor(), self.lo.floor()).expect("A >= B");
        VExtZSeg::new(seg, self.l, self.eta).expect("l <= b/2")
    }

    /// Inverse of [`ExtSegment::zlevel`] for a row with fractional part `offset`.
    pub fn from_zlevel(z: VExtZSeg, offset: HalfInt) -> Result<Self> {
        let d = z.support();
        ExtSegment::new(
            HalfInt::from_int(d.hi()) + offset,
            HalfInt::from_int(d.lo()) + offset,
            z.l(),
            z.eta(),
        )
    }
}

impl fmt::Debug for ExtSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "([{},{}],{},{})", self.hi, self.lo, self.l, self.eta)
    }
}

/// The ordered extended segments attached to one cuspidal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Row {
    pub rho: Cuspidal,
    pub segments: Vec<ExtSegment>,
}

impl Row {
    pub fn new(rho: &Cuspidal, segments: Vec<ExtSegment>) -> Self {
        Row {
            rho: rho.clone(),
            segments,
        }
    }

    /// Common fractional part of the endpoints (0 or 1/2).
    pub fn offset(&self) -> HalfInt {
        self.segments.first().map_or(HalfInt::ZERO, |s| s.lo.frac())
    }

    pub fn zlevel(&self) -> Result<ZSeq> {
        ZSeq::new(self.segments.iter().map(|s| s.zlevel()).collect())
    }

    /// Rebuild a row from its ℤ-level sequence.
    pub fn from_zlevel(rho: &Cuspidal, seq: &ZSeq, offset: HalfInt) -> Result<Self> {
        let segments = seq
            .items()
            .iter()
            .map(|&z| ExtSegment::from_zlevel(z, offset))
            .collect::<Result<_>>()?;
        Ok(Row::new(rho, segments))
    }

    /// Inequality (★) at every position.
    pub fn star_holds(&self) -> bool {
        let mut alpha = 0i64;
        for s in &self.segments {
            let ok = if s.lo.is_integral() {
                s.lo.twice() + 2 * s.l >= 0
            } else {
                s.lifts()
                    .into_iter()
                    .any(|eta| s.lo.twice() + 2 * s.l >= (Sign::parity(alpha + 1) * eta).value())
            };
            if !ok {
                return false;
            }
            alpha += s.a();
        }
        true
    }

    /// First pair `(i, j)`, `i < j`, with `B_j < B_i`.
    fn p_prime_violation(&self) -> Option<(usize, usize)> {
        for i in 0..self.segments.len() {
            for j in i + 1..self.segments.len() {
                if self.segments[j].lo < self.segments[i].lo {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Local sign at each position, assuming (P').
    pub fn local_signs(&self) -> Vec<Sign> {
        let segs = &self.segments;
        (0..segs.len())
            .map(|i| {
                let (ai, bi) = (segs[i].a(), segs[i].b());
                let z = (0..segs.len())
                    .filter(|&j| {
                        let (aj, bj) = (segs[j].a(), segs[j].b());
                        (bi - bj).rem_euclid(2) == 1
                            && ((j > i && aj < ai) || (j < i && aj > ai))
                            && ((bj % 2 == 0 && bj > bi) || (bj % 2 == 1 && bi > bj))
                    })
                    .count() as i64;
                Sign::parity(z + bi / 2 + segs[i].l) * segs[i].eta.pow(bi)
            })
            .collect()
    }
}

/// An extended multi-segment for a group: one ordered row per cuspidal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtMultiSegment {
    pub group: GroupType,
    pub rows: Vec<Row>,
}

impl ExtMultiSegment {
    pub fn new(group: GroupType, rows: Vec<Row>) -> Self {
        ExtMultiSegment { group, rows }
    }

    pub fn row(&self, rho: &str) -> Option<&Row> {
        self.rows.iter().find(|r| r.rho.name == rho)
    }

    /// The parameter `psi_E`.
    pub fn psi(&self) -> ArthurParameter {
        let summands = self
            .rows
            .iter()
            .flat_map(|r| {
                r.segments
                    .iter()
                    .map(move |s| ArthurSummand::new(&r.rho, s.a(), s.b()))
            })
            .collect();
        ArthurParameter {
            group: self.group,
            summands,
        }
    }

    pub fn contains_summand(&self, rho: &str, a: i64, b: i64) -> bool {
        self.row(rho)
            .is_some_and(|r| r.segments.iter().any(|s| s.a() == a && s.b() == b))
    }

    /// Checks every structural condition, one error per clause.
    pub fn validate(&self) -> Result<()> {
        for (i, r) in self.rows.iter().enumerate() {
            if self.rows[..i].iter().any(|p| p.rho.name == r.rho.name) {
                return Err(ArthurError::InvalidInput(format!("two rows for {}", r.rho.name)));
            }
        }
        for r in &self.rows {
            let name = &r.rho.name;
            let offset = r.offset();
            for (i, s) in r.segments.iter().enumerate() {
                if s.lo.frac() != offset || s.hi.frac() != offset {
                    return Err(ArthurError::EndpointMismatch {
                        rho: name.clone(),
                        index: i,
                    });
                }
            }
            for i in 0..r.segments.len() {
                for j in i + 1..r.segments.len() {
                    let (si, sj) = (r.segments[i], r.segments[j]);
                    if sj.hi < si.hi && sj.lo < si.lo {
                        return Err(ArthurError::OrderNotAdmissible {
                            rho: name.clone(),
                            first: i,
                            second: j,
                        });
                    }
                }
            }
            for (i, s) in r.segments.iter().enumerate() {
                if (s.hi + s.lo) < HalfInt::ZERO {
                    return Err(ArthurError::NegativeCenter {
                        rho: name.clone(),
                        index: i,
                    });
                }
            }
            for s in &r.segments {
                if !good_parity(&r.rho, s.a(), s.b(), self.group.kind) {
                    return Err(ArthurError::BadParity(format!(
                        "{name} x S_{} x S_{} for {:?}",
                        s.a(),
                        s.b(),
                        self.group.kind
                    )));
                }
            }
        }
        let actual = self.psi().dimension();
        if actual != self.group.dual_dim() {
            return Err(ArthurError::DimensionMismatch {
                expected: self.group.dual_dim(),
                actual,
            });
        }
        let product = self
            .rows
            .iter()
            .flat_map(|r| r.segments.iter())
            .fold(Sign::Plus, |acc, s| {
                acc * Sign::parity(s.b() / 2 + s.l) * s.eta.pow(s.b())
            });
        if product != Sign::Plus {
            return Err(ArthurError::SignConditionFailed);
        }
        Ok(())
    }

    /// ℤ-level sequence of the row for `rho`.
    pub fn zlevel(&self, rho: &str) -> Result<ZSeq> {
        self.row(rho)
            .ok_or_else(|| ArthurError::MissingRow(rho.to_string()))?
            .zlevel()
    }

    /// Every row in (P'') order; stays in the same row-exchange class.
    pub fn normalized_p2(&self, cap: usize) -> Result<ExtMultiSegment> {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let p2 = crate::sequences::canonical_p2(&r.zlevel()?, cap)?;
                Row::from_zlevel(&r.rho, &p2, r.offset())
            })
            .collect::<Result<_>>()?;
        Ok(ExtMultiSegment::new(self.group, rows))
    }
}

#[derive(Serialize)]
struct RowOut<'a> {
    rho: &'a str,
    segments: &'a [ExtSegment],
}

#[derive(Serialize)]
struct MultiSegmentOut<'a> {
    group: GroupType,
    rows: Vec<RowOut<'a>>,
}

impl Serialize for ExtMultiSegment {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MultiSegmentOut {
            group: self.group,
            rows: self
                .rows
                .iter()
                .map(|r| RowOut {
                    rho: &r.rho.name,
                    segments: &r.segments,
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

/// Free-standing form of [`ExtMultiSegment::validate`].
pub fn validate(e: &ExtMultiSegment) -> Result<()> {
    e.validate()
}

/// Free-standing form of [`ExtMultiSegment::zlevel`].
pub fn zlevel(e: &ExtMultiSegment, rho: &str) -> Result<ZSeq> {
    e.zlevel(rho)
}

/// Whether `pi(E) != 0`: every row passes the sequence criterion and (★).
pub fn pi_nonzero(e: &ExtMultiSegment, cap: usize) -> Result<bool> {
    e.validate()?;
    for r in &e.rows {
        if !r.star_holds() || !nv_seq(&r.zlevel()?, cap)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Local sign at every position of every row; requires (P').
pub fn local_signs(e: &ExtMultiSegment) -> Result<Vec<Vec<Sign>>> {
    for r in &e.rows {
        if let Some((first, second)) = r.p_prime_violation() {
            return Err(ArthurError::OrderNotPPrime {
                rho: r.rho.name.clone(),
                first,
                second,
            });
        }
    }
    Ok(e.rows.iter().map(Row::local_signs).collect())
}

/// The character of `pi(E)`.
pub fn character(e: &ExtMultiSegment, cap: usize) -> Result<Character> {
    if !pi_nonzero(e, cap)? {
        return Err(ArthurError::Vanishing("pi(E) is zero".to_string()));
    }
    let signs = local_signs(e)?;
    let mut values = BTreeMap::new();
    let mut product = Sign::Plus;
    for (r, row_signs) in e.rows.iter().zip(&signs) {
        for (s, &sign) in r.segments.iter().zip(row_signs) {
            product = product * sign;
            let class = SummandClass {
                rho: r.rho.name.clone(),
                a: s.a(),
                b: s.b(),
            };
            if let Some(prev) = values.insert(class.clone(), sign) {
                if prev != sign {
                    return Err(ArthurError::CharacterInvariant(format!(
                        "class ({}, {}, {}) gets both signs",
                        class.rho, class.a, class.b
                    )));
                }
            }
        }
    }
    if product != Sign::Plus {
        return Err(ArthurError::CharacterInvariant("product over summands is -1".to_string()));
    }
    Ok(Character { values })
}

/// Whether `pi(E1) = pi(E2)`: each row of `E2` lies in the orbit of the
/// matching row of `E1`.
pub fn same_pi(e1: &ExtMultiSegment, e2: &ExtMultiSegment, cap: usize) -> Result<bool> {
    if e1.group != e2.group {
        return Ok(false);
    }
    fn names(e: &ExtMultiSegment) -> Vec<&str> {
        let mut v: Vec<&str> = e
            .rows
            .iter()
            .filter(|r| !r.segments.is_empty())
            .map(|r| r.rho.name.as_str())
            .collect();
        v.sort();
        v
    }
    if names(e1) != names(e2) {
        return Ok(false);
    }
    for r1 in e1.rows.iter().filter(|r| !r.segments.is_empty()) {
        let r2 = e2.row(&r1.rho.name).expect("same row names");
        if r1.offset() != r2.offset() || r1.segments.len() != r2.segments.len() {
            return Ok(false);
        }
        let target = r2.zlevel()?;
        if !orbit(&r1.zlevel()?, cap)?.contains(&target) {
            return Ok(false);
        }
    }
    Ok(true)
}
