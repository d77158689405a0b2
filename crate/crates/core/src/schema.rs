//! JSON documents. Every document that names cuspidals carries a
//! top-level `cuspidals` array; rows and factors refer to them by name.

use serde::{Deserialize, Serialize};

use crate::error::{ArthurError, Result};
use crate::glconstraints::{GLLocalComponent, GLNuFactor, GLTemperedFactor, GlobalType};
use crate::halfint::Exponent;
use crate::multisegment::{
    ArthurParameter, ArthurSummand, Cuspidal, CuspidalRegistry, ExtMultiSegment, ExtSegment, GroupType, Row,
};
use crate::segments::ZSegment;
use crate::sequences::ZSeq;
use crate::unitarity::{APlusRep, BpEntry, NuEntry};

fn check_group(group: GroupType) -> Result<()> {
    if group.n < 0 {
        return Err(ArthurError::InvalidInput(format!("group rank {} is negative", group.n)));
    }
    Ok(())
}

fn names(reg: &CuspidalRegistry) -> Vec<Cuspidal> {
    reg.cuspidals().to_vec()
}

/// One row, with the cuspidal given by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RowDoc {
    pub rho: String,
    pub segments: Vec<ExtSegment>,
}

/// An extended multi-segment without its registry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultiSegmentBody {
    pub group: GroupType,
    pub rows: Vec<RowDoc>,
}

impl MultiSegmentBody {
    pub fn resolve(&self, reg: &CuspidalRegistry) -> Result<ExtMultiSegment> {
        check_group(self.group)?;
        let rows = self
            .rows
            .iter()
            .map(|r| Ok(Row::new(reg.get(&r.rho)?, r.segments.clone())))
            .collect::<Result<_>>()?;
        Ok(ExtMultiSegment::new(self.group, rows))
    }

    pub fn from_domain(e: &ExtMultiSegment) -> Self {
        MultiSegmentBody {
            group: e.group,
            rows: e
                .rows
                .iter()
                .map(|r| RowDoc {
                    rho: r.rho.name.clone(),
                    segments: r.segments.clone(),
                })
                .collect(),
        }
    }
}

/// `{"cuspidals", "group", "rows"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultiSegmentDoc {
    pub cuspidals: Vec<Cuspidal>,
    pub group: GroupType,
    pub rows: Vec<RowDoc>,
}

impl MultiSegmentDoc {
    pub fn registry(&self) -> Result<CuspidalRegistry> {
        CuspidalRegistry::new(self.cuspidals.clone())
    }

    pub fn resolve(&self) -> Result<(CuspidalRegistry, ExtMultiSegment)> {
        let reg = self.registry()?;
        let body = MultiSegmentBody {
            group: self.group,
            rows: self.rows.clone(),
        };
        let e = body.resolve(&reg)?;
        Ok((reg, e))
    }

    pub fn from_domain(reg: &CuspidalRegistry, e: &ExtMultiSegment) -> Self {
        let body = MultiSegmentBody::from_domain(e);
        MultiSegmentDoc {
            cuspidals: names(reg),
            group: body.group,
            rows: body.rows,
        }
    }
}

/// `{"sequence": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceDoc {
    pub sequence: ZSeq,
}

/// `{"delta": {"A", "B"}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CensusDoc {
    pub delta: ZSegment,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SummandDoc {
    pub rho: String,
    pub a: i64,
    pub b: i64,
    #[serde(default = "zero", skip_serializing_if = "Exponent::is_zero_ref")]
    pub x: Exponent,
}

fn zero() -> Exponent {
    Exponent::ZERO
}

impl Exponent {
    fn is_zero_ref(&self) -> bool {
        self.is_zero()
    }
}

/// `{"cuspidals", "group", "summands"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParameterDoc {
    pub cuspidals: Vec<Cuspidal>,
    pub group: GroupType,
    pub summands: Vec<SummandDoc>,
}

impl ParameterDoc {
    pub fn resolve(&self) -> Result<(CuspidalRegistry, ArthurParameter)> {
        check_group(self.group)?;
        let reg = CuspidalRegistry::new(self.cuspidals.clone())?;
        let summands = self
            .summands
            .iter()
            .map(|s| {
                Ok(ArthurSummand {
                    rho: reg.get(&s.rho)?.clone(),
                    a: s.a,
                    b: s.b,
                    x: s.x,
                })
            })
            .collect::<Result<_>>()?;
        let psi = ArthurParameter {
            group: self.group,
            summands,
        };
        psi.validate()?;
        Ok((reg, psi))
    }

    pub fn from_domain(reg: &CuspidalRegistry, psi: &ArthurParameter) -> Self {
        ParameterDoc {
            cuspidals: names(reg),
            group: psi.group,
            summands: psi
                .summands
                .iter()
                .map(|s| SummandDoc {
                    rho: s.rho.name.clone(),
                    a: s.a,
                    b: s.b,
                    x: s.x,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NuDoc {
    pub rho: String,
    pub a: i64,
    pub b: i64,
    pub x: Exponent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BpDoc {
    pub rho: String,
    pub a: i64,
    pub b: i64,
}

/// `{"cuspidals", "group", "nu", "bp", "gp"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitaryDoc {
    pub cuspidals: Vec<Cuspidal>,
    pub group: GroupType,
    #[serde(default)]
    pub nu: Vec<NuDoc>,
    #[serde(default)]
    pub bp: Vec<BpDoc>,
    pub gp: MultiSegmentBody,
}

impl UnitaryDoc {
    pub fn resolve(&self) -> Result<(CuspidalRegistry, APlusRep)> {
        check_group(self.group)?;
        let reg = CuspidalRegistry::new(self.cuspidals.clone())?;
        let nu = self
            .nu
            .iter()
            .map(|n| {
                Ok(NuEntry {
                    rho: reg.get(&n.rho)?.clone(),
                    a: n.a,
                    b: n.b,
                    x: n.x,
                })
            })
            .collect::<Result<_>>()?;
        let bp = self
            .bp
            .iter()
            .map(|p| {
                Ok(BpEntry {
                    rho: reg.get(&p.rho)?.clone(),
                    a: p.a,
                    b: p.b,
                })
            })
            .collect::<Result<_>>()?;
        let gp = self.gp.resolve(&reg)?;
        Ok((
            reg,
            APlusRep {
                group: self.group,
                nu,
                bp,
                gp,
            },
        ))
    }

    pub fn from_domain(reg: &CuspidalRegistry, pi: &APlusRep) -> Self {
        UnitaryDoc {
            cuspidals: names(reg),
            group: pi.group,
            nu: pi
                .nu
                .iter()
                .map(|n| NuDoc {
                    rho: n.rho.name.clone(),
                    a: n.a,
                    b: n.b,
                    x: n.x,
                })
                .collect(),
            bp: pi
                .bp
                .iter()
                .map(|p| BpDoc {
                    rho: p.rho.name.clone(),
                    a: p.a,
                    b: p.b,
                })
                .collect(),
            gp: MultiSegmentBody::from_domain(&pi.gp),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GLNuDoc {
    pub rho: String,
    pub a: i64,
    pub x: Exponent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GLTemperedDoc {
    pub rho: String,
    pub a: i64,
}

/// `{"cuspidals", "global_type", "nu", "tempered"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GLDoc {
    pub cuspidals: Vec<Cuspidal>,
    pub global_type: GlobalType,
    #[serde(default)]
    pub nu: Vec<GLNuDoc>,
    #[serde(default)]
    pub tempered: Vec<GLTemperedDoc>,
}

impl GLDoc {
    pub fn resolve(&self) -> Result<(CuspidalRegistry, GLLocalComponent)> {
        let reg = CuspidalRegistry::new(self.cuspidals.clone())?;
        let nu = self
            .nu
            .iter()
            .enumerate()
            .map(|(i, n)| {
                if n.a < 1 {
                    return Err(ArthurError::InvalidInput(format!("nu[{i}]: a must be positive")));
                }
                if !n.x.is_complementary() {
                    return Err(ArthurError::InvalidInput(format!("nu[{i}]: x = {} is not in (0, 1/2)", n.x)));
                }
                Ok(GLNuFactor {
                    rho: reg.get(&n.rho)?.clone(),
                    a: n.a,
                    x: n.x,
                })
            })
            .collect::<Result<_>>()?;
        let tempered = self
            .tempered
            .iter()
            .map(|t| {
                Ok(GLTemperedFactor {
                    rho: reg.get(&t.rho)?.clone(),
                    a: t.a,
                })
            })
            .collect::<Result<_>>()?;
        Ok((
            reg,
            GLLocalComponent {
                global_type: self.global_type,
                nu,
                tempered,
            },
        ))
    }

    pub fn from_domain(reg: &CuspidalRegistry, c: &GLLocalComponent) -> Self {
        GLDoc {
            cuspidals: names(reg),
            global_type: c.global_type,
            nu: c
                .nu
                .iter()
                .map(|n| GLNuDoc {
                    rho: n.rho.name.clone(),
                    a: n.a,
                    x: n.x,
                })
                .collect(),
            tempered: c
                .tempered
                .iter()
                .map(|t| GLTemperedDoc {
                    rho: t.rho.name.clone(),
                    a: t.a,
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multisegment::{GroupKind, SelfDuality};

    const SO5: &str = r#"{
        "cuspidals": [{"name": "chi", "dim": 1, "selfdual": "orthogonal"}],
        "group": {"kind": "SOodd", "n": 2},
        "rows": [{"rho": "chi", "segments": [
            {"A": "1/2", "B": "1/2", "l": 0, "eta": 1},
            {"A": "1/2", "B": "1/2", "l": 0, "eta": 1}
        ]}]
    }"#;

    #[test]
    fn multisegment_round_trip() {
        let doc: MultiSegmentDoc = serde_json::from_str(SO5).unwrap();
        let (reg, e) = doc.resolve().unwrap();
        assert_eq!(e.group, GroupType::new(GroupKind::SOodd, 2));
        assert_eq!(e.rows[0].rho.selfdual, SelfDuality::Orthogonal);
        assert_eq!(MultiSegmentDoc::from_domain(&reg, &e), doc);
        let again: serde_json::Value = serde_json::to_value(&doc).unwrap();
        let orig: serde_json::Value = serde_json::from_str(SO5).unwrap();
        assert_eq!(again, orig);
    }

    #[test]
    fn unknown_cuspidal_is_rejected() {
        let text = SO5.replace(r#""rho": "chi""#, r#""rho": "psi""#);
        let doc: MultiSegmentDoc = serde_json::from_str(&text).unwrap();
        assert!(matches!(doc.resolve(), Err(ArthurError::Cuspidal(_))));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = SO5.replace(r#""l": 0, "eta": 1},"#, r#""l": 0, "eta": 1, "extra": 3},"#);
        assert!(serde_json::from_str::<MultiSegmentDoc>(&text).is_err());
    }

    #[test]
    fn gl_doc_resolves() {
        let text = r#"{
            "cuspidals": [
                {"name": "1", "dim": 1, "selfdual": "orthogonal"},
                {"name": "chi", "dim": 1, "selfdual": "orthogonal"}
            ],
            "global_type": "orthogonal",
            "nu": [{"rho": "chi", "a": 1, "x": "1/4"}],
            "tempered": [{"rho": "1", "a": 1}]
        }"#;
        let doc: GLDoc = serde_json::from_str(text).unwrap();
        let (reg, c) = doc.resolve().unwrap();
        assert_eq!(c.nu[0].x, Exponent::new(1, 4));
        assert_eq!(GLDoc::from_domain(&reg, &c), doc);
    }
}
