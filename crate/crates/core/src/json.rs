//! JSON interchange formats.
//!
//! Emitted JSON goes through [`serde_json::Value`], whose objects keep
//! keys sorted, so output is canonical: equal values print identically.
//! Big integers are written as decimal strings.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::genfunc::{Basis, BasisExpansion, ExponentPolynomial};
use crate::poset::Poset;
use crate::set::ElemSet;
use crate::tableaux::Tableau;
use crate::tlabel::{CylindricShape, Extended, SkewShape, StepFunction, TLabelledPoset};
use crate::transfer::{TransferResult, TransferSets};

fn bad(what: &str, e: impl std::fmt::Display) -> Error {
    Error::InvalidInput(format!("{what}: {e}"))
}

/// Parses a JSON document into one of the wire types below.
pub fn parse<T: for<'de> Deserialize<'de>>(what: &str, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| bad(what, e))
}

/// Canonical pretty-printed JSON (sorted keys).
pub fn to_canonical_string<T: Serialize>(value: &T) -> String {
    let v: Value = serde_json::to_value(value).expect("serialisable");
    serde_json::to_string_pretty(&v).expect("serialisable")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetJson {
    pub n: usize,
    pub covers: Vec<[usize; 2]>,
}

impl PosetJson {
    pub fn from_poset(p: &Poset) -> Self {
        PosetJson {
            n: p.len(),
            covers: p.covers().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_poset(&self) -> Result<Poset> {
        let covers: Vec<(usize, usize)> = self.covers.iter().map(|c| (c[0], c[1])).collect();
        Poset::new(self.n, &covers)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubposetJson {
    pub members: Vec<usize>,
}

impl SubposetJson {
    pub fn from_set(s: ElemSet) -> Self {
        SubposetJson { members: s.to_vec() }
    }

    pub fn to_set(&self, n: usize) -> Result<ElemSet> {
        let mut s = ElemSet::EMPTY;
        for &i in &self.members {
            if i >= n || s.contains(i) {
                return Err(Error::InvalidInput(format!("bad or repeated member {i}")));
            }
            s = s.with(i);
        }
        Ok(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TableEntryJson {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StepFunctionJson {
    Named(String),
    Table { table: Vec<TableEntryJson> },
}

impl StepFunctionJson {
    pub fn from_fn(f: &StepFunction) -> Self {
        match f {
            StepFunction::Weak => StepFunctionJson::Named("weak".into()),
            StepFunction::Strict => StepFunctionJson::Named("strict".into()),
            StepFunction::Table(t) => StepFunctionJson::Table {
                table: t
                    .iter()
                    .map(|e| match e {
                        Extended::Finite(v) => TableEntryJson::Int(*v),
                        Extended::Infinity => TableEntryJson::Text("inf".into()),
                    })
                    .collect(),
            },
        }
    }

    pub fn to_fn(&self) -> Result<StepFunction> {
        match self {
            StepFunctionJson::Named(s) if s == "weak" => Ok(StepFunction::Weak),
            StepFunctionJson::Named(s) if s == "strict" => Ok(StepFunction::Strict),
            StepFunctionJson::Named(s) => Err(Error::InvalidLabel(format!("unknown label {s:?}"))),
            StepFunctionJson::Table { table } => StepFunction::table(
                table
                    .iter()
                    .map(|e| match e {
                        TableEntryJson::Int(v) => Ok(Extended::Finite(*v)),
                        TableEntryJson::Text(s) if s == "inf" => Ok(Extended::Infinity),
                        TableEntryJson::Text(s) => {
                            Err(Error::InvalidLabel(format!("bad table entry {s:?}")))
                        }
                    })
                    .collect::<Result<_>>()?,
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelJson {
    pub edge: [usize; 2],
    #[serde(rename = "fn")]
    pub func: StepFunctionJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelledPosetJson {
    pub poset: PosetJson,
    pub labels: Vec<LabelJson>,
}

impl LabelledPosetJson {
    pub fn from_labelled(lp: &TLabelledPoset) -> Self {
        LabelledPosetJson {
            poset: PosetJson::from_poset(lp.poset()),
            labels: lp
                .labels()
                .map(|((a, b), f)| LabelJson {
                    edge: [a, b],
                    func: StepFunctionJson::from_fn(f),
                })
                .collect(),
        }
    }

    pub fn to_labelled(&self) -> Result<TLabelledPoset> {
        let poset = self.poset.to_poset()?;
        let labels = self
            .labels
            .iter()
            .map(|l| Ok(((l.edge[0], l.edge[1]), l.func.to_fn()?)))
            .collect::<Result<Vec<_>>>()?;
        TLabelledPoset::new(poset, labels)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SkewShapeJson {
    pub outer: Vec<u32>,
    #[serde(default)]
    pub inner: Vec<u32>,
}

impl SkewShapeJson {
    pub fn from_shape(s: &SkewShape) -> Self {
        SkewShapeJson {
            outer: s.outer().parts().to_vec(),
            inner: s.inner().parts().to_vec(),
        }
    }

    pub fn to_shape(&self) -> Result<SkewShape> {
        SkewShape::from_parts(&self.outer, &self.inner)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CylindricJson {
    pub k: i64,
    pub n: i64,
    pub cells: Vec<[i64; 2]>,
}

impl CylindricJson {
    pub fn from_shape(s: &CylindricShape) -> Self {
        CylindricJson {
            k: s.k(),
            n: s.n(),
            cells: s.cells().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_shape(&self) -> Result<CylindricShape> {
        let cells: Vec<(i64, i64)> = self.cells.iter().map(|c| (c[0], c[1])).collect();
        CylindricShape::new(self.k, self.n, &cells)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableauJson {
    pub values: BTreeMap<String, u32>,
}

impl TableauJson {
    pub fn from_tableau(t: &Tableau) -> Self {
        TableauJson {
            values: t.entries().map(|(i, v)| (i.to_string(), v)).collect(),
        }
    }

    /// A tableau over a parent with `n` elements.
    pub fn to_tableau(&self, n: usize) -> Result<Tableau> {
        let pairs = self
            .values
            .iter()
            .map(|(k, &v)| {
                k.parse::<usize>()
                    .map(|i| (i, v))
                    .map_err(|e| bad("tableau key", e))
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::from_pairs(n, &pairs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coef: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialJson {
    pub nvars: usize,
    pub terms: Vec<TermJson>,
}

impl PolynomialJson {
    pub fn from_polynomial(p: &ExponentPolynomial) -> Self {
        PolynomialJson {
            nvars: p.nvars(),
            terms: p
                .terms()
                .map(|(e, c)| TermJson {
                    exp: e.clone(),
                    coef: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_polynomial(&self) -> Result<ExponentPolynomial> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let c = BigInt::from_str(&t.coef).map_err(|e| bad("coefficient", e))?;
                Ok((t.exp.clone(), c))
            })
            .collect::<Result<Vec<_>>>()?;
        ExponentPolynomial::from_terms(self.nvars, terms)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoefficientJson {
    pub index: Vec<u32>,
    pub coef: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpansionJson {
    pub basis: Basis,
    pub nvars: usize,
    pub coeffs: Vec<CoefficientJson>,
    pub residual: PolynomialJson,
}

impl ExpansionJson {
    pub fn from_expansion(e: &BasisExpansion) -> Self {
        ExpansionJson {
            basis: e.basis,
            nvars: e.nvars,
            coeffs: e
                .coeffs
                .iter()
                .map(|(k, c)| CoefficientJson {
                    index: k.clone(),
                    coef: c.to_string(),
                })
                .collect(),
            residual: PolynomialJson::from_polynomial(&e.residual),
        }
    }

    pub fn to_expansion(&self) -> Result<BasisExpansion> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let v = BigInt::from_str(&c.coef).map_err(|e| bad("coefficient", e))?;
                Ok((c.index.clone(), v))
            })
            .collect::<Result<_>>()?;
        Ok(BasisExpansion {
            basis: self.basis,
            nvars: self.nvars,
            coeffs,
            residual: self.residual.to_polynomial()?,
        })
    }
}

/// A subposet given either by member ids or, on a grid, by a skew shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RegionJson {
    Members(SubposetJson),
    Shape(SkewShapeJson),
}

/// A rectangular grid of cells with row edges `Weak` and column edges
/// `Strict`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridJson {
    pub rows: u32,
    pub cols: u32,
}

/// Input of the `transfer` command.
///
/// Exactly one of `poset` and `grid` must be present. Tableau keys are
/// element ids; on a grid, the cell in row `i`, column `j` (1-based) has
/// id `(i-1)*cols + (j-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransferBundle {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poset: Option<LabelledPosetJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridJson>,
    pub q: RegionJson,
    pub r: RegionJson,
    pub omega: TableauJson,
    pub sigma: TableauJson,
}

/// Output of the `transfer` command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransferOutput {
    pub alpha: TableauJson,
    pub beta: TableauJson,
    #[serde(rename = "Sstar")]
    pub s_star: Vec<usize>,
    #[serde(rename = "Sdiamond")]
    pub s_diamond: Vec<usize>,
    pub iterations: usize,
    /// Critical cells swapped in each round.
    pub trace: Vec<Vec<usize>>,
}

impl TransferOutput {
    pub fn new(res: &TransferResult, sets: &TransferSets) -> Self {
        TransferOutput {
            alpha: TableauJson::from_tableau(&res.alpha),
            beta: TableauJson::from_tableau(&res.beta),
            s_star: sets.s_star.to_vec(),
            s_diamond: sets.s_diamond.to_vec(),
            iterations: res.iterations,
            trace: res.trace.iter().map(|r| r.critical.to_vec()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labelled_poset_round_trip() {
        let text = r#"{"poset":{"n":3,"covers":[[0,1],[1,2]]},
            "labels":[{"edge":[0,1],"fn":"weak"},{"edge":[1,2],"fn":{"table":[0,1,"inf"]}}]}"#;
        let j: LabelledPosetJson = parse("labelled poset", text).unwrap();
        let lp = j.to_labelled().unwrap();
        assert_eq!(LabelledPosetJson::from_labelled(&lp), j);
        let again: LabelledPosetJson =
            parse("labelled poset", &to_canonical_string(&j)).unwrap();
        assert_eq!(again, j);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse::<PosetJson>("poset", r#"{"n":2,"covers":[[0,1]],"x":1}"#).is_err());
        let j = PosetJson {
            n: 2,
            covers: vec![[0, 1], [0, 1]],
        };
        assert!(j.to_poset().is_err());
        let f = StepFunctionJson::Named("weird".into());
        assert!(f.to_fn().is_err());
    }

    #[test]
    fn polynomial_round_trip() {
        let p = ExponentPolynomial::from_terms(
            2,
            [
                (vec![1, 0], BigInt::from(3)),
                (vec![0, 1], BigInt::from_str("-123456789012345678901234567890").unwrap()),
            ],
        )
        .unwrap();
        let j = PolynomialJson::from_polynomial(&p);
        let text = to_canonical_string(&j);
        let back: PolynomialJson = parse("polynomial", &text).unwrap();
        assert_eq!(back.to_polynomial().unwrap(), p);
        assert!(text.contains("\"-123456789012345678901234567890\""));
    }

    #[test]
    fn tableau_round_trip() {
        let t = Tableau::from_pairs(5, &[(0, 1), (3, 2)]).unwrap();
        let j = TableauJson::from_tableau(&t);
        assert_eq!(j.to_tableau(5).unwrap(), t);
        assert!(j.to_tableau(3).is_err());
    }
}
