//! File schemas. Every index in a document is 1-based.
//!
//! Integers are plain JSON numbers up to 2⁵³−1 and decimal strings above it.
//! A document containing any string-encoded integer carries
//! `"schema_version": 2` as its first key; otherwise the key is omitted.
//! Readers accept both encodings regardless of the marker.

mod csv_out;
mod nat;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::canonical::{Block, BlockForm, SqrtClassification};
use crate::classify::{CommutingIdempotents, CyclicClassification, NilpotencyVerdict, RootOfIdentity};
use crate::error::{Error, Result};
use crate::restrict::{CartanInstance, CartanVerdict, DescentReport, RestrictionCheck, Subset};
use crate::solver::{SearchConfig, SolutionSet};
use crate::zmatrix::{NatMatrix, Permutation, RelationPoly};

pub use csv_out::{matrices_to_csv, matrix_to_csv};
pub use nat::{Int, Nat, MAX_PLAIN_INTEGER};

pub const WIDE_SCHEMA_VERSION: u64 = 2;

/// Serializes a document as one line of JSON followed by a newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut value = serde_json::to_value(doc).expect("document types serialize infallibly");
    if let Value::Object(map) = &mut value {
        if contains_wide(map.values()) {
            let mut out = Map::new();
            out.insert("schema_version".into(), Value::from(WIDE_SCHEMA_VERSION));
            out.extend(std::mem::take(map));
            *map = out;
        }
    }
    let mut s = value.to_string();
    s.push('\n');
    s
}

/// Parses a document, accepting and checking an optional top-level
/// `schema_version`.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    let mut value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if let Value::Object(map) = &mut value {
        if let Some(v) = map.shift_remove("schema_version") {
            match v.as_u64() {
                Some(1) | Some(WIDE_SCHEMA_VERSION) => {}
                _ => return Err(Error::Parse(format!("unsupported schema_version {v}"))),
            }
        }
    }
    serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))
}

/// The only strings in these schemas that consist of an optional sign and
/// digits are wide integers.
fn contains_wide<'a>(mut values: impl Iterator<Item = &'a Value>) -> bool {
    values.any(|v| match v {
        Value::String(s) => nat::is_integer_literal(s),
        Value::Array(a) => contains_wide(a.iter()),
        Value::Object(m) => contains_wide(m.values()),
        _ => false,
    })
}

fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|i| i + 1).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub n: usize,
    pub rows: Vec<Vec<Nat>>,
}

impl From<&NatMatrix> for MatrixDoc {
    fn from(m: &NatMatrix) -> Self {
        MatrixDoc { n: m.n(), rows: m.rows().map(|r| r.iter().cloned().map(Nat).collect()).collect() }
    }
}

impl TryFrom<MatrixDoc> for NatMatrix {
    type Error = Error;

    fn try_from(doc: MatrixDoc) -> Result<Self> {
        if doc.rows.len() != doc.n {
            return Err(Error::InvalidMatrix(format!("n = {} but {} rows given", doc.n, doc.rows.len())));
        }
        if let Some((i, r)) = doc.rows.iter().enumerate().find(|(_, r)| r.len() != doc.n) {
            return Err(Error::InvalidMatrix(format!("row {} has {} entries, expected {}", i + 1, r.len(), doc.n)));
        }
        NatMatrix::from_rows(doc.rows.into_iter().map(|r| r.into_iter().map(|x| x.0)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDoc {
    pub g: Vec<Nat>,
    pub h: Vec<Nat>,
}

impl From<&RelationPoly> for RelationDoc {
    fn from(r: &RelationPoly) -> Self {
        let conv = |v: &[BigUint]| v.iter().cloned().map(Nat).collect();
        RelationDoc { g: conv(r.g()), h: conv(r.h()) }
    }
}

impl TryFrom<RelationDoc> for RelationPoly {
    type Error = Error;

    fn try_from(doc: RelationDoc) -> Result<Self> {
        let conv = |v: Vec<Nat>| v.into_iter().map(|x| x.0).collect();
        RelationPoly::new(conv(doc.g), conv(doc.h))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubsetDoc {
    pub n: usize,
    pub members: Vec<usize>,
}

impl From<&Subset> for SubsetDoc {
    fn from(s: &Subset) -> Self {
        SubsetDoc { n: s.n(), members: s.to_one_based() }
    }
}

impl TryFrom<SubsetDoc> for Subset {
    type Error = Error;

    fn try_from(doc: SubsetDoc) -> Result<Self> {
        Subset::from_one_based(doc.n, &doc.members)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum BlockDoc {
    B1 { a: Nat },
    B2 { a: Nat, b: Nat },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockFormDoc {
    pub perm: Vec<usize>,
    pub k: Nat,
    pub blocks: Vec<BlockDoc>,
}

impl From<&BlockForm> for BlockFormDoc {
    fn from(f: &BlockForm) -> Self {
        let blocks = f
            .blocks
            .iter()
            .map(|b| match b {
                Block::One(a) => BlockDoc::B1 { a: Nat(a.clone()) },
                Block::Two(a, b) => BlockDoc::B2 { a: Nat(a.clone()), b: Nat(b.clone()) },
            })
            .collect();
        BlockFormDoc { perm: f.perm.to_one_based(), k: Nat(f.k.clone()), blocks }
    }
}

impl TryFrom<BlockFormDoc> for BlockForm {
    type Error = Error;

    fn try_from(doc: BlockFormDoc) -> Result<Self> {
        let blocks = doc
            .blocks
            .into_iter()
            .map(|b| match b {
                BlockDoc::B1 { a } => Block::One(a.0),
                BlockDoc::B2 { a, b } => Block::Two(a.0, b.0),
            })
            .collect();
        BlockForm::new(Permutation::from_one_based(&doc.perm)?, blocks, doc.k.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchConfigDoc {
    pub n: usize,
    pub bound: Nat,
    pub symmetric: bool,
    pub up_to_iso: bool,
    pub limit: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionSetDoc {
    pub config: SearchConfigDoc,
    pub relation: RelationDoc,
    pub count: usize,
    pub complete: bool,
    pub solutions: Vec<MatrixDoc>,
}

impl From<&SolutionSet> for SolutionSetDoc {
    fn from(s: &SolutionSet) -> Self {
        let c = &s.config;
        SolutionSetDoc {
            config: SearchConfigDoc {
                n: c.n,
                bound: Nat::from(c.bound),
                symmetric: c.symmetric_only,
                up_to_iso: c.up_to_iso,
                limit: c.limit,
            },
            relation: (&s.relation).into(),
            count: s.solutions.len(),
            complete: s.complete,
            solutions: s.solutions.iter().map(MatrixDoc::from).collect(),
        }
    }
}

impl TryFrom<SolutionSetDoc> for SolutionSet {
    type Error = Error;

    fn try_from(doc: SolutionSetDoc) -> Result<Self> {
        let c = doc.config;
        let bound = c.bound.0.to_u64().ok_or_else(|| Error::Parse(format!("bound {} exceeds 64 bits", c.bound.0)))?;
        let config = SearchConfig::new(c.n, bound).symmetric(c.symmetric).up_to_iso(c.up_to_iso).limit(c.limit);
        if doc.count != doc.solutions.len() {
            return Err(Error::Parse(format!("count is {} but {} solutions listed", doc.count, doc.solutions.len())));
        }
        let solutions = doc
            .solutions
            .into_iter()
            .map(|m| {
                let m = NatMatrix::try_from(m)?;
                if m.n() != c.n {
                    return Err(Error::DimensionMismatch { left: c.n, right: m.n() });
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SolutionSet { config, relation: doc.relation.try_into()?, solutions, complete: doc.complete })
    }
}

/// Classification verdicts, tagged by `kind`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ClassificationDoc {
    /// `M = m·P(involution)`.
    SelfadjointSqrt {
        m: Nat,
        involution: Vec<usize>,
    },
    Idempotent {
        support: Vec<usize>,
    },
    CommutingIdempotents {
        commute: bool,
        x00: Vec<usize>,
        x10: Vec<usize>,
        x01: Vec<usize>,
        x11: Vec<usize>,
        product: MatrixDoc,
    },
    Zero,
    NotNilpotent {
        power: u32,
        row: usize,
        col: usize,
        value: Nat,
    },
    /// `pairing[i]` is the partner of `support[i]`.
    PartialInvolution {
        support: Vec<usize>,
        pairing: Vec<usize>,
    },
    RootOfIdentity {
        perm: Vec<usize>,
        order: u32,
        selfadjoint: bool,
    },
    Involutions {
        n: usize,
        count: usize,
        involutions: Vec<Vec<usize>>,
    },
}

impl From<&SqrtClassification> for ClassificationDoc {
    fn from(c: &SqrtClassification) -> Self {
        ClassificationDoc::SelfadjointSqrt { m: Nat(c.m.clone()), involution: c.involution.to_one_based() }
    }
}

impl From<&CommutingIdempotents> for ClassificationDoc {
    fn from(c: &CommutingIdempotents) -> Self {
        ClassificationDoc::CommutingIdempotents {
            commute: c.commute,
            x00: one_based(&c.x00),
            x10: one_based(&c.x10),
            x01: one_based(&c.x01),
            x11: one_based(&c.x11),
            product: (&c.product).into(),
        }
    }
}

impl From<&NilpotencyVerdict> for ClassificationDoc {
    fn from(v: &NilpotencyVerdict) -> Self {
        match v {
            NilpotencyVerdict::Zero => ClassificationDoc::Zero,
            NilpotencyVerdict::NotNilpotent { power, row, col, value } => {
                ClassificationDoc::NotNilpotent { power: *power, row: row + 1, col: col + 1, value: Nat(value.clone()) }
            }
        }
    }
}

impl From<&CyclicClassification> for ClassificationDoc {
    fn from(c: &CyclicClassification) -> Self {
        match c {
            CyclicClassification::Idempotent { support } => {
                ClassificationDoc::Idempotent { support: one_based(support) }
            }
            CyclicClassification::PartialInvolution { support, pairing } => ClassificationDoc::PartialInvolution {
                support: one_based(support),
                pairing: support.iter().map(|&i| pairing.apply(i) + 1).collect(),
            },
        }
    }
}

impl From<&RootOfIdentity> for ClassificationDoc {
    fn from(r: &RootOfIdentity) -> Self {
        ClassificationDoc::RootOfIdentity { perm: r.perm.to_one_based(), order: r.order, selfadjoint: r.selfadjoint }
    }
}

impl ClassificationDoc {
    pub fn idempotent(support: &[usize]) -> Self {
        ClassificationDoc::Idempotent { support: one_based(support) }
    }

    pub fn involutions(n: usize, list: &[Permutation]) -> Self {
        ClassificationDoc::Involutions {
            n,
            count: list.len(),
            involutions: list.iter().map(Permutation::to_one_based).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CartanInstanceDoc {
    pub cartan: MatrixDoc,
    pub functors: Vec<MatrixDoc>,
}

impl From<&CartanInstance> for CartanInstanceDoc {
    fn from(inst: &CartanInstance) -> Self {
        CartanInstanceDoc {
            cartan: inst.cartan().into(),
            functors: inst.functors().iter().map(MatrixDoc::from).collect(),
        }
    }
}

impl TryFrom<CartanInstanceDoc> for CartanInstance {
    type Error = Error;

    fn try_from(doc: CartanInstanceDoc) -> Result<Self> {
        let functors = doc.functors.into_iter().map(NatMatrix::try_from).collect::<Result<Vec<_>>>()?;
        CartanInstance::new(doc.cartan.try_into()?, functors)
    }
}

/// Cartan verdicts, tagged by `verdict`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case", deny_unknown_fields)]
pub enum CartanVerdictDoc {
    Pass { c: Nat },
    FailCommutation { functor: usize, row: usize, col: usize },
    Reducible { functor: usize, eigenvalue: Int, basis: Vec<Vec<Int>> },
    InconsistentInput { algebra_dim: usize },
    Inconclusive { algebra_dim: usize },
}

impl From<&CartanVerdict> for CartanVerdictDoc {
    fn from(v: &CartanVerdict) -> Self {
        match v {
            CartanVerdict::Pass { c } => CartanVerdictDoc::Pass { c: Nat(c.clone()) },
            CartanVerdict::FailCommutation { functor, row, col } => {
                CartanVerdictDoc::FailCommutation { functor: functor + 1, row: row + 1, col: col + 1 }
            }
            CartanVerdict::Reducible { basis, functor, eigenvalue } => CartanVerdictDoc::Reducible {
                functor: functor + 1,
                eigenvalue: Int(eigenvalue.clone()),
                basis: basis.iter().map(|v| v.iter().cloned().map(Int).collect()).collect(),
            },
            CartanVerdict::InconsistentInput { algebra_dim } => {
                CartanVerdictDoc::InconsistentInput { algebra_dim: *algebra_dim }
            }
            CartanVerdict::Inconclusive { algebra_dim } => CartanVerdictDoc::Inconclusive { algebra_dim: *algebra_dim },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RestrictionCheckDoc {
    pub matrix: MatrixDoc,
    pub holds: bool,
}

impl From<&RestrictionCheck> for RestrictionCheckDoc {
    fn from(c: &RestrictionCheck) -> Self {
        RestrictionCheckDoc { matrix: (&c.matrix).into(), holds: c.holds }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescentReportDoc {
    pub subset: SubsetDoc,
    pub relation: RelationDoc,
    pub serre: Option<RestrictionCheckDoc>,
    pub quotient: Option<RestrictionCheckDoc>,
    pub consistent: bool,
}

impl DescentReportDoc {
    pub fn new(report: &DescentReport, subset: &Subset, rel: &RelationPoly) -> Self {
        DescentReportDoc {
            subset: subset.into(),
            relation: rel.into(),
            serre: report.serre.as_ref().map(Into::into),
            quotient: report.quotient.as_ref().map(Into::into),
            consistent: report.is_consistent(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubsetListDoc {
    pub n: usize,
    pub count: usize,
    pub subsets: Vec<Vec<usize>>,
}

impl SubsetListDoc {
    pub fn new(n: usize, subsets: &[Subset]) -> Self {
        SubsetListDoc { n, count: subsets.len(), subsets: subsets.iter().map(Subset::to_one_based).collect() }
    }
}

/// Outcome of a yes/no check with an optional offending entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckDoc {
    pub check: String,
    pub holds: bool,
    pub witness: Option<[usize; 2]>,
}

impl CheckDoc {
    pub fn new(check: &str, witness: Option<(usize, usize)>) -> Self {
        CheckDoc { check: check.into(), holds: witness.is_none(), witness: witness.map(|(r, c)| [r + 1, c + 1]) }
    }
}
