use std::fs;
use std::path::Path;

use functorlab::canonical::{classify_selfadjoint_sqrt, decompose, enumerate_involutions};
use functorlab::classify::{
    check_commuting_idempotents, check_nilpotent, classify_cyclic, classify_idempotent, classify_root_of_identity,
    NilpotencyVerdict,
};
use functorlab::formats::{
    from_json, to_json, BlockFormDoc, CartanInstanceDoc, CartanVerdictDoc, CheckDoc, ClassificationDoc,
    DescentReportDoc, MatrixDoc, RelationDoc, SolutionSetDoc, SubsetDoc, SubsetListDoc,
};
use functorlab::restrict::{
    cartan_check, invariance_witness, invariant_subsets, relation_descends, restrict_quotient, restrict_serre,
    CartanInstance, CartanVerdict, Subset,
};
use functorlab::solver::{brute_force_oracle, derive_entry_bound, solve_parallel, SearchConfig};
use functorlab::zmatrix::{canonical_rep_with_cap, NatMatrix, RelationPoly, DEFAULT_CANON_CAP};
use functorlab::{Error, Result};
use serde::Serialize;

use crate::args::{CartanArgs, Classify, Command, Construct, Restrict, SearchArgs, SubsetArg};
use crate::selftest;

pub const CANON_CAP_VAR: &str = "FUNCTORLAB_CANON_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Affirmative,
    Negative,
    Fault,
}

/// A finished computation: the serialized document, the matrices it carries
/// (for CSV and text output), and how the exit code should read.
pub struct Outcome {
    pub json: String,
    pub matrices: Option<Vec<NatMatrix>>,
    pub status: Status,
    pub note: Option<String>,
}

impl Outcome {
    fn doc<T: Serialize>(doc: &T) -> Self {
        Outcome { json: to_json(doc), matrices: None, status: Status::Affirmative, note: None }
    }

    fn matrix(m: NatMatrix) -> Self {
        Outcome {
            json: to_json(&MatrixDoc::from(&m)),
            matrices: Some(vec![m]),
            status: Status::Affirmative,
            note: None,
        }
    }

    fn status(mut self, status: Status, note: impl Into<String>) -> Self {
        if status != Status::Affirmative {
            self.status = status;
            self.note = Some(note.into());
        }
        self
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

fn load_matrix(path: &Path) -> Result<NatMatrix> {
    from_json::<MatrixDoc>(&read(path)?)?.try_into()
}

fn load_relation(path: &Path) -> Result<RelationPoly> {
    from_json::<RelationDoc>(&read(path)?)?.try_into()
}

fn load_subset(arg: &SubsetArg, n: usize) -> Result<Subset> {
    match (&arg.subset, &arg.members) {
        (Some(path), _) => from_json::<SubsetDoc>(&read(path)?)?.try_into(),
        (None, Some(members)) => Subset::from_one_based(n, members),
        (None, None) => Err(Error::InvalidArgument("a subset is required".into())),
    }
}

pub fn canon_cap() -> Result<usize> {
    match std::env::var(CANON_CAP_VAR) {
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_CANON_CAP),
        Err(e) => Err(Error::InvalidArgument(format!("{CANON_CAP_VAR}: {e}"))),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(cap) if cap >= 1 => Ok(cap),
            _ => Err(Error::InvalidArgument(format!("{CANON_CAP_VAR} must be a positive integer, got {v:?}"))),
        },
    }
}

pub fn run(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Solve(a) => search(a, true),
        Command::Oracle(a) => search(a, false),
        Command::Decompose(a) => {
            let m = load_matrix(&a.matrix)?;
            let form = decompose(&m, &a.k)?;
            let mut out = Outcome::doc(&BlockFormDoc::from(&form));
            out.matrices = Some(vec![form.block_diagonal()]);
            Ok(out)
        }
        Command::SqrtClassify(a) => {
            let m = load_matrix(&a.matrix)?;
            let c = classify_selfadjoint_sqrt(&m, &a.k)?;
            Ok(Outcome::doc(&ClassificationDoc::from(&c)))
        }
        Command::Classify(c) => classify(c),
        Command::Restrict(r) => restrict(r),
        Command::Cartan(a) => cartan(a),
        Command::Construct(c) => construct(c),
        Command::Canon(a) => {
            let m = load_matrix(&a.matrix)?;
            let cap = canon_cap()?;
            Ok(Outcome::matrix(canonical_rep_with_cap(&m, cap)?))
        }
        Command::Selftest(a) => {
            let report = selftest::run(a.seed, a.cases);
            let ok = report.failures.is_empty();
            let out = Outcome::doc(&report);
            Ok(out.status(if ok { Status::Affirmative } else { Status::Fault }, "self-test found disagreements"))
        }
    }
}

fn search(a: &SearchArgs, pruned: bool) -> Result<Outcome> {
    let rel = load_relation(&a.relation)?;
    let bound = match a.bound {
        Some(b) => b,
        None => derive_entry_bound(&rel, a.symmetric).ok_or(Error::BoundRequired)?,
    };
    let mut cfg = SearchConfig::new(a.n, bound).symmetric(a.symmetric).up_to_iso(a.up_to_iso).limit(a.limit);
    cfg.canon_cap = canon_cap()?;
    let set = if pruned { solve_parallel(&rel, &cfg, usize::from(a.jobs))? } else { brute_force_oracle(&rel, &cfg)? };
    let mut out = Outcome::doc(&SolutionSetDoc::from(&set));
    let status = if set.is_empty() { Status::Negative } else { Status::Affirmative };
    out = out.status(status, "no solutions");
    out.matrices = Some(set.solutions);
    Ok(out)
}

fn classify(c: &Classify) -> Result<Outcome> {
    let doc = match c {
        Classify::Idempotent(a) => {
            ClassificationDoc::idempotent(&classify_idempotent(&load_matrix(&a.matrix)?)?.support)
        }
        Classify::Commuting { a, b } => {
            ClassificationDoc::from(&check_commuting_idempotents(&load_matrix(a)?, &load_matrix(b)?)?)
        }
        Classify::Nilpotent { matrix, power } => {
            let v = check_nilpotent(&load_matrix(matrix)?, *power)?;
            let negative = matches!(v, NilpotencyVerdict::NotNilpotent { .. });
            let out = Outcome::doc(&ClassificationDoc::from(&v));
            return Ok(out.status(
                if negative { Status::Negative } else { Status::Affirmative },
                format!("power {power} does not vanish"),
            ));
        }
        Classify::Cyclic { matrix, k, m } => ClassificationDoc::from(&classify_cyclic(&load_matrix(matrix)?, *k, *m)?),
        Classify::Root { matrix, exp } => {
            ClassificationDoc::from(&classify_root_of_identity(&load_matrix(matrix)?, *exp)?)
        }
        Classify::Involutions { n } => ClassificationDoc::involutions(*n, &enumerate_involutions(*n)?),
    };
    Ok(Outcome::doc(&doc))
}

fn restrict(r: &Restrict) -> Result<Outcome> {
    match r {
        Restrict::Check { m, s } => {
            let m = load_matrix(&m.matrix)?;
            let s = load_subset(s, m.n())?;
            let doc = CheckDoc::new("is_invariant", invariance_witness(&m, &s)?);
            let holds = doc.holds;
            Ok(Outcome::doc(&doc).status(negative_unless(holds), "subset is not invariant"))
        }
        Restrict::Subsets(a) => {
            let m = load_matrix(&a.matrix)?;
            Ok(Outcome::doc(&SubsetListDoc::new(m.n(), &invariant_subsets(&m)?)))
        }
        Restrict::Serre { m, s } => {
            let m = load_matrix(&m.matrix)?;
            let s = load_subset(s, m.n())?;
            Ok(Outcome::matrix(restrict_serre(&m, &s)?))
        }
        Restrict::Quotient { m, s } => {
            let m = load_matrix(&m.matrix)?;
            let s = load_subset(s, m.n())?;
            Ok(Outcome::matrix(restrict_quotient(&m, &s)?))
        }
        Restrict::PreservesAdd { m, s } => {
            let m = load_matrix(&m.matrix)?;
            let s = load_subset(s, m.n())?;
            let doc = CheckDoc::new("preserves_add", invariance_witness(&m.transpose(), &s)?);
            let holds = doc.holds;
            Ok(Outcome::doc(&doc).status(negative_unless(holds), "additive closure is not preserved"))
        }
        Restrict::Descends { m, s, relation } => {
            let m = load_matrix(&m.matrix)?;
            let s = load_subset(s, m.n())?;
            let rel = load_relation(relation)?;
            let report = relation_descends(&m, &s, &rel)?;
            let doc = DescentReportDoc::new(&report, &s, &rel);
            let status = if doc.consistent { Status::Affirmative } else { Status::Fault };
            Ok(Outcome::doc(&doc).status(status, "relation failed to descend to an induced matrix"))
        }
    }
}

fn negative_unless(holds: bool) -> Status {
    if holds {
        Status::Affirmative
    } else {
        Status::Negative
    }
}

fn cartan(a: &CartanArgs) -> Result<Outcome> {
    let inst: CartanInstance = match (&a.instance, &a.cartan) {
        (Some(path), _) => from_json::<CartanInstanceDoc>(&read(path)?)?.try_into()?,
        (None, Some(c)) => {
            let functors = a.functor.iter().map(|p| load_matrix(p)).collect::<Result<Vec<_>>>()?;
            CartanInstance::new(load_matrix(c)?, functors)?
        }
        (None, None) => return Err(Error::InvalidArgument("give --instance or --cartan".into())),
    };
    let verdict = cartan_check(&inst);
    let (status, note) = match &verdict {
        CartanVerdict::Pass { .. } => (Status::Affirmative, ""),
        CartanVerdict::FailCommutation { .. } => {
            (Status::Negative, "a functor does not commute with the Cartan matrix")
        }
        CartanVerdict::Reducible { .. } => (Status::Negative, "the functors leave a proper subspace invariant"),
        CartanVerdict::Inconclusive { .. } => (Status::Negative, "irreducibility could not be decided"),
        CartanVerdict::InconsistentInput { .. } => {
            (Status::Fault, "irreducible functors with a non-scalar Cartan matrix")
        }
    };
    Ok(Outcome::doc(&CartanVerdictDoc::from(&verdict)).status(status, note))
}

fn construct(c: &Construct) -> Result<Outcome> {
    let (inputs, verify) = match c {
        Construct::Dsum { matrix, verify_relation } => {
            (matrix.iter().map(|p| load_matrix(p)).collect::<Result<Vec<_>>>()?, verify_relation)
        }
        Construct::Tensor { matrix, verify_relation, .. } | Construct::Scale { matrix, verify_relation, .. } => {
            (vec![load_matrix(matrix)?], verify_relation)
        }
    };
    let rel = verify.as_deref().map(load_relation).transpose()?;
    let (built, closure) = match c {
        Construct::Dsum { .. } => (NatMatrix::block_diagonal(&inputs), true),
        Construct::Tensor { b, .. } => (inputs[0].external_tensor(*b)?, true),
        Construct::Scale { k, .. } => (inputs[0].scalar_mul(k), false),
    };
    let Some(rel) = rel else {
        return Ok(Outcome::matrix(built));
    };
    let inputs_hold = inputs.iter().all(|m| m.satisfies(&rel));
    let out = Outcome::matrix(built.clone());
    Ok(match built.relation_witness(&rel) {
        None => out,
        // Direct sums and tensoring with an identity preserve every relation.
        Some(_) if closure && inputs_hold => {
            out.status(Status::Fault, "construction broke a relation its inputs satisfy")
        }
        Some((row, col)) => out
            .status(Status::Negative, format!("constructed matrix violates the relation at ({},{})", row + 1, col + 1)),
    })
}
