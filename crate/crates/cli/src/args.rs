use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

#[derive(Parser, Debug)]
#[command(name = "functorlab", version, about = "Nonnegative integer matrix models of selfadjoint functors")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write data here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    /// Matrices only, one per line, row-major.
    Csv,
    /// Aligned tables for people.
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Backtracking search for X with g(X) = h(X).
    Solve(SearchArgs),
    /// Plain enumeration with the same contract as `solve`.
    Oracle(SearchArgs),
    /// Block form of a solution of X² = k·I.
    Decompose(MatrixK),
    /// Classify a symmetric solution of X² = k·I as √k times an involution.
    SqrtClassify(MatrixK),
    #[command(subcommand)]
    Classify(Classify),
    #[command(subcommand)]
    Restrict(Restrict),
    /// Check a Cartan matrix against symmetric functor matrices.
    Cartan(CartanArgs),
    #[command(subcommand)]
    Construct(Construct),
    /// Smallest simultaneous row/column permutation of a matrix.
    Canon(MatrixArg),
    /// Randomized consistency checks.
    Selftest(SelftestArgs),
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long, value_name = "PATH")]
    pub relation: PathBuf,
    #[arg(long)]
    pub n: usize,
    /// Largest entry considered; derived from the relation when omitted.
    #[arg(long)]
    pub bound: Option<u64>,
    #[arg(long)]
    pub symmetric: bool,
    #[arg(long)]
    pub up_to_iso: bool,
    #[arg(long)]
    pub limit: Option<usize>,
    /// Worker threads (solve only).
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,
}

#[derive(Args, Debug)]
pub struct MatrixArg {
    #[arg(long, value_name = "PATH")]
    pub matrix: PathBuf,
}

#[derive(Args, Debug)]
pub struct MatrixK {
    #[arg(long, value_name = "PATH")]
    pub matrix: PathBuf,
    #[arg(long, value_parser = parse_nat)]
    pub k: BigUint,
}

#[derive(Subcommand, Debug)]
pub enum Classify {
    /// Symmetric idempotent as a diagonal 0/1 projection.
    Idempotent(MatrixArg),
    /// Split of the simples by two symmetric idempotents.
    Commuting {
        #[arg(long, value_name = "PATH")]
        a: PathBuf,
        #[arg(long, value_name = "PATH")]
        b: PathBuf,
    },
    /// Whether a symmetric matrix has a vanishing power.
    Nilpotent {
        #[arg(long, value_name = "PATH")]
        matrix: PathBuf,
        #[arg(long)]
        power: u32,
    },
    /// Symmetric solution of X^k = X^m.
    Cyclic {
        #[arg(long, value_name = "PATH")]
        matrix: PathBuf,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u32,
    },
    /// Solution of X^e = I as a permutation.
    Root {
        #[arg(long, value_name = "PATH")]
        matrix: PathBuf,
        #[arg(long)]
        exp: u32,
    },
    /// All involutions of {1..n}.
    Involutions {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Debug)]
pub struct SubsetArg {
    #[arg(long, value_name = "PATH", conflicts_with = "members", required_unless_present = "members")]
    pub subset: Option<PathBuf>,
    /// Comma-separated 1-based indices, e.g. `2,3`; empty for ∅.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub members: Option<Vec<usize>>,
}

#[derive(Subcommand, Debug)]
pub enum Restrict {
    /// Whether the span of the subset is invariant.
    Check {
        #[command(flatten)]
        m: MatrixArg,
        #[command(flatten)]
        s: SubsetArg,
    },
    /// All invariant subsets.
    Subsets(MatrixArg),
    /// Matrix induced on the Serre subcategory of an invariant subset.
    Serre {
        #[command(flatten)]
        m: MatrixArg,
        #[command(flatten)]
        s: SubsetArg,
    },
    /// Matrix induced on the quotient by an invariant subset.
    Quotient {
        #[command(flatten)]
        m: MatrixArg,
        #[command(flatten)]
        s: SubsetArg,
    },
    /// Whether the additive closure of the projectives in the subset is
    /// preserved.
    PreservesAdd {
        #[command(flatten)]
        m: MatrixArg,
        #[command(flatten)]
        s: SubsetArg,
    },
    /// Check that a relation passes to both induced matrices.
    Descends {
        #[command(flatten)]
        m: MatrixArg,
        #[command(flatten)]
        s: SubsetArg,
        #[arg(long, value_name = "PATH")]
        relation: PathBuf,
    },
}

#[derive(Args, Debug)]
pub struct CartanArgs {
    /// Instance file holding the Cartan matrix and the functors.
    #[arg(long, value_name = "PATH", conflicts_with_all = ["cartan", "functor"], required_unless_present = "cartan")]
    pub instance: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub cartan: Option<PathBuf>,
    #[arg(long, value_name = "PATH", requires = "cartan")]
    pub functor: Vec<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    /// Block diagonal of the given matrices.
    Dsum {
        #[arg(long, value_name = "PATH", required = true)]
        matrix: Vec<PathBuf>,
        #[arg(long, value_name = "PATH")]
        verify_relation: Option<PathBuf>,
    },
    /// Kronecker product with the identity on `b` simples.
    Tensor {
        #[arg(long, value_name = "PATH")]
        matrix: PathBuf,
        #[arg(long)]
        b: usize,
        #[arg(long, value_name = "PATH")]
        verify_relation: Option<PathBuf>,
    },
    /// `k` times the matrix.
    Scale {
        #[arg(long, value_name = "PATH")]
        matrix: PathBuf,
        #[arg(long, value_parser = parse_nat)]
        k: BigUint,
        #[arg(long, value_name = "PATH")]
        verify_relation: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 200)]
    pub cases: usize,
}

fn parse_nat(s: &str) -> Result<BigUint, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("{s:?} is not a nonnegative decimal integer"));
    }
    s.parse().map_err(|e| format!("{e}"))
}
