//! Enumeration of `X ∈ Mat_{n×n}(Z₊)` with `g(X) = h(X)` and entries
//! bounded by a fixed value.
//!
//! An exact functor `F` with `g(F) ≅ h(F)` has a matrix satisfying
//! `g(M_F) = h(M_F)`, and `F` is selfadjoint exactly when `M_F` is symmetric
//! over a semisimple algebra. The solver works at matrix level for one `n`
//! per run; whether a relation is solvable for some `n` is not decided here.
//!
//! [`solve`] is a pruned backtracking search. [`brute_force_oracle`] is a
//! plain enumeration with the same contract, used to check it.

mod bound;
mod oracle;
mod search;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::zmatrix::{NatMatrix, RelationPoly, DEFAULT_CANON_CAP};

pub use bound::derive_entry_bound;
pub use oracle::{brute_force_oracle, ORACLE_SPACE_LIMIT};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    /// Largest entry value considered.
    pub bound: u64,
    pub symmetric_only: bool,
    /// Keep one representative (the canonical one) per conjugation orbit.
    pub up_to_iso: bool,
    pub limit: Option<usize>,
    pub canon_cap: usize,
}

impl SearchConfig {
    pub fn new(n: usize, bound: u64) -> Self {
        SearchConfig { n, bound, symmetric_only: false, up_to_iso: false, limit: None, canon_cap: DEFAULT_CANON_CAP }
    }

    pub fn symmetric(mut self, on: bool) -> Self {
        self.symmetric_only = on;
        self
    }

    pub fn up_to_iso(mut self, on: bool) -> Self {
        self.up_to_iso = on;
        self
    }

    pub fn limit(mut self, limit: Option<usize>) -> Self {
        self.limit = limit;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        if self.up_to_iso && self.n > self.canon_cap {
            return Err(Error::DimensionTooLarge { n: self.n, cap: self.canon_cap });
        }
        Ok(())
    }

    fn free_entries(&self) -> usize {
        if self.symmetric_only {
            self.n * (self.n + 1) / 2
        } else {
            self.n * self.n
        }
    }
}

/// Solutions in ascending row-major lexicographic order, without duplicates.
/// `complete` is false when `limit` cut the list short.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub config: SearchConfig,
    pub relation: RelationPoly,
    pub solutions: Vec<NatMatrix>,
    pub complete: bool,
}

impl SolutionSet {
    fn from_candidates(rel: &RelationPoly, cfg: &SearchConfig, mut found: Vec<NatMatrix>) -> Self {
        found.sort_by(|a, b| a.entries().cmp(b.entries()));
        found.dedup();
        let complete = match cfg.limit {
            Some(limit) if found.len() > limit => {
                found.truncate(limit);
                false
            }
            _ => true,
        };
        SolutionSet { config: cfg.clone(), relation: rel.clone(), solutions: found, complete }
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }
}

/// Single-threaded [`solve_parallel`].
pub fn solve(rel: &RelationPoly, cfg: &SearchConfig) -> Result<SolutionSet> {
    solve_parallel(rel, cfg, 1)
}

/// Backtracking search. The tree is split by the assignments of the first
/// row and the parts are searched on up to `jobs` threads; the result does
/// not depend on `jobs`.
pub fn solve_parallel(rel: &RelationPoly, cfg: &SearchConfig, jobs: usize) -> Result<SolutionSet> {
    cfg.validate()?;
    let found = search::run(rel, cfg, jobs.max(1))?;
    Ok(SolutionSet::from_candidates(rel, cfg, found))
}

fn to_matrix(n: usize, values: &[u64]) -> NatMatrix {
    NatMatrix::from_entries(n, values.iter().map(|&v| BigUint::from(v)).collect()).expect("n*n values")
}
