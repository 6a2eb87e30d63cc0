//! Backtracking over entry assignments.
//!
//! Cells are filled row-major (upper triangle only in symmetric mode, with
//! the mirror entry set alongside). Both sides of the relation are monotone
//! in every entry, so with the unassigned entries set to `0` and to `bound`
//! we get entrywise lower and upper envelopes `g_lo ≤ g(X) ≤ g_hi` (same for
//! `h`). A node is cut as soon as some entry has `g_lo > h_hi` or
//! `h_lo > g_hi`. The envelopes are computed in saturating `u128`, which
//! only ever loosens them; leaves are re-checked in exact arithmetic.
//!
//! Values are tried in ascending order, so every subtree yields its
//! solutions in row-major lexicographic order.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::{to_matrix, SearchConfig};
use crate::error::{Error, Result};
use crate::zmatrix::{is_canonical, NatMatrix, RelationPoly};

fn saturate(c: &BigUint) -> u128 {
    c.to_u128().unwrap_or(u128::MAX)
}

struct Envelope {
    n: usize,
    p: Vec<u128>,
    q: Vec<u128>,
}

impl Envelope {
    fn new(rel: &RelationPoly, n: usize) -> Self {
        let (p, q) = rel.reduced();
        Envelope { n, p: p.iter().map(saturate).collect(), q: q.iter().map(saturate).collect() }
    }

    fn mul(&self, a: &[u128], b: &[u128]) -> Vec<u128> {
        let n = self.n;
        let mut out = vec![0u128; n * n];
        for i in 0..n {
            for l in 0..n {
                let x = a[i * n + l];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    let y = b[l * n + j];
                    if y != 0 {
                        let cell = &mut out[i * n + j];
                        *cell = cell.saturating_add(x.saturating_mul(y));
                    }
                }
            }
        }
        out
    }

    fn eval(&self, coeffs: &[u128], m: &[u128]) -> Vec<u128> {
        let n = self.n;
        let mut acc = vec![0u128; n * n];
        for &c in coeffs.iter().rev() {
            acc = self.mul(&acc, m);
            for i in 0..n {
                let d = &mut acc[i * n + i];
                *d = d.saturating_add(c);
            }
        }
        acc
    }

    fn feasible(&self, lo: &[u128], hi: &[u128]) -> bool {
        let disjoint = |low: &[u128], high: &[u128]| {
            let a = self.eval(low, lo);
            let b = self.eval(high, hi);
            a.iter().zip(&b).any(|(x, y)| x > y)
        };
        !disjoint(&self.p, &self.q) && !disjoint(&self.q, &self.p)
    }
}

struct Search<'a> {
    rel: &'a RelationPoly,
    cfg: &'a SearchConfig,
    envelope: &'a Envelope,
    cells: &'a [(usize, usize)],
    vals: Vec<u64>,
    lo: Vec<u128>,
    hi: Vec<u128>,
    found: Vec<NatMatrix>,
    cap: Option<usize>,
}

impl<'a> Search<'a> {
    fn new(rel: &'a RelationPoly, cfg: &'a SearchConfig, envelope: &'a Envelope, cells: &'a [(usize, usize)]) -> Self {
        let nn = cfg.n * cfg.n;
        Search {
            rel,
            cfg,
            envelope,
            cells,
            vals: vec![0; nn],
            lo: vec![0; nn],
            hi: vec![cfg.bound as u128; nn],
            found: Vec::new(),
            cap: cfg.limit.map(|l| l + 1),
        }
    }

    fn set(&mut self, cell: usize, value: Option<u64>) {
        let (i, j) = self.cells[cell];
        let n = self.cfg.n;
        let (l, h) = match value {
            Some(v) => (v as u128, v as u128),
            None => (0, self.cfg.bound as u128),
        };
        for idx in [i * n + j, j * n + i] {
            if idx == j * n + i && !self.cfg.symmetric_only && i != j {
                continue;
            }
            self.vals[idx] = value.unwrap_or(0);
            self.lo[idx] = l;
            self.hi[idx] = h;
        }
    }

    fn full(&self) -> bool {
        self.cap.is_some_and(|c| self.found.len() >= c)
    }

    /// Assigns cells `depth..stop`, calling `visit` on every feasible
    /// assignment of them.
    fn dfs(&mut self, depth: usize, stop: usize, visit: &mut dyn FnMut(&mut Self)) {
        if depth == stop {
            visit(self);
            return;
        }
        for v in 0..=self.cfg.bound {
            self.set(depth, Some(v));
            if self.envelope.feasible(&self.lo, &self.hi) {
                self.dfs(depth + 1, stop, visit);
                if self.full() {
                    break;
                }
            }
        }
        self.set(depth, None);
    }

    fn leaf(&mut self) {
        let m = to_matrix(self.cfg.n, &self.vals);
        if !m.satisfies(self.rel) {
            return;
        }
        if self.cfg.up_to_iso && !is_canonical(&m, self.cfg.canon_cap).unwrap_or(false) {
            return;
        }
        self.found.push(m);
    }
}

fn fill_order(cfg: &SearchConfig) -> Vec<(usize, usize)> {
    let n = cfg.n;
    let mut cells = Vec::with_capacity(n * n);
    for i in 0..n {
        let start = if cfg.symmetric_only { i } else { 0 };
        for j in start..n {
            cells.push((i, j));
        }
    }
    cells
}

pub(super) fn run(rel: &RelationPoly, cfg: &SearchConfig, jobs: usize) -> Result<Vec<NatMatrix>> {
    let envelope = Envelope::new(rel, cfg.n);
    let cells = fill_order(cfg);
    let prefix_len = cfg.n;

    let root = Search::new(rel, cfg, &envelope, &cells);
    if !envelope.feasible(&root.lo, &root.hi) {
        return Ok(Vec::new());
    }

    let mut prefixes: Vec<Vec<u64>> = Vec::new();
    let mut enumerator = Search::new(rel, cfg, &envelope, &cells);
    enumerator.dfs(0, prefix_len, &mut |s| prefixes.push(s.vals.clone()));

    let search_prefix = |prefix: &Vec<u64>| -> Vec<NatMatrix> {
        let mut s = Search::new(rel, cfg, &envelope, &cells);
        for (cell, &(i, j)) in cells[..prefix_len].iter().enumerate() {
            s.set(cell, Some(prefix[i * cfg.n + j]));
        }
        s.dfs(prefix_len, cells.len(), &mut |s| s.leaf());
        s.found
    };

    let parts: Vec<Vec<NatMatrix>> = if jobs <= 1 {
        let mut parts = Vec::new();
        let mut total = 0;
        for p in &prefixes {
            let part = search_prefix(p);
            total += part.len();
            parts.push(part);
            if cfg.limit.is_some_and(|l| total > l) {
                break;
            }
        }
        parts
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("cannot start {jobs} workers: {e}")))?;
        pool.install(|| prefixes.par_iter().map(search_prefix).collect())
    };

    let mut found: Vec<NatMatrix> = parts.into_iter().flatten().collect();
    if let Some(limit) = cfg.limit {
        found.truncate(limit + 1);
    }
    Ok(found)
}
