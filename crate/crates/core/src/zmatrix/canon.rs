use std::cmp::Ordering;

use super::NatMatrix;
use crate::error::{Error, Result};

/// Largest dimension for which exhaustive canonicalization is attempted
/// (`8! = 40320` conjugations).
pub const DEFAULT_CANON_CAP: usize = 8;

/// Lexicographically smallest row-major matrix among all `S M S⁻¹`.
pub fn canonical_rep(m: &NatMatrix) -> Result<NatMatrix> {
    canonical_rep_with_cap(m, DEFAULT_CANON_CAP)
}

pub fn canonical_rep_with_cap(m: &NatMatrix, cap: usize) -> Result<NatMatrix> {
    let n = m.n();
    if n > cap {
        return Err(Error::DimensionTooLarge { n, cap });
    }
    let best = smallest_relabeling(m);
    Ok(m.submatrix(&best))
}

/// Whether `m` is its own canonical representative.
pub fn is_canonical(m: &NatMatrix, cap: usize) -> Result<bool> {
    Ok(&canonical_rep_with_cap(m, cap)? == m)
}

/// The relabeling `τ` minimising `(a, b) ↦ m[τ(a)][τ(b)]`; ties resolve to
/// the lexicographically first `τ`.
fn smallest_relabeling(m: &NatMatrix) -> Vec<usize> {
    let n = m.n();
    let mut tau: Vec<usize> = (0..n).collect();
    let mut best = tau.clone();
    while next_permutation(&mut tau) {
        if compare_relabelings(m, &tau, &best) == Ordering::Less {
            best.copy_from_slice(&tau);
        }
    }
    best
}

fn compare_relabelings(m: &NatMatrix, a: &[usize], b: &[usize]) -> Ordering {
    for i in 0..a.len() {
        for j in 0..a.len() {
            match m.get(a[i], a[j]).cmp(m.get(b[i], b[j])) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
    }
    Ordering::Equal
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("pivot has a larger successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}
