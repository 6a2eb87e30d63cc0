use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::zmatrix::RelationPoly;

/// Nonzero terms of a coefficient list as `(degree, coefficient)`.
fn terms(coeffs: &[BigUint]) -> Vec<(usize, &BigUint)> {
    coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

/// An a-priori bound on the entries of every solution, when the relation has
/// one of these shapes (after cancelling common terms):
///
/// * `a·xᵈ = c` with `c ≥ 1`: `X` is monomial with `Xᵈ = (c/a)·I`, so every
///   entry divides into a cycle product of at most `c/a`. Bound `⌊c/a⌋`.
/// * `a·x = 0`, or `a·xᵈ = 0` in symmetric mode: only the zero matrix.
/// * `a·xᵏ = a·xᵐ`, `k ≠ m ≥ 1`, in symmetric mode: every eigenvalue lies in
///   `{-1, 0, 1}`, so entries are at most 1.
/// * a positive constant against a side with no constant term evaluated on
///   the zero side: no solutions, bound 0.
///
/// Returns `None` otherwise; the caller must then choose a bound.
pub fn derive_entry_bound(rel: &RelationPoly, symmetric: bool) -> Option<u64> {
    let (p, q) = rel.reduced();
    let (tp, tq) = (terms(&p), terms(&q));
    for (mono, other) in [(&tp, &tq), (&tq, &tp)] {
        match (mono.as_slice(), other.as_slice()) {
            // a·xᵈ = c
            ([(d, a)], [(0, c)]) if *d >= 1 => {
                return Some((*c / *a).to_u64().unwrap_or(u64::MAX));
            }
            // a·xᵈ = 0
            ([(d, _)], []) if *d >= 1 && (symmetric || *d == 1) => return Some(0),
            // c = 0 with c > 0
            ([(0, _)], []) => return Some(0),
            _ => {}
        }
    }
    if symmetric {
        if let ([(k, a)], [(m, b)]) = (tp.as_slice(), tq.as_slice()) {
            if *k >= 1 && *m >= 1 && a == b {
                return Some(1);
            }
        }
    }
    None
}
