//! Plain enumeration of every matrix within the bound. Shares nothing with
//! the backtracking search beyond polynomial evaluation, and reduces up to
//! conjugation with its own permutation walk.

use num_bigint::BigUint;

use super::{to_matrix, SearchConfig, SolutionSet};
use crate::error::{Error, Result};
use crate::zmatrix::{NatMatrix, RelationPoly};

/// Largest number of candidates the oracle agrees to enumerate.
pub const ORACLE_SPACE_LIMIT: u64 = 100_000_000;

pub fn brute_force_oracle(rel: &RelationPoly, cfg: &SearchConfig) -> Result<SolutionSet> {
    cfg.validate()?;
    let free = cfg.free_entries();
    let size = (BigUint::from(cfg.bound) + 1u32).pow(free as u32);
    if size > BigUint::from(ORACLE_SPACE_LIMIT) {
        return Err(Error::SearchSpaceTooLarge { size: size.to_string(), limit: ORACLE_SPACE_LIMIT });
    }

    let n = cfg.n;
    let positions: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| !cfg.symmetric_only || i <= j).collect();
    let mut digits = vec![0u64; free];
    let mut found = Vec::new();
    loop {
        let mut vals = vec![0u64; n * n];
        for (&(i, j), &d) in positions.iter().zip(&digits) {
            vals[i * n + j] = d;
            if cfg.symmetric_only {
                vals[j * n + i] = d;
            }
        }
        let m = to_matrix(n, &vals);
        if m.poly_eval(rel.g()) == m.poly_eval(rel.h()) && (!cfg.up_to_iso || is_orbit_minimum(&m)) {
            found.push(m);
        }
        // Odometer step.
        let mut k = 0;
        while k < free && digits[k] == cfg.bound {
            digits[k] = 0;
            k += 1;
        }
        if k == free {
            break;
        }
        digits[k] += 1;
    }
    Ok(SolutionSet::from_candidates(rel, cfg, found))
}

/// Whether no simultaneous row/column relabeling of `m` is smaller in
/// row-major order. Walks all relabelings with Heap's algorithm.
fn is_orbit_minimum(m: &NatMatrix) -> bool {
    let n = m.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut counters = vec![0usize; n];
    let smaller = |p: &[usize]| {
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (m.get(p[i], p[j]), m.get(i, j));
                if a != b {
                    return a < b;
                }
            }
        }
        false
    };
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            if smaller(&perm) {
                return false;
            }
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zmatrix::mat;

    #[test]
    fn refuses_huge_spaces() {
        let rel = RelationPoly::power_equals_constant(2, 1);
        let err = brute_force_oracle(&rel, &SearchConfig::new(4, 9)).unwrap_err();
        assert!(matches!(err, Error::SearchSpaceTooLarge { .. }));
    }

    #[test]
    fn orbit_minimum() {
        assert!(is_orbit_minimum(&mat(&[&[1, 0], &[0, 2]])));
        assert!(!is_orbit_minimum(&mat(&[&[2, 0], &[0, 1]])));
        assert!(!is_orbit_minimum(&mat(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]])));
    }
}
