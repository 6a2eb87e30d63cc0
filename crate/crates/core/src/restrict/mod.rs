//! Subsets of simples stable under a functor, and the matrices of the
//! functors induced on the corresponding subcategory and quotient.
//!
//! Column `i` of `M` records the image of the `i`-th simple, so the span of
//! `{[Lᵢ] : i ∈ S}` is invariant exactly when no column in `S` has support
//! outside `S`. In that case `M` is block upper triangular with respect to
//! `(S, S')`, the Serre restriction is the `S × S` block of `M`, and the
//! quotient restriction is the `S' × S'` block of `Mᵗ`, the action on the
//! projectives indexed by `S'`.

mod cartan;
pub(crate) mod rational;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::zmatrix::{NatMatrix, RelationPoly};

pub use cartan::{cartan_check, CartanInstance, CartanVerdict};

/// A subset of `{0..n-1}`, kept sorted and duplicate free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subset {
    n: usize,
    members: Vec<usize>,
}

impl Subset {
    pub fn new(n: usize, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidSubset(format!("index {} repeated", w[0] + 1)));
        }
        if let Some(&bad) = members.iter().find(|&&i| i >= n) {
            return Err(Error::InvalidSubset(format!("index {} out of range 1..={n}", bad + 1)));
        }
        Ok(Subset { n, members })
    }

    pub fn from_one_based(n: usize, members: &[usize]) -> Result<Self> {
        if members.contains(&0) {
            return Err(Error::InvalidSubset("indices are 1-based".into()));
        }
        Self::new(n, members.iter().map(|i| i - 1).collect())
    }

    pub fn full(n: usize) -> Self {
        Subset { n, members: (0..n).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.members.iter().map(|i| i + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn complement(&self) -> Subset {
        Subset { n: self.n, members: (0..self.n).filter(|&i| !self.contains(i)).collect() }
    }
}

fn check_n(m: &NatMatrix, s: &Subset) -> Result<()> {
    if m.n() != s.n {
        return Err(Error::DimensionMismatch { left: m.n(), right: s.n });
    }
    Ok(())
}

/// First `(row, col)` with `col ∈ S`, `row ∉ S` and a nonzero entry.
fn escape_witness(m: &NatMatrix, s: &Subset) -> Option<(usize, usize)> {
    let n = m.n();
    (0..n)
        .flat_map(|row| (0..n).map(move |col| (row, col)))
        .find(|&(row, col)| s.contains(col) && !s.contains(row) && !m.get(row, col).is_zero())
}

/// Whether the span of the simples in `s` is mapped into itself.
pub fn is_invariant_subset(m: &NatMatrix, s: &Subset) -> Result<bool> {
    check_n(m, s)?;
    Ok(escape_witness(m, s).is_none())
}

/// The first entry, in row-major order, that leaves the span of `s`.
pub fn invariance_witness(m: &NatMatrix, s: &Subset) -> Result<Option<(usize, usize)>> {
    check_n(m, s)?;
    Ok(escape_witness(m, s))
}

fn require_invariant(m: &NatMatrix, s: &Subset) -> Result<()> {
    check_n(m, s)?;
    match escape_witness(m, s) {
        Some((row, col)) => Err(Error::NotInvariant { row, col }),
        None => Ok(()),
    }
}

/// Largest `n` for which [`invariant_subsets`] enumerates all `2ⁿ` subsets.
pub const SUBSET_ENUMERATION_CAP: usize = 20;

/// Every invariant subset, empty and full included, ordered by size and then
/// lexicographically.
pub fn invariant_subsets(m: &NatMatrix) -> Result<Vec<Subset>> {
    let n = m.n();
    if n > SUBSET_ENUMERATION_CAP {
        return Err(Error::DimensionTooLarge { n, cap: SUBSET_ENUMERATION_CAP });
    }
    // Bitmask of the rows where column c is nonzero.
    let support: Vec<u32> =
        (0..n).map(|c| (0..n).filter(|&r| !m.get(r, c).is_zero()).fold(0, |acc, r| acc | 1 << r)).collect();
    let mut out: Vec<Subset> = (0u32..1 << n)
        .filter(|&mask| (0..n).all(|c| mask & (1 << c) == 0 || support[c] & !mask == 0))
        .map(|mask| Subset { n, members: (0..n).filter(|&i| mask & (1 << i) != 0).collect() })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members.cmp(&b.members)));
    Ok(out)
}

/// Matrix of the functor induced on the Serre subcategory of `s`.
pub fn restrict_serre(m: &NatMatrix, s: &Subset) -> Result<NatMatrix> {
    require_invariant(m, s)?;
    if s.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(m.submatrix(&s.members))
}

/// Matrix of the functor induced on the quotient by the Serre subcategory of
/// `s`, read on the projectives indexed by the complement.
pub fn restrict_quotient(m: &NatMatrix, s: &Subset) -> Result<NatMatrix> {
    require_invariant(m, s)?;
    let rest = s.complement();
    if rest.is_empty() {
        return Err(Error::EmptyComplement);
    }
    Ok(m.transpose().submatrix(&rest.members))
}

/// Whether the additive closure of the projectives indexed by `x` is
/// preserved: the columns of `Mᵗ` in `x` stay inside `x`. Equivalent to the
/// complement of `x` being an invariant subset.
pub fn preserves_add(m: &NatMatrix, x: &Subset) -> Result<bool> {
    check_n(m, x)?;
    let n = m.n();
    Ok((0..n).all(|row| x.contains(row) || x.members.iter().all(|&col| m.get(col, row).is_zero())))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionCheck {
    pub matrix: NatMatrix,
    pub holds: bool,
}

/// `serre` is absent for an empty subset, `quotient` for a full one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentReport {
    pub serre: Option<RestrictionCheck>,
    pub quotient: Option<RestrictionCheck>,
}

impl DescentReport {
    /// Both restrictions satisfy the relation. Relations always pass to
    /// invariant pieces, so anything else signals a bug.
    pub fn is_consistent(&self) -> bool {
        [&self.serre, &self.quotient].iter().all(|c| c.as_ref().is_none_or(|c| c.holds))
    }
}

/// Checks that a relation satisfied by `m` is satisfied by both induced
/// matrices.
pub fn relation_descends(m: &NatMatrix, s: &Subset, rel: &RelationPoly) -> Result<DescentReport> {
    require_invariant(m, s)?;
    if let Some((row, col)) = m.relation_witness(rel) {
        return Err(Error::RelationNotSatisfied { row, col });
    }
    let check = |matrix: NatMatrix| RestrictionCheck { holds: matrix.satisfies(rel), matrix };
    let serre = if s.is_empty() { None } else { Some(check(restrict_serre(m, s)?)) };
    let quotient = if s.len() == s.n { None } else { Some(check(restrict_quotient(m, s)?)) };
    Ok(DescentReport { serre, quotient })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zmatrix::mat;

    fn sub(n: usize, one_based: &[usize]) -> Subset {
        Subset::from_one_based(n, one_based).unwrap()
    }

    fn sample() -> NatMatrix {
        mat(&[&[1, 0, 0], &[0, 0, 2], &[0, 2, 0]])
    }

    #[test]
    fn subset_validation() {
        assert!(Subset::new(2, vec![0, 0]).is_err());
        assert!(Subset::new(2, vec![2]).is_err());
        assert!(Subset::from_one_based(2, &[0]).is_err());
        assert_eq!(sub(3, &[3, 1]).members(), &[0, 2]);
        assert_eq!(sub(3, &[2]).complement().to_one_based(), vec![1, 3]);
    }

    #[test]
    fn invariance_examples() {
        assert!(is_invariant_subset(&sample(), &sub(3, &[1])).unwrap());
        assert!(!is_invariant_subset(&sample(), &sub(3, &[2])).unwrap());
        assert_eq!(restrict_serre(&sample(), &sub(3, &[2])).unwrap_err(), Error::NotInvariant { row: 2, col: 1 });
        let m = mat(&[&[5, 1, 0], &[3, 2, 7], &[1, 1, 1]]);
        assert!(is_invariant_subset(&m, &Subset::full(3)).unwrap());
        assert!(is_invariant_subset(&m, &sub(3, &[1])).is_ok());
        assert!(is_invariant_subset(&m, &Subset::full(2)).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let diag = mat(&[&[1, 0], &[0, 2]]);
        let all: Vec<Vec<usize>> = invariant_subsets(&diag).unwrap().iter().map(Subset::to_one_based).collect();
        assert_eq!(all, vec![vec![], vec![1], vec![2], vec![1, 2]]);

        let swap = mat(&[&[0, 1], &[1, 0]]);
        let all: Vec<Vec<usize>> = invariant_subsets(&swap).unwrap().iter().map(Subset::to_one_based).collect();
        assert_eq!(all, vec![vec![], vec![1, 2]]);

        let jordan = mat(&[&[1, 1], &[0, 1]]);
        let all: Vec<Vec<usize>> = invariant_subsets(&jordan).unwrap().iter().map(Subset::to_one_based).collect();
        assert_eq!(all, vec![vec![], vec![1], vec![1, 2]]);
    }

    #[test]
    fn serre_examples() {
        assert_eq!(restrict_serre(&sample(), &sub(3, &[2, 3])).unwrap(), mat(&[&[0, 2], &[2, 0]]));
        let d = mat(&[&[4, 0], &[0, 9]]);
        assert_eq!(restrict_serre(&d, &sub(2, &[1])).unwrap(), mat(&[&[4]]));
        let swap = mat(&[&[0, 1], &[1, 0]]);
        assert!(matches!(restrict_serre(&swap, &sub(2, &[1])), Err(Error::NotInvariant { .. })));
        assert_eq!(restrict_serre(&d, &sub(2, &[])).unwrap_err(), Error::EmptySubset);
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(restrict_quotient(&sample(), &sub(3, &[1])).unwrap(), mat(&[&[0, 2], &[2, 0]]));
        assert_eq!(restrict_quotient(&mat(&[&[1, 0], &[0, 2]]), &sub(2, &[2])).unwrap(), mat(&[&[1]]));
        assert_eq!(restrict_quotient(&sample(), &Subset::full(3)).unwrap_err(), Error::EmptyComplement);
        // Non-symmetric: the transpose block, not the plain block.
        let m = mat(&[&[1, 0, 0], &[0, 0, 3], &[0, 1, 0]]);
        assert_eq!(restrict_quotient(&m, &sub(3, &[1])).unwrap(), mat(&[&[0, 1], &[3, 0]]));
    }

    #[test]
    fn preserves_add_examples() {
        let swap = mat(&[&[0, 1], &[1, 0]]);
        assert!(preserves_add(&swap, &sub(2, &[1, 2])).unwrap());
        let jordan = mat(&[&[1, 1], &[0, 1]]);
        // Column 1 of the transpose is (1,1): P_1 is sent outside add(P_1).
        assert!(!preserves_add(&jordan, &sub(2, &[1])).unwrap());
        assert!(!is_invariant_subset(&jordan, &sub(2, &[2])).unwrap());
        // Column 2 of the transpose is (0,1).
        assert!(preserves_add(&jordan, &sub(2, &[2])).unwrap());
        assert!(is_invariant_subset(&jordan, &sub(2, &[1])).unwrap());
    }

    #[test]
    fn descent_examples() {
        let m = mat(&[&[0, 2], &[2, 0]]).direct_sum(&mat(&[&[2]]));
        let rel = RelationPoly::power_equals_constant(2, 4);
        assert!(m.satisfies(&rel));
        let r = relation_descends(&m, &sub(3, &[3]), &rel).unwrap();
        assert!(r.is_consistent());
        assert_eq!(r.serre.unwrap().matrix, mat(&[&[2]]));
        assert_eq!(r.quotient.unwrap().matrix, mat(&[&[0, 2], &[2, 0]]));

        let rel = RelationPoly::power_equals_constant(2, 1);
        let r = relation_descends(&NatMatrix::identity(3), &sub(3, &[1, 2]), &rel).unwrap();
        assert_eq!(r.serre.as_ref().unwrap().matrix, NatMatrix::identity(2));
        assert_eq!(r.quotient.as_ref().unwrap().matrix, NatMatrix::identity(1));
        assert!(r.is_consistent());

        let rel = RelationPoly::power_equals_power(2, 1);
        let r = relation_descends(&mat(&[&[1, 0], &[0, 0]]), &sub(2, &[2]), &rel).unwrap();
        assert_eq!(r.serre.as_ref().unwrap().matrix, mat(&[&[0]]));
        assert_eq!(r.quotient.as_ref().unwrap().matrix, mat(&[&[1]]));
        assert!(r.is_consistent());

        let err = relation_descends(&mat(&[&[1, 0], &[0, 2]]), &sub(2, &[2]), &rel).unwrap_err();
        assert_eq!(err, Error::RelationNotSatisfied { row: 1, col: 1 });
        let r = relation_descends(&mat(&[&[1, 0], &[0, 0]]), &sub(2, &[]), &rel).unwrap();
        assert!(r.serre.is_none() && r.quotient.is_some());
    }
}
