//! Decision procedures for idempotent, nilpotent, cyclic and periodic
//! selfadjoint solutions.
//!
//! Each classifier checks its hypotheses on the input and then verifies the
//! shape every such solution must have. A shape that contradicts this
//! is reported as [`Error::ShapeViolation`] or
//! [`Error::ArithmeticFault`]; those indicate a bug, never bad input.
//!
//! The partial-involution classification recovers the permutation of simple
//! modules only. Distinct outer automorphisms can induce the same
//! permutation, so the automorphism itself is not determined.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::zmatrix::{NatMatrix, Permutation};

/// A symmetric idempotent is the diagonal 0/1 matrix on `support`: the
/// projection onto a direct summand. Full support is the identity functor,
/// empty support the zero functor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentClassification {
    pub support: Vec<usize>,
}

fn symmetric_or_err(m: &NatMatrix) -> Result<()> {
    match m.asymmetry_witness() {
        Some((row, col)) => Err(Error::NotSymmetric { row, col }),
        None => Ok(()),
    }
}

fn diagonal_support(m: &NatMatrix) -> Result<Vec<usize>> {
    let n = m.n();
    let mut support = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let e = m.get(i, j);
            let ok = if i == j { e <= &BigUint::one() } else { e.is_zero() };
            if !ok {
                return Err(Error::ShapeViolation(format!(
                    "entry ({},{}) = {e} in a matrix expected to be diagonal 0/1",
                    i + 1,
                    j + 1
                )));
            }
        }
        if m.get(i, i).is_one() {
            support.push(i);
        }
    }
    Ok(support)
}

pub fn classify_idempotent(m: &NatMatrix) -> Result<IdempotentClassification> {
    symmetric_or_err(m)?;
    let sq = m.pow(2);
    if let Some((row, col)) = sq.first_difference(m) {
        return Err(Error::NotIdempotent {
            row,
            col,
            found: sq.get(row, col).to_string(),
            expected: m.get(row, col).to_string(),
        });
    }
    // (M²)ᵢᵢ = Σⱼ mᵢⱼ² = mᵢᵢ forces mᵢᵢ ∈ {0, 1} and kills the rest of row i.
    Ok(IdempotentClassification { support: diagonal_support(m)? })
}

/// The four-way split of simples by which of the two idempotents kill them.
/// `x01` collects the simples killed by `b` only, `x10` those killed by `a`
/// only; `x00` is the common support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutingIdempotents {
    pub commute: bool,
    pub x00: Vec<usize>,
    pub x10: Vec<usize>,
    pub x01: Vec<usize>,
    pub x11: Vec<usize>,
    pub product: NatMatrix,
}

pub fn check_commuting_idempotents(a: &NatMatrix, b: &NatMatrix) -> Result<CommutingIdempotents> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch { left: a.n(), right: b.n() });
    }
    let sa = classify_idempotent(a)?.support;
    let sb = classify_idempotent(b)?.support;
    let ab = a.mul(b)?;
    let commute = ab == b.mul(a)?;
    let (mut x00, mut x10, mut x01, mut x11) = (vec![], vec![], vec![], vec![]);
    for i in 0..a.n() {
        match (sa.contains(&i), sb.contains(&i)) {
            (true, true) => x00.push(i),
            (false, true) => x10.push(i),
            (true, false) => x01.push(i),
            (false, false) => x11.push(i),
        }
    }
    let expected = diagonal_on(a.n(), &x00);
    if !commute || ab != expected {
        return Err(Error::ShapeViolation(
            "selfadjoint idempotents must commute with product on the common support".into(),
        ));
    }
    Ok(CommutingIdempotents { commute, x00, x10, x01, x11, product: ab })
}

fn diagonal_on(n: usize, support: &[usize]) -> NatMatrix {
    let mut m = NatMatrix::zeros(n);
    for &i in support {
        m.set(i, i, BigUint::one());
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NilpotencyVerdict {
    Zero,
    /// `M^power` is nonzero at `(row, col)`.
    NotNilpotent {
        power: u32,
        row: usize,
        col: usize,
        value: BigUint,
    },
}

/// A symmetric matrix with `M^k = 0` is zero; otherwise report where `M^k`
/// survives.
pub fn check_nilpotent(m: &NatMatrix, k: u32) -> Result<NilpotencyVerdict> {
    symmetric_or_err(m)?;
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if m.is_zero() {
        return Ok(NilpotencyVerdict::Zero);
    }
    let p = m.pow(k);
    match p.entries().iter().position(|e| !e.is_zero()) {
        Some(pos) => {
            let (row, col) = (pos / m.n(), pos % m.n());
            Ok(NilpotencyVerdict::NotNilpotent { power: k, row, col, value: p.get(row, col).clone() })
        }
        None => Err(Error::ArithmeticFault(format!("nonzero symmetric matrix with vanishing power {k}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CyclicClassification {
    Idempotent {
        support: Vec<usize>,
    },
    /// 0/1 symmetric matrix vanishing off `support` and equal there to the
    /// permutation matrix of `pairing`. `pairing` fixes every point outside
    /// `support`.
    PartialInvolution {
        support: Vec<usize>,
        pairing: Permutation,
    },
}

/// Classifies a symmetric solution of `X^k = X^m`, `k > m ≥ 1`.
pub fn classify_cyclic(m: &NatMatrix, k: u32, low: u32) -> Result<CyclicClassification> {
    if !(k > low && low >= 1) {
        return Err(Error::InvalidArgument(format!("need k > m >= 1, got k = {k}, m = {low}")));
    }
    symmetric_or_err(m)?;
    let hi = m.pow(k);
    let lo = m.pow(low);
    if let Some((row, col)) = hi.first_difference(&lo) {
        return Err(Error::NotASolution {
            high: k,
            low,
            row,
            col,
            found: hi.get(row, col).to_string(),
            expected: lo.get(row, col).to_string(),
        });
    }
    if (k - low) % 2 == 1 {
        if m.pow(2) != *m {
            return Err(Error::ShapeViolation("odd gap but the square differs from the matrix".into()));
        }
        return Ok(CyclicClassification::Idempotent { support: diagonal_support(m)? });
    }
    let (support, pairing) = partial_involution_shape(m)?;
    Ok(CyclicClassification::PartialInvolution { support, pairing })
}

fn partial_involution_shape(m: &NatMatrix) -> Result<(Vec<usize>, Permutation)> {
    let n = m.n();
    if !m.is_binary() {
        return Err(Error::ShapeViolation("partial involution with an entry above 1".into()));
    }
    let mut images: Vec<usize> = (0..n).collect();
    let mut support = Vec::new();
    for i in 0..n {
        let ones: Vec<usize> = (0..n).filter(|&j| m.get(i, j).is_one()).collect();
        match ones.as_slice() {
            [] => {}
            [j] => {
                support.push(i);
                images[i] = *j;
            }
            _ => return Err(Error::ShapeViolation(format!("row {} has several nonzero entries", i + 1))),
        }
    }
    let pairing = Permutation::from_images(images)
        .map_err(|_| Error::ShapeViolation("support rows do not form a bijection".into()))?;
    if !pairing.is_involution() || support.iter().any(|&i| !support.contains(&pairing.apply(i))) {
        return Err(Error::ShapeViolation("support pairing is not an involution".into()));
    }
    Ok((support, pairing))
}

/// A periodic solution `Mⁿ = I` read as a permutation of simples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootOfIdentity {
    pub perm: Permutation,
    pub order: u32,
    /// Order divides 2, equivalently the matrix is symmetric.
    pub selfadjoint: bool,
}

pub fn classify_root_of_identity(m: &NatMatrix, n_exp: u32) -> Result<RootOfIdentity> {
    if n_exp == 0 {
        return Err(Error::InvalidArgument("exponent must be at least 1".into()));
    }
    let p = m.pow(n_exp);
    let id = NatMatrix::identity(m.n());
    if let Some((row, col)) = p.first_difference(&id) {
        return Err(Error::NotARoot { power: n_exp, row, col, found: p.get(row, col).to_string() });
    }
    // A nonnegative matrix whose inverse M^(n-1) is also nonnegative is
    // monomial, and Mⁿ = I then forces every nonzero entry to be 1.
    let perm = m.as_permutation().map_err(|row| Error::NotAPermutationMatrix { row })?;
    let mut order = 1;
    let mut acc = m.clone();
    while !acc.is_identity() {
        acc = acc.mul(m)?;
        order += 1;
        if order > n_exp {
            return Err(Error::ArithmeticFault("order exceeds the root exponent".into()));
        }
    }
    if n_exp % order != 0 {
        return Err(Error::ArithmeticFault(format!("order {order} does not divide {n_exp}")));
    }
    let selfadjoint = order <= 2;
    if selfadjoint != m.is_symmetric() {
        return Err(Error::ShapeViolation("symmetry disagrees with the order".into()));
    }
    Ok(RootOfIdentity { perm, order, selfadjoint })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zmatrix::mat;

    fn diag(d: &[u64]) -> NatMatrix {
        let n = d.len();
        let mut m = NatMatrix::zeros(n);
        for (i, &v) in d.iter().enumerate() {
            m.set(i, i, BigUint::from(v));
        }
        m
    }

    #[test]
    fn idempotent_examples() {
        assert_eq!(classify_idempotent(&diag(&[1, 0])).unwrap().support, vec![0]);
        // The non-selfadjoint idempotent (X, Y) ↦ (X ⊕ Y, 0).
        let m = mat(&[&[1, 1], &[0, 0]]);
        assert_eq!(m.pow(2), m);
        assert_eq!(classify_idempotent(&m).unwrap_err(), Error::NotSymmetric { row: 0, col: 1 });
        assert_eq!(classify_idempotent(&NatMatrix::identity(3)).unwrap().support, vec![0, 1, 2]);
        assert!(classify_idempotent(&NatMatrix::zeros(2)).unwrap().support.is_empty());
        let err = classify_idempotent(&diag(&[2, 0])).unwrap_err();
        assert!(matches!(err, Error::NotIdempotent { row: 0, col: 0, .. }));
    }

    #[test]
    fn commuting_examples() {
        let r = check_commuting_idempotents(&diag(&[1, 0]), &diag(&[0, 1])).unwrap();
        assert!(r.commute);
        assert!(r.x00.is_empty());
        assert!(r.product.is_zero());

        let r = check_commuting_idempotents(&diag(&[1, 1, 0]), &diag(&[1, 0, 0])).unwrap();
        assert_eq!(r.x00, vec![0]);
        assert_eq!(r.x01, vec![1]);
        assert_eq!(r.x11, vec![2]);
        assert!(r.x10.is_empty());

        let i = NatMatrix::identity(3);
        let r = check_commuting_idempotents(&i, &i).unwrap();
        assert_eq!(r.x00, vec![0, 1, 2]);
        assert_eq!(r.product, i);

        assert!(check_commuting_idempotents(&mat(&[&[1, 1], &[0, 0]]), &i).is_err());
    }

    #[test]
    fn nilpotent_examples() {
        assert_eq!(check_nilpotent(&NatMatrix::zeros(3), 2).unwrap(), NilpotencyVerdict::Zero);
        let swap = mat(&[&[0, 1], &[1, 0]]);
        // M⁵ = M for the swap.
        assert_eq!(swap.pow(5), swap);
        assert_eq!(
            check_nilpotent(&swap, 5).unwrap(),
            NilpotencyVerdict::NotNilpotent { power: 5, row: 0, col: 1, value: BigUint::one() }
        );
        assert!(matches!(check_nilpotent(&mat(&[&[1]]), 1).unwrap(), NilpotencyVerdict::NotNilpotent { .. }));
        assert!(check_nilpotent(&mat(&[&[0, 1], &[0, 0]]), 2).is_err());
    }

    #[test]
    fn cyclic_examples() {
        let swap = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(swap.pow(3), swap);
        assert_eq!(
            classify_cyclic(&swap, 3, 1).unwrap(),
            CyclicClassification::PartialInvolution {
                support: vec![0, 1],
                pairing: Permutation::transposition(2, 0, 1)
            }
        );
        assert_eq!(
            classify_cyclic(&diag(&[1, 0]), 4, 1).unwrap(),
            CyclicClassification::Idempotent { support: vec![0] }
        );
        let err = classify_cyclic(&mat(&[&[0, 2], &[2, 0]]), 3, 1).unwrap_err();
        assert_eq!(
            err,
            Error::NotASolution { high: 3, low: 1, row: 0, col: 1, found: "8".into(), expected: "2".into() }
        );
        assert!(classify_cyclic(&swap, 1, 1).is_err());
        let p = mat(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]);
        assert_eq!(
            classify_cyclic(&p, 5, 3).unwrap(),
            CyclicClassification::PartialInvolution {
                support: vec![0, 1],
                pairing: Permutation::transposition(3, 0, 1)
            }
        );
    }

    #[test]
    fn root_examples() {
        let r = classify_root_of_identity(&mat(&[&[0, 1], &[1, 0]]), 2).unwrap();
        assert_eq!(r.perm, Permutation::transposition(2, 0, 1));
        assert_eq!(r.order, 2);
        assert!(r.selfadjoint);

        let r = classify_root_of_identity(&NatMatrix::identity(3), 5).unwrap();
        assert!(r.perm.is_identity());
        assert_eq!(r.order, 1);
        assert!(r.selfadjoint);

        let c = mat(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        assert!(c.pow(3).is_identity());
        assert!(!c.is_symmetric());
        let r = classify_root_of_identity(&c, 3).unwrap();
        assert_eq!(r.order, 3);
        assert!(!r.selfadjoint);
        assert_eq!(r.perm.to_string(), "(1 2 3)");

        assert!(matches!(classify_root_of_identity(&c, 2).unwrap_err(), Error::NotARoot { power: 2, .. }));
    }
}
