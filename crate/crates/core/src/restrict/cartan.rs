//! Compatibility of a Cartan matrix with a family of symmetric functor
//! matrices.
//!
//! If every `M_i` is symmetric, each commutes with the Cartan matrix `C`. If
//! moreover `Qⁿ` has no proper subspace invariant under all `M_i`, Schur's
//! lemma makes `C` scalar: the algebra is a direct sum of local algebras of
//! equal dimension.
//!
//! Deciding irreducibility over `Q` in general needs MeatAxe-style tools.
//! This checker is sound but incomplete: the algebra generated by the `M_i`
//! having dimension `n²` certifies irreducibility, and a proper submodule
//! grown from an integer eigenvector certifies reducibility. When neither
//! applies the verdict is `Inconclusive`. All statements are over `Q`, which
//! does not settle irreducibility over field extensions.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use super::rational::{primitive_integer, QMatrix, Span};
use crate::error::{Error, Result};
use crate::zmatrix::NatMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanInstance {
    cartan: NatMatrix,
    functors: Vec<NatMatrix>,
}

impl CartanInstance {
    pub fn new(cartan: NatMatrix, functors: Vec<NatMatrix>) -> Result<Self> {
        for f in &functors {
            if f.n() != cartan.n() {
                return Err(Error::DimensionMismatch { left: cartan.n(), right: f.n() });
            }
            if let Some((row, col)) = f.asymmetry_witness() {
                return Err(Error::NotSymmetric { row, col });
            }
        }
        Ok(CartanInstance { cartan, functors })
    }

    pub fn cartan(&self) -> &NatMatrix {
        &self.cartan
    }

    pub fn functors(&self) -> &[NatMatrix] {
        &self.functors
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CartanVerdict {
    /// Irreducible and `C = c·I`.
    Pass {
        c: BigUint,
    },
    /// `M_functor · C` and `C · M_functor` differ at `(row, col)`.
    FailCommutation {
        functor: usize,
        row: usize,
        col: usize,
    },
    /// A proper nonzero invariant subspace, given by a basis of primitive
    /// integer vectors, grown from an eigenvector of `functor` for
    /// `eigenvalue`.
    Reducible {
        basis: Vec<Vec<BigInt>>,
        functor: usize,
        eigenvalue: BigInt,
    },
    /// Irreducible yet `C` is not scalar. Unreachable for well-formed
    /// arithmetic; reported instead of panicking.
    InconsistentInput {
        algebra_dim: usize,
    },
    Inconclusive {
        algebra_dim: usize,
    },
}

pub fn cartan_check(inst: &CartanInstance) -> CartanVerdict {
    let c = &inst.cartan;
    let n = c.n();
    for (i, f) in inst.functors.iter().enumerate() {
        let left = f.mul(c).expect("dimensions checked at construction");
        let right = c.mul(f).expect("dimensions checked at construction");
        if let Some((row, col)) = left.first_difference(&right) {
            return CartanVerdict::FailCommutation { functor: i, row, col };
        }
    }

    let generators: Vec<QMatrix> = inst.functors.iter().map(QMatrix::from_nat).collect();
    let algebra = generated_algebra(n, &generators);
    if algebra.len() == n * n {
        // C commutes with every generator, hence with the full matrix
        // algebra, so it should be scalar.
        let scalar = c.get(0, 0).clone();
        return if *c == NatMatrix::scalar(n, scalar.clone()) {
            CartanVerdict::Pass { c: scalar }
        } else {
            CartanVerdict::InconsistentInput { algebra_dim: algebra.len() }
        };
    }

    if let Some(v) = eigenvector_submodule(n, &inst.functors, &generators, &algebra) {
        return v;
    }
    CartanVerdict::Inconclusive { algebra_dim: algebra.len() }
}

/// Spanning set of the unital algebra generated by `generators`: words are
/// extended by one generator at a time until the span stops growing.
fn generated_algebra(n: usize, generators: &[QMatrix]) -> Vec<QMatrix> {
    let mut span = Span::new();
    let id = QMatrix::identity(n);
    span.insert(&id.entries);
    let mut elements = vec![id];
    let mut next = 0;
    while next < elements.len() && span.dim() < n * n {
        let base = elements[next].clone();
        next += 1;
        for g in generators {
            let word = base.mul(g);
            if span.insert(&word.entries) {
                elements.push(word);
            }
        }
    }
    elements
}

fn eigenvector_submodule(
    n: usize,
    functors: &[NatMatrix],
    generators: &[QMatrix],
    algebra: &[QMatrix],
) -> Option<CartanVerdict> {
    for (gi, (f, g)) in functors.iter().zip(generators).enumerate() {
        // Every eigenvalue of a nonnegative matrix is bounded by its largest
        // row sum.
        let radius = f.rows().map(|r| r.iter().fold(BigUint::zero(), |a, e| a + e)).max().unwrap_or_default();
        let radius = BigInt::from(radius);
        let mut lambda = radius.clone();
        while lambda >= -radius.clone() {
            let shifted = g.shift(&BigRational::from_integer(lambda.clone()));
            for v in shifted.kernel() {
                let mut sub = Span::new();
                for a in algebra {
                    sub.insert(&a.apply(&v));
                }
                if sub.dim() > 0 && sub.dim() < n {
                    let basis = sub.basis().iter().map(|b| primitive_integer(b)).collect();
                    return Some(CartanVerdict::Reducible { basis, functor: gi, eigenvalue: lambda });
                }
            }
            lambda -= 1;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zmatrix::mat;

    fn swap() -> NatMatrix {
        mat(&[&[0, 1], &[1, 0]])
    }

    #[test]
    fn full_algebra_passes() {
        let inst =
            CartanInstance::new(NatMatrix::scalar(2, BigUint::from(2u32)), vec![swap(), mat(&[&[1, 0], &[0, 0]])])
                .unwrap();
        assert_eq!(cartan_check(&inst), CartanVerdict::Pass { c: BigUint::from(2u32) });
    }

    #[test]
    fn non_commuting_cartan() {
        let inst = CartanInstance::new(mat(&[&[2, 0], &[0, 1]]), vec![swap()]).unwrap();
        assert_eq!(cartan_check(&inst), CartanVerdict::FailCommutation { functor: 0, row: 0, col: 1 });
    }

    #[test]
    fn swap_alone_is_reducible() {
        let inst = CartanInstance::new(NatMatrix::scalar(2, BigUint::from(2u32)), vec![swap()]).unwrap();
        let one = BigInt::from(1);
        assert_eq!(
            cartan_check(&inst),
            CartanVerdict::Reducible { basis: vec![vec![one.clone(), one.clone()]], functor: 0, eigenvalue: one }
        );
    }

    #[test]
    fn full_algebra_rejects_non_scalar_cartan() {
        let one = CartanInstance::new(mat(&[&[3]]), vec![]).unwrap();
        assert_eq!(cartan_check(&one), CartanVerdict::Pass { c: BigUint::from(3u32) });
        let gens = vec![swap(), mat(&[&[1, 0], &[0, 0]])];
        let inst = CartanInstance::new(mat(&[&[1, 1], &[1, 1]]), gens).unwrap();
        assert!(matches!(cartan_check(&inst), CartanVerdict::FailCommutation { .. }));
    }

    #[test]
    fn inconclusive_without_integer_eigenvectors() {
        // (1 1; 1 0) generates Q[√5]: dimension 2 < 4, and the eigenvalues
        // are irrational, so neither certificate applies.
        let inst = CartanInstance::new(NatMatrix::identity(2), vec![mat(&[&[1, 1], &[1, 0]])]).unwrap();
        assert_eq!(cartan_check(&inst), CartanVerdict::Inconclusive { algebra_dim: 2 });
    }

    #[test]
    fn rejects_bad_instances() {
        assert!(CartanInstance::new(NatMatrix::identity(2), vec![mat(&[&[1, 1], &[0, 1]])]).is_err());
        assert!(CartanInstance::new(NatMatrix::identity(2), vec![NatMatrix::identity(3)]).is_err());
    }
}
