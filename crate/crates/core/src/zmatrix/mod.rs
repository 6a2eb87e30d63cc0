//! Exact square matrices over the nonnegative integers.
//!
//! A [`NatMatrix`] is the matrix of the map an exact functor induces on the
//! Grothendieck group, written in the basis of simple modules: column `i`
//! holds the composition multiplicities of the image of the `i`-th simple.
//! Direct sum of functors is the entrywise sum, composition is the matrix
//! product, and `k`-fold replication `F ⊕ ... ⊕ F` is multiplication by `k`.
//!
//! Equality of these matrices is a necessary condition for isomorphism of
//! functors. Over a semisimple algebra (a direct sum of copies of the ground
//! field) it is also sufficient, so in that case matrix solutions classify
//! functors exactly. Everywhere else the results in this crate should be read
//! as statements about the matrix shadow only.

mod canon;
mod permutation;
mod relation;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use canon::{canonical_rep, canonical_rep_with_cap, is_canonical, DEFAULT_CANON_CAP};
pub use permutation::Permutation;
pub use relation::RelationPoly;

/// Square `n × n` matrix of arbitrary-precision nonnegative integers, `n ≥ 1`.
///
/// Entries are stored row-major. Indices are 0-based in this API.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NatMatrix {
    n: usize,
    entries: Vec<BigUint>,
}

impl NatMatrix {
    /// Builds a matrix from row-major entries.
    pub fn from_entries(n: usize, entries: Vec<BigUint>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidMatrix("dimension must be at least 1".into()));
        }
        if entries.len() != n * n {
            return Err(Error::InvalidMatrix(format!("expected {} entries for n = {n}, got {}", n * n, entries.len())));
        }
        Ok(NatMatrix { n, entries })
    }

    pub fn from_rows<T, R>(rows: R) -> Result<Self>
    where
        T: Into<BigUint>,
        R: IntoIterator,
        R::Item: IntoIterator<Item = T>,
    {
        let rows: Vec<Vec<BigUint>> = rows.into_iter().map(|r| r.into_iter().map(Into::into).collect()).collect();
        let n = rows.len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::InvalidMatrix(format!("row {} has {} entries, expected {n}", i + 1, r.len())));
        }
        Self::from_entries(n, rows.into_iter().flatten().collect())
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "dimension must be at least 1");
        NatMatrix { n, entries: vec![BigUint::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, BigUint::one())
    }

    /// `c · Iₙ`.
    pub fn scalar(n: usize, c: BigUint) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = c.clone();
        }
        m
    }

    /// Permutation matrix with a 1 at `(σ(i), i)`, so that column `i` maps
    /// the `i`-th basis vector to the `σ(i)`-th.
    pub fn permutation_matrix(p: &Permutation) -> Self {
        let n = p.len();
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[p.apply(i) * n + i] = BigUint::one();
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &BigUint {
        &self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigUint) {
        self.entries[row * self.n + col] = value;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigUint]> {
        self.entries.chunks(self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.first_difference(&Self::identity(self.n)).is_none()
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetry_witness().is_none()
    }

    /// First `(i, j)` with `i < j` and `m[i][j] != m[j][i]`, in row-major order.
    pub fn asymmetry_witness(&self) -> Option<(usize, usize)> {
        let n = self.n;
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| self.get(i, j) != self.get(j, i))
    }

    /// First position, in row-major order, where `self` and `other` differ.
    /// Both matrices must have the same dimension.
    pub fn first_difference(&self, other: &NatMatrix) -> Option<(usize, usize)> {
        debug_assert_eq!(self.n, other.n);
        self.entries.iter().zip(&other.entries).position(|(a, b)| a != b).map(|p| (p / self.n, p % self.n))
    }

    /// Whether every entry is 0 or 1.
    pub fn is_binary(&self) -> bool {
        self.entries.iter().all(|e| e <= &BigUint::one())
    }

    /// Reads `self` as a permutation matrix, returning the permutation `σ`
    /// with a 1 at `(σ(i), i)`. `Err(row)` names the first row that does not
    /// contain exactly one 1 and zeros elsewhere.
    pub fn as_permutation(&self) -> std::result::Result<Permutation, usize> {
        let n = self.n;
        let mut images = vec![usize::MAX; n];
        for row in 0..n {
            let mut hit = None;
            for col in 0..n {
                let e = self.get(row, col);
                if e.is_zero() {
                    continue;
                }
                if !e.is_one() || hit.is_some() {
                    return Err(row);
                }
                hit = Some(col);
            }
            match hit {
                Some(col) if images[col] == usize::MAX => images[col] = row,
                _ => return Err(row),
            }
        }
        Ok(Permutation::from_images(images).expect("checked bijection"))
    }

    fn check_dims(&self, other: &NatMatrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &NatMatrix) -> Result<NatMatrix> {
        self.check_dims(other)?;
        Ok(NatMatrix { n: self.n, entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect() })
    }

    pub fn mul(&self, other: &NatMatrix) -> Result<NatMatrix> {
        self.check_dims(other)?;
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigUint::zero();
                for l in 0..n {
                    let a = self.get(i, l);
                    if a.is_zero() {
                        continue;
                    }
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        acc += a * b;
                    }
                }
                out.push(acc);
            }
        }
        Ok(NatMatrix { n, entries: out })
    }

    pub fn transpose(&self) -> NatMatrix {
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                out.push(self.get(j, i).clone());
            }
        }
        NatMatrix { n, entries: out }
    }

    pub fn scalar_mul(&self, k: &BigUint) -> NatMatrix {
        NatMatrix { n: self.n, entries: self.entries.iter().map(|e| e * k).collect() }
    }

    pub fn pow(&self, exp: u32) -> NatMatrix {
        let mut result = Self::identity(self.n);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same dimension");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same dimension");
            }
        }
        result
    }

    /// `M⁰ = I, M¹, ..., M^max_exp`.
    pub fn powers(&self, max_exp: usize) -> Vec<NatMatrix> {
        let mut out = Vec::with_capacity(max_exp + 1);
        out.push(Self::identity(self.n));
        for d in 1..=max_exp {
            let next = out[d - 1].mul(self).expect("same dimension");
            out.push(next);
        }
        out
    }

    /// `Σ cᵢ·Mⁱ` with `M⁰ = Iₙ`, so a constant term `c` contributes `c·Iₙ`.
    pub fn poly_eval(&self, coeffs: &[BigUint]) -> NatMatrix {
        // Horner's scheme keeps every intermediate nonnegative.
        let n = self.n;
        let mut acc = Self::zeros(n);
        for c in coeffs.iter().rev() {
            acc = acc.mul(self).expect("same dimension");
            if !c.is_zero() {
                for i in 0..n {
                    acc.entries[i * n + i] += c;
                }
            }
        }
        acc
    }

    /// Whether `g(M) = h(M)`.
    pub fn satisfies(&self, rel: &RelationPoly) -> bool {
        self.relation_witness(rel).is_none()
    }

    /// First entry where `g(M)` and `h(M)` differ.
    pub fn relation_witness(&self, rel: &RelationPoly) -> Option<(usize, usize)> {
        self.poly_eval(rel.g()).first_difference(&self.poly_eval(rel.h()))
    }

    /// External direct sum: the block-diagonal matrix `diag(self, other)`.
    pub fn direct_sum(&self, other: &NatMatrix) -> NatMatrix {
        Self::block_diagonal([self, other])
    }

    pub fn block_diagonal<'a, I>(blocks: I) -> NatMatrix
    where
        I: IntoIterator<Item = &'a NatMatrix>,
    {
        let blocks: Vec<&NatMatrix> = blocks.into_iter().collect();
        let n: usize = blocks.iter().map(|b| b.n).sum();
        let mut out = Self::zeros(n);
        let mut offset = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    out.entries[(offset + i) * n + offset + j] = b.get(i, j).clone();
                }
            }
            offset += b.n;
        }
        out
    }

    /// `self ⊗ I_b`: simple `(i, j)` of the product category sits at index
    /// `i·b + j`.
    pub fn external_tensor(&self, b_simples: usize) -> Result<NatMatrix> {
        if b_simples == 0 {
            return Err(Error::InvalidArgument("b_simples must be at least 1".into()));
        }
        let b = b_simples;
        let n = self.n * b;
        let mut out = Self::zeros(n);
        for i in 0..self.n {
            for j in 0..self.n {
                let e = self.get(i, j);
                if e.is_zero() {
                    continue;
                }
                for t in 0..b {
                    out.entries[(i * b + t) * n + j * b + t] = e.clone();
                }
            }
        }
        Ok(out)
    }

    /// `S M S⁻¹` for the permutation matrix `S` of `s`: entry `(i, j)` moves
    /// to `(σ(i), σ(j))`.
    pub fn conjugate(&self, s: &Permutation) -> Result<NatMatrix> {
        if s.len() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: s.len() });
        }
        let n = self.n;
        let mut out = vec![BigUint::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                out[s.apply(i) * n + s.apply(j)] = self.get(i, j).clone();
            }
        }
        Ok(NatMatrix { n, entries: out })
    }

    /// Principal submatrix on `indices`, in the given order.
    pub fn submatrix(&self, indices: &[usize]) -> NatMatrix {
        let k = indices.len();
        assert!(k >= 1, "submatrix needs at least one index");
        let mut out = Vec::with_capacity(k * k);
        for &i in indices {
            for &j in indices {
                out.push(self.get(i, j).clone());
            }
        }
        NatMatrix { n: k, entries: out }
    }
}

impl fmt::Debug for NatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
pub(crate) fn mat(rows: &[&[u64]]) -> NatMatrix {
    NatMatrix::from_rows(rows.iter().map(|r| r.iter().copied())).unwrap()
}
