//! Exact linear algebra over `Q` for the Cartan checker.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::zmatrix::NatMatrix;

pub(crate) type Vector = Vec<BigRational>;

/// Dense square matrix over `Q`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct QMatrix {
    pub n: usize,
    pub entries: Vec<BigRational>,
}

impl QMatrix {
    pub fn from_nat(m: &NatMatrix) -> Self {
        QMatrix {
            n: m.n(),
            entries: m.entries().iter().map(|e| BigRational::from_integer(BigInt::from(e.clone()))).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigRational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigRational::one();
        }
        QMatrix { n, entries }
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        let n = self.n;
        let mut out = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let a = &self.entries[i * n + l];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[l * n + j];
                    if !b.is_zero() {
                        out[i * n + j] += a * b;
                    }
                }
            }
        }
        QMatrix { n, entries: out }
    }

    pub fn apply(&self, v: &[BigRational]) -> Vector {
        let n = self.n;
        (0..n).map(|i| (0..n).fold(BigRational::zero(), |acc, j| acc + &self.entries[i * n + j] * &v[j])).collect()
    }

    /// `self - λ·I`.
    pub fn shift(&self, lambda: &BigRational) -> QMatrix {
        let mut out = self.clone();
        for i in 0..self.n {
            out.entries[i * self.n + i] -= lambda;
        }
        out
    }

    /// Basis of `{v : self·v = 0}`, one vector per free column of the
    /// reduced row echelon form.
    pub fn kernel(&self) -> Vec<Vector> {
        let n = self.n;
        let mut rows: Vec<Vector> = self.entries.chunks(n).map(<[BigRational]>::to_vec).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..n {
            let Some(p) = (r..n).find(|&i| !rows[i][col].is_zero()) else { continue };
            rows.swap(r, p);
            let inv = rows[r][col].recip();
            for x in rows[r].iter_mut() {
                *x *= &inv;
            }
            for i in 0..n {
                if i != r && !rows[i][col].is_zero() {
                    let f = rows[i][col].clone();
                    for j in 0..n {
                        let d = &f * &rows[r][j];
                        rows[i][j] -= d;
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigRational::zero(); n];
                v[f] = BigRational::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -rows[row][f].clone();
                }
                v
            })
            .collect()
    }
}

/// Incrementally maintained row echelon basis of a subspace of `Qᵈ`.
#[derive(Clone, Debug, Default)]
pub(crate) struct Span {
    /// Each basis row has a leading 1 at its pivot, and no other row has a
    /// nonzero entry there.
    rows: Vec<(usize, Vector)>,
    originals: Vec<Vector>,
}

impl Span {
    pub fn new() -> Self {
        Span::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The inserted vectors that were independent, in insertion order.
    pub fn basis(&self) -> &[Vector] {
        &self.originals
    }

    fn reduce(&self, v: &[BigRational]) -> Vector {
        let mut w = v.to_vec();
        for (pivot, row) in &self.rows {
            if !w[*pivot].is_zero() {
                let f = w[*pivot].clone();
                for (x, y) in w.iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
        }
        w
    }

    /// Adds `v` if it lies outside the span; returns whether it did.
    pub fn insert(&mut self, v: &[BigRational]) -> bool {
        let mut w = self.reduce(v);
        let Some(pivot) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[pivot].recip();
        for x in w.iter_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let f = row[pivot].clone();
                for (x, y) in row.iter_mut().zip(&w) {
                    *x -= &f * y;
                }
            }
        }
        self.rows.push((pivot, w));
        self.originals.push(v.to_vec());
        true
    }
}

/// Scales a rational vector to a primitive integer vector with a positive
/// first nonzero entry.
pub(crate) fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() {
        for x in ints.iter_mut() {
            *x /= &g;
        }
    }
    if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in ints.iter_mut() {
            *x = -&*x;
        }
    }
    ints
}
