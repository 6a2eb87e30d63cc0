use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// A relation `g(x) = h(x)` between polynomials with nonnegative integer
/// coefficients. Coefficient lists are indexed by degree; the constant term
/// `c` stands for `c·I`.
///
/// Trailing zero coefficients are dropped, and a relation whose two sides
/// coincide is rejected.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RelationPoly {
    g: Vec<BigUint>,
    h: Vec<BigUint>,
}

fn trim(mut v: Vec<BigUint>) -> Vec<BigUint> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

impl RelationPoly {
    pub fn new(g: Vec<BigUint>, h: Vec<BigUint>) -> Result<Self> {
        let (g, h) = (trim(g), trim(h));
        if g == h {
            return Err(Error::InvalidRelation("both sides are the same polynomial".into()));
        }
        Ok(RelationPoly { g, h })
    }

    pub fn from_u64(g: &[u64], h: &[u64]) -> Result<Self> {
        let conv = |v: &[u64]| v.iter().map(|&c| BigUint::from(c)).collect();
        Self::new(conv(g), conv(h))
    }

    /// `x^d = c`.
    pub fn power_equals_constant(d: usize, c: u64) -> Self {
        let mut g = vec![0; d + 1];
        g[d] = 1;
        Self::from_u64(&g, &[c]).expect("x^d and a constant differ for d >= 1")
    }

    /// `x^high = x^low`.
    pub fn power_equals_power(high: usize, low: usize) -> Self {
        let mut g = vec![0; high + 1];
        g[high] = 1;
        let mut h = vec![0; low + 1];
        h[low] = 1;
        Self::from_u64(&g, &h).expect("distinct powers")
    }

    pub fn g(&self) -> &[BigUint] {
        &self.g
    }

    pub fn h(&self) -> &[BigUint] {
        &self.h
    }

    /// Highest degree occurring on either side; 0 for two constants.
    pub fn degree(&self) -> usize {
        self.g.len().max(self.h.len()).saturating_sub(1)
    }

    /// Both sides with the common part `min(gᵢ, hᵢ)` removed from every
    /// degree. Over nonnegative matrices `g(X) = h(X)` holds exactly when
    /// the reduced relation does, and the two reduced sides never share a
    /// degree.
    pub fn reduced(&self) -> (Vec<BigUint>, Vec<BigUint>) {
        let len = self.degree() + 1;
        let zero = BigUint::zero();
        let mut p = Vec::with_capacity(len);
        let mut q = Vec::with_capacity(len);
        for d in 0..len {
            let a = self.g.get(d).unwrap_or(&zero);
            let b = self.h.get(d).unwrap_or(&zero);
            if a >= b {
                p.push(a - b);
                q.push(BigUint::zero());
            } else {
                p.push(BigUint::zero());
                q.push(b - a);
            }
        }
        (trim(p), trim(q))
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, coeffs: &[BigUint]) -> fmt::Result {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(d, c)| {
            let one = *c == BigUint::from(1u32);
            match (d, one) {
                (0, _) => c.to_string(),
                (1, true) => "x".into(),
                (1, false) => format!("{c}x"),
                (_, true) => format!("x^{d}"),
                (_, false) => format!("{c}x^{d}"),
            }
        })
        .collect();
    if terms.is_empty() {
        write!(f, "0")
    } else {
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Display for RelationPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.g)?;
        write!(f, " = ")?;
        write_poly(f, &self.h)
    }
}

impl fmt::Debug for RelationPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RelationPoly({self})")
    }
}
