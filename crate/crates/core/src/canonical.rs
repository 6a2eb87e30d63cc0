//! Block normal form for solutions of `M² = k·I` and the classification of
//! their symmetric solutions.
//!
//! Over `Z₊` the equation `M² = k·I` forces every simple to be paired with at
//! most one other: after relabeling, `M` is block diagonal with blocks `(a)`,
//! `a² = k`, and `(0 a; b 0)`, `ab = k`. A symmetric solution has `a = b` in
//! every 2×2 block, so `k` is a perfect square `m²` and `M = m·P` for the
//! permutation matrix `P` of an involution.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::zmatrix::{NatMatrix, Permutation, DEFAULT_CANON_CAP};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Block {
    /// `(a)` with `a² = k`.
    One(BigUint),
    /// `(0 a; b 0)` with `ab = k`, `a, b ≥ 1`.
    Two(BigUint, BigUint),
}

impl Block {
    pub fn size(&self) -> usize {
        match self {
            Block::One(_) => 1,
            Block::Two(..) => 2,
        }
    }

    pub fn matrix(&self) -> NatMatrix {
        let z = BigUint::zero;
        match self {
            Block::One(a) => NatMatrix::from_entries(1, vec![a.clone()]),
            Block::Two(a, b) => NatMatrix::from_entries(2, vec![z(), a.clone(), b.clone(), z()]),
        }
        .expect("block shapes are valid")
    }

    fn is_valid_for(&self, k: &BigUint) -> bool {
        match self {
            Block::One(a) => a * a == *k,
            Block::Two(a, b) => !a.is_zero() && !b.is_zero() && a * b == *k,
        }
    }
}

/// `perm` sends original index `i` to its position in the block diagonal, so
/// `conjugate(input, perm)` is the block diagonal and conjugating back by
/// `perm⁻¹` recovers the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockForm {
    pub perm: Permutation,
    pub blocks: Vec<Block>,
    pub k: BigUint,
}

impl BlockForm {
    pub fn new(perm: Permutation, blocks: Vec<Block>, k: BigUint) -> Result<Self> {
        let size: usize = blocks.iter().map(Block::size).sum();
        if size != perm.len() {
            return Err(Error::DimensionMismatch { left: perm.len(), right: size });
        }
        if let Some(b) = blocks.iter().find(|b| !b.is_valid_for(&k)) {
            return Err(Error::ShapeViolation(format!("block {b:?} is not valid for k = {k}")));
        }
        Ok(BlockForm { perm, blocks, k })
    }

    pub fn block_diagonal(&self) -> NatMatrix {
        let mats: Vec<NatMatrix> = self.blocks.iter().map(Block::matrix).collect();
        NatMatrix::block_diagonal(&mats)
    }

    pub fn recompose(&self) -> NatMatrix {
        self.block_diagonal().conjugate(&self.perm.inverse()).expect("permutation and blocks have the same size")
    }
}

/// `Err` carries the first row-major position where `M² ≠ k·I`.
fn check_square_root(m: &NatMatrix, k: &BigUint) -> Result<()> {
    let sq = m.pow(2);
    let target = NatMatrix::scalar(m.n(), k.clone());
    match sq.first_difference(&target) {
        None => Ok(()),
        Some((row, col)) => Err(Error::NotASquareRoot {
            row,
            col,
            found: sq.get(row, col).to_string(),
            expected: target.get(row, col).to_string(),
        }),
    }
}

/// Splits a solution of `M² = k·I` into 1×1 and 2×2 blocks, emitted in
/// ascending order of their smallest original index.
pub fn decompose(m: &NatMatrix, k: &BigUint) -> Result<BlockForm> {
    check_square_root(m, k)?;
    let n = m.n();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut blocks = Vec::new();
    for i in 0..n {
        if placed[i] {
            continue;
        }
        let diag = m.get(i, i);
        if !diag.is_zero() || k.is_zero() {
            // M² = k·I with mᵢᵢ ≠ 0 leaves no room for other entries in row
            // or column i. For k = 0 the whole row and column must vanish.
            if let Some(j) = (0..n).find(|&j| j != i && !(m.get(i, j).is_zero() && m.get(j, i).is_zero())) {
                let (row, col) = if m.get(i, j).is_zero() { (j, i) } else { (i, j) };
                return Err(if k.is_zero() {
                    Error::DegenerateSquareZero { row, col }
                } else {
                    Error::ShapeViolation(format!("entry ({},{}) survives a nonzero diagonal", row + 1, col + 1))
                });
            }
            placed[i] = true;
            order.push(i);
            blocks.push(Block::One(diag.clone()));
            continue;
        }
        let partner = (0..n)
            .find(|&j| j != i && !m.get(i, j).is_zero() && !m.get(j, i).is_zero())
            .ok_or_else(|| Error::ShapeViolation(format!("index {} has no partner", i + 1)))?;
        placed[i] = true;
        placed[partner] = true;
        order.extend([i, partner]);
        blocks.push(Block::Two(m.get(i, partner).clone(), m.get(partner, i).clone()));
    }
    let mut images = vec![0; n];
    for (pos, &orig) in order.iter().enumerate() {
        images[orig] = pos;
    }
    let form = BlockForm::new(Permutation::from_images(images)?, blocks, k.clone())?;
    if form.recompose() != *m {
        return Err(Error::ShapeViolation("block form does not recompose to the input".into()));
    }
    Ok(form)
}

/// A symmetric solution of `M² = k·I`, written as `M = m·P(involution)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqrtClassification {
    pub m: BigUint,
    pub involution: Permutation,
}

impl SqrtClassification {
    pub fn matrix(&self) -> NatMatrix {
        NatMatrix::permutation_matrix(&self.involution).scalar_mul(&self.m)
    }
}

/// Classifies a selfadjoint square root of `k·I`. Checks run in the order
/// symmetry, perfect square `k`, then `M² = k·I`.
///
/// For `k = 0` the only symmetric solution is the zero matrix, and the
/// involution is reported as the identity.
pub fn classify_selfadjoint_sqrt(m: &NatMatrix, k: &BigUint) -> Result<SqrtClassification> {
    if let Some((row, col)) = m.asymmetry_witness() {
        return Err(Error::NotSymmetric { row, col });
    }
    let root = k.sqrt();
    if &root * &root != *k {
        return Err(Error::KNotPerfectSquare { k: k.to_string() });
    }
    let form = decompose(m, k)?;
    let n = m.n();
    let mut images: Vec<usize> = (0..n).collect();
    let order = form.perm.inverse();
    let mut pos = 0;
    for block in &form.blocks {
        match block {
            Block::One(a) if *a == root => pos += 1,
            Block::Two(a, b) if *a == root && *b == root => {
                let (i, j) = (order.apply(pos), order.apply(pos + 1));
                images.swap(i, j);
                pos += 2;
            }
            other => {
                return Err(Error::ShapeViolation(format!(
                    "symmetric square root has block {other:?}, expected entries {root}"
                )))
            }
        }
    }
    let out = SqrtClassification { m: root, involution: Permutation::from_images(images)? };
    if out.matrix() != *m {
        return Err(Error::ShapeViolation("classification does not reproduce the input".into()));
    }
    Ok(out)
}

/// All involutions of `{0..n-1}` in lexicographic order of image arrays.
pub fn enumerate_involutions(n: usize) -> Result<Vec<Permutation>> {
    enumerate_involutions_with_cap(n, DEFAULT_CANON_CAP)
}

pub fn enumerate_involutions_with_cap(n: usize, cap: usize) -> Result<Vec<Permutation>> {
    if n > cap {
        return Err(Error::DimensionTooLarge { n, cap });
    }
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    fn extend(images: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        let Some(i) = images.iter().position(Option::is_none) else {
            out.push(images.iter().map(|x| x.expect("all placed")).collect());
            return;
        };
        images[i] = Some(i);
        extend(images, out);
        for j in i + 1..images.len() {
            if images[j].is_none() {
                images[i] = Some(j);
                images[j] = Some(i);
                extend(images, out);
                images[j] = None;
            }
        }
        images[i] = None;
    }
    let mut raw = Vec::new();
    extend(&mut vec![None; n], &mut raw);
    raw.sort();
    raw.into_iter().map(Permutation::from_images).collect()
}

/// `T(n)`, the number of involutions of an `n`-set.
pub fn telephone_number(n: usize) -> BigUint {
    let (mut prev, mut cur) = (BigUint::one(), BigUint::one());
    for i in 1..n {
        let next = &cur + &prev * BigUint::from(i);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}
