//! Tensor powers `(V ⊕ k^m)^{⊗d}` with their `gl` and `GL` actions.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};

/// Largest tensor space the lab will build.
pub const MAX_TENSOR_DIM: usize = 1500;

/// `(V ⊕ k^m)^{⊗d}` with `dim V = n`. Letters `1..=n` span `V`, letters
/// `n+1..=n+m` are the appended lines. Basis words are indexed
/// lexicographically, first position most significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TensorSpace {
    n: usize,
    m: usize,
    d: usize,
    dim: usize,
}

impl TensorSpace {
    pub fn new(n: usize, m: usize, d: usize) -> Result<Self> {
        let letters = n + m;
        let dim = checked_pow(letters, d)
            .filter(|&dim| dim <= MAX_TENSOR_DIM)
            .ok_or(Error::CapExceeded { dim: checked_pow(letters, d).unwrap_or(usize::MAX), cap: MAX_TENSOR_DIM })?;
        Ok(TensorSpace { n, m, d, dim })
    }

    /// `U^{⊗d}` for a `letters`-dimensional `U` with no distinguished lines.
    pub fn plain(letters: usize, d: usize) -> Result<Self> {
        TensorSpace::new(letters, 0, d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn letters(&self) -> usize {
        self.n + self.m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn word(&self, mut index: usize) -> Vec<usize> {
        let l = self.letters();
        let mut word = vec![0; self.d];
        for slot in word.iter_mut().rev() {
            *slot = index % l + 1;
            index /= l;
        }
        word
    }

    pub fn index(&self, word: &[usize]) -> usize {
        debug_assert_eq!(word.len(), self.d);
        word.iter().fold(0, |acc, &letter| acc * self.letters() + (letter - 1))
    }

    pub fn words(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.dim).map(|k| self.word(k))
    }
}

fn checked_pow(base: usize, exp: usize) -> Option<usize> {
    (0..exp).try_fold(1usize, |acc, _| acc.checked_mul(base))
}

/// The matrix unit `x_{i,j}`: sends `e_j` to `e_i`, other basis vectors to 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementaryUnit {
    pub row: usize,
    pub col: usize,
}

impl ElementaryUnit {
    pub fn new(row: usize, col: usize) -> Self {
        ElementaryUnit { row, col }
    }
}

/// An integer operator on a tensor space, stored by sparse columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseOp {
    dim: usize,
    cols: Vec<Vec<(usize, i64)>>,
}

impl SparseOp {
    pub fn zero(dim: usize) -> Self {
        SparseOp { dim, cols: vec![Vec::new(); dim] }
    }

    pub fn scalar(dim: usize, c: i64) -> Self {
        let cols = (0..dim).map(|k| if c == 0 { Vec::new() } else { vec![(k, c)] }).collect();
        SparseOp { dim, cols }
    }

    pub fn identity(dim: usize) -> Self {
        SparseOp::scalar(dim, 1)
    }

    fn from_columns(dim: usize, cols: Vec<BTreeMap<usize, i64>>) -> Self {
        let cols = cols.into_iter().map(|c| c.into_iter().filter(|&(_, v)| v != 0).collect()).collect();
        SparseOp { dim, cols }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.cols[j]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SparseOp) -> SparseOp {
        assert_eq!(self.dim, other.dim);
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let mut acc = BTreeMap::new();
                for &(k, b) in col {
                    for &(r, a) in &self.cols[k] {
                        *acc.entry(r).or_insert(0) += a * b;
                    }
                }
                acc
            })
            .collect();
        SparseOp::from_columns(self.dim, cols)
    }

    pub fn add(&self, other: &SparseOp) -> SparseOp {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &SparseOp) -> SparseOp {
        self.combine(other, -1)
    }

    pub fn scale(&self, c: i64) -> SparseOp {
        let cols = self.cols.iter().map(|col| col.iter().map(|&(r, v)| (r, v * c)).collect()).collect();
        SparseOp::from_columns(self.dim, cols)
    }

    fn combine(&self, other: &SparseOp, sign: i64) -> SparseOp {
        assert_eq!(self.dim, other.dim);
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, i64> = a.iter().copied().collect();
                for &(r, v) in b {
                    *acc.entry(r).or_insert(0) += sign * v;
                }
                acc
            })
            .collect();
        SparseOp::from_columns(self.dim, cols)
    }

    pub fn to_matrix<F: Field>(&self, field: &F) -> Matrix<F::Elem> {
        let mut m = Matrix::zero(field, self.dim, self.dim);
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                m.set(r, c, field.from_i64(v));
            }
        }
        m
    }

    /// Restriction to the span of the basis vectors `indices`, which must be
    /// invariant.
    pub fn restrict(&self, indices: &[usize]) -> Result<SparseOp> {
        let position: BTreeMap<usize, usize> = indices.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let mut cols = Vec::with_capacity(indices.len());
        for &i in indices {
            let mut col = BTreeMap::new();
            for &(r, v) in &self.cols[i] {
                let Some(&k) = position.get(&r) else {
                    return Err(Error::RestrictionFailure(format!(
                        "basis vector {} is sent outside the subspace (component {})",
                        i, r
                    )));
                };
                col.insert(k, v);
            }
            cols.push(col);
        }
        Ok(SparseOp::from_columns(indices.len(), cols))
    }
}

/// Leibniz action `Σ_k 1^{⊗k-1} ⊗ x ⊗ 1^{⊗d-k}` of a matrix unit.
pub fn lie_op(space: &TensorSpace, x: ElementaryUnit) -> SparseOp {
    assert!(x.row >= 1 && x.col >= 1 && x.row <= space.letters() && x.col <= space.letters());
    let cols = (0..space.dim())
        .map(|idx| {
            let mut word = space.word(idx);
            let mut acc = BTreeMap::new();
            for k in 0..word.len() {
                if word[k] == x.col {
                    word[k] = x.row;
                    *acc.entry(space.index(&word)).or_insert(0) += 1;
                    word[k] = x.col;
                }
            }
            acc
        })
        .collect();
    SparseOp::from_columns(space.dim(), cols)
}

pub fn lie_action<F: Field>(field: &F, x: ElementaryUnit, space: &TensorSpace) -> Matrix<F::Elem> {
    lie_op(space, x).to_matrix(field)
}

/// `g^{⊗d}` for an invertible `g` on the letters.
pub fn group_action<F: Field>(field: &F, g: &Matrix<F::Elem>, space: &TensorSpace) -> Result<Matrix<F::Elem>> {
    let l = space.letters();
    if g.rows() != l || g.cols() != l {
        return Err(Error::DimensionMismatch { expected: l, found: g.rows() });
    }
    if g.rank(field) != l {
        return Err(Error::SingularMatrix);
    }
    let mut acc = Matrix::identity(field, 1);
    for _ in 0..space.degree() {
        acc = acc.kron(field, g);
    }
    Ok(acc)
}

/// Permutation of basis words induced by exchanging letters `a` and `b`.
pub fn letter_swap_op(space: &TensorSpace, a: usize, b: usize) -> SparseOp {
    let cols = (0..space.dim())
        .map(|idx| {
            let word: Vec<usize> = space
                .word(idx)
                .into_iter()
                .map(|l| {
                    if l == a {
                        b
                    } else if l == b {
                        a
                    } else {
                        l
                    }
                })
                .collect();
            let mut col = BTreeMap::new();
            col.insert(space.index(&word), 1);
            col
        })
        .collect();
    SparseOp::from_columns(space.dim(), cols)
}

/// Cache of Leibniz operators of matrix units on one space.
struct LieOps<'a> {
    space: &'a TensorSpace,
    cache: BTreeMap<ElementaryUnit, SparseOp>,
}

impl<'a> LieOps<'a> {
    fn new(space: &'a TensorSpace) -> Self {
        LieOps { space, cache: BTreeMap::new() }
    }

    fn get(&mut self, row: usize, col: usize) -> SparseOp {
        let x = ElementaryUnit::new(row, col);
        self.cache.entry(x).or_insert_with(|| lie_op(self.space, x)).clone()
    }

    fn product(&mut self, a: (usize, usize), b: (usize, usize)) -> SparseOp {
        let left = self.get(a.0, a.1);
        let right = self.get(b.0, b.1);
        left.compose(&right)
    }
}

/// Casimir `Σ_{i≠j} x_{i,j} x_{j,i} + Σ_l x_{l,l}^2` of `gl` on letters `1..=r`.
pub fn casimir_op(space: &TensorSpace, r: usize) -> SparseOp {
    assert!(r <= space.letters());
    let mut ops = LieOps::new(space);
    let mut total = SparseOp::zero(space.dim());
    for i in 1..=r {
        for j in 1..=r {
            total = total.add(&ops.product((i, j), (j, i)));
        }
    }
    total
}

pub fn casimir_matrix<F: Field>(field: &F, space: &TensorSpace, r: usize) -> Matrix<F::Elem> {
    casimir_op(space, r).to_matrix(field)
}

/// `Σ_{i=1}^{w} x_{c,i} x_{i,c} − w` for a distinguished letter `c` over the
/// ambient letters `1..=w`.
pub fn x_op(space: &TensorSpace, distinguished: usize, ambient: usize) -> SparseOp {
    assert!(distinguished >= 1 && distinguished <= space.letters() && ambient < distinguished);
    let mut ops = LieOps::new(space);
    let mut total = SparseOp::scalar(space.dim(), -(ambient as i64));
    for i in 1..=ambient {
        total = total.add(&ops.product((distinguished, i), (i, distinguished)));
    }
    total
}

pub fn x_matrix<F: Field>(field: &F, space: &TensorSpace, distinguished: usize, ambient: usize) -> Matrix<F::Elem> {
    x_op(space, distinguished, ambient).to_matrix(field)
}

/// Both sides of `C_{V⊕k} − C_V = 2X_V + Σ_i x_{i,i} − n x_{n+1,n+1} + x_{n+1,n+1}^2 + 2n`
/// on `(V ⊕ k)^{⊗d}`, as exact matrices.
pub fn casimir_difference_sides<F: Field>(field: &F, n: usize, d: usize) -> Result<(Matrix<F::Elem>, Matrix<F::Elem>)> {
    let space = TensorSpace::new(n, 1, d)?;
    let lhs = casimir_matrix(field, &space, n + 1).sub(field, &casimir_matrix(field, &space, n));
    let top = n + 1;
    let mut ops = LieOps::new(&space);
    let mut rhs = x_op(&space, top, n).scale(2);
    for i in 1..=n {
        rhs = rhs.add(&ops.get(i, i));
    }
    rhs = rhs.sub(&ops.get(top, top).scale(n as i64));
    rhs = rhs.add(&ops.product((top, top), (top, top)));
    rhs = rhs.add(&SparseOp::scalar(space.dim(), 2 * n as i64));
    Ok((lhs, rhs.to_matrix(field)))
}

/// Whether the Casimir difference identity holds; characteristic 2 rejected.
pub fn verify_casimir_difference<F: Field>(field: &F, n: usize, d: usize) -> Result<bool> {
    if field.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    let (lhs, rhs) = casimir_difference_sides(field, n, d)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, Rationals};

    #[test]
    fn word_indexing() {
        let t = TensorSpace::new(2, 1, 3).unwrap();
        assert_eq!(t.dim(), 27);
        assert_eq!(t.word(0), vec![1, 1, 1]);
        assert_eq!(t.word(26), vec![3, 3, 3]);
        assert_eq!(t.word(5), vec![1, 2, 3]);
        for k in 0..t.dim() {
            assert_eq!(t.index(&t.word(k)), k);
        }
        assert!(matches!(TensorSpace::new(4, 2, 5), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn lie_action_examples() {
        let q = Rationals;
        // d = 1: the matrix of x itself
        let t = TensorSpace::plain(3, 1).unwrap();
        let m = lie_action(&q, ElementaryUnit::new(1, 3), &t);
        let mut expected = Matrix::zero(&q, 3, 3);
        expected.set(0, 2, q.one());
        assert_eq!(m, expected);
        // x_{1,1} counts occurrences of letter 1
        let t = TensorSpace::plain(2, 3).unwrap();
        let m = lie_action(&q, ElementaryUnit::new(1, 1), &t);
        for k in 0..t.dim() {
            let ones = t.word(k).iter().filter(|&&l| l == 1).count() as i64;
            assert_eq!(*m.get(k, k), q.from_i64(ones));
        }
        // d = 2: x_{1,2}(e2⊗e2) = e1⊗e2 + e2⊗e1
        let t = TensorSpace::plain(2, 2).unwrap();
        let m = lie_action(&q, ElementaryUnit::new(1, 2), &t);
        let col = m.column(t.index(&[2, 2]));
        let mut expected = vec![q.zero(); 4];
        expected[t.index(&[1, 2])] = q.one();
        expected[t.index(&[2, 1])] = q.one();
        assert_eq!(col, expected);
    }

    #[test]
    fn group_action_examples() {
        let q = Rationals;
        let t = TensorSpace::plain(2, 3).unwrap();
        let id = Matrix::identity(&q, 2);
        assert_eq!(group_action(&q, &id, &t).unwrap(), Matrix::identity(&q, 8));
        let swap = Matrix::from_i64_rows(&q, &[&[0, 1], &[1, 0]]);
        let t1 = TensorSpace::plain(2, 1).unwrap();
        assert_eq!(group_action(&q, &swap, &t1).unwrap(), swap);
        let g = group_action(&q, &swap, &t).unwrap();
        assert_eq!(g, letter_swap_op(&t, 1, 2).to_matrix(&q));
        let singular = Matrix::from_i64_rows(&q, &[&[1, 1], &[1, 1]]);
        assert_eq!(group_action(&q, &singular, &t), Err(Error::SingularMatrix));
    }

    #[test]
    fn casimir_examples() {
        let q = Rationals;
        let t = TensorSpace::plain(1, 1).unwrap();
        assert_eq!(casimir_matrix(&q, &t, 1), Matrix::identity(&q, 1));
        for n in 1..=4 {
            let t = TensorSpace::plain(n, 1).unwrap();
            assert_eq!(casimir_matrix(&q, &t, n), Matrix::scalar(&q, n, &q.from_i64(n as i64)));
        }
    }

    #[test]
    fn x_examples() {
        let q = Rationals;
        for n in 1..=3 {
            let t = TensorSpace::new(n, 1, 1).unwrap();
            let x = x_matrix(&q, &t, n + 1, n);
            // X kills the weight-one line e_{n+1}
            assert!(x.column(n).iter().all(|v| *v == q.zero()));
            for j in 0..n {
                let mut expected = vec![q.zero(); n + 1];
                expected[j] = q.from_i64(-(n as i64));
                assert_eq!(x.column(j), expected);
            }
        }
    }

    #[test]
    fn casimir_difference_small() {
        assert!(verify_casimir_difference(&Rationals, 1, 1).unwrap());
        assert!(verify_casimir_difference(&Rationals, 2, 2).unwrap());
        assert!(verify_casimir_difference(&PrimeField::new(3).unwrap(), 2, 2).unwrap());
        assert_eq!(verify_casimir_difference(&PrimeField::new(2).unwrap(), 1, 1), Err(Error::CharacteristicTwo));
    }

    #[test]
    fn sparse_restriction() {
        let t = TensorSpace::new(1, 1, 2).unwrap();
        let swap = letter_swap_op(&t, 1, 2);
        let w = [t.index(&[1, 2]), t.index(&[2, 1])];
        let r = swap.restrict(&w).unwrap();
        assert_eq!(r.column(0), &[(1, 1)]);
        assert!(swap.restrict(&[t.index(&[1, 1])]).is_err());
    }
}
