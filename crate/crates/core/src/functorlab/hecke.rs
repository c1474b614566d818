//! Degenerate affine Hecke relations on the `e^{(m)}`-weight space of
//! `(V ⊕ k^m)^{⊗d}`: words in which each letter `n+1..=n+m` occurs once.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::tensor::{letter_swap_op, x_op, TensorSpace};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};

/// A weight space spanned by a subset of the tensor basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSubspace {
    pub space: TensorSpace,
    pub indices: Vec<usize>,
}

impl WeightSubspace {
    pub fn dim(&self) -> usize {
        self.indices.len()
    }
}

pub fn e_power_subspace(n: usize, m: usize, d: usize) -> Result<WeightSubspace> {
    if m > d {
        return Err(Error::InvalidParameters(format!("m = {} exceeds d = {}", m, d)));
    }
    let space = TensorSpace::new(n, m, d)?;
    let indices = (0..space.dim())
        .filter(|&k| {
            let word = space.word(k);
            (n + 1..=n + m).all(|c| word.iter().filter(|&&l| l == c).count() == 1)
        })
        .collect();
    Ok(WeightSubspace { space, indices })
}

/// `Y_j`: `X` with distinguished letter `n+j` over the letters `1..n+j-1`,
/// restricted to `W`.
pub fn y_matrix<F: Field>(field: &F, j: usize, w: &WeightSubspace) -> Result<Matrix<F::Elem>> {
    let n = w.space.n();
    if j < 1 || j > w.space.m() {
        return Err(Error::InvalidParameters(format!("Y_{} needs 1 <= j <= {}", j, w.space.m())));
    }
    Ok(x_op(&w.space, n + j, n + j - 1).restrict(&w.indices)?.to_matrix(field))
}

/// `Σ_j`: the swap of letters `n+j` and `n+j+1`, restricted to `W`.
pub fn tau_matrix<F: Field>(field: &F, j: usize, w: &WeightSubspace) -> Result<Matrix<F::Elem>> {
    let n = w.space.n();
    if j < 1 || j >= w.space.m() {
        return Err(Error::InvalidParameters(format!("Sigma_{} needs 1 <= j < {}", j, w.space.m())));
    }
    Ok(letter_swap_op(&w.space, n + j, n + j + 1).restrict(&w.indices)?.to_matrix(field))
}

/// The operators `Y_1..Y_m` and `Σ_1..Σ_{m-1}` restricted to the weight space.
#[derive(Debug, Clone)]
pub struct HeckeOperators<T> {
    pub y_big: Vec<Matrix<T>>,
    pub sigma: Vec<Matrix<T>>,
}

impl<T: Clone + PartialEq + core::fmt::Debug> HeckeOperators<T> {
    pub fn new<F: Field<Elem = T>>(field: &F, w: &WeightSubspace) -> Result<Self> {
        let m = w.space.m();
        let y_big = (1..=m).map(|j| y_matrix(field, j, w)).collect::<Result<_>>()?;
        let sigma = (1..m).map(|j| tau_matrix(field, j, w)).collect::<Result<_>>()?;
        Ok(HeckeOperators { y_big, sigma })
    }

    pub fn m(&self) -> usize {
        self.y_big.len()
    }

    /// `y_i = Y_{m-i+1}`.
    pub fn y(&self, i: usize) -> &Matrix<T> {
        &self.y_big[self.m() - i]
    }

    /// `τ_i = Σ_{m-i}`.
    pub fn tau(&self, i: usize) -> &Matrix<T> {
        &self.sigma[self.m() - i - 1]
    }
}

/// Outcome of one relation instance; `witness` is a column where the two
/// sides first differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: String,
    pub pass: bool,
    pub witness: Option<usize>,
}

fn check<T: PartialEq + Clone + core::fmt::Debug>(relation: String, lhs: &Matrix<T>, rhs: &Matrix<T>) -> RelationCheck {
    let witness = lhs.first_difference(rhs);
    RelationCheck { relation, pass: witness.is_none(), witness }
}

/// Every defining relation of the degenerate affine Hecke algebra of rank
/// `m`, in both presentations. Commutation of `τ_i` with `y_j` is checked
/// for `j ∉ {i, i+1}`.
pub fn hecke_relations<F: Field>(field: &F, n: usize, m: usize, d: usize) -> Result<Vec<RelationCheck>> {
    if m < 2 {
        return Err(Error::InvalidParameters(format!("m = {} is below 2", m)));
    }
    let w = e_power_subspace(n, m, d)?;
    let ops = HeckeOperators::new(field, &w)?;
    let one = Matrix::identity(field, w.dim());
    let mul = |a: &Matrix<F::Elem>, b: &Matrix<F::Elem>| a.mul(field, b);
    let mut out = Vec::new();
    for i in 1..m {
        out.push(check(format!("tau_{i}^2 = 1"), &mul(ops.tau(i), ops.tau(i)), &one));
    }
    for i in 1..m.saturating_sub(1) {
        let (a, b) = (ops.tau(i), ops.tau(i + 1));
        out.push(check(
            format!("tau_{i} tau_{} tau_{i} = tau_{} tau_{i} tau_{}", i + 1, i + 1, i + 1),
            &mul(&mul(a, b), a),
            &mul(&mul(b, a), b),
        ));
    }
    for i in 1..m {
        for j in i + 2..m {
            let (a, b) = (ops.tau(i), ops.tau(j));
            out.push(check(format!("tau_{i} tau_{j} = tau_{j} tau_{i}"), &mul(a, b), &mul(b, a)));
        }
    }
    for i in 1..=m {
        for j in i + 1..=m {
            let (a, b) = (ops.y(i), ops.y(j));
            out.push(check(format!("y_{i} y_{j} = y_{j} y_{i}"), &mul(a, b), &mul(b, a)));
        }
    }
    for i in 1..m {
        for j in (1..=m).filter(|&j| j != i && j != i + 1) {
            let (t, y) = (ops.tau(i), ops.y(j));
            out.push(check(format!("tau_{i} y_{j} = y_{j} tau_{i}"), &mul(t, y), &mul(y, t)));
        }
    }
    for i in 1..m {
        let lhs = mul(ops.tau(i), ops.y(i)).sub(field, &mul(ops.y(i + 1), ops.tau(i)));
        out.push(check(format!("tau_{i} y_{i} - y_{} tau_{i} = 1", i + 1), &lhs, &one));
    }
    // τ'_i = τ_{m-i}, y'_i = y_{m+1-i}
    for i in 1..m {
        let tau_p = ops.tau(m - i);
        let (y_i, y_next) = (ops.y(m + 1 - i), ops.y(m - i));
        let lhs = mul(tau_p, y_next).sub(field, &mul(y_i, tau_p));
        out.push(check(format!("tau'_{i} y'_{} - y'_{i} tau'_{i} = 1", i + 1), &lhs, &one));
    }
    Ok(out)
}

/// As [`hecke_relations`], refusing characteristic 2.
pub fn verify_hecke<F: Field>(field: &F, n: usize, m: usize, d: usize) -> Result<Vec<RelationCheck>> {
    if field.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    hecke_relations(field, n, m, d)
}
