//! Dense exact linear algebra over `Q` and prime fields.
//!
//! Field elements carry no context; every operation takes the field as an
//! explicit argument, so the same matrix code runs over `Q` and `F_p`.
//! Vectors are columns: `A·v`, kernels are right kernels and images are
//! column spaces.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub trait Field {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn characteristic(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Size measure used to choose pivots; smaller is preferred.
    fn pivot_cost(&self, _a: &Self::Elem) -> u64 {
        0
    }
    fn render(&self, a: &Self::Elem) -> String;
}

/// The rational numbers with arbitrary-precision numerators and denominators.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_bigint(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn pivot_cost(&self, a: &BigRational) -> u64 {
        a.numer().abs().bits() + a.denom().bits()
    }
    fn render(&self, a: &BigRational) -> String {
        format!("{}", a)
    }
}

/// `F_p` for a prime `p < 2^32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p > u32::MAX as u64 || (2..).take_while(|k| k * k <= p).any(|k| p.is_multiple_of(k)) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn from_bigint(&self, v: &BigInt) -> u64 {
        v.mod_floor(&BigInt::from(self.p)).to_u64().expect("reduced residue fits in u64")
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| self.pow(*a, self.p - 2))
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn render(&self, a: &u64) -> String {
        format!("{}", a)
    }
}

/// Runtime choice of coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExactField {
    Rationals,
    Prime(u64),
}

impl ExactField {
    pub fn characteristic(self) -> u64 {
        match self {
            ExactField::Rationals => 0,
            ExactField::Prime(p) => p,
        }
    }

    pub fn name(self) -> String {
        match self {
            ExactField::Rationals => "q".into(),
            ExactField::Prime(p) => format!("f{}", p),
        }
    }
}

/// `"q"` (or `"Q"`) for the rationals, `"f5"` / `"F5"` for `F_5`.
impl FromStr for ExactField {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(ExactField::Rationals);
        }
        let digits = s.strip_prefix('f').or_else(|| s.strip_prefix('F')).ok_or_else(|| Error::Parse {
            position: 0,
            message: format!("unknown field {:?} (expected q or f<prime>)", s),
        })?;
        let p: u64 = digits.parse().map_err(|_| Error::Parse {
            position: 1,
            message: format!("expected a prime after 'f', found {:?}", digits),
        })?;
        PrimeField::new(p)?;
        Ok(ExactField::Prime(p))
    }
}

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + PartialEq + fmt::Debug> Matrix<T> {
    pub fn zero<F: Field<Elem = T>>(field: &F, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity<F: Field<Elem = T>>(field: &F, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for k in 0..n {
            m.set(k, k, field.one());
        }
        m
    }

    pub fn scalar<F: Field<Elem = T>>(field: &F, n: usize, c: &T) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for k in 0..n {
            m.set(k, k, c.clone());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_i64_rows<F: Field<Elem = T>>(field: &F, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix::from_fn(rows.len(), cols, |r, c| field.from_i64(rows[r][c]))
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns<F: Field<Elem = T>>(field: &F, dim: usize, columns: &[Vec<T>]) -> Self {
        let mut m = Matrix::zero(field, dim, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), dim);
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn add<F: Field<Elem = T>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| field.add(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub<F: Field<Elem = T>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| field.sub(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale<F: Field<Elem = T>>(&self, field: &F, c: &T) -> Self {
        let data = self.data.iter().map(|a| field.mul(a, c)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// `self · other`, skipping zero entries of `self`.
    pub fn mul<F: Field<Elem = T>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Matrix::zero(field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if field.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if field.is_zero(b) {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = field.add(&out.data[idx], &field.mul(a, b));
                }
            }
        }
        out
    }

    pub fn apply<F: Field<Elem = T>>(&self, field: &F, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r).iter().zip(v).fold(field.zero(), |acc, (a, b)| {
                    if field.is_zero(a) || field.is_zero(b) {
                        acc
                    } else {
                        field.add(&acc, &field.mul(a, b))
                    }
                })
            })
            .collect()
    }

    pub fn pow<F: Field<Elem = T>>(&self, field: &F, mut exp: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Matrix::identity(field, self.rows);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(field, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(field, &base);
            }
        }
        acc
    }

    /// Kronecker product; row `(i, k)` of the result is `i * other.rows + k`.
    pub fn kron<F: Field<Elem = T>>(&self, field: &F, other: &Self) -> Self {
        let mut out = Matrix::zero(field, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if field.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !field.is_zero(b) {
                            out.set(i * other.rows + k, j * other.cols + l, field.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_zero<F: Field<Elem = T>>(&self, field: &F) -> bool {
        self.data.iter().all(|a| field.is_zero(a))
    }

    /// First column where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        (0..self.cols).find(|&c| (0..self.rows).any(|r| self.get(r, c) != other.get(r, c)))
    }

    /// Reduced row echelon form of the row space.
    pub fn row_echelon<F: Field<Elem = T>>(&self, field: &F) -> Subspace<T> {
        let rows = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        Subspace::span(field, self.cols, rows)
    }

    pub fn rank<F: Field<Elem = T>>(&self, field: &F) -> usize {
        self.row_echelon(field).dim()
    }

    /// Echelonized basis of `{v : A·v = 0}`: one vector per free column, with
    /// a 1 in that column and zeros in the other free columns.
    pub fn kernel_basis<F: Field<Elem = T>>(&self, field: &F) -> Vec<Vec<T>> {
        let ech = self.row_echelon(field);
        let pivots = ech.pivots();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![field.zero(); self.cols];
            v[free] = field.one();
            for (row, &pc) in ech.basis().iter().zip(pivots) {
                v[pc] = field.neg(&row[free]);
            }
            basis.push(v);
        }
        basis
    }

    /// Echelonized basis of the column space.
    pub fn image_basis<F: Field<Elem = T>>(&self, field: &F) -> Vec<Vec<T>> {
        self.transpose().row_echelon(field).basis().to_vec()
    }

    /// Basis of `ker (A − aI)^dim(A)`.
    pub fn generalized_eigenspace<F: Field<Elem = T>>(&self, field: &F, a: &T) -> Vec<Vec<T>> {
        assert!(self.is_square(), "generalized eigenspace of a non-square matrix");
        if self.rows == 0 {
            return Vec::new();
        }
        let shifted = self.sub(field, &Matrix::scalar(field, self.rows, a));
        shifted.pow(field, self.rows).kernel_basis(field)
    }

    /// Restriction to an invariant subspace, in the coordinates of its
    /// echelon basis. Fails if some image leaves the subspace.
    pub fn restrict<F: Field<Elem = T>>(&self, field: &F, subspace: &Subspace<T>) -> Result<Self> {
        assert!(self.is_square());
        let dim = subspace.dim();
        let mut out = Matrix::zero(field, dim, dim);
        for (c, b) in subspace.basis().iter().enumerate() {
            let image = self.apply(field, b);
            let coords = subspace
                .coordinates(field, &image)
                .ok_or_else(|| Error::RestrictionFailure(format!("image of basis vector {} leaves the subspace", c)))?;
            for (r, v) in coords.into_iter().enumerate() {
                out.set(r, c, v);
            }
        }
        Ok(out)
    }

    pub fn render<F: Field<Elem = T>>(&self, field: &F) -> String {
        let mut s = String::new();
        for r in 0..self.rows {
            s.push('[');
            for c in 0..self.cols {
                if c > 0 {
                    s.push(' ');
                }
                s.push_str(&field.render(self.get(r, c)));
            }
            s.push_str("]\n");
        }
        s
    }
}

/// A subspace of `F^n` held as a reduced row echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace<T> {
    ambient: usize,
    basis: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Clone + PartialEq + fmt::Debug> Subspace<T> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    /// Gauss-Jordan elimination of the given spanning vectors.
    pub fn span<F: Field<Elem = T>>(field: &F, ambient: usize, mut rows: Vec<Vec<T>>) -> Self {
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..ambient {
            if top == rows.len() {
                break;
            }
            let best = (top..rows.len())
                .filter(|&r| !field.is_zero(&rows[r][col]))
                .min_by_key(|&r| field.pivot_cost(&rows[r][col]));
            let Some(best) = best else { continue };
            rows.swap(top, best);
            let inv = field.inv(&rows[top][col]).expect("nonzero pivot");
            for v in rows[top].iter_mut() {
                *v = field.mul(v, &inv);
            }
            let pivot_row = rows[top].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == top || field.is_zero(&row[col]) {
                    continue;
                }
                let factor = row[col].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                    if !field.is_zero(pv) {
                        *v = field.sub(v, &field.mul(&factor, pv));
                    }
                }
            }
            pivots.push(col);
            top += 1;
        }
        rows.truncate(top);
        Subspace { ambient, basis: rows, pivots }
    }

    /// Adds `v` to the span, keeping the basis reduced. Returns whether the
    /// dimension grew.
    pub fn insert<F: Field<Elem = T>>(&mut self, field: &F, v: &[T]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut r = v.to_vec();
        for (b, &pc) in self.basis.iter().zip(&self.pivots) {
            if field.is_zero(&r[pc]) {
                continue;
            }
            let c = r[pc].clone();
            for (x, bv) in r.iter_mut().zip(b) {
                if !field.is_zero(bv) {
                    *x = field.sub(x, &field.mul(&c, bv));
                }
            }
        }
        let Some(pc) = r.iter().position(|x| !field.is_zero(x)) else {
            return false;
        };
        let inv = field.inv(&r[pc]).expect("nonzero pivot");
        for x in r.iter_mut() {
            *x = field.mul(x, &inv);
        }
        for b in self.basis.iter_mut() {
            if field.is_zero(&b[pc]) {
                continue;
            }
            let c = b[pc].clone();
            for (x, rv) in b.iter_mut().zip(&r) {
                if !field.is_zero(rv) {
                    *x = field.sub(x, &field.mul(&c, rv));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < pc);
        self.pivots.insert(at, pc);
        self.basis.insert(at, r);
        true
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates<F: Field<Elem = T>>(&self, field: &F, v: &[T]) -> Option<Vec<T>> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vec<T> = self.pivots.iter().map(|&pc| v[pc].clone()).collect();
        let mut residual = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            if field.is_zero(c) {
                continue;
            }
            for (r, bv) in residual.iter_mut().zip(b) {
                if !field.is_zero(bv) {
                    *r = field.sub(r, &field.mul(c, bv));
                }
            }
        }
        residual.iter().all(|r| field.is_zero(r)).then_some(coords)
    }

    pub fn contains<F: Field<Elem = T>>(&self, field: &F, v: &[T]) -> bool {
        self.coordinates(field, v).is_some()
    }
}

pub fn rank<F: Field>(field: &F, a: &Matrix<F::Elem>) -> usize {
    a.rank(field)
}

pub fn kernel_basis<F: Field>(field: &F, a: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    a.kernel_basis(field)
}

pub fn image_basis<F: Field>(field: &F, a: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    a.image_basis(field)
}

pub fn generalized_eigenspace<F: Field>(field: &F, a: &Matrix<F::Elem>, value: &F::Elem) -> Vec<Vec<F::Elem>> {
    a.generalized_eigenspace(field, value)
}
