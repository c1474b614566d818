//! Generalized eigenvalues of `X` on `E(S_λ)(V)`: the part of
//! `S_λ(V ⊕ k)` in which the extra letter occurs exactly once.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use super::schur::{LetterCount, MonomialKey, SchurSubspace};
use super::tensor::ElementaryUnit;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::partitions::{dim_schur, removable_boxes, Modulus, Partition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenEntry {
    /// An integer content, or its residue in `0..p` over `F_p`.
    pub eigenvalue: i64,
    pub expected: usize,
    pub observed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    pub lambda: Partition,
    pub n: usize,
    pub characteristic: u64,
    pub dim: usize,
    pub entries: Vec<EigenEntry>,
    pub failures: Vec<String>,
}

impl SpectrumReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Matrix of `X = Σ_{i≤n} x_{n+1,i} x_{i,n+1} − n` on the weight-one part of
/// `S_λ(V ⊕ k)`, in the echelon basis of that part.
pub fn x_on_weight_one<F: Field>(field: &F, schur: &SchurSubspace<F::Elem>, n: usize) -> Result<Matrix<F::Elem>> {
    let c = n + 1;
    let minus_n = field.from_i64(-(n as i64));
    let columns = schur
        .basis()
        .iter()
        .map(|b| {
            let v = schur.to_monomials(field, b);
            let mut total: BTreeMap<MonomialKey, F::Elem> =
                v.iter().map(|(k, x)| (k.clone(), field.mul(x, &minus_n))).collect();
            for i in 1..=n {
                let inner = schur.apply_unit(field, ElementaryUnit::new(i, c), &v);
                for (key, x) in schur.apply_unit(field, ElementaryUnit::new(c, i), &inner) {
                    let slot = total.entry(key).or_insert_with(|| field.zero());
                    *slot = field.add(slot, &x);
                }
            }
            let dense = schur.from_monomials(field, &total)?;
            schur
                .subspace()
                .coordinates(field, &dense)
                .ok_or_else(|| Error::RestrictionFailure(String::from("X leaves the weight-one part of S_lambda")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(field, schur.dim(), &columns))
}

/// Expected multiplicities: each removable box of content `j` contributes
/// `dim S_{λ∖box}(V)` to the eigenvalue `j` (reduced mod `p` when `p > 0`).
fn expected_multiplicities(lambda: &Partition, n: usize, p: u64) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    for cell in removable_boxes(lambda, Modulus::ZERO, None) {
        let mu = lambda.with_cell_removed(cell).expect("removable box");
        let j = cell.integer_content();
        let key = if p == 0 { j } else { j.rem_euclid(p as i64) };
        let dim = dim_schur(&mu, n).to_usize().expect("small dimension");
        *out.entry(key).or_insert(0) += dim;
    }
    out
}

pub fn spectrum_check<F: Field>(field: &F, lambda: &Partition, n: usize) -> Result<SpectrumReport> {
    if n == 0 {
        return Err(Error::InvalidParameters(String::from("spectrum check needs n >= 1")));
    }
    let p = field.characteristic();
    let schur = SchurSubspace::new(field, lambda, n + 1, Some(LetterCount { letter: n + 1, count: 1 }))?;
    let dim = schur.dim();
    let expected = expected_multiplicities(lambda, n, p);
    let mut report =
        SpectrumReport { lambda: lambda.clone(), n, characteristic: p, dim, entries: Vec::new(), failures: Vec::new() };
    let x = match x_on_weight_one(field, &schur, n) {
        Ok(x) => x,
        Err(e) => {
            report.failures.push(format!("{}", e));
            return Ok(report);
        }
    };
    let candidates: Vec<i64> = if p == 0 { expected.keys().copied().collect() } else { (0..p as i64).collect() };
    let mut total = 0;
    for a in candidates {
        let observed = x.generalized_eigenspace(field, &field.from_i64(a)).len();
        let want = expected.get(&a).copied().unwrap_or(0);
        if observed != want {
            report.failures.push(format!("eigenvalue {}: dimension {} where {} was expected", a, observed, want));
        }
        total += observed;
        if observed > 0 || want > 0 {
            report.entries.push(EigenEntry { eigenvalue: a, expected: want, observed });
        }
    }
    if total != dim {
        report.failures.push(format!("eigenspaces span {} of {} dimensions", total, dim));
    }
    let expected_total: usize = expected.values().sum();
    if expected_total != dim {
        report.failures.push(format!("weight-one part has dimension {} where {} was expected", dim, expected_total));
    }
    Ok(report)
}
