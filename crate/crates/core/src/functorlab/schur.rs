//! `S_λ(U)` as the image of
//! `d_λ: Λ^{λ°_1} ⊗ ⋯ → ⊗^d → ⊗^d → S^{λ_1} ⊗ ⋯`, held inside the
//! monomial coordinates of `S^{λ_1}(U) ⊗ ⋯ ⊗ S^{λ_ℓ}(U)`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::tensor::{ElementaryUnit, TensorSpace};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Subspace};
use crate::partitions::{sigma_lambda, Partition};

/// Restriction to tensors containing `letter` exactly `count` times.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LetterCount {
    pub letter: usize,
    pub count: usize,
}

impl LetterCount {
    fn admits(&self, letters: &[usize]) -> bool {
        letters.iter().filter(|&&l| l == self.letter).count() == self.count
    }
}

/// A monomial of `S^{λ_1} ⊗ ⋯`: the row multisets concatenated, each sorted.
pub type MonomialKey = Vec<usize>;

#[derive(Debug, Clone)]
pub struct SchurSubspace<T> {
    lambda: Partition,
    letters: usize,
    filter: Option<LetterCount>,
    keys: Vec<MonomialKey>,
    index: BTreeMap<MonomialKey, usize>,
    image: Subspace<T>,
}

/// Sequences of length `len` over `1..=letters`, weakly or strictly
/// increasing, in lexicographic order.
fn monotone_sequences(len: usize, letters: usize, strict: bool) -> Vec<Vec<usize>> {
    fn go(len: usize, from: usize, letters: usize, strict: bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for l in from..=letters {
            cur.push(l);
            go(len, if strict { l + 1 } else { l }, letters, strict, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, 1, letters, strict, &mut Vec::new(), &mut out);
    out
}

fn concatenations(factors: &[Vec<Vec<usize>>]) -> Vec<Vec<usize>> {
    factors.iter().fold(vec![Vec::new()], |acc, choices| {
        acc.iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut v = prefix.clone();
                    v.extend_from_slice(c);
                    v
                })
            })
            .collect()
    })
}

/// All orderings of `items` with the sign of the permutation.
fn signed_permutations(items: &[usize]) -> Vec<(Vec<usize>, i64)> {
    if items.is_empty() {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(k);
        let sign = if k % 2 == 0 { 1 } else { -1 };
        for (mut tail, s) in signed_permutations(&rest) {
            tail.insert(0, first);
            out.push((tail, sign * s));
        }
    }
    out
}

fn row_bounds(lambda: &Partition) -> Vec<(usize, usize)> {
    let mut start = 0;
    lambda
        .parts()
        .iter()
        .map(|&len| {
            let b = (start, start + len);
            start += len;
            b
        })
        .collect()
}

fn sort_rows(word: &mut [usize], rows: &[(usize, usize)]) {
    for &(a, b) in rows {
        word[a..b].sort_unstable();
    }
}

impl<T: Clone + PartialEq + core::fmt::Debug> SchurSubspace<T> {
    pub fn new<F: Field<Elem = T>>(
        field: &F,
        lambda: &Partition,
        letters: usize,
        filter: Option<LetterCount>,
    ) -> Result<Self> {
        TensorSpace::plain(letters, lambda.size())?;
        let rows = row_bounds(lambda);
        let row_choices: Vec<_> = lambda.parts().iter().map(|&len| monotone_sequences(len, letters, false)).collect();
        let keys: Vec<MonomialKey> =
            concatenations(&row_choices).into_iter().filter(|k| filter.is_none_or(|f| f.admits(k))).collect();
        let index: BTreeMap<MonomialKey, usize> = keys.iter().cloned().enumerate().map(|(k, key)| (key, k)).collect();

        let columns = lambda.conjugate();
        let col_choices: Vec<_> = columns.parts().iter().map(|&len| monotone_sequences(len, letters, true)).collect();
        let sigma = if lambda.is_empty() { Vec::new() } else { sigma_lambda(lambda)? };
        let mut images: BTreeSet<Vec<(usize, i64)>> = BTreeSet::new();
        for generator in concatenations(&col_choices) {
            if !filter.is_none_or(|f| f.admits(&generator)) {
                continue;
            }
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for (word, sign) in antisymmetrize(&generator, columns.parts()) {
                let mut routed = vec![0; word.len()];
                for (k, &letter) in word.iter().enumerate() {
                    routed[sigma[k] - 1] = letter;
                }
                sort_rows(&mut routed, &rows);
                *acc.entry(index[&routed]).or_insert(0) += sign;
            }
            let image: Vec<(usize, i64)> = acc.into_iter().filter(|&(_, v)| v != 0).collect();
            if !image.is_empty() {
                images.insert(image);
            }
        }
        let mut image = Subspace::zero(keys.len());
        for sparse in images {
            let mut dense = vec![field.zero(); keys.len()];
            for (k, v) in sparse {
                dense[k] = field.from_i64(v);
            }
            image.insert(field, &dense);
        }
        Ok(SchurSubspace { lambda: lambda.clone(), letters, filter, keys, index, image })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn letters(&self) -> usize {
        self.letters
    }

    pub fn filter(&self) -> Option<LetterCount> {
        self.filter
    }

    pub fn dim(&self) -> usize {
        self.image.dim()
    }

    /// Dimension of the monomial coordinate space.
    pub fn ambient_dim(&self) -> usize {
        self.keys.len()
    }

    pub fn keys(&self) -> &[MonomialKey] {
        &self.keys
    }

    pub fn subspace(&self) -> &Subspace<T> {
        &self.image
    }

    pub fn basis(&self) -> &[Vec<T>] {
        self.image.basis()
    }

    pub fn to_monomials<F: Field<Elem = T>>(&self, field: &F, v: &[T]) -> BTreeMap<MonomialKey, T> {
        self.keys.iter().zip(v).filter(|(_, c)| !field.is_zero(c)).map(|(k, c)| (k.clone(), c.clone())).collect()
    }

    /// Dense coordinates of a monomial combination; fails if a monomial
    /// falls outside the coordinate space.
    pub fn from_monomials<F: Field<Elem = T>>(&self, field: &F, map: &BTreeMap<MonomialKey, T>) -> Result<Vec<T>> {
        let mut dense = vec![field.zero(); self.keys.len()];
        for (key, c) in map {
            if field.is_zero(c) {
                continue;
            }
            let &k = self.index.get(key).ok_or_else(|| {
                Error::RestrictionFailure(format!("monomial {:?} is outside the coordinate space", key))
            })?;
            dense[k] = c.clone();
        }
        Ok(dense)
    }

    /// Derivation action of `x_{a,b}` on monomials.
    pub fn apply_unit<F: Field<Elem = T>>(
        &self,
        field: &F,
        x: ElementaryUnit,
        map: &BTreeMap<MonomialKey, T>,
    ) -> BTreeMap<MonomialKey, T> {
        let rows = row_bounds(&self.lambda);
        let mut out: BTreeMap<MonomialKey, T> = BTreeMap::new();
        for (key, c) in map {
            for pos in 0..key.len() {
                if key[pos] != x.col {
                    continue;
                }
                let mut next = key.clone();
                next[pos] = x.row;
                sort_rows(&mut next, &rows);
                let slot = out.entry(next).or_insert_with(|| field.zero());
                *slot = field.add(slot, c);
            }
        }
        out.retain(|_, c| !field.is_zero(c));
        out
    }

    /// `g` acting on each factor `S^{λ_r}` through its action on letters.
    pub fn apply_group<F: Field<Elem = T>>(&self, field: &F, g: &Matrix<T>, v: &[T]) -> Result<Vec<T>> {
        if g.rows() != self.letters || g.cols() != self.letters {
            return Err(Error::DimensionMismatch { expected: self.letters, found: g.rows() });
        }
        let rows = row_bounds(&self.lambda);
        let mut out: BTreeMap<MonomialKey, T> = BTreeMap::new();
        for (key, c) in self.to_monomials(field, v) {
            let mut terms: Vec<(Vec<usize>, T)> = vec![(Vec::new(), c)];
            for &letter in &key {
                let mut next = Vec::new();
                for (prefix, coeff) in &terms {
                    for s in 1..=self.letters {
                        let entry = g.get(s - 1, letter - 1);
                        if field.is_zero(entry) {
                            continue;
                        }
                        let mut word = prefix.clone();
                        word.push(s);
                        next.push((word, field.mul(coeff, entry)));
                    }
                }
                terms = next;
            }
            for (mut word, coeff) in terms {
                sort_rows(&mut word, &rows);
                let slot = out.entry(word).or_insert_with(|| field.zero());
                *slot = field.add(slot, &coeff);
            }
        }
        self.from_monomials(field, &out)
    }

    /// Pulls the image back into `U^{⊗d}`: each monomial becomes the sum of
    /// its distinct arrangements within rows.
    pub fn tensor_lift<F: Field<Elem = T>>(&self, field: &F) -> Result<Subspace<T>> {
        let space = TensorSpace::plain(self.letters, self.lambda.size())?;
        let rows = row_bounds(&self.lambda);
        let mut preimage: Vec<Vec<usize>> = vec![Vec::new(); self.keys.len()];
        for w in 0..space.dim() {
            let mut word = space.word(w);
            if self.filter.is_some_and(|f| !f.admits(&word)) {
                continue;
            }
            sort_rows(&mut word, &rows);
            preimage[self.index[&word]].push(w);
        }
        let lifted = self
            .basis()
            .iter()
            .map(|b| {
                let mut dense = vec![field.zero(); space.dim()];
                for (k, c) in b.iter().enumerate() {
                    for &w in &preimage[k] {
                        dense[w] = c.clone();
                    }
                }
                dense
            })
            .collect();
        Ok(Subspace::span(field, space.dim(), lifted))
    }
}

/// Expansion of a wedge of columns into signed words in column-reading order.
fn antisymmetrize(generator: &[usize], columns: &[usize]) -> Vec<(Vec<usize>, i64)> {
    let mut start = 0;
    let mut acc: Vec<(Vec<usize>, i64)> = vec![(Vec::new(), 1)];
    for &len in columns {
        let perms = signed_permutations(&generator[start..start + len]);
        start += len;
        acc = acc
            .iter()
            .flat_map(|(prefix, s)| {
                perms.iter().map(move |(p, t)| {
                    let mut w = prefix.clone();
                    w.extend_from_slice(p);
                    (w, s * t)
                })
            })
            .collect();
    }
    acc
}

/// `S_λ` of the space on `letters` letters; `|λ|` must match the degree of
/// `space`.
pub fn schur_subspace<F: Field>(field: &F, lambda: &Partition, space: &TensorSpace) -> Result<SchurSubspace<F::Elem>> {
    if lambda.size() != space.degree() {
        return Err(Error::DimensionMismatch { expected: space.degree(), found: lambda.size() });
    }
    SchurSubspace::new(field, lambda, space.letters(), None)
}
