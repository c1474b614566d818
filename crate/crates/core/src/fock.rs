//! The Fock space as the free `Z`-module on partitions, with the action of
//! the Chevalley generators `e_i`, `f_i`, the coroots `h_i` and, for
//! `p > 0`, the degree operator `d`.
//!
//! Operators act box by box on the partition basis; nothing is truncated.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{addable_boxes, removable_boxes, Modulus, Partition, Residue};
use crate::weights::{d_eigenvalue, pair_coroot, wt};

/// A finitely supported integer combination of basis vectors `s_λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockVector {
    p: Modulus,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl FockVector {
    pub fn zero(p: Modulus) -> Self {
        FockVector { p, coeffs: BTreeMap::new() }
    }

    /// The basis vector `s_λ`.
    pub fn basis(p: Modulus, lambda: Partition) -> Self {
        let mut v = FockVector::zero(p);
        v.add_term(lambda, BigInt::one());
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, BigInt)>>(p: Modulus, terms: I) -> Self {
        let mut v = FockVector::zero(p);
        for (lambda, c) in terms {
            v.add_term(lambda, c);
        }
        v
    }

    pub fn modulus(&self) -> Modulus {
        self.p
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(lambda);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Terms in increasing lexicographic order of partitions.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.coeffs.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (lambda, c) in other.terms() {
            out.add_term(lambda.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FockVector) -> FockVector {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> FockVector {
        FockVector::from_terms(self.p, self.terms().map(|(l, v)| (l.clone(), v * c)))
    }

    fn map_basis<F>(&self, mut image: F) -> FockVector
    where
        F: FnMut(&Partition, &BigInt, &mut FockVector),
    {
        let mut out = FockVector::zero(self.p);
        for (lambda, c) in self.terms() {
            image(lambda, c, &mut out);
        }
        out
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (lambda, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}·s({})", c, lambda)?;
        }
        Ok(())
    }
}

/// `e_i s_λ = Σ s_μ` over removals of an `i`-box from `λ`.
pub fn apply_e(i: Residue, v: &FockVector) -> FockVector {
    let p = v.p;
    v.map_basis(|lambda, c, out| {
        for cell in removable_boxes(lambda, p, Some(i)) {
            let mu = lambda.with_cell_removed(cell).expect("removable box");
            out.add_term(mu, c.clone());
        }
    })
}

/// `f_i s_λ = Σ s_μ` over additions of an `i`-box to `λ`.
pub fn apply_f(i: Residue, v: &FockVector) -> FockVector {
    let p = v.p;
    v.map_basis(|lambda, c, out| {
        for cell in addable_boxes(lambda, p, Some(i)) {
            let mu = lambda.with_cell_added(cell).expect("addable box");
            out.add_term(mu, c.clone());
        }
    })
}

/// `h_i s_λ = ⟨h_i, wt(λ)⟩ s_λ`.
pub fn apply_h(i: Residue, v: &FockVector) -> FockVector {
    let p = v.p;
    v.map_basis(|lambda, c, out| {
        let eigen = pair_coroot(i, &wt(lambda, p));
        out.add_term(lambda.clone(), c * BigInt::from(eigen));
    })
}

/// `d s_λ = m_0(λ) s_λ`; rejected for `p = 0`.
pub fn apply_d(v: &FockVector) -> Result<FockVector> {
    let p = v.p;
    if p.is_zero() {
        return Err(Error::NeedsPositiveModulus("the degree operator d"));
    }
    Ok(v.map_basis(|lambda, c, out| {
        let eigen = d_eigenvalue(lambda, p).expect("p > 0");
        out.add_term(lambda.clone(), c * BigInt::from(eigen));
    }))
}

/// `(e_i f_j − f_j e_i)(v) − δ_ij h_i(v)`; zero when the action is a representation.
pub fn commutator_defect(i: Residue, j: Residue, v: &FockVector) -> FockVector {
    let ef = apply_e(i, &apply_f(j, v));
    let fe = apply_f(j, &apply_e(i, v));
    let mut defect = ef.sub(&fe);
    if i == j {
        defect = defect.sub(&apply_h(i, v));
    }
    defect
}

/// One generator of the action.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FockOp {
    E(Residue),
    F(Residue),
    H(Residue),
    D,
}

impl FockOp {
    pub fn apply(self, v: &FockVector) -> Result<FockVector> {
        match self {
            FockOp::E(i) => Ok(apply_e(i, v)),
            FockOp::F(i) => Ok(apply_f(i, v)),
            FockOp::H(i) => Ok(apply_h(i, v)),
            FockOp::D => apply_d(v),
        }
    }
}

impl fmt::Display for FockOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FockOp::E(i) => write!(f, "e{}", i),
            FockOp::F(i) => write!(f, "f{}", i),
            FockOp::H(i) => write!(f, "h{}", i),
            FockOp::D => f.write_str("d"),
        }
    }
}

/// A product of generators written left to right, applied right to left:
/// `"f0 f2 e1"` means `f_0 ∘ f_2 ∘ e_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorWord {
    ops: Vec<FockOp>,
}

impl OperatorWord {
    /// Parses a word and checks every residue against `p`.
    pub fn parse(text: &str, p: Modulus) -> Result<Self> {
        let word: OperatorWord = text.parse()?;
        for (k, op) in word.ops.iter().enumerate() {
            if let FockOp::E(i) | FockOp::F(i) | FockOp::H(i) = op {
                p.residue(i.value())
                    .map_err(|e| Error::Parse { position: token_offset(text, k), message: format!("{}", e) })?;
            }
        }
        Ok(word)
    }

    pub fn ops(&self) -> &[FockOp] {
        &self.ops
    }

    pub fn apply(&self, v: &FockVector) -> Result<FockVector> {
        let mut out = v.clone();
        for op in self.ops.iter().rev() {
            out = op.apply(&out)?;
        }
        Ok(out)
    }
}

fn token_offset(text: &str, index: usize) -> usize {
    let mut seen = 0;
    let mut in_token = false;
    for (pos, ch) in text.char_indices() {
        if ch.is_whitespace() {
            in_token = false;
        } else if !in_token {
            if seen == index {
                return pos;
            }
            seen += 1;
            in_token = true;
        }
    }
    text.len()
}

impl FromStr for OperatorWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut ops = Vec::new();
        let mut pos = 0;
        for token in text.split_whitespace() {
            let start = text[pos..].find(token).map(|o| o + pos).unwrap_or(pos);
            pos = start + token.len();
            let mut chars = token.chars();
            let head = chars.next().unwrap();
            let rest = chars.as_str();
            let op = match head {
                'd' if rest.is_empty() => FockOp::D,
                'e' | 'f' | 'h' => {
                    let i: i64 = rest.parse().map_err(|_| Error::Parse {
                        position: start + 1,
                        message: format!("expected a residue after '{}', found {:?}", head, rest),
                    })?;
                    match head {
                        'e' => FockOp::E(Residue(i)),
                        'f' => FockOp::F(Residue(i)),
                        _ => FockOp::H(Residue(i)),
                    }
                }
                _ => {
                    return Err(Error::Parse {
                        position: start,
                        message: format!("unknown operator {:?} (expected e<i>, f<i>, h<i> or d)", token),
                    })
                }
            };
            ops.push(op);
        }
        Ok(OperatorWord { ops })
    }
}
