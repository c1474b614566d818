//! The weight lattice in the `(Λ_0, m)` normal form.

use alloc::collections::BTreeMap;
use core::fmt;

use crate::error::{Error, Result};
use crate::partitions::{residue_counts, Modulus, Partition, Residue};

/// Generalized Cartan matrix of type `A_infinity` (`p = 0`) or affine `A_{p-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CartanMatrix {
    p: Modulus,
}

impl CartanMatrix {
    pub fn new(p: Modulus) -> Self {
        CartanMatrix { p }
    }

    pub fn modulus(&self) -> Modulus {
        self.p
    }

    pub fn entry(&self, i: Residue, j: Residue) -> i64 {
        let (i, j) = (i.value(), j.value());
        match self.p.get() {
            0 => {
                if i == j {
                    2
                } else if (i - j).abs() == 1 {
                    -1
                } else {
                    0
                }
            }
            2 => {
                if i == j {
                    2
                } else {
                    -2
                }
            }
            p => {
                let p = p as i64;
                let diff = (i - j).rem_euclid(p);
                if diff == 0 {
                    2
                } else if diff == 1 || diff == p - 1 {
                    -1
                } else {
                    0
                }
            }
        }
    }

    /// Whether `i` and `j` are joined in the Dynkin diagram.
    pub fn adjacent(&self, i: Residue, j: Residue) -> bool {
        i != j && self.entry(i, j) != 0
    }
}

/// `lambda0 · Λ_0 − Σ_i m_i α_i`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    lambda0: i64,
    m: BTreeMap<Residue, i64>,
    p: Modulus,
}

impl Weight {
    pub fn new(lambda0: i64, m: BTreeMap<Residue, i64>, p: Modulus) -> Self {
        let m = m.into_iter().filter(|&(_, v)| v != 0).collect();
        Weight { lambda0, m, p }
    }

    /// `Λ_0`.
    pub fn fundamental(p: Modulus) -> Self {
        Weight { lambda0: 1, m: BTreeMap::new(), p }
    }

    /// The null root `δ = Σ_i α_i` (only for `p > 0`).
    pub fn delta(p: Modulus) -> Result<Self> {
        let residues = p.residues().ok_or(Error::NeedsPositiveModulus("delta"))?;
        Ok(Weight { lambda0: 0, m: residues.map(|i| (i, -1)).collect(), p })
    }

    pub fn lambda0(&self) -> i64 {
        self.lambda0
    }

    /// Coefficient of `−α_i`.
    pub fn m(&self, i: Residue) -> i64 {
        self.m.get(&i).copied().unwrap_or(0)
    }

    pub fn m_coefficients(&self) -> &BTreeMap<Residue, i64> {
        &self.m
    }

    pub fn modulus(&self) -> Modulus {
        self.p
    }

    /// `self + α_i`.
    pub fn plus_root(&self, i: Residue) -> Weight {
        self.shift(i, -1)
    }

    /// `self − α_i`.
    pub fn minus_root(&self, i: Residue) -> Weight {
        self.shift(i, 1)
    }

    fn shift(&self, i: Residue, by: i64) -> Weight {
        let mut m = self.m.clone();
        *m.entry(i).or_insert(0) += by;
        Weight::new(self.lambda0, m, self.p)
    }

    /// `Σ_i m_i`; for a Fock weight this is the size of the partition.
    pub fn depth(&self) -> i64 {
        self.m.values().sum()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}Λ_0", self.lambda0)?;
        for (i, v) in &self.m {
            write!(f, " - {}α_{}", v, i)?;
        }
        Ok(())
    }
}

pub fn wt(lambda: &Partition, p: Modulus) -> Weight {
    let m = residue_counts(lambda, p).into_iter().map(|(i, c)| (i, c as i64)).collect();
    Weight::new(1, m, p)
}

/// `⟨h_i, ω⟩ = lambda0·δ_{i0} − Σ_j m_j a(i, j)`.
pub fn pair_coroot(i: Residue, omega: &Weight) -> i64 {
    let cartan = CartanMatrix::new(omega.p);
    let base = if i.value() == 0 { omega.lambda0 } else { 0 };
    base - omega.m.iter().map(|(&j, &mj)| mj * cartan.entry(i, j)).sum::<i64>()
}

/// Eigenvalue of the degree operator `d` on `s_λ`: the number of 0-boxes.
pub fn d_eigenvalue(lambda: &Partition, p: Modulus) -> Result<i64> {
    if p.is_zero() {
        return Err(Error::NeedsPositiveModulus("the degree operator d"));
    }
    Ok(wt(lambda, p).m(Residue(0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn cartan_entries() {
        let c0 = CartanMatrix::new(Modulus::ZERO);
        assert_eq!(c0.entry(Residue(3), Residue(3)), 2);
        assert_eq!(c0.entry(Residue(3), Residue(4)), -1);
        assert_eq!(c0.entry(Residue(3), Residue(5)), 0);
        let c2 = CartanMatrix::new(Modulus::new(2).unwrap());
        assert_eq!(c2.entry(Residue(0), Residue(1)), -2);
        assert_eq!(c2.entry(Residue(1), Residue(0)), -2);
        assert_eq!(c2.entry(Residue(1), Residue(1)), 2);
        for p in [3u32, 4, 5, 7] {
            let c = CartanMatrix::new(Modulus::new(p).unwrap());
            for i in 0..p as i64 {
                let row: i64 = (0..p as i64).map(|j| c.entry(Residue(i), Residue(j))).sum();
                assert_eq!(row, 0, "affine rows sum to zero");
            }
            assert_eq!(c.entry(Residue(0), Residue(p as i64 - 1)), -1);
        }
    }

    #[test]
    fn weights_of_partitions() {
        let p3 = Modulus::new(3).unwrap();
        assert_eq!(wt(&Partition::empty(), p3), Weight::fundamental(p3));
        let w1 = wt(&part("1"), p3);
        assert_eq!(w1, Weight::fundamental(p3).minus_root(Residue(0)));
        let w21 = wt(&part("2,1"), p3);
        let delta = Weight::delta(p3).unwrap();
        let expected: BTreeMap<_, _> = delta.m_coefficients().iter().map(|(&i, &v)| (i, -v)).collect();
        assert_eq!(w21, Weight::new(1, expected, p3));
        assert_eq!(w21.depth(), 3);
    }

    #[test]
    fn coroot_pairings() {
        let p3 = Modulus::new(3).unwrap();
        assert_eq!(pair_coroot(Residue(0), &Weight::fundamental(p3)), 1);
        assert_eq!(pair_coroot(Residue(1), &wt(&Partition::empty(), p3)), 0);
        assert_eq!(pair_coroot(Residue(1), &wt(&part("1"), p3)), 1);
        let p2 = Modulus::new(2).unwrap();
        assert_eq!(pair_coroot(Residue(1), &wt(&part("1"), p2)), 2);
        for p in [2u32, 3, 5] {
            let p = Modulus::new(p).unwrap();
            let delta = Weight::delta(p).unwrap();
            for i in p.residues().unwrap() {
                assert_eq!(pair_coroot(i, &delta), 0);
            }
        }
        assert!(Weight::delta(Modulus::ZERO).is_err());
    }

    #[test]
    fn degree_operator() {
        let p3 = Modulus::new(3).unwrap();
        assert_eq!(d_eigenvalue(&Partition::empty(), p3).unwrap(), 0);
        assert_eq!(d_eigenvalue(&part("1"), p3).unwrap(), 1);
        assert_eq!(d_eigenvalue(&part("2,1"), p3).unwrap(), 1);
        assert!(d_eigenvalue(&part("1"), Modulus::ZERO).is_err());
    }

    #[test]
    fn weight_recovers_size() {
        for p in [0u32, 2, 3, 5] {
            let p = Modulus::new(p).unwrap();
            for lambda in crate::partitions::partitions_up_to(7) {
                assert_eq!(wt(&lambda, p).depth(), lambda.size() as i64);
            }
        }
        let v: Vec<_> = wt(&part("3,1"), Modulus::ZERO).m_coefficients().keys().copied().collect();
        assert_eq!(v, [Residue(-1), Residue(0), Residue(1), Residue(2)]);
    }
}
