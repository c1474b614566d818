//! Blocks of degree-`d` partitions, keyed by `p`-core.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partitions::{is_p_core, p_core, partitions_of, Modulus, Partition, Residue};
use crate::weights::{wt, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockId {
    p: Modulus,
    core: Partition,
    d: usize,
    weight: Weight,
    p_weight: usize,
}

impl BlockId {
    /// The block of degree `d` with the given core. Its weight is
    /// `wt(core) − p_weight·δ`.
    pub fn new(p: Modulus, core: Partition, d: usize) -> Result<Self> {
        if !is_p_core(&core, p) {
            return Err(Error::InvalidParameters(format!("{} is not a {}-core", core, p.get())));
        }
        if core.size() > d {
            return Err(Error::InvalidParameters(format!("core {} is larger than d = {}", core, d)));
        }
        let excess = d - core.size();
        let p_weight = match p.get() as usize {
            0 if excess == 0 => 0,
            0 => return Err(Error::InvalidParameters(format!("at p = 0 the core must have size {}", d))),
            q if excess.is_multiple_of(q) => excess / q,
            q => return Err(Error::InvalidParameters(format!("{} is not a multiple of {}", excess, q))),
        };
        let mut m: BTreeMap<Residue, i64> = wt(&core, p).m_coefficients().clone();
        if let Some(residues) = p.residues() {
            for i in residues {
                *m.entry(i).or_insert(0) += p_weight as i64;
            }
        }
        let weight = Weight::new(1, m, p);
        Ok(BlockId { p, core, d, weight, p_weight })
    }

    pub fn modulus(&self) -> Modulus {
        self.p
    }

    pub fn core(&self) -> &Partition {
        &self.core
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn p_weight(&self) -> usize {
        self.p_weight
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub id: BlockId,
    /// Lexicographically decreasing.
    pub members: Vec<Partition>,
}

/// Partitions of `d` grouped by `p`-core, each member's weight checked
/// against the block weight. Blocks are listed by their largest member.
pub fn block_decomposition(d: usize, p: Modulus) -> Result<Vec<Block>> {
    let mut groups: BTreeMap<Partition, Vec<Partition>> = BTreeMap::new();
    for lambda in partitions_of(d) {
        groups.entry(p_core(&lambda, p)).or_default().push(lambda);
    }
    let mut blocks = Vec::with_capacity(groups.len());
    for (core, mut members) in groups {
        let id = BlockId::new(p, core, d)?;
        for lambda in &members {
            if wt(lambda, p) != id.weight {
                return Err(Error::Internal(format!(
                    "wt({}) = {} differs from the weight {} of its block",
                    lambda,
                    wt(lambda, p),
                    id.weight
                )));
            }
        }
        members.sort_by(|a, b| b.cmp(a));
        blocks.push(Block { id, members });
    }
    blocks.sort_by(|a, b| b.members[0].cmp(&a.members[0]));
    Ok(blocks)
}

/// Brute force over all pairs `λ, μ ⊢ d`: equal `p`-cores exactly when the
/// weights are equal.
pub fn verify_klesh_equivalence(d: usize, p: Modulus) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::NeedsPositiveModulus("verify_klesh_equivalence"));
    }
    let data: Vec<(Partition, Weight)> = partitions_of(d).into_iter().map(|l| (p_core(&l, p), wt(&l, p))).collect();
    for (a, (core_a, wt_a)) in data.iter().enumerate() {
        for (core_b, wt_b) in &data[a..] {
            if (core_a == core_b) != (wt_a == wt_b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether two blocks have the same `p`-weight (and so are derived equivalent).
pub fn derived_equivalent(b1: &BlockId, b2: &BlockId) -> Result<bool> {
    if b1.p != b2.p {
        return Err(Error::MixedModulus { left: b1.p.get(), right: b2.p.get() });
    }
    if b1.p.is_zero() {
        return Err(Error::NeedsPositiveModulus("derived_equivalent"));
    }
    Ok(b1.p_weight == b2.p_weight)
}
