//! Kashiwara operators on partitions via the `i`-signature rule.
//!
//! The `i`-boxes of `λ` (addable `+`, removable `−`) are read in a fixed
//! row order; adjacent `+−` pairs cancel until the word is `−^a +^b`.
//! `f̃_i` adds the box of the leftmost surviving `+`, `ẽ_i` removes the box
//! of the rightmost surviving `−`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::partitions::{addable_boxes, removable_boxes, Cell, Modulus, Partition, Residue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// Row order in which the `i`-boxes are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum SignatureOrder {
    #[default]
    RowAscending,
    RowDescending,
}

impl SignatureOrder {
    pub fn name(self) -> &'static str {
        match self {
            SignatureOrder::RowAscending => "row-asc",
            SignatureOrder::RowDescending => "row-desc",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureWord {
    entries: Vec<(Cell, Sign)>,
}

impl SignatureWord {
    pub fn new(entries: Vec<(Cell, Sign)>) -> Self {
        SignatureWord { entries }
    }

    /// The `i`-signature of `λ` in the given reading order.
    pub fn of(lambda: &Partition, p: Modulus, i: Residue, order: SignatureOrder) -> Self {
        let mut entries: Vec<(Cell, Sign)> = addable_boxes(lambda, p, Some(i))
            .into_iter()
            .map(|c| (c, Sign::Plus))
            .chain(removable_boxes(lambda, p, Some(i)).into_iter().map(|c| (c, Sign::Minus)))
            .collect();
        entries.sort_by_key(|(c, _)| c.row);
        if order == SignatureOrder::RowDescending {
            entries.reverse();
        }
        SignatureWord { entries }
    }

    pub fn entries(&self) -> &[(Cell, Sign)] {
        &self.entries
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.entries.iter().map(|&(_, s)| s).collect()
    }

    /// Cancels adjacent `+−` pairs until none remain.
    pub fn reduce(&self) -> SignatureWord {
        let mut stack: Vec<(Cell, Sign)> = Vec::with_capacity(self.entries.len());
        for &entry in &self.entries {
            if entry.1 == Sign::Minus && matches!(stack.last(), Some((_, Sign::Plus))) {
                stack.pop();
            } else {
                stack.push(entry);
            }
        }
        SignatureWord { entries: stack }
    }

    fn count(&self, sign: Sign) -> usize {
        self.entries.iter().filter(|&&(_, s)| s == sign).count()
    }
}

impl fmt::Display for SignatureWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (_, s) in &self.entries {
            f.write_str(match s {
                Sign::Plus => "+",
                Sign::Minus => "-",
            })?;
        }
        Ok(())
    }
}

/// Crystal operators for a fixed modulus and reading order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crystal {
    p: Modulus,
    order: SignatureOrder,
}

impl Crystal {
    pub fn new(p: Modulus) -> Self {
        Crystal { p, order: SignatureOrder::default() }
    }

    pub fn with_order(p: Modulus, order: SignatureOrder) -> Self {
        Crystal { p, order }
    }

    pub fn modulus(&self) -> Modulus {
        self.p
    }

    pub fn order(&self) -> SignatureOrder {
        self.order
    }

    pub fn reduced_signature(&self, i: Residue, lambda: &Partition) -> SignatureWord {
        SignatureWord::of(lambda, self.p, i, self.order).reduce()
    }

    pub fn ftilde(&self, i: Residue, lambda: &Partition) -> Option<Partition> {
        let reduced = self.reduced_signature(i, lambda);
        let (cell, _) = reduced.entries.iter().find(|(_, s)| *s == Sign::Plus)?;
        Some(lambda.with_cell_added(*cell).expect("addable box"))
    }

    pub fn etilde(&self, i: Residue, lambda: &Partition) -> Option<Partition> {
        let reduced = self.reduced_signature(i, lambda);
        let (cell, _) = reduced.entries.iter().rev().find(|(_, s)| *s == Sign::Minus)?;
        Some(lambda.with_cell_removed(*cell).expect("removable box"))
    }

    pub fn eps(&self, i: Residue, lambda: &Partition) -> usize {
        self.reduced_signature(i, lambda).count(Sign::Minus)
    }

    pub fn phi(&self, i: Residue, lambda: &Partition) -> usize {
        self.reduced_signature(i, lambda).count(Sign::Plus)
    }

    /// Residues worth trying at `λ`: all of `Z/pZ`, or the contents of the
    /// addable boxes when `p = 0`.
    fn candidate_residues(&self, lambda: &Partition) -> Vec<Residue> {
        match self.p.residues() {
            Some(it) => it.collect(),
            None => {
                let set: BTreeSet<Residue> =
                    addable_boxes(lambda, self.p, None).into_iter().map(|c| Residue(c.integer_content())).collect();
                set.into_iter().collect()
            }
        }
    }

    /// Everything reachable from `seed` by `f̃_i` without exceeding
    /// `|seed| + depth` boxes.
    pub fn graph(&self, depth: usize, seed: &Partition) -> CrystalGraph {
        let limit = seed.size() + depth;
        let mut seen: BTreeSet<Partition> = BTreeSet::new();
        let mut edges = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(seed.clone());
        queue.push_back(seed.clone());
        while let Some(lambda) = queue.pop_front() {
            if lambda.size() >= limit {
                continue;
            }
            for i in self.candidate_residues(&lambda) {
                if let Some(mu) = self.ftilde(i, &lambda) {
                    edges.insert((lambda.clone(), mu.clone(), i));
                    if seen.insert(mu.clone()) {
                        queue.push_back(mu);
                    }
                }
            }
        }
        let mut nodes: Vec<Partition> = seen.into_iter().collect();
        nodes.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.cmp(a)));
        let index: BTreeMap<&Partition, usize> = nodes.iter().enumerate().map(|(k, l)| (l, k)).collect();
        let mut edge_list: Vec<CrystalEdge> =
            edges.iter().map(|(from, to, i)| CrystalEdge { from: index[from], to: index[to], residue: *i }).collect();
        edge_list.sort_by_key(|e| (e.from, e.residue, e.to));
        CrystalGraph { p: self.p, order: self.order, nodes, edges: edge_list }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrystalEdge {
    pub from: usize,
    pub to: usize,
    pub residue: Residue,
}

/// A crystal graph with nodes sorted by size, then lexicographically
/// decreasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph {
    pub p: Modulus,
    pub order: SignatureOrder,
    pub nodes: Vec<Partition>,
    pub edges: Vec<CrystalEdge>,
}

impl CrystalGraph {
    /// Number of nodes of each size `0..=max`.
    pub fn counts_by_size(&self, max: usize) -> Vec<usize> {
        let mut counts = alloc::vec![0; max + 1];
        for node in &self.nodes {
            if node.size() <= max {
                counts[node.size()] += 1;
            }
        }
        counts
    }
}

pub fn reduce_signature(w: &SignatureWord) -> SignatureWord {
    w.reduce()
}

pub fn ftilde(i: Residue, lambda: &Partition, p: Modulus) -> Option<Partition> {
    Crystal::new(p).ftilde(i, lambda)
}

pub fn etilde(i: Residue, lambda: &Partition, p: Modulus) -> Option<Partition> {
    Crystal::new(p).etilde(i, lambda)
}

pub fn eps(i: Residue, lambda: &Partition, p: Modulus) -> usize {
    Crystal::new(p).eps(i, lambda)
}

pub fn phi(i: Residue, lambda: &Partition, p: Modulus) -> usize {
    Crystal::new(p).phi(i, lambda)
}

pub fn crystal_graph(p: Modulus, depth: usize, seed: &Partition) -> CrystalGraph {
    Crystal::new(p).graph(depth, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn word(signs: &str) -> SignatureWord {
        let entries = signs
            .chars()
            .enumerate()
            .map(|(k, ch)| {
                let sign = if ch == '+' { Sign::Plus } else { Sign::Minus };
                (Cell::new(k + 1, 1).unwrap(), sign)
            })
            .collect();
        SignatureWord::new(entries)
    }

    #[test]
    fn signature_reduction() {
        assert_eq!(reduce_signature(&word("+-")).to_string(), "");
        assert_eq!(reduce_signature(&word("++")).to_string(), "++");
        assert_eq!(reduce_signature(&word("-+-+")).to_string(), "-+");
        assert_eq!(reduce_signature(&word("++--+")).to_string(), "+");
    }

    #[test]
    fn ftilde_examples() {
        let p0 = Modulus::ZERO;
        let p3 = Modulus::new(3).unwrap();
        assert_eq!(ftilde(Residue(0), &Partition::empty(), p3), Some(part("1")));
        assert_eq!(ftilde(Residue(1), &part("1"), p3), Some(part("2")));
        assert_eq!(ftilde(Residue(2), &part("2"), p0), Some(part("3")));
        assert_eq!(ftilde(Residue(5), &part("2"), p0), None);
    }

    #[test]
    fn etilde_examples() {
        let p3 = Modulus::new(3).unwrap();
        for i in 0..3 {
            assert_eq!(etilde(Residue(i), &Partition::empty(), p3), None);
        }
        assert_eq!(etilde(Residue(0), &part("1"), p3), Some(Partition::empty()));
        // the 2-signature of (2,1) at p = 3 is (1,3)+ (2,1)-: cancels when read
        // top to bottom, survives when read bottom to top
        assert_eq!(etilde(Residue(2), &part("2,1"), p3), None);
        let desc = Crystal::with_order(p3, SignatureOrder::RowDescending);
        assert_eq!(desc.etilde(Residue(2), &part("2,1")), Some(part("2")));
    }

    #[test]
    fn statistics() {
        let p2 = Modulus::new(2).unwrap();
        let p3 = Modulus::new(3).unwrap();
        assert_eq!(eps(Residue(0), &Partition::empty(), p3), 0);
        assert_eq!(phi(Residue(0), &Partition::empty(), p3), 1);
        assert_eq!(phi(Residue(1), &part("1"), p2), 2);
        assert_eq!(eps(Residue(1), &part("1"), p2), 0);
    }

    #[test]
    fn small_graphs() {
        let p2 = Modulus::new(2).unwrap();
        let g = crystal_graph(p2, 0, &Partition::empty());
        assert_eq!(g.nodes, vec![Partition::empty()]);
        assert!(g.edges.is_empty());
        let g = crystal_graph(p2, 2, &Partition::empty());
        let x = ftilde(Residue(1), &part("1"), p2).unwrap();
        assert_eq!(g.nodes, vec![Partition::empty(), part("1"), x]);
        assert_eq!(g.edges.len(), 2);
        assert_eq!(g.edges[0], CrystalEdge { from: 0, to: 1, residue: Residue(0) });
        assert_eq!(g.edges[1], CrystalEdge { from: 1, to: 2, residue: Residue(1) });
    }
}
