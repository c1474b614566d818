//! Young-diagram combinatorics.
//!
//! Diagrams use English notation with 1-indexed rows and columns. The
//! content of the box in row `r`, column `c` is `c - r`, reduced mod `p`
//! when `p > 0`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The modulus `p`: `0` for `sl_infinity`, `p >= 2` for affine `sl_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Modulus(u32);

impl Modulus {
    pub const ZERO: Modulus = Modulus(0);

    pub fn new(p: u32) -> Result<Self> {
        if p == 1 {
            return Err(Error::DegenerateModulus);
        }
        Ok(Modulus(p))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Reduces an integer content to its residue class.
    pub fn reduce(self, value: i64) -> Residue {
        if self.0 == 0 {
            Residue(value)
        } else {
            Residue(value.rem_euclid(self.0 as i64))
        }
    }

    /// Validates a residue given in canonical form.
    pub fn residue(self, value: i64) -> Result<Residue> {
        if self.0 > 0 && !(0..self.0 as i64).contains(&value) {
            return Err(Error::ResidueOutOfRange { value, p: self.0 });
        }
        Ok(Residue(value))
    }

    /// All residues when `p > 0`; `None` for `p = 0`.
    pub fn residues(self) -> Option<impl Iterator<Item = Residue>> {
        if self.0 == 0 {
            None
        } else {
            Some((0..self.0 as i64).map(Residue))
        }
    }

    /// Residues that can act nontrivially on partitions of size at most
    /// `max_size`: all of `Z/pZ`, or a window of integers when `p = 0`.
    pub fn residues_up_to(self, max_size: usize) -> Vec<Residue> {
        match self.residues() {
            Some(it) => it.collect(),
            None => {
                let r = max_size as i64 + 2;
                (-r..=r).map(Residue).collect()
            }
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A residue class `i`: an integer when `p = 0`, an element of `[0, p)` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Residue(pub i64);

impl Residue {
    pub fn value(self) -> i64 {
        self.0
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A box of a Young diagram, 1-indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Result<Self> {
        if row == 0 || col == 0 {
            return Err(Error::InvalidCell { row, col });
        }
        Ok(Cell { row, col })
    }

    /// Content `col - row` over the integers.
    pub fn integer_content(self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

pub fn content(cell: Cell, p: Modulus) -> Residue {
    p.reduce(cell.integer_content())
}

/// A partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Builds a partition, dropping trailing zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{:?} is not weakly decreasing", parts)));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{:?} has an interior zero", parts)));
        }
        let size = parts.iter().sum();
        Ok(Partition { parts, size })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `row` (1-indexed); zero beyond the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// Height of column `col` (1-indexed).
    pub fn col_len(&self, col: usize) -> usize {
        if col == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&r| r >= col).count()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && self.row_len(cell.row) >= cell.col
    }

    /// All boxes, row by row.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts.iter().enumerate().flat_map(|(r, &len)| (1..=len).map(move |c| Cell { row: r + 1, col: c }))
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.row_len(1);
        let parts: Vec<usize> = (1..=first).map(|c| self.col_len(c)).collect();
        Partition { parts, size: self.size }
    }

    /// Arm plus leg plus one.
    pub fn hook_length(&self, cell: Cell) -> usize {
        debug_assert!(self.contains_cell(cell));
        let arm = self.row_len(cell.row) - cell.col;
        let leg = self.col_len(cell.col) - cell.row;
        arm + leg + 1
    }

    pub fn with_cell_added(&self, cell: Cell) -> Result<Partition> {
        if !self.is_addable(cell) {
            return Err(Error::InvalidPartition(format!("{} is not addable to {}", cell, self)));
        }
        let mut parts = self.parts.clone();
        if cell.row > parts.len() {
            parts.push(1);
        } else {
            parts[cell.row - 1] += 1;
        }
        Ok(Partition { parts, size: self.size + 1 })
    }

    pub fn with_cell_removed(&self, cell: Cell) -> Result<Partition> {
        if !self.is_removable(cell) {
            return Err(Error::InvalidPartition(format!("{} is not removable from {}", cell, self)));
        }
        let mut parts = self.parts.clone();
        parts[cell.row - 1] -= 1;
        if parts[cell.row - 1] == 0 {
            parts.pop();
        }
        Ok(Partition { parts, size: self.size - 1 })
    }

    pub fn is_addable(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col == self.row_len(cell.row) + 1
            && (cell.row == 1 || self.row_len(cell.row - 1) >= cell.col)
    }

    pub fn is_removable(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col == self.row_len(cell.row) && self.row_len(cell.row + 1) < cell.col
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Comma-separated parts; the empty partition prints as the empty string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, part) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", part)?;
        }
        Ok(())
    }
}

/// Parses `"4,4,2,1"`; `""` and `"0"` denote the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "0" || trimmed == "∅" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let mut offset = 0;
        for token in trimmed.split(',') {
            let t = token.trim();
            let value: usize = t.parse().map_err(|_| Error::Parse {
                position: offset,
                message: format!("expected a nonnegative integer, found {:?}", t),
            })?;
            parts.push(value);
            offset += token.len() + 1;
        }
        Partition::new(parts)
    }
}

fn filter_residue(cells: Vec<Cell>, p: Modulus, i: Option<Residue>) -> Vec<Cell> {
    match i {
        None => cells,
        Some(i) => cells.into_iter().filter(|&c| content(c, p) == i).collect(),
    }
}

/// Addable boxes by increasing row, optionally restricted to residue `i`.
pub fn addable_boxes(lambda: &Partition, p: Modulus, i: Option<Residue>) -> Vec<Cell> {
    let cells = (1..=lambda.len() + 1)
        .filter_map(|row| {
            let cell = Cell { row, col: lambda.row_len(row) + 1 };
            lambda.is_addable(cell).then_some(cell)
        })
        .collect();
    filter_residue(cells, p, i)
}

/// Removable boxes by increasing row, optionally restricted to residue `i`.
pub fn removable_boxes(lambda: &Partition, p: Modulus, i: Option<Residue>) -> Vec<Cell> {
    let cells = (1..=lambda.len())
        .filter_map(|row| {
            let cell = Cell { row, col: lambda.row_len(row) };
            lambda.is_removable(cell).then_some(cell)
        })
        .collect();
    filter_residue(cells, p, i)
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

/// The permutation used to route column-ordered tensor factors to row order,
/// in one-line notation: fill the diagram row by row with `1..=d`, then read
/// the filling column by column.
pub fn sigma_lambda(lambda: &Partition) -> Result<Vec<usize>> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let mut row_start = vec![0usize; lambda.len() + 1];
    for r in 1..=lambda.len() {
        row_start[r] = row_start[r - 1] + lambda.row_len(r);
    }
    let mut word = Vec::with_capacity(lambda.size());
    for c in 1..=lambda.row_len(1) {
        for r in 1..=lambda.col_len(c) {
            word.push(row_start[r - 1] + c);
        }
    }
    Ok(word)
}

/// Removes `hook` from `lambda` if it is a rim hook of length `p`: the cells
/// must lie in `lambda`, their complement must be a partition, and they must
/// form an edge-connected strip containing no 2x2 square.
pub fn remove_rim_hook(lambda: &Partition, p: usize, hook: &[Cell]) -> Result<Partition> {
    if p < 2 {
        return Err(Error::NeedsPositiveModulus("rim hook removal"));
    }
    let set: BTreeSet<Cell> = hook.iter().copied().collect();
    if set.len() != hook.len() {
        return Err(Error::NotARimHook("repeated cells".into()));
    }
    if set.len() != p {
        return Err(Error::NotARimHook(format!("{} cells, expected {}", set.len(), p)));
    }
    if let Some(c) = set.iter().find(|c| !lambda.contains_cell(**c)) {
        return Err(Error::NotARimHook(format!("{} is not in {}", c, lambda)));
    }
    let mut parts = lambda.parts.clone();
    for (r, part) in parts.iter_mut().enumerate() {
        let removed = set.iter().filter(|c| c.row == r + 1).count();
        *part -= removed;
        // removed cells of a row must form a suffix of it
        if set.iter().filter(|c| c.row == r + 1).any(|c| c.col <= *part) {
            return Err(Error::NotARimHook(format!("row {} loses a non-final cell", r + 1)));
        }
    }
    let mu = Partition::new(parts).map_err(|_| Error::NotARimHook("complement is not a partition".into()))?;
    for c in &set {
        let right = Cell { row: c.row, col: c.col + 1 };
        let below = Cell { row: c.row + 1, col: c.col };
        let diag = Cell { row: c.row + 1, col: c.col + 1 };
        if set.contains(&right) && set.contains(&below) && set.contains(&diag) {
            return Err(Error::NotARimHook(format!("contains a 2x2 square at {}", c)));
        }
    }
    let mut seen = BTreeSet::new();
    let mut stack = vec![*set.iter().next().unwrap()];
    while let Some(c) = stack.pop() {
        if !seen.insert(c) {
            continue;
        }
        let neighbours =
            [(c.row, c.col + 1), (c.row + 1, c.col), (c.row, c.col.wrapping_sub(1)), (c.row.wrapping_sub(1), c.col)];
        for (r, col) in neighbours {
            let n = Cell { row: r, col };
            if set.contains(&n) && !seen.contains(&n) {
                stack.push(n);
            }
        }
    }
    if seen.len() != set.len() {
        return Err(Error::NotARimHook("cells are not connected".into()));
    }
    Ok(mu)
}

/// All removable rim `p`-hooks of `lambda`, one per box of hook length `p`,
/// ordered by that box.
pub fn rim_hooks(lambda: &Partition, p: usize) -> Vec<Vec<Cell>> {
    let mut hooks = Vec::new();
    for cell in lambda.cells() {
        if lambda.hook_length(cell) != p {
            continue;
        }
        let bottom = lambda.col_len(cell.col);
        let mut hook = Vec::with_capacity(p);
        for row in cell.row..=bottom {
            let start = if row < bottom { lambda.row_len(row + 1) } else { cell.col };
            for col in start.max(cell.col)..=lambda.row_len(row) {
                hook.push(Cell { row, col });
            }
        }
        hooks.push(hook);
    }
    hooks
}

pub fn is_p_core(lambda: &Partition, p: Modulus) -> bool {
    p.is_zero() || rim_hooks(lambda, p.get() as usize).is_empty()
}

/// The `p`-core: strip rim `p`-hooks until none remain. Every partition is
/// its own core when `p = 0`.
pub fn p_core(lambda: &Partition, p: Modulus) -> Partition {
    if p.is_zero() {
        return lambda.clone();
    }
    let p = p.get() as usize;
    let mut current = lambda.clone();
    while let Some(hook) = rim_hooks(&current, p).into_iter().next() {
        current = remove_rim_hook(&current, p, &hook).expect("hook produced by rim_hooks must be removable");
    }
    current
}

pub fn p_weight(lambda: &Partition, p: Modulus) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::NeedsPositiveModulus("p_weight"));
    }
    let core = p_core(lambda, p);
    let diff = lambda.size() - core.size();
    let p = p.get() as usize;
    if !diff.is_multiple_of(p) {
        return Err(Error::Internal(format!("|λ| - |core| = {} not divisible by {}", diff, p)));
    }
    Ok(diff / p)
}

/// `m_i(λ)`: number of boxes of each residue present.
pub fn residue_counts(lambda: &Partition, p: Modulus) -> BTreeMap<Residue, usize> {
    let mut counts = BTreeMap::new();
    for cell in lambda.cells() {
        *counts.entry(content(cell, p)).or_insert(0) += 1;
    }
    counts
}

/// Dimension of the Schur module of shape `lambda` over an `n`-dimensional
/// space, by the hook-content product. Zero when `lambda` has more than `n` rows.
pub fn dim_schur(lambda: &Partition, n: usize) -> BigUint {
    if lambda.len() > n {
        return BigUint::zero();
    }
    let mut numerator = BigUint::one();
    let mut denominator = BigUint::one();
    for cell in lambda.cells() {
        let factor = n as i64 + cell.integer_content();
        numerator *= factor as u64;
        denominator *= lambda.hook_length(cell) as u64;
    }
    debug_assert!((&numerator % &denominator).is_zero());
    numerator / denominator
}

pub fn lex_compare(lambda: &Partition, mu: &Partition) -> Ordering {
    lambda.cmp(mu)
}

/// All partitions of `n`, in increasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone(), size: prefix.iter().sum() });
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out.reverse();
    out
}

/// All partitions of size at most `n`, by size then lexicographically.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn cell(r: usize, c: usize) -> Cell {
        Cell::new(r, c).unwrap()
    }

    #[test]
    fn contents() {
        let p3 = Modulus::new(3).unwrap();
        assert_eq!(content(cell(2, 1), p3), Residue(2));
        assert_eq!(content(cell(1, 1), p3), Residue(0));
        assert_eq!(content(cell(1, 1), Modulus::new(7).unwrap()), Residue(0));
        assert_eq!(content(cell(3, 5), Modulus::ZERO), Residue(2));
        assert_eq!(content(cell(4, 1), Modulus::ZERO), Residue(-3));
    }

    #[test]
    fn rejects_degenerate_inputs() {
        assert_eq!(Modulus::new(1), Err(Error::DegenerateModulus));
        assert!(Cell::new(0, 1).is_err());
        assert!(Cell::new(1, 0).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Modulus::new(3).unwrap().residue(3).is_err());
        assert!(Modulus::new(3).unwrap().residue(-1).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(part(""), Partition::empty());
        assert_eq!(part("0"), Partition::empty());
        assert_eq!(part("4,4,2,1").parts(), &[4, 4, 2, 1]);
        assert_eq!(part("4,4,2,1").size(), 11);
        assert_eq!(format!("{}", part("4,4,2,1")), "4,4,2,1");
        assert_eq!(format!("{}", Partition::empty()), "");
        assert!(matches!("2,x".parse::<Partition>(), Err(Error::Parse { position: 2, .. })));
    }

    #[test]
    fn addable_and_removable() {
        let p3 = Modulus::new(3).unwrap();
        let e = Partition::empty();
        assert_eq!(addable_boxes(&e, p3, None), vec![cell(1, 1)]);
        assert!(removable_boxes(&e, p3, None).is_empty());
        let l = part("2,1");
        assert_eq!(removable_boxes(&l, p3, Some(Residue(2))), vec![cell(2, 1)]);
        let add = addable_boxes(&l, p3, None);
        assert_eq!(add, vec![cell(1, 3), cell(2, 2), cell(3, 1)]);
        let contents: Vec<_> = add.iter().map(|&c| content(c, p3).value()).collect();
        assert_eq!(contents, vec![2, 0, 1]);
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
        assert_eq!(conjugate(&part("3,1")), part("2,1,1"));
        assert_eq!(conjugate(&part("4,4,2,1")), part("4,3,2,2"));
    }

    #[test]
    fn sigma() {
        assert_eq!(sigma_lambda(&part("3,1")).unwrap(), vec![1, 4, 2, 3]);
        assert_eq!(sigma_lambda(&part("2,2")).unwrap(), vec![1, 3, 2, 4]);
        assert_eq!(sigma_lambda(&part("4")).unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(sigma_lambda(&Partition::empty()), Err(Error::EmptyPartition));
    }

    #[test]
    fn cores_and_weights() {
        let p2 = Modulus::new(2).unwrap();
        let p3 = Modulus::new(3).unwrap();
        assert_eq!(p_core(&part("1"), p2), part("1"));
        assert_eq!(p_core(&part("2,1"), p3), Partition::empty());
        assert_eq!(p_core(&part("3,1"), p2), Partition::empty());
        assert_eq!(p_core(&part("3,1"), Modulus::ZERO), part("3,1"));
        assert_eq!(p_weight(&part("1"), p2).unwrap(), 0);
        assert_eq!(p_weight(&part("2,1"), p3).unwrap(), 1);
        assert_eq!(p_weight(&part("3,1"), p2).unwrap(), 2);
        assert!(p_weight(&part("3,1"), Modulus::ZERO).is_err());
    }

    #[test]
    fn rim_hook_validation() {
        let l = part("2,1");
        let full = [cell(1, 1), cell(1, 2), cell(2, 1)];
        assert_eq!(remove_rim_hook(&l, 3, &full).unwrap(), Partition::empty());
        // (1,1),(1,2) leaves a non-partition
        assert!(remove_rim_hook(&l, 2, &[cell(1, 1), cell(1, 2)]).is_err());
        // wrong length
        assert!(remove_rim_hook(&l, 2, &full).is_err());
        // 2x2 square is not a rim hook
        let sq = part("2,2");
        let all: Vec<_> = sq.cells().collect();
        assert!(remove_rim_hook(&sq, 4, &all).is_err());
        // disconnected
        let l = part("3,1");
        assert!(remove_rim_hook(&l, 2, &[cell(1, 3), cell(2, 1)]).is_err());
        assert_eq!(remove_rim_hook(&l, 2, &[cell(1, 2), cell(1, 3)]).unwrap(), part("1,1"));
    }

    #[test]
    fn residue_count_examples() {
        let p3 = Modulus::new(3).unwrap();
        assert!(residue_counts(&Partition::empty(), p3).is_empty());
        let m = residue_counts(&part("2,1"), p3);
        assert_eq!(m.into_iter().collect::<Vec<_>>(), vec![(Residue(0), 1), (Residue(1), 1), (Residue(2), 1)]);
        let m = residue_counts(&part("2"), Modulus::ZERO);
        assert_eq!(m.into_iter().collect::<Vec<_>>(), vec![(Residue(0), 1), (Residue(1), 1)]);
    }

    #[test]
    fn schur_dimensions() {
        assert_eq!(dim_schur(&part("1,1"), 2), BigUint::from(1u32));
        assert_eq!(dim_schur(&part("2"), 2), BigUint::from(3u32));
        assert_eq!(dim_schur(&part("2,1"), 3), BigUint::from(8u32));
        assert_eq!(dim_schur(&part("1,1,1"), 2), BigUint::zero());
        assert_eq!(dim_schur(&Partition::empty(), 4), BigUint::one());
    }

    #[test]
    fn lexicographic() {
        assert_eq!(lex_compare(&part("2,1"), &part("3")), Ordering::Less);
        assert_eq!(lex_compare(&part("3"), &part("3")), Ordering::Equal);
        assert_eq!(lex_compare(&part("2,2"), &part("2,1,1")), Ordering::Greater);
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let p4 = partitions_of(4);
        assert!(p4.windows(2).all(|w| w[0] < w[1]));
    }
}
