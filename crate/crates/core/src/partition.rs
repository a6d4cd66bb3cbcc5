//! Integer partitions, integral vectors and Young-diagram cells.
//!
//! Partitions are zero-normalized on construction, so structural equality is
//! equality of partitions. Cells use matrix coordinates starting at `(1, 1)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

/// A finite integer sequence with no monotonicity requirement.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<i64>);

/// A cell `(row, col)` of the positive quadrant, matrix convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "cells are 1-indexed");
        Cell { row, col }
    }
}

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from weakly decreasing parts; trailing zeros are dropped.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary non-negative parts into a partition.
    pub fn from_unsorted(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts = parts.into();
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `(k)`, the one-row partition; empty for `k = 0`.
    pub fn row(k: u32) -> Self {
        Partition::from_unsorted(vec![k])
    }

    /// `(1^k)`, the one-column partition.
    pub fn column(k: u32) -> Self {
        Partition(vec![1; k as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    /// Part `i` (0-based), or 0 past the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0) as usize;
        let mut out = Vec::with_capacity(width);
        for j in 1..=width as u32 {
            out.push(self.0.iter().take_while(|&&p| p >= j).count() as u32);
        }
        Partition(out)
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.0);
        parts.extend_from_slice(&other.0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `self ∪ other ∪ ... ∪ other` with `n` copies of `other`.
    pub fn union_n(&self, other: &Partition, n: usize) -> Partition {
        let mut parts = self.0.clone();
        for _ in 0..n {
            parts.extend_from_slice(&other.0);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Entrywise sum with an integral vector; both sides are padded with zeros.
    pub fn add_vector(&self, v: &IntVector) -> IntVector {
        let n = self.len().max(v.len());
        IntVector((0..n).map(|i| i64::from(self.part(i)) + v.entry(i)).collect())
    }

    /// Whether `Y(other) ⊆ Y(self)`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row <= self.len() && cell.col as u32 <= self.0[cell.row - 1]
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| Cell::new(i + 1, j)))
    }

    /// Cells whose removal leaves a partition, top to bottom.
    pub fn inner_corners(&self) -> Vec<Cell> {
        (0..self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Cell::new(i + 1, self.0[i] as usize))
            .collect()
    }

    /// Positions whose addition gives a partition, top to bottom.
    pub fn outer_corners(&self) -> Vec<Cell> {
        (0..=self.len())
            .filter(|&i| i == 0 || self.part(i - 1) > self.part(i))
            .map(|i| Cell::new(i + 1, self.part(i) as usize + 1))
            .collect()
    }

    fn prefix_sums(&self, len: usize) -> impl Iterator<Item = u64> + '_ {
        (0..len).scan(0u64, move |acc, i| {
            *acc += u64::from(self.part(i));
            Some(*acc)
        })
    }

    fn remove_cell(&self, row: usize) -> Partition {
        let mut parts = self.0.clone();
        parts[row - 1] -= 1;
        Partition::from_unsorted(parts)
    }

    fn add_cell(&self, row: usize) -> Partition {
        let mut parts = self.0.clone();
        if row > parts.len() {
            parts.resize(row, 0);
        }
        parts[row - 1] += 1;
        Partition(parts)
    }
}

impl IntVector {
    pub fn new(entries: impl Into<Vec<i64>>) -> Self {
        IntVector(entries.into())
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entry(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Index of the last nonzero entry plus one.
    pub fn support_len(&self) -> usize {
        self.0.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1)
    }

    pub fn scale(&self, n: i64) -> IntVector {
        IntVector(self.0.iter().map(|&x| x * n).collect())
    }

    pub fn is_partition(&self) -> bool {
        self.to_partition().is_some()
    }

    /// The vector as a partition, if its entries are non-negative and weakly
    /// decreasing (trailing zeros allowed).
    pub fn to_partition(&self) -> Option<Partition> {
        if self.0.iter().any(|&x| x < 0 || x > i64::from(u32::MAX)) {
            return None;
        }
        if self.0.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Partition::new(self.0.iter().map(|&x| x as u32).collect::<Vec<_>>()).ok()
    }
}

impl From<&Partition> for IntVector {
    fn from(p: &Partition) -> Self {
        IntVector(p.0.iter().map(|&x| i64::from(x)).collect())
    }
}

/// `μ ⪯ ν` in dominance order; partitions must have equal size.
pub fn dominance_leq(mu: &Partition, nu: &Partition) -> Result<bool> {
    if mu.size() != nu.size() {
        return Err(Error::SizeMismatch {
            left: mu.size(),
            right: nu.size(),
        });
    }
    let n = mu.len().max(nu.len());
    Ok(mu.prefix_sums(n).zip(nu.prefix_sums(n)).all(|(a, b)| a <= b))
}

/// The shape obtained by removing the inner corner in `row` and placing it in
/// the first outer corner strictly below; `None` when there is no such corner.
fn drop_corner(p: &Partition, row: usize) -> Option<Partition> {
    let removed = p.remove_cell(row);
    let below = removed.outer_corners().into_iter().find(|c| c.row > row)?;
    Some(removed.add_cell(below.row))
}

/// A chain from `nu` down to `mu` in which every step moves one inner corner
/// to the next outer corner below it. The highest movable corner is always
/// moved first. The returned sequence starts at `nu` and ends at `mu`; for
/// `mu == nu` it is empty.
pub fn brylawski_chain(nu: &Partition, mu: &Partition) -> Result<Vec<Partition>> {
    if !dominance_leq(mu, nu)? {
        return Err(Error::NotDominated {
            lower: mu.clone(),
            upper: nu.clone(),
        });
    }
    if mu == nu {
        return Ok(Vec::new());
    }
    let mut chain = vec![nu.clone()];
    let mut current = nu.clone();
    while current != *mu {
        let next = current
            .inner_corners()
            .into_iter()
            .filter_map(|c| drop_corner(&current, c.row))
            .find(|cand| dominance_leq(mu, cand).unwrap_or(false))
            .expect("a dominating partition always admits a corner move towards its target");
        chain.push(next.clone());
        current = next;
    }
    Ok(chain)
}

/// Whether `next` arises from `prev` by moving one inner corner to the first
/// outer corner strictly below it.
pub fn is_corner_move(prev: &Partition, next: &Partition) -> bool {
    prev.inner_corners()
        .into_iter()
        .filter_map(|c| drop_corner(prev, c.row))
        .any(|cand| cand == *next)
}

/// Sorts the entries of two non-negative vectors into one partition.
pub fn sort_concat(rho: &IntVector, delta: &IntVector) -> Result<Partition> {
    let mut parts = Vec::with_capacity(rho.len() + delta.len());
    for (index, &value) in rho.entries().iter().chain(delta.entries()).enumerate() {
        if value < 0 {
            return Err(Error::NegativeEntry { index, value });
        }
        parts.push(value as u32);
    }
    Ok(Partition::from_unsorted(parts))
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `max_size` with at most `max_len` parts,
/// ascending by size.
pub fn partitions_up_to(max_size: u32, max_len: usize) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(partitions_of)
        .filter(|p| p.len() <= max_len)
        .collect()
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    f.write_str("[")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("]")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_list(s: &str) -> Result<Vec<i64>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected a bracketed list, got `{s}`")))?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer `{tok}` in `{s}`")))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `[4,4,2,1]` or `[]`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let raw = parse_list(s)?;
        let parts = raw
            .iter()
            .map(|&x| u32::try_from(x).map_err(|_| Error::Parse(format!("negative part in `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|_| Error::Parse(format!("`{s}` is not weakly decreasing")))
    }
}

impl FromStr for IntVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_list(s).map(IntVector)
    }
}

/// Sort key used by serializations: degree ascending, then reverse
/// lexicographic.
pub fn degree_revlex(a: &Partition, b: &Partition) -> Ordering {
    a.size().cmp(&b.size()).then_with(|| b.cmp(a))
}
