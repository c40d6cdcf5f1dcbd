//! Integer partitions and skew shapes.

use crate::error::{Error, Result};
use std::fmt;

/// A partition: weakly decreasing positive parts. Trailing zeros are
/// stripped at construction; the empty partition is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::domain(format!(
                    "partition parts must be weakly decreasing, got {parts:?}"
                )));
            }
        }
        if parts.contains(&0) {
            return Err(Error::domain("partition has an interior zero part"));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts l(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ| = sum of parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// The i-th part (0-based), 0 beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Conjugate (transpose) partition λ'.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Rowwise containment ν ⊆ λ.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Parts padded with zeros to length n.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        (0..n).map(|i| self.part(i)).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of m, in descending lexicographic order.
pub fn partitions_of(m: u32) -> Vec<Partition> {
    partitions_bounded(m, m as usize, m)
}

/// All partitions of m with at most `max_len` parts, each at most `max_part`;
/// descending lexicographic order.
pub fn partitions_bounded(m: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(remaining: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        let hi = remaining.min(max_part);
        for p in (1..=hi).rev() {
            cur.push(p);
            rec(remaining - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    rec(m, max_part, max_len, &mut cur, &mut out);
    out
}

/// All ν ⊆ λ (subdiagrams), deterministic order.
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(lambda: &Partition, row: usize, prev: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row == lambda.len() {
            let mut parts = cur.clone();
            while parts.last() == Some(&0) {
                parts.pop();
            }
            out.push(Partition { parts });
            return;
        }
        let hi = lambda.part(row).min(prev);
        for p in (0..=hi).rev() {
            cur.push(p);
            rec(lambda, row + 1, p, cur, out);
            cur.pop();
        }
    }
    rec(lambda, 0, u32::MAX, &mut cur, &mut out);
    out.sort();
    out.dedup();
    out
}

/// A skew shape λ/ν with ν ⊆ λ; ν may be empty (straight shape).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::domain(format!(
                "inner shape {inner} not contained in outer {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_skew(&self) -> bool {
        !self.inner.is_empty()
    }

    /// Number of cells |λ/ν|.
    pub fn size(&self) -> u64 {
        self.outer.size() - self.inner.size()
    }

    /// Whether the cell at (row, col) (0-based) belongs to the shape.
    pub fn has_cell(&self, row: usize, col: usize) -> bool {
        (col as u32) < self.outer.part(row) && (col as u32) >= self.inner.part(row)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_skew() {
            write!(f, "{}/{}", self.outer, self.inner)
        } else {
            write!(f, "{}", self.outer)
        }
    }
}
