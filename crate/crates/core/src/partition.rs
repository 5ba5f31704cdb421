//! Integer partitions and bipartitions.
//!
//! Partitions label the irreducible characters and conjugacy classes of the
//! symmetric groups, bipartitions those of the hyperoctahedral groups. The
//! strip-addition routines are the Pieri rules used to expand inductions
//! from `W_l x W_{r-l}`.
//!
//! The [`Ord`] instances are the *canonical listing order*, not dominance:
//! partitions of equal norm are listed in decreasing lexicographic order,
//! bipartitions by `|first|` descending and then componentwise.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// The partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn norm(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Multiplicity of `i` as a part.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// True if the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.parts[i] >= other.parts[i])
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Union of the multisets of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// Dominance order. Errors if the norms differ.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        dominance_leq(self, other)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.norm()
            .cmp(&other.norm())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl TryFrom<&[usize]> for Partition {
    type Error = Error;
    fn try_from(parts: &[usize]) -> Result<Self> {
        Partition::new(parts.to_vec())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// An ordered pair of partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    /// Convenience constructor from raw part lists.
    pub fn from_parts(first: &[usize], second: &[usize]) -> Result<Self> {
        Ok(Bipartition {
            first: Partition::try_from(first)?,
            second: Partition::try_from(second)?,
        })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn norm(&self) -> usize {
        self.first.norm() + self.second.norm()
    }

    /// `(first, second) -> (second, first)`.
    pub fn swap(&self) -> Bipartition {
        Bipartition::new(self.second.clone(), self.first.clone())
    }

    /// Conjugates each component.
    pub fn conjugate_components(&self) -> Bipartition {
        Bipartition::new(self.first.conjugate(), self.second.conjugate())
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

impl Ord for Bipartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.norm()
            .cmp(&other.norm())
            .then_with(|| other.first.norm().cmp(&self.first.norm()))
            .then_with(|| self.first.cmp(&other.first))
            .then_with(|| self.second.cmp(&other.second))
    }
}

impl PartialOrd for Bipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for Bipartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (&self.first, &self.second).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Bipartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (first, second) = <(Partition, Partition)>::deserialize(deserializer)?;
        Ok(Bipartition { first, second })
    }
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All bipartitions of `n`: `|first|` descending, then each component in
/// the partition order.
pub fn bipartitions_of(n: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        let seconds = partitions_of(n - a);
        for first in partitions_of(a) {
            for second in &seconds {
                out.push(Bipartition::new(first.clone(), second.clone()));
            }
        }
    }
    out
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

/// All `lambda` containing `p` with `lambda / p` a horizontal strip of `size`
/// cells, in canonical order.
pub fn horizontal_strip_additions(p: &Partition, size: usize) -> Vec<Partition> {
    // Row i may grow up to p_{i-1} (interlacing); row 0 is unbounded.
    fn go(p: &Partition, row: usize, remaining: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            let mut parts = current.clone();
            parts.extend((row..p.len()).map(|i| p.part(i)));
            out.push(Partition { parts });
            return;
        }
        let base = p.part(row);
        if row == p.len() {
            // a fresh row must absorb everything that is left
            if row == 0 || remaining <= p.part(row - 1) {
                let mut parts = current.clone();
                parts.push(remaining);
                out.push(Partition { parts });
            }
            return;
        }
        let cap = if row == 0 {
            remaining
        } else {
            (p.part(row - 1) - base).min(remaining)
        };
        for add in 0..=cap {
            current.push(base + add);
            go(p, row + 1, remaining - add, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(p, 0, size, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// All `lambda` containing `p` with `lambda / p` a vertical strip of `size`
/// cells, in canonical order.
pub fn vertical_strip_additions(p: &Partition, size: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = horizontal_strip_additions(&p.conjugate(), size)
        .iter()
        .map(Partition::conjugate)
        .collect();
    out.sort();
    out
}

/// Dominance order: every partial sum of `a` is at most that of `b`.
pub fn dominance_leq(a: &Partition, b: &Partition) -> Result<bool> {
    if a.norm() != b.norm() {
        return Err(Error::NormMismatch {
            left: a.norm(),
            right: b.norm(),
        });
    }
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0, 0);
    for i in 0..len {
        sa += a.part(i);
        sb += b.part(i);
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}
