//! Conjugacy classes of the hyperoctahedral group `W_n`.
//!
//! A signed permutation splits into cycles of the underlying permutation;
//! a cycle is *negative* when it carries an odd number of sign changes. The
//! pair (positive cycle type, negative cycle type) is a complete conjugacy
//! invariant.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{bipartitions_of, Bipartition, Partition};

/// Largest rank the oracle builds tables for unless told otherwise.
pub const DEFAULT_ORACLE_BOUND: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BnClassLabel {
    pub positive_cycles: Partition,
    pub negative_cycles: Partition,
}

impl BnClassLabel {
    pub fn new(positive_cycles: Partition, negative_cycles: Partition) -> Self {
        BnClassLabel {
            positive_cycles,
            negative_cycles,
        }
    }

    pub fn rank(&self) -> usize {
        self.positive_cycles.norm() + self.negative_cycles.norm()
    }

    /// Class of the identity of `W_n`.
    pub fn identity(n: usize) -> Self {
        BnClassLabel::new(Partition::column(n), Partition::empty())
    }

    /// Cycle type of the image in the symmetric group.
    pub fn cycle_type(&self) -> Partition {
        self.positive_cycles.union(&self.negative_cycles)
    }

    /// Class of `(x, y)` in `W_{a+b}` for `x` in `W_a`, `y` in `W_b`.
    pub fn fuse(&self, other: &BnClassLabel) -> BnClassLabel {
        BnClassLabel::new(
            self.positive_cycles.union(&other.positive_cycles),
            self.negative_cycles.union(&other.negative_cycles),
        )
    }

    /// Order of the centralizer: `prod_i (2i)^{a_i} a_i! (2i)^{b_i} b_i!`.
    pub fn centralizer_order(&self) -> u64 {
        fn part_factor(p: &Partition) -> u64 {
            let mut acc = 1u64;
            let max = p.part(0);
            for i in 1..=max {
                let mult = p.multiplicity(i) as u64;
                acc *= (2 * i as u64).pow(mult as u32) * factorial(mult);
            }
            acc
        }
        part_factor(&self.positive_cycles) * part_factor(&self.negative_cycles)
    }

    fn as_bipartition(&self) -> Bipartition {
        Bipartition::new(self.positive_cycles.clone(), self.negative_cycles.clone())
    }
}

impl Ord for BnClassLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.as_bipartition().cmp(&other.as_bipartition())
    }
}

impl PartialOrd for BnClassLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BnClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}|{}>", self.positive_cycles, self.negative_cycles)
    }
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// `|W_n| = 2^n n!`.
pub fn group_order(n: usize) -> u64 {
    (1u64 << n) * factorial(n as u64)
}

/// Class labels of `W_n` in canonical order.
pub fn class_labels(n: usize) -> Vec<BnClassLabel> {
    bipartitions_of(n)
        .into_iter()
        .map(|b| BnClassLabel::new(b.first, b.second))
        .collect()
}

pub(crate) fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        Err(Error::RankTooLarge { rank: n, bound })
    } else {
        Ok(())
    }
}

/// A signed permutation: `i -> signs[i] * perm[i]`.
fn classify(perm: &[usize], sign_mask: u32) -> BnClassLabel {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut positive = Vec::new();
    let mut negative = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut flips = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            len += 1;
            flips += (sign_mask >> i) & 1;
            i = perm[i];
        }
        if flips % 2 == 0 {
            positive.push(len);
        } else {
            negative.push(len);
        }
    }
    BnClassLabel::new(Partition::from_unsorted(positive), Partition::from_unsorted(negative))
}

fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    // Heap's algorithm, iterative
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Class sizes of `W_n` by walking all `2^n n!` signed permutations.
pub fn enumerate_class_sizes(n: usize) -> BTreeMap<BnClassLabel, u64> {
    let mut sizes = BTreeMap::new();
    for_each_permutation(n, |perm| {
        for mask in 0..(1u32 << n) {
            *sizes.entry(classify(perm, mask)).or_insert(0u64) += 1;
        }
    });
    sizes
}

/// Conjugacy classes of `W_n` with their sizes.
///
/// Sizes come from explicit enumeration and are cross-checked against
/// `|W_n| / |C(x)|`; any disagreement is reported as an invariant violation.
pub fn conjugacy_classes(n: usize, bound: usize) -> Result<BTreeMap<BnClassLabel, u64>> {
    check_bound(n, bound)?;
    let sizes = enumerate_class_sizes(n);
    let labels = class_labels(n);
    if sizes.len() != labels.len() {
        return Err(Error::Invariant(format!(
            "W_{n}: enumeration found {} classes, expected {}",
            sizes.len(),
            labels.len()
        )));
    }
    let order = group_order(n);
    for label in &labels {
        let analytic = order / label.centralizer_order();
        match sizes.get(label) {
            Some(&found) if found == analytic => {}
            found => {
                return Err(Error::Invariant(format!(
                    "W_{n}: class {label} has enumerated size {found:?}, analytic size {analytic}"
                )))
            }
        }
    }
    Ok(sizes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        let w1 = conjugacy_classes(1, DEFAULT_ORACLE_BOUND).unwrap();
        assert_eq!(w1.len(), 2);
        assert!(w1.values().all(|&s| s == 1));
        let w2 = conjugacy_classes(2, DEFAULT_ORACLE_BOUND).unwrap();
        assert_eq!(w2.len(), 5);
        assert_eq!(w2.values().sum::<u64>(), 8);
        let w5 = conjugacy_classes(5, DEFAULT_ORACLE_BOUND).unwrap();
        assert_eq!(w5.values().sum::<u64>(), 3840);
        let w0 = conjugacy_classes(0, DEFAULT_ORACLE_BOUND).unwrap();
        assert_eq!(w0.len(), 1);
    }

    #[test]
    fn bound_is_enforced() {
        assert_eq!(conjugacy_classes(7, 6), Err(Error::RankTooLarge { rank: 7, bound: 6 }));
    }

    #[test]
    fn sign_change_is_a_negative_one_cycle() {
        let label = classify(&[0], 1);
        assert_eq!(label, BnClassLabel::new(Partition::empty(), Partition::row(1)));
    }
}
