//! Unipotent labels of centralizers and the coordinate bijection `Xi`.
//!
//! Through the Lusztig correspondence a member of the series of `s` is a
//! unipotent character of `C(s)`, i.e. one unipotent label per factor.
//! `Xi` splits such a label into the `G_#(s)` part and the label of the
//! eigenvalue-1 block `G_{m-l}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::centralizer::{CentralizerDecomposition, CentralizerFactor, FactorKind};
use crate::error::{Error, Result};
use crate::howe::cuspidal::{triangular, Parity, SeriesLabel, TowerContext};
use crate::partition::{bipartitions_of, partitions_of, Partition};

/// A unipotent character of one factor.
///
/// `GL_nu` factors: a partition of `nu`. `U_nu` factors: a series index
/// `k` with `k(k+1)/2 = nu (mod 2)` and a bipartition of `(nu - k(k+1)/2) / 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorLabel {
    Linear(Partition),
    Unitary(SeriesLabel),
}

impl fmt::Display for FactorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorLabel::Linear(p) => write!(f, "{p}"),
            FactorLabel::Unitary(s) => write!(f, "{s}"),
        }
    }
}

/// Unipotent labels of `U_dim`, series by series.
pub fn unitary_unipotent_labels(dim: usize) -> Vec<SeriesLabel> {
    let mut out = Vec::new();
    let mut k = 0;
    while triangular(k) <= dim {
        if Parity::of(triangular(k)) == Parity::of(dim) {
            let r = (dim - triangular(k)) / 2;
            out.extend(bipartitions_of(r).into_iter().map(|b| SeriesLabel::new(k, b)));
        }
        k += 1;
    }
    out
}

pub fn factor_labels(factor: &CentralizerFactor) -> Vec<FactorLabel> {
    match factor.kind {
        FactorKind::Linear => partitions_of(factor.size)
            .into_iter()
            .map(FactorLabel::Linear)
            .collect(),
        FactorKind::Unitary => unitary_unipotent_labels(factor.size)
            .into_iter()
            .map(FactorLabel::Unitary)
            .collect(),
    }
}

fn label_fits(label: &FactorLabel, factor: &CentralizerFactor) -> bool {
    match (label, factor.kind) {
        (FactorLabel::Linear(p), FactorKind::Linear) => p.norm() == factor.size,
        (FactorLabel::Unitary(s), FactorKind::Unitary) => {
            unipotent_block_fits(s, &TowerContext::of_dimension(3, factor.size))
        }
        _ => false,
    }
}

fn unipotent_block_fits(label: &SeriesLabel, block: &TowerContext) -> bool {
    block.series_rank(label.k).is_ok_and(|r| r == label.char_label.norm())
}

/// Every label of `G_#(s)`: one factor label per factor, in product order.
pub fn hash_labels(factors: &[CentralizerFactor]) -> Vec<Vec<FactorLabel>> {
    let mut out = vec![Vec::new()];
    for factor in factors {
        let choices = factor_labels(factor);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut next = prefix.clone();
                    next.push(c.clone());
                    next
                })
            })
            .collect();
    }
    out
}

/// A member of the series of `s`, as a unipotent label of `C(s)`: the
/// `G_#(s)` factor labels followed by the label of the eigenvalue-1 block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CentralizerLabel {
    pub factors: Vec<FactorLabel>,
    pub block: SeriesLabel,
}

/// Coordinates `(pi_#, pi_{m-l})` of a series member.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LusztigCoordinates {
    pub hash_part_label: Vec<FactorLabel>,
    pub unipotent_part: SeriesLabel,
    pub reduction_l: usize,
}

impl fmt::Display for LusztigCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hash: Vec<String> = self.hash_part_label.iter().map(ToString::to_string).collect();
        write!(
            f,
            "#[{}] x {} (l={})",
            hash.join("; "),
            self.unipotent_part,
            self.reduction_l
        )
    }
}

fn check_centralizer_label(label: &CentralizerLabel, dec: &CentralizerDecomposition) -> Result<()> {
    if label.factors.len() != dec.factors.len() {
        return Err(Error::LabelMismatch {
            label: format!("{} factor labels", label.factors.len()),
            expected: dec.factors.len(),
        });
    }
    for (l, f) in label.factors.iter().zip(&dec.factors) {
        if !label_fits(l, f) {
            return Err(Error::LabelMismatch {
                label: l.to_string(),
                expected: f.size,
            });
        }
    }
    if !unipotent_block_fits(&label.block, &dec.unipotent_block) {
        return Err(Error::LabelMismatch {
            label: label.block.to_string(),
            expected: dec.unipotent_block.witt_index,
        });
    }
    Ok(())
}

/// `Xi`: series member to coordinates.
pub fn xi(label: &CentralizerLabel, dec: &CentralizerDecomposition) -> Result<LusztigCoordinates> {
    check_centralizer_label(label, dec)?;
    Ok(LusztigCoordinates {
        hash_part_label: label.factors.clone(),
        unipotent_part: label.block.clone(),
        reduction_l: dec.reduction_l,
    })
}

/// Inverse of [`xi`].
pub fn xi_inverse(coords: &LusztigCoordinates, dec: &CentralizerDecomposition) -> Result<CentralizerLabel> {
    if coords.reduction_l != dec.reduction_l {
        return Err(Error::InvalidTower(format!(
            "coordinates carry l = {}, centralizer has l = {}",
            coords.reduction_l, dec.reduction_l
        )));
    }
    let label = CentralizerLabel {
        factors: coords.hash_part_label.clone(),
        block: coords.unipotent_part.clone(),
    };
    check_centralizer_label(&label, dec)?;
    Ok(label)
}

/// Every series member of `C(s)` (all unipotent labels of all factors).
pub fn centralizer_labels(dec: &CentralizerDecomposition) -> Vec<CentralizerLabel> {
    let blocks = unitary_unipotent_labels(dec.unipotent_block.dimension());
    hash_labels(&dec.factors)
        .into_iter()
        .flat_map(|factors| {
            blocks.iter().map(move |b| CentralizerLabel {
                factors: factors.clone(),
                block: b.clone(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lusztig::centralizer::centralizer_decomposition;
    use crate::lusztig::orbit::SemisimpleDescriptor;

    #[test]
    fn unitary_label_count_is_partition_count() {
        // unipotent characters of U_n are indexed by partitions of n
        for n in 0..12 {
            assert_eq!(unitary_unipotent_labels(n).len(), partitions_of(n).len(), "n = {n}");
        }
    }

    #[test]
    fn xi_round_trip() {
        let ctx = TowerContext::new(3, Parity::Even);
        let s = SemisimpleDescriptor::parse(3, 80, "0^2,40^2,10^1").unwrap();
        let dec = centralizer_decomposition(&s, &ctx).unwrap();
        let labels = centralizer_labels(&dec);
        assert!(!labels.is_empty());
        for label in labels {
            let coords = xi(&label, &dec).unwrap();
            assert_eq!(xi_inverse(&coords, &dec).unwrap(), label);
        }
    }

    #[test]
    fn xi_rejects_foreign_labels() {
        let ctx = TowerContext::new(1, Parity::Odd);
        let s = SemisimpleDescriptor::parse(3, 8, "0^1,4^2").unwrap();
        let dec = centralizer_decomposition(&s, &ctx).unwrap();
        let bad = CentralizerLabel {
            factors: vec![FactorLabel::Linear(Partition::row(2))],
            block: SeriesLabel::new(1, Default::default()),
        };
        assert!(xi(&bad, &dec).is_err());
    }
}
