//! The full correspondence, reduced to the unipotent one.
//!
//! `Omega_{m,m',rho}` on `(W_# x W_r) x (W_# x W_{r'})` is the diagonal
//! pairing on `Irr(W_#)` tensored with `Omega_{m-l,m'-l,k}`. Weyl-group
//! characters are rational, so the contragredient involution acts
//! trivially and "diagonal" means each `#`-label is paired with itself.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::centralizer::{centralizer_decomposition, match_semisimple, CentralizerDecomposition, CentralizerFactor};
use super::labels::{hash_labels, xi, xi_inverse, CentralizerLabel, LusztigCoordinates};
use super::transport::{transport_series, validate_pair, CuspidalPair};
use crate::error::{Error, Result};
use crate::howe::config::HoweConfig;
use crate::howe::cuspidal::{SeriesLabel, TowerContext};
use crate::howe::omega::{extremal_images, omega_unipotent, theta_images, MultiplicityTable, TableJson};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pairing {
    Diagonal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullDecomposition {
    pub hash_descriptor: Vec<CentralizerFactor>,
    pub pairing: Pairing,
    pub unipotent_table: MultiplicityTable,
    pub source: CentralizerDecomposition,
    pub target: CentralizerDecomposition,
}

/// `{hash_descriptor, pairing, reduction_l, reduction_l_prime, unipotent_table}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullJson {
    pub hash_descriptor: Vec<CentralizerFactor>,
    pub pairing: Pairing,
    pub reduction_l: usize,
    pub reduction_l_prime: usize,
    pub unipotent_table: TableJson,
}

impl FullDecomposition {
    pub fn to_json(&self) -> FullJson {
        FullJson {
            hash_descriptor: self.hash_descriptor.clone(),
            pairing: self.pairing,
            reduction_l: self.source.reduction_l,
            reduction_l_prime: self.target.reduction_l,
            unipotent_table: self.unipotent_table.to_json(),
        }
    }

    /// Multiplicity of `pi (x) pi'` in `Omega_{m,m',rho}`, read off the
    /// structured form.
    pub fn multiplicity(&self, pi: &LusztigCoordinates, pi_prime: &LusztigCoordinates) -> u64 {
        if pi.hash_part_label != pi_prime.hash_part_label {
            return 0;
        }
        let md = &self.unipotent_table.metadata;
        if pi.unipotent_part.k != md.k || pi_prime.unipotent_part.k != md.k_prime {
            return 0;
        }
        self.unipotent_table
            .entry(&pi.unipotent_part.char_label, &pi_prime.unipotent_part.char_label)
    }

    /// The whole of `Omega_{m,m',rho}` as a sparse matrix over series
    /// members of `C(s)` and `C(s')`.
    pub fn expand(&self) -> Result<BTreeMap<(CentralizerLabel, CentralizerLabel), u64>> {
        let md = &self.unipotent_table.metadata;
        let mut out = BTreeMap::new();
        for hash in hash_labels(&self.hash_descriptor) {
            for (&(i, j), &mult) in self.unipotent_table.entries() {
                let left = LusztigCoordinates {
                    hash_part_label: hash.clone(),
                    unipotent_part: SeriesLabel::new(md.k, self.unipotent_table.row_labels[i].clone()),
                    reduction_l: self.source.reduction_l,
                };
                let right = LusztigCoordinates {
                    hash_part_label: hash.clone(),
                    unipotent_part: SeriesLabel::new(md.k_prime, self.unipotent_table.col_labels[j].clone()),
                    reduction_l: self.target.reduction_l,
                };
                out.insert(
                    (xi_inverse(&left, &self.source)?, xi_inverse(&right, &self.target)?),
                    mult,
                );
            }
        }
        Ok(out)
    }
}

/// `Omega_{m,m',rho}` for the series of `pair`.
pub fn omega_full(
    pair: &CuspidalPair,
    ctx: &TowerContext,
    ctx_prime: &TowerContext,
    config: &HoweConfig,
) -> Result<FullDecomposition> {
    if transport_series(pair, ctx, ctx_prime, config)?.is_none() {
        return Err(Error::EmptyImage);
    }
    let source = centralizer_decomposition(&pair.semisimple, ctx)?;
    let s_prime = match_semisimple(&pair.semisimple, ctx, ctx_prime)?;
    let target = centralizer_decomposition(&s_prime, ctx_prime)?;
    let unipotent_table = omega_unipotent(&source.unipotent_block, &target.unipotent_block, pair.base_k, config)?;
    Ok(FullDecomposition {
        hash_descriptor: source.factors.clone(),
        pairing: Pairing::Diagonal,
        unipotent_table,
        source,
        target,
    })
}

/// Context of a member `pi` of the series of `s` in `G_m`.
#[derive(Clone, Debug)]
pub struct FullContext<'a> {
    pub pair: &'a CuspidalPair,
    pub ctx: &'a TowerContext,
    pub ctx_prime: &'a TowerContext,
    pub config: &'a HoweConfig,
}

impl FullContext<'_> {
    fn decompositions(&self) -> Result<(CentralizerDecomposition, CentralizerDecomposition)> {
        validate_pair(self.pair, self.ctx)?;
        let source = centralizer_decomposition(&self.pair.semisimple, self.ctx)?;
        let s_prime = match_semisimple(&self.pair.semisimple, self.ctx, self.ctx_prime)?;
        let target = centralizer_decomposition(&s_prime, self.ctx_prime)?;
        Ok((source, target))
    }

    /// `Theta(pi)` through the reduction: `{pi_#} x Theta(pi_{m-l})`.
    pub fn theta_images(&self, pi: &LusztigCoordinates) -> Result<Vec<LusztigCoordinates>> {
        let (source, target) = self.decompositions()?;
        xi_inverse(pi, &source)?;
        let images = theta_images(
            &pi.unipotent_part,
            &source.unipotent_block,
            &target.unipotent_block,
            self.config,
        )?;
        Ok(images
            .into_iter()
            .map(|(label, _)| LusztigCoordinates {
                hash_part_label: pi.hash_part_label.clone(),
                unipotent_part: label,
                reduction_l: target.reduction_l,
            })
            .collect())
    }

    /// Membership `pi' in Theta(pi)`: equal `#`-parts and linked unipotent parts.
    pub fn contains(&self, pi: &LusztigCoordinates, pi_prime: &LusztigCoordinates) -> Result<bool> {
        Ok(self.theta_images(pi)?.contains(pi_prime))
    }

    /// Minimal and maximal members of `Theta(pi)`; the order compares
    /// unipotent parts only.
    pub fn extremal_images(&self, pi: &LusztigCoordinates) -> Result<(LusztigCoordinates, LusztigCoordinates)> {
        let (source, target) = self.decompositions()?;
        xi_inverse(pi, &source)?;
        let (lo, hi) = extremal_images(
            &pi.unipotent_part,
            &source.unipotent_block,
            &target.unipotent_block,
            self.config,
        )?;
        let wrap = |u: SeriesLabel| LusztigCoordinates {
            hash_part_label: pi.hash_part_label.clone(),
            unipotent_part: u,
            reduction_l: target.reduction_l,
        };
        Ok((wrap(lo), wrap(hi)))
    }
}

/// Series members of `C(s)` belonging to the Harish-Chandra series of
/// `pair`: every `#`-label, and unipotent block labels in series `base_k`.
pub fn series_members(pair: &CuspidalPair, ctx: &TowerContext) -> Result<Vec<LusztigCoordinates>> {
    validate_pair(pair, ctx)?;
    let dec = centralizer_decomposition(&pair.semisimple, ctx)?;
    let r = dec.unipotent_block.series_rank(pair.base_k)?;
    let blocks: BTreeSet<SeriesLabel> = crate::partition::bipartitions_of(r)
        .into_iter()
        .map(|b| SeriesLabel::new(pair.base_k, b))
        .collect();
    let mut out = Vec::new();
    for hash in hash_labels(&dec.factors) {
        for block in &blocks {
            out.push(xi(
                &CentralizerLabel {
                    factors: hash.clone(),
                    block: block.clone(),
                },
                &dec,
            )?);
        }
    }
    Ok(out)
}
