//! Cuspidal-unipotent bookkeeping for the unitary Witt towers.
//!
//! The unitary group `U_N(q)` has a cuspidal unipotent character exactly
//! when `N = k(k+1)/2` is a triangular number; it is unique and written
//! `lambda_k`. The unipotent Harish-Chandra series of `G_m` are indexed by
//! `k`, and the members of series `k` by `Irr(W_{m - m(k)})`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Bipartition;

/// `k(k+1)/2`, the dimension of the unitary group carrying `lambda_k`.
pub fn triangular(k: usize) -> usize {
    k * (k + 1) / 2
}

/// Witt index of `U_{k(k+1)/2}`, i.e. `floor(k(k+1)/4)`.
pub fn witt_index_of_cuspidal(k: usize) -> usize {
    triangular(k) / 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Parity {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(bit: usize) -> Result<Parity> {
        match bit {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            other => Err(Error::InvalidTower(format!("parity must be 0 or 1, got {other}"))),
        }
    }
}

impl From<Parity> for u8 {
    fn from(p: Parity) -> u8 {
        p.bit() as u8
    }
}

impl TryFrom<u8> for Parity {
    type Error = Error;
    fn try_from(bit: u8) -> Result<Parity> {
        Parity::from_bit(bit as usize)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// True for odd prime powers `p^e`, `e >= 1`.
pub fn is_odd_prime_power(q: u64) -> bool {
    if q < 3 || q.is_multiple_of(2) {
        return false;
    }
    let mut p = 3;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 2;
    }
    if !q.is_multiple_of(p) {
        return true; // q itself is prime
    }
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
    }
    rest == 1
}

/// One group of a unitary Witt tower: `G_m = U_{2m + parity}(q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TowerContext {
    pub q: u64,
    pub dim_parity: Parity,
    pub witt_index: usize,
}

impl TowerContext {
    /// Context with the default `q = 3`; only parities matter for the
    /// unipotent computations.
    pub fn new(witt_index: usize, dim_parity: Parity) -> Self {
        TowerContext {
            q: 3,
            dim_parity,
            witt_index,
        }
    }

    pub fn with_q(q: u64, witt_index: usize, dim_parity: Parity) -> Result<Self> {
        if !is_odd_prime_power(q) {
            return Err(Error::InvalidQ(q));
        }
        Ok(TowerContext {
            q,
            dim_parity,
            witt_index,
        })
    }

    /// Tower context of the unitary group of a given dimension.
    pub fn of_dimension(q: u64, dimension: usize) -> Self {
        TowerContext {
            q,
            dim_parity: Parity::of(dimension),
            witt_index: dimension / 2,
        }
    }

    pub fn dimension(&self) -> usize {
        2 * self.witt_index + self.dim_parity.bit()
    }

    pub fn validate(&self) -> Result<()> {
        if !is_odd_prime_power(self.q) {
            return Err(Error::InvalidQ(self.q));
        }
        Ok(())
    }

    /// `r = m - m(k)`: rank of the relative Weyl group of series `k`.
    pub fn series_rank(&self, k: usize) -> Result<usize> {
        if Parity::of(triangular(k)) != self.dim_parity {
            return Err(Error::InvalidTower(format!(
                "lambda_{k} lives on U_{}, which is not in the tower of parity {}",
                triangular(k),
                self.dim_parity
            )));
        }
        self.witt_index.checked_sub(witt_index_of_cuspidal(k)).ok_or_else(|| {
            Error::InvalidTower(format!(
                "Witt index {} is below m({k}) = {}",
                self.witt_index,
                witt_index_of_cuspidal(k)
            ))
        })
    }
}

/// A member of the unipotent series `k`, labelled through Howlett–Lehrer
/// by an irreducible character of `W_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SeriesLabel {
    pub k: usize,
    pub char_label: Bipartition,
}

impl SeriesLabel {
    pub fn new(k: usize, char_label: Bipartition) -> Self {
        SeriesLabel { k, char_label }
    }
}

impl fmt::Display for SeriesLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} {}", self.k, self.char_label)
    }
}

/// The correspondence `k -> k'` between cuspidal unipotent indices.
pub trait CuspidalThetaRule: Send + Sync + fmt::Debug {
    fn theta(&self, k: usize, target_parity: Parity) -> usize;
}

/// Picks the unique `k' in {k-1, k+1}` whose triangular number has the
/// target parity; `k = 0` goes to `0` (even target) or `1` (odd target).
#[derive(Clone, Copy, Debug, Default)]
pub struct ParityThetaRule;

impl CuspidalThetaRule for ParityThetaRule {
    fn theta(&self, k: usize, target_parity: Parity) -> usize {
        if k == 0 {
            return target_parity.bit();
        }
        // T_{k+1} - T_{k-1} = 2k + 1 is odd, so exactly one candidate fits
        if Parity::of(triangular(k - 1)) == target_parity {
            k - 1
        } else {
            k + 1
        }
    }
}

pub fn theta_cuspidal(k: usize, target_parity: Parity) -> usize {
    ParityThetaRule.theta(k, target_parity)
}
