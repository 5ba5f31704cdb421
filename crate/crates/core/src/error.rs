use thiserror::Error;

use crate::partition::Bipartition;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in this crate.
///
/// [`Error::Invariant`] is special: it means an internal self-check failed
/// (for instance the oracle disagreed with itself) and the result must not
/// be trusted. Everything else is a validation error on the input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("norm mismatch: {left} vs {right}")]
    NormMismatch { left: usize, right: usize },

    #[error("rank {rank} exceeds the oracle bound {bound}")]
    RankTooLarge { rank: usize, bound: usize },

    #[error("class function is not a virtual character: <f, {label}> = {value}")]
    NotVirtualCharacter { label: String, value: String },

    #[error("invalid tower data: {0}")]
    InvalidTower(String),

    #[error("label {label} does not index the series (expected rank {expected})")]
    LabelMismatch { label: String, expected: usize },

    #[error("empty image set: the correspondence is zero")]
    EmptyImage,

    #[error("no unique {which} element under the configured order; antichain {antichain:?}")]
    NoUniqueExtreme {
        which: &'static str,
        antichain: Vec<Bipartition>,
    },

    #[error("zero is not an eigenvalue of a semisimple element of a unitary group")]
    ZeroEigenvalue,

    #[error("invalid modulus {modulus} for q = {q}: expected q^(2d) - 1")]
    InvalidModulus { q: u64, modulus: u64 },

    #[error("q = {0} is not an odd prime power")]
    InvalidQ(u64),

    #[error("rank mismatch: orbits fill dimension {found}, group has dimension {expected}")]
    RankSumMismatch { expected: usize, found: usize },

    #[error("semisimple part of dimension {needed} does not fit in dimension {available}")]
    DoesNotFit { needed: usize, available: usize },

    #[error("invalid support: {0}")]
    InvalidSupport(String),

    #[error("cannot remove {needed} trivial GL1 entries, only {present} present")]
    TrivialUnderflow { needed: usize, present: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True when the error signals a failed self-check rather than bad input.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}
