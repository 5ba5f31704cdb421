//! The multiplicity table of `Omega_{m,m',k}` and the images it defines.
//!
//! With `r = m - m(k)`, `r' = m' - m(k')` the character of
//! `Omega_{m,m',k}` on `W_r x W_{r'}` is
//!
//! ```text
//! sum_{l=0}^{min(r,r')} sum_{chi in Irr(W_l)}
//!     Ind_{W_l x W_{r-l}}^{W_r}(chi (x) X) (x) Ind_{W_l x W_{r'-l}}^{W_{r'}}(sgn chi (x) 1)
//! ```
//!
//! where `X = 1` when `k` is odd or `k = k' = 0` ([`WeilFormula::Trivial`])
//! and `X = sgn` otherwise ([`WeilFormula::Sign`]). Both inductions are
//! expanded with the Pieri rules.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use super::config::HoweConfig;
use super::cuspidal::{witt_index_of_cuspidal, SeriesLabel, TowerContext};
use super::order::{unique_extreme, Extreme};
use super::pieri::{induce_with_linear, twist_label};
use crate::bn::LinearCharacter;
use crate::error::{Error, Result};
use crate::partition::{bipartitions_of, Bipartition};

/// Which of the two Weil formulas applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WeilFormula {
    /// `k` odd or `k = k' = 0`: the left inductions use the trivial character.
    Trivial,
    /// Otherwise: the left inductions use `sgn`.
    Sign,
}

impl WeilFormula {
    pub fn select(k: usize, k_prime: usize) -> Self {
        if k % 2 == 1 || (k == 0 && k_prime == 0) {
            WeilFormula::Trivial
        } else {
            WeilFormula::Sign
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableMetadata {
    pub m: usize,
    pub m_prime: usize,
    pub parity: usize,
    pub parity_prime: usize,
    pub k: usize,
    pub k_prime: usize,
    pub r: usize,
    /// `None` below the first occurrence `m' < m(k')`.
    pub r_prime: Option<usize>,
    pub first_occurrence: usize,
    pub formula: WeilFormula,
    pub sgn: LinearCharacter,
}

/// Sparse nonnegative matrix over `Irr(W_r) x Irr(W_{r'})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub metadata: TableMetadata,
    pub row_labels: Vec<Bipartition>,
    pub col_labels: Vec<Bipartition>,
    entries: BTreeMap<(usize, usize), u64>,
}

impl MultiplicityTable {
    pub fn entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.entries
    }

    /// True when the correspondence is zero.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, row: &Bipartition, col: &Bipartition) -> u64 {
        let (Ok(i), Ok(j)) = (self.row_labels.binary_search(row), self.col_labels.binary_search(col)) else {
            return 0;
        };
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries of the row labelled `row`.
    pub fn row(&self, row: &Bipartition) -> Vec<(Bipartition, u64)> {
        let Ok(i) = self.row_labels.binary_search(row) else {
            return Vec::new();
        };
        self.entries
            .range((i, 0)..(i + 1, 0))
            .map(|(&(_, j), &mult)| (self.col_labels[j].clone(), mult))
            .collect()
    }

    /// Nonzero entries of the column labelled `col`.
    pub fn column(&self, col: &Bipartition) -> Vec<(Bipartition, u64)> {
        let Ok(j) = self.col_labels.binary_search(col) else {
            return Vec::new();
        };
        self.entries
            .iter()
            .filter(|(&(_, jj), _)| jj == j)
            .map(|(&(i, _), &mult)| (self.row_labels[i].clone(), mult))
            .collect()
    }

    pub fn to_json(&self) -> TableJson {
        TableJson {
            metadata: self.metadata.clone(),
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), &m)| [i as u64, j as u64, m])
                .collect(),
        }
    }

    pub fn from_json(json: TableJson) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for [i, j, m] in json.entries {
            let (i, j) = (i as usize, j as usize);
            if i >= json.row_labels.len() || j >= json.col_labels.len() || m == 0 {
                return Err(Error::Parse(format!("bad table entry [{i},{j},{m}]")));
            }
            entries.insert((i, j), m);
        }
        Ok(MultiplicityTable {
            metadata: json.metadata,
            row_labels: json.row_labels,
            col_labels: json.col_labels,
            entries,
        })
    }

    /// Aligned text matrix; zeros print as `.`.
    pub fn to_text(&self) -> String {
        let md = &self.metadata;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "Omega m={} m'={} k={} k'={} r={} r'={} formula={:?} sgn={}",
            md.m,
            md.m_prime,
            md.k,
            md.k_prime,
            md.r,
            md.r_prime.map_or("-".to_string(), |r| r.to_string()),
            md.formula,
            md.sgn
        );
        if self.col_labels.is_empty() {
            let _ = writeln!(out, "zero (m' below first occurrence {})", md.first_occurrence);
            return out;
        }
        let row_names: Vec<String> = self.row_labels.iter().map(ToString::to_string).collect();
        let col_names: Vec<String> = self.col_labels.iter().map(ToString::to_string).collect();
        let head = row_names.iter().map(String::len).max().unwrap_or(0);
        let widths: Vec<usize> = col_names.iter().map(|c| c.len().max(1)).collect();
        let _ = write!(out, "{:head$}", "");
        for (c, w) in col_names.iter().zip(&widths) {
            let _ = write!(out, " {c:>w$}");
        }
        out.push('\n');
        for (i, r) in row_names.iter().enumerate() {
            let _ = write!(out, "{r:head$}");
            for (j, w) in widths.iter().enumerate() {
                let cell = self.entries.get(&(i, j)).map_or(".".to_string(), |m| m.to_string());
                let _ = write!(out, " {cell:>w$}");
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for MultiplicityTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// JSON form: `{metadata, row_labels, col_labels, entries: [[i, j, mult]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub metadata: TableMetadata,
    pub row_labels: Vec<Bipartition>,
    pub col_labels: Vec<Bipartition>,
    pub entries: Vec<[u64; 3]>,
}

/// Series data shared by the table and image computations.
#[derive(Clone, Copy, Debug)]
struct Shape {
    k_prime: usize,
    r: usize,
    r_prime: Option<usize>,
    first_occurrence: usize,
}

fn shape(ctx: &TowerContext, ctx_prime: &TowerContext, k: usize, config: &HoweConfig) -> Result<Shape> {
    ctx.validate()?;
    ctx_prime.validate()?;
    let r = ctx.series_rank(k)?;
    let k_prime = config.theta_rule.theta(k, ctx_prime.dim_parity);
    let first_occurrence = witt_index_of_cuspidal(k_prime);
    let r_prime = match ctx_prime.witt_index.checked_sub(first_occurrence) {
        Some(rp) => {
            // the rule must land in the partner tower
            ctx_prime.series_rank(k_prime)?;
            Some(rp)
        }
        None => None,
    };
    Ok(Shape {
        k_prime,
        r,
        r_prime,
        first_occurrence,
    })
}

/// The multiplicity table of `Omega_{m,m',k}`.
///
/// Empty (with no column labels) when `m' < m(k')`.
pub fn omega_unipotent(
    ctx: &TowerContext,
    ctx_prime: &TowerContext,
    k: usize,
    config: &HoweConfig,
) -> Result<MultiplicityTable> {
    let sh = shape(ctx, ctx_prime, k, config)?;
    let formula = WeilFormula::select(k, sh.k_prime);
    let metadata = TableMetadata {
        m: ctx.witt_index,
        m_prime: ctx_prime.witt_index,
        parity: ctx.dim_parity.bit(),
        parity_prime: ctx_prime.dim_parity.bit(),
        k,
        k_prime: sh.k_prime,
        r: sh.r,
        r_prime: sh.r_prime,
        first_occurrence: sh.first_occurrence,
        formula,
        sgn: config.sgn,
    };
    let row_labels = bipartitions_of(sh.r);
    let Some(r_prime) = sh.r_prime else {
        return Ok(MultiplicityTable {
            metadata,
            row_labels,
            col_labels: Vec::new(),
            entries: BTreeMap::new(),
        });
    };
    let col_labels = bipartitions_of(r_prime);
    let left_linear = match formula {
        WeilFormula::Trivial => LinearCharacter::Trivial,
        WeilFormula::Sign => config.sgn,
    };
    let mut entries = BTreeMap::new();
    for l in 0..=sh.r.min(r_prime) {
        for chi in bipartitions_of(l) {
            let left = induce_with_linear(&chi, sh.r - l, left_linear);
            let right = induce_with_linear(&twist_label(&chi, config.sgn), r_prime - l, LinearCharacter::Trivial);
            for a in &left {
                let i = row_labels.binary_search(a).expect("Pieri output has rank r");
                for b in &right {
                    let j = col_labels.binary_search(b).expect("Pieri output has rank r'");
                    *entries.entry((i, j)).or_insert(0) += 1;
                }
            }
        }
    }
    Ok(MultiplicityTable {
        metadata,
        row_labels,
        col_labels,
        entries,
    })
}

fn check_label(pi: &SeriesLabel, ctx: &TowerContext) -> Result<usize> {
    let r = ctx.series_rank(pi.k)?;
    if pi.char_label.norm() != r {
        return Err(Error::LabelMismatch {
            label: pi.char_label.to_string(),
            expected: r,
        });
    }
    Ok(r)
}

/// `Theta(pi)` for a member `pi` of the unipotent series `k`: the row of
/// the table, as labelled images with their multiplicities.
pub fn theta_images(
    pi: &SeriesLabel,
    ctx: &TowerContext,
    ctx_prime: &TowerContext,
    config: &HoweConfig,
) -> Result<Vec<(SeriesLabel, u64)>> {
    check_label(pi, ctx)?;
    let table = omega_unipotent(ctx, ctx_prime, pi.k, config)?;
    let k_prime = table.metadata.k_prime;
    Ok(table
        .row(&pi.char_label)
        .into_iter()
        .map(|(b, mult)| (SeriesLabel::new(k_prime, b), mult))
        .collect())
}

/// The unique minimal and maximal elements of `Theta(pi)` under the
/// configured order.
pub fn extremal_images(
    pi: &SeriesLabel,
    ctx: &TowerContext,
    ctx_prime: &TowerContext,
    config: &HoweConfig,
) -> Result<(SeriesLabel, SeriesLabel)> {
    let images = theta_images(pi, ctx, ctx_prime, config)?;
    let Some((first, _)) = images.first() else {
        return Err(Error::EmptyImage);
    };
    let k_prime = first.k;
    let labels: Vec<Bipartition> = images.into_iter().map(|(s, _)| s.char_label).collect();
    let min = unique_extreme(config.order.as_ref(), &labels, Extreme::Min)?.clone();
    let max = unique_extreme(config.order.as_ref(), &labels, Extreme::Max)?.clone();
    Ok((SeriesLabel::new(k_prime, min), SeriesLabel::new(k_prime, max)))
}
