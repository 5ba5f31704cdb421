//! Character tables of `W_n`.
//!
//! The irreducible character labelled `(alpha, beta)` is induced from
//! `W_a x W_b` (`a = |alpha|`, `b = |beta|`) of
//! `(chi_alpha o pi) x ((chi_beta o pi) * sign_changes)`, where `pi` is the
//! projection onto the symmetric group. Every table is certified
//! orthonormal before it is handed out.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::Serialize;

use super::class_function::{induce_class_function, rational, ClassFunction, ProductClassFunction};
use super::classes::{check_bound, class_labels, conjugacy_classes, group_order, BnClassLabel, DEFAULT_ORACLE_BOUND};
use super::linear::{linear_character, LinearCharacter};
use super::symmetric::sn_character_value;
use crate::error::{Error, Result};
use crate::partition::{bipartitions_of, Bipartition, Partition};

#[derive(Clone, Debug)]
pub struct CharacterTable {
    rank: usize,
    labels: Vec<Bipartition>,
    classes: Vec<BnClassLabel>,
    class_sizes: BTreeMap<BnClassLabel, u64>,
    irreducibles: BTreeMap<Bipartition, ClassFunction>,
}

/// `chi_alpha o pi` on `W_a`.
fn pulled_back(alpha: &Partition) -> ClassFunction {
    ClassFunction::from_fn(alpha.norm(), |c| {
        rational(sn_character_value(alpha, &c.cycle_type()).expect("norms agree"))
    })
}

pub fn build_character_table(n: usize, bound: usize) -> Result<CharacterTable> {
    check_bound(n, bound)?;
    let class_sizes = conjugacy_classes(n, bound)?;
    let labels = bipartitions_of(n);
    let mut irreducibles = BTreeMap::new();
    for label in &labels {
        let b = label.second.norm();
        let left = pulled_back(&label.first);
        let right = &pulled_back(&label.second) * &linear_character(b, LinearCharacter::SignChanges);
        let chi = induce_class_function(&ProductClassFunction::outer(&left, &right), bound)?;
        irreducibles.insert(label.clone(), chi);
    }
    let table = CharacterTable {
        rank: n,
        labels,
        classes: class_labels(n),
        class_sizes,
        irreducibles,
    };
    table.certify()?;
    Ok(table)
}

static TABLES: OnceLock<Mutex<BTreeMap<usize, Arc<CharacterTable>>>> = OnceLock::new();

/// Cached table for `W_n` under the default oracle bound.
pub fn character_table(n: usize) -> Result<Arc<CharacterTable>> {
    check_bound(n, DEFAULT_ORACLE_BOUND)?;
    let cache = TABLES.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(t) = cache.lock().expect("table cache poisoned").get(&n) {
        return Ok(Arc::clone(t));
    }
    // built outside the lock so distinct ranks can be built concurrently
    let table = Arc::new(build_character_table(n, DEFAULT_ORACLE_BOUND)?);
    let mut guard = cache.lock().expect("table cache poisoned");
    Ok(Arc::clone(guard.entry(n).or_insert(table)))
}

impl CharacterTable {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Irreducible labels in canonical order.
    pub fn labels(&self) -> &[Bipartition] {
        &self.labels
    }

    pub fn classes(&self) -> &[BnClassLabel] {
        &self.classes
    }

    pub fn class_sizes(&self) -> &BTreeMap<BnClassLabel, u64> {
        &self.class_sizes
    }

    pub fn irreducible(&self, label: &Bipartition) -> Result<&ClassFunction> {
        self.irreducibles.get(label).ok_or_else(|| Error::LabelMismatch {
            label: label.to_string(),
            expected: self.rank,
        })
    }

    pub fn irreducibles(&self) -> impl Iterator<Item = (&Bipartition, &ClassFunction)> {
        self.irreducibles.iter()
    }

    pub fn degree(&self, label: &Bipartition) -> Result<i64> {
        let d = self.irreducible(label)?.degree();
        i64::try_from(d.to_integer()).map_err(|_| Error::Invariant("degree overflow".into()))
    }

    /// Row orthonormality, column orthogonality, integrality and class-size sum.
    pub fn certify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Invariant(format!("W_{}: {msg}", self.rank)));
        if self.class_sizes.values().sum::<u64>() != group_order(self.rank) {
            return fail("class sizes do not sum to the group order".into());
        }
        if self.irreducibles.len() != self.classes.len() {
            return fail("table is not square".into());
        }
        for (a, chi) in &self.irreducibles {
            if !chi.is_integral() {
                return fail(format!("character {a} has non-integral values"));
            }
            for (b, psi) in &self.irreducibles {
                let ip = chi.inner_product(psi)?;
                let expected = if a == b { One::one() } else { Zero::zero() };
                if ip != expected {
                    return fail(format!("<{a}, {b}> = {ip}"));
                }
            }
        }
        for c in &self.classes {
            for d in &self.classes {
                let sum: i64 = self
                    .irreducibles
                    .values()
                    .map(|chi| {
                        let v = chi.value(c) * chi.value(d);
                        i64::try_from(v.to_integer()).unwrap_or(i64::MAX)
                    })
                    .sum();
                let expected = if c == d { c.centralizer_order() as i64 } else { 0 };
                if sum != expected {
                    return fail(format!("column orthogonality fails at ({c}, {d})"));
                }
            }
        }
        Ok(())
    }

    /// Multiplicities `<f, chi>` of every irreducible in `f`, zeros omitted.
    ///
    /// The reconstruction `sum mult * chi` is checked against `f`.
    pub fn decompose(&self, f: &ClassFunction) -> Result<BTreeMap<Bipartition, i64>> {
        if f.rank() != self.rank {
            return Err(Error::NormMismatch {
                left: f.rank(),
                right: self.rank,
            });
        }
        let mut out = BTreeMap::new();
        let mut rebuilt = ClassFunction::zero(self.rank);
        for (label, chi) in &self.irreducibles {
            let ip = f.inner_product(chi)?;
            if !ip.is_integer() {
                return Err(Error::NotVirtualCharacter {
                    label: label.to_string(),
                    value: ip.to_string(),
                });
            }
            let mult = i64::try_from(ip.to_integer()).map_err(|_| Error::Invariant("multiplicity overflow".into()))?;
            if mult != 0 {
                rebuilt = &rebuilt + &chi.scale(&rational(mult));
                out.insert(label.clone(), mult);
            }
        }
        if rebuilt != *f {
            return Err(Error::NotVirtualCharacter {
                label: "reconstruction".into(),
                value: "residual is nonzero".into(),
            });
        }
        Ok(out)
    }

    /// Label permutation induced by tensoring with a linear character.
    pub fn tensor_label_map(&self, which: LinearCharacter) -> Result<BTreeMap<Bipartition, Bipartition>> {
        let lin = linear_character(self.rank, which);
        let mut map = BTreeMap::new();
        for (label, chi) in &self.irreducibles {
            let twisted = self.decompose(&(chi * &lin))?;
            let mut iter = twisted.into_iter();
            match (iter.next(), iter.next()) {
                (Some((image, 1)), None) => {
                    map.insert(label.clone(), image);
                }
                _ => return Err(Error::Invariant(format!("{which} twist of {label} is not irreducible"))),
            }
        }
        Ok(map)
    }

    pub fn to_json(&self) -> TableJson {
        TableJson {
            rank: self.rank,
            class_labels: self
                .classes
                .iter()
                .map(|c| (c.positive_cycles.clone(), c.negative_cycles.clone()))
                .collect(),
            class_sizes: self.classes.iter().map(|c| self.class_sizes[c]).collect(),
            character_labels: self.labels.clone(),
            values: self
                .labels
                .iter()
                .map(|l| {
                    self.irreducibles[l]
                        .integer_values()
                        .expect("certified tables are integral")
                })
                .collect(),
        }
    }
}

/// JSON export: labels, sizes and the integer value matrix, all in canonical order.
#[derive(Clone, Debug, Serialize)]
pub struct TableJson {
    pub rank: usize,
    pub class_labels: Vec<(Partition, Partition)>,
    pub class_sizes: Vec<u64>,
    pub character_labels: Vec<Bipartition>,
    pub values: Vec<Vec<i64>>,
}

/// Oracle-side decomposition using the cached table.
pub fn decompose(f: &ClassFunction) -> Result<BTreeMap<Bipartition, i64>> {
    character_table(f.rank())?.decompose(f)
}

pub fn tensor_label_map(n: usize, which: LinearCharacter) -> Result<BTreeMap<Bipartition, Bipartition>> {
    character_table(n)?.tensor_label_map(which)
}
