//! Oracle-side recomputation of everything the combinatorial side does.
//!
//! Nothing here goes through the Pieri rules or the closed-form label
//! twists: inductions are explicit induced class functions, twists are
//! pointwise products, and multiplicities are inner products.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::bn::class_function::rational;
use crate::bn::classes::class_labels;
use crate::bn::{
    character_table, induce_class_function, linear_character, ClassFunction, LinearCharacter, ProductClassFunction,
    Rational, DEFAULT_ORACLE_BOUND,
};
use crate::error::{Error, Result};
use crate::howe::cuspidal::{triangular, witt_index_of_cuspidal, Parity, TowerContext};
use crate::howe::omega::{omega_unipotent, MultiplicityTable, WeilFormula};
use crate::howe::pieri::{induce_with_linear, twist_label};
use crate::howe::HoweConfig;
use crate::lusztig::{omega_full, CuspidalPair};
use crate::partition::{bipartitions_of, Bipartition};

/// `Ind_{W_l x W_s}^{W_{l+s}}(chi (x) which)` as a class function.
pub fn oracle_induced(chi: &ClassFunction, s: usize, which: LinearCharacter) -> Result<ClassFunction> {
    let f = ProductClassFunction::outer(chi, &linear_character(s, which));
    induce_class_function(&f, DEFAULT_ORACLE_BOUND)
}

/// Oracle decomposition of `Ind(chi_label (x) which)`.
pub fn oracle_induce_with_linear(
    label: &Bipartition,
    s: usize,
    which: LinearCharacter,
) -> Result<BTreeMap<Bipartition, i64>> {
    let chi = character_table(label.norm())?.irreducible(label)?.clone();
    let induced = oracle_induced(&chi, s, which)?;
    character_table(label.norm() + s)?.decompose(&induced)
}

/// The character of `Omega` on `W_r x W_{r'}`, summed term by term.
pub fn oracle_omega(
    r: usize,
    r_prime: usize,
    formula: WeilFormula,
    sgn: LinearCharacter,
) -> Result<ProductClassFunction> {
    let left_linear = match formula {
        WeilFormula::Trivial => LinearCharacter::Trivial,
        WeilFormula::Sign => sgn,
    };
    let mut omega = ProductClassFunction::zero((r, r_prime));
    for l in 0..=r.min(r_prime) {
        let table = character_table(l)?;
        let sgn_l = linear_character(l, sgn);
        for (_, chi) in table.irreducibles() {
            let left = oracle_induced(chi, r - l, left_linear)?;
            let right = oracle_induced(&(chi * &sgn_l), r_prime - l, LinearCharacter::Trivial)?;
            omega.add_assign(&ProductClassFunction::outer(&left, &right));
        }
    }
    Ok(omega)
}

/// `<omega, chi (x) chi'>` for every pair of irreducibles, zeros omitted.
pub fn oracle_multiplicities(omega: &ProductClassFunction) -> Result<BTreeMap<(Bipartition, Bipartition), i64>> {
    let (r, r_prime) = omega.ranks();
    let left = character_table(r)?;
    let right = character_table(r_prime)?;
    let rows = class_labels(r);
    let cols = class_labels(r_prime);
    // contract the right factor first: partial[c][chi'] = sum_d omega(c,d) chi'(d) / z_d
    let mut partial: Vec<Vec<Rational>> = Vec::with_capacity(rows.len());
    for c in &rows {
        let mut row = Vec::new();
        for (_, psi) in right.irreducibles() {
            let mut acc = Rational::zero();
            for d in &cols {
                let v = omega.value(c, d);
                if !v.is_zero() {
                    acc += v * psi.value(d) / rational(d.centralizer_order() as i64);
                }
            }
            row.push(acc);
        }
        partial.push(row);
    }
    let mut out = BTreeMap::new();
    for (chi_label, chi) in left.irreducibles() {
        for (j, (psi_label, _)) in right.irreducibles().enumerate() {
            let mut acc = Rational::zero();
            for (i, c) in rows.iter().enumerate() {
                acc += &partial[i][j] * chi.value(c) / rational(c.centralizer_order() as i64);
            }
            if !acc.is_integer() {
                return Err(Error::NotVirtualCharacter {
                    label: format!("{chi_label} x {psi_label}"),
                    value: acc.to_string(),
                });
            }
            let mult = i64::try_from(acc.to_integer()).map_err(|_| Error::Invariant("overflow".into()))?;
            if mult != 0 {
                out.insert((chi_label.clone(), psi_label.clone()), mult);
            }
        }
    }
    Ok(out)
}

fn table_as_map(table: &MultiplicityTable) -> BTreeMap<(Bipartition, Bipartition), i64> {
    table
        .entries()
        .iter()
        .map(|(&(i, j), &m)| ((table.row_labels[i].clone(), table.col_labels[j].clone()), m as i64))
        .collect()
}

/// Compares the combinatorial table of `Omega_{m,m',k}` with the oracle,
/// entry by entry, and checks the degree identity.
pub fn check_omega(ctx: &TowerContext, ctx_prime: &TowerContext, k: usize, config: &HoweConfig) -> Result<()> {
    let table = omega_unipotent(ctx, ctx_prime, k, config)?;
    let md = &table.metadata;
    let Some(r_prime) = md.r_prime else {
        return if table.is_empty() {
            Ok(())
        } else {
            Err(Error::Invariant("table below first occurrence is not empty".into()))
        };
    };
    let omega = oracle_omega(md.r, r_prime, md.formula, config.sgn)?;
    let oracle = oracle_multiplicities(&omega)?;
    let ours = table_as_map(&table);
    if oracle != ours {
        let diff: Vec<String> = oracle
            .keys()
            .chain(ours.keys())
            .filter(|key| oracle.get(*key) != ours.get(*key))
            .take(3)
            .map(|(a, b)| {
                format!(
                    "{a} x {b}: oracle {:?}, table {:?}",
                    oracle.get(&(a.clone(), b.clone())),
                    ours.get(&(a.clone(), b.clone()))
                )
            })
            .collect();
        return Err(Error::Invariant(format!(
            "Omega m={} m'={} k={}: {}",
            md.m,
            md.m_prime,
            k,
            diff.join("; ")
        )));
    }
    let left = character_table(md.r)?;
    let right = character_table(r_prime)?;
    let mut degree = 0i64;
    for (a, b) in ours.keys() {
        degree += ours[&(a.clone(), b.clone())] * left.degree(a)? * right.degree(b)?;
    }
    if rational(degree) != omega.degree() {
        return Err(Error::Invariant(format!(
            "degree identity fails: table gives {degree}, oracle {}",
            omega.degree()
        )));
    }
    Ok(())
}

/// Compares Pieri-rule inductions with the oracle for all `l + s <= max_rank`.
pub fn check_inductions(max_rank: usize, which: LinearCharacter) -> Result<usize> {
    let mut checked = 0;
    for r in 0..=max_rank {
        for l in 0..=r {
            for chi in bipartitions_of(l) {
                let oracle = oracle_induce_with_linear(&chi, r - l, which)?;
                let pieri: BTreeMap<Bipartition, i64> = induce_with_linear(&chi, r - l, which)
                    .into_iter()
                    .map(|b| (b, 1))
                    .collect();
                if oracle != pieri {
                    return Err(Error::Invariant(format!(
                        "Ind(chi_{chi} x {which}) to W_{r}: oracle {oracle:?}, Pieri {pieri:?}"
                    )));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// Every `(m, m', k)` of the towers with `r, r' <= max_r` and `k <= max_k`.
/// The source parity is forced by `k`; both partner parities are visited.
pub fn omega_instances(max_r: usize, max_k: usize) -> Vec<(TowerContext, TowerContext, usize)> {
    let mut out = Vec::new();
    for k in 0..=max_k {
        let parity = Parity::of(triangular(k));
        for parity_prime in [Parity::Even, Parity::Odd] {
            let k_prime = crate::howe::theta_cuspidal(k, parity_prime);
            for r in 0..=max_r {
                for r_prime in 0..=max_r {
                    out.push((
                        TowerContext::new(r + witt_index_of_cuspidal(k), parity),
                        TowerContext::new(r_prime + witt_index_of_cuspidal(k_prime), parity_prime),
                        k,
                    ));
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.name, self.detail)
    }
}

fn report(name: &str, outcome: Result<String>) -> PropertyReport {
    match outcome {
        Ok(detail) => PropertyReport {
            name: name.to_string(),
            passed: true,
            detail,
        },
        Err(e) => PropertyReport {
            name: name.to_string(),
            passed: false,
            detail: e.to_string(),
        },
    }
}

/// The oracle-equivalence suite, up to `max_rank` (capped by the oracle bound).
pub fn run_suite(max_rank: usize, config: &HoweConfig) -> Vec<PropertyReport> {
    let max_rank = max_rank.min(DEFAULT_ORACLE_BOUND);
    let mut out = Vec::new();

    out.push(report(
        "character tables",
        (0..=max_rank)
            .map(|n| character_table(n).and_then(|t| t.certify()))
            .collect::<Result<Vec<_>>>()
            .map(|v| {
                format!(
                    "W_0..W_{max_rank} orthonormal, integral, class sizes certified ({} tables)",
                    v.len()
                )
            }),
    ));

    out.push(report(
        "closed-form twists",
        (|| {
            for n in 0..=max_rank {
                let table = character_table(n)?;
                for which in LinearCharacter::ALL {
                    for (label, image) in table.tensor_label_map(which)? {
                        if twist_label(&label, which) != image {
                            return Err(Error::Invariant(format!(
                                "{which} twist of {label}: oracle gives {image}"
                            )));
                        }
                    }
                }
            }
            Ok(format!("4 linear characters, ranks 0..={max_rank}"))
        })(),
    ));

    for which in [LinearCharacter::Trivial, config.sgn] {
        out.push(report(
            &format!("Pieri induction ({which})"),
            check_inductions(max_rank, which).map(|n| format!("{n} inductions match the oracle")),
        ));
    }

    out.push(report(
        "Omega oracle equivalence",
        (|| {
            let instances = omega_instances(max_rank.min(4), 3);
            for (ctx, ctx_prime, k) in &instances {
                check_omega(ctx, ctx_prime, *k, config)?;
            }
            Ok(format!("{} tables match entrywise, degrees agree", instances.len()))
        })(),
    ));

    out.push(report(
        "reduction consistency",
        (|| {
            let instances = omega_instances(max_rank.min(4), 3);
            for (ctx, ctx_prime, k) in &instances {
                let direct = omega_unipotent(ctx, ctx_prime, *k, config)?;
                if direct.is_empty() {
                    continue;
                }
                let pair = CuspidalPair::unipotent(*k, ctx)?;
                let full = omega_full(&pair, ctx, ctx_prime, config)?;
                if full.unipotent_table != direct || !full.hash_descriptor.is_empty() {
                    return Err(Error::Invariant(format!(
                        "omega_full differs from omega_unipotent at m={} m'={} k={k}",
                        ctx.witt_index, ctx_prime.witt_index
                    )));
                }
            }
            Ok("trivial semisimple part reproduces the unipotent tables".to_string())
        })(),
    ));

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        for r in run_suite(2, &HoweConfig::default()) {
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn oracle_sees_the_one_one_table() {
        let omega = oracle_omega(1, 1, WeilFormula::Trivial, LinearCharacter::CoxeterSign).unwrap();
        let mults = oracle_multiplicities(&omega).unwrap();
        let triv = Bipartition::from_parts(&[1], &[]).unwrap();
        let sgn = Bipartition::from_parts(&[], &[1]).unwrap();
        assert_eq!(
            mults,
            BTreeMap::from([
                ((triv.clone(), triv.clone()), 1),
                ((triv.clone(), sgn.clone()), 1),
                ((sgn, triv), 1)
            ])
        );
    }
}
