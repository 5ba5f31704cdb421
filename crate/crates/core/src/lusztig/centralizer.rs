//! Centralizers of semisimple elements.
//!
//! `C_G(s)` is a product over Frobenius orbits of eigenvalues. The orbit
//! of `1` gives a unitary group `U_{nu_1}` (the block the unipotent
//! correspondence acts on); every other orbit gives a factor of
//! `G_#(s)`, unitary or general linear over an extension of `F_q`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::orbit::SemisimpleDescriptor;
use crate::error::{Error, Result};
use crate::howe::cuspidal::TowerContext;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorKind {
    Linear,
    Unitary,
}

/// One factor `GL_nu(q^d)` or `U_nu(q^d)` of `G_#(s)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CentralizerFactor {
    pub kind: FactorKind,
    /// `nu`.
    pub size: usize,
    /// `d`, the orbit size.
    pub field_degree: usize,
    pub exponents: BTreeSet<u64>,
}

impl CentralizerFactor {
    /// Contribution `d * nu` to the total dimension.
    pub fn rank(&self) -> usize {
        self.size * self.field_degree
    }
}

impl fmt::Display for CentralizerFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            FactorKind::Linear => "GL",
            FactorKind::Unitary => "U",
        };
        write!(
            f,
            "{name}_{}(q^{}) at {:?}",
            self.size, self.field_degree, self.exponents
        )
    }
}

/// Odd orbit size gives a unitary factor, even size a linear one. Orbits
/// of `+-1` have size one, hence unitary.
pub fn classify_orbit(orbit_size: usize) -> FactorKind {
    if orbit_size % 2 == 1 {
        FactorKind::Unitary
    } else {
        FactorKind::Linear
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralizerDecomposition {
    /// Factors of `G_#(s)`, one per orbit other than `{1}`.
    pub factors: Vec<CentralizerFactor>,
    /// `U_{nu_1}` as a tower context: Witt index `floor(nu_1 / 2)`.
    pub unipotent_block: TowerContext,
    /// `l = m - floor(nu_1 / 2)`.
    pub reduction_l: usize,
}

fn check_fits(s: &SemisimpleDescriptor, ctx: &TowerContext) -> Result<()> {
    if s.q() != ctx.q {
        return Err(Error::InvalidTower(format!(
            "descriptor has q = {}, group has q = {}",
            s.q(),
            ctx.q
        )));
    }
    if s.dimension() != ctx.dimension() {
        return Err(Error::RankSumMismatch {
            expected: ctx.dimension(),
            found: s.dimension(),
        });
    }
    Ok(())
}

pub fn centralizer_decomposition(s: &SemisimpleDescriptor, ctx: &TowerContext) -> Result<CentralizerDecomposition> {
    check_fits(s, ctx)?;
    let factors = s
        .non_one_orbits()
        .map(|o| CentralizerFactor {
            kind: classify_orbit(o.size()),
            size: o.multiplicity(),
            field_degree: o.size(),
            exponents: o.exponents().clone(),
        })
        .collect();
    let unipotent_block = TowerContext::of_dimension(ctx.q, s.one_multiplicity());
    Ok(CentralizerDecomposition {
        factors,
        unipotent_block,
        reduction_l: ctx.witt_index - unipotent_block.witt_index,
    })
}

/// The descriptor on the partner group: same non-1 orbits, eigenvalue 1
/// filling the remaining dimension.
pub fn match_semisimple(
    s: &SemisimpleDescriptor,
    ctx: &TowerContext,
    ctx_prime: &TowerContext,
) -> Result<SemisimpleDescriptor> {
    check_fits(s, ctx)?;
    let needed = s.dimension() - s.one_multiplicity();
    let available = ctx_prime.dimension();
    let ones = available
        .checked_sub(needed)
        .ok_or(Error::DoesNotFit { needed, available })?;
    Ok(s.with_one_multiplicity(ones))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::howe::cuspidal::Parity;

    #[test]
    fn trivial_element() {
        let ctx = TowerContext::new(2, Parity::Odd);
        let s = SemisimpleDescriptor::identity(3, 5).unwrap();
        let dec = centralizer_decomposition(&s, &ctx).unwrap();
        assert!(dec.factors.is_empty());
        assert_eq!(dec.reduction_l, 0);
        assert_eq!(dec.unipotent_block, ctx);
    }

    #[test]
    fn minus_one_block() {
        let ctx = TowerContext::new(1, Parity::Odd);
        let s = SemisimpleDescriptor::parse(3, 8, "0^1,4^2").unwrap();
        let dec = centralizer_decomposition(&s, &ctx).unwrap();
        assert_eq!(dec.factors.len(), 1);
        let f = &dec.factors[0];
        assert_eq!((f.kind, f.size, f.field_degree), (FactorKind::Unitary, 2, 1));
        assert_eq!(dec.unipotent_block.dimension(), 1);
        assert_eq!(dec.reduction_l, 1);
    }

    #[test]
    fn rank_mismatch() {
        let ctx = TowerContext::new(2, Parity::Even);
        let s = SemisimpleDescriptor::parse(3, 8, "0^1,4^2").unwrap();
        assert_eq!(
            centralizer_decomposition(&s, &ctx),
            Err(Error::RankSumMismatch { expected: 4, found: 3 })
        );
    }

    #[test]
    fn matching() {
        let ctx = TowerContext::new(1, Parity::Odd);
        let s = SemisimpleDescriptor::parse(3, 8, "0^1,4^2").unwrap();
        let sp = match_semisimple(&s, &ctx, &TowerContext::new(2, Parity::Odd)).unwrap();
        assert_eq!(sp, SemisimpleDescriptor::parse(3, 8, "4^2,0^3").unwrap());
        let big = SemisimpleDescriptor::parse(3, 8, "4^4").unwrap();
        assert_eq!(
            match_semisimple(
                &big,
                &TowerContext::new(2, Parity::Even),
                &TowerContext::new(1, Parity::Even)
            ),
            Err(Error::DoesNotFit {
                needed: 4,
                available: 2
            })
        );
        let id = SemisimpleDescriptor::identity(3, 3).unwrap();
        let idp = match_semisimple(&id, &ctx, &TowerContext::new(3, Parity::Even)).unwrap();
        assert_eq!(idp, SemisimpleDescriptor::identity(3, 6).unwrap());
    }
}
