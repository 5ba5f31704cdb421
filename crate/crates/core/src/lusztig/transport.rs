//! Transport of cuspidal supports and Harish-Chandra series.
//!
//! A cuspidal support of `G_m` is `[sigma_1, .., sigma_r, phi]`: cuspidal
//! characters `sigma_i` of `GL_{t_i}` and a cuspidal `phi` of
//! `G_{m - |t|}`. Under the correspondence the `sigma` block travels
//! unchanged, `phi` goes to `theta(phi)`, and the number of trivial `GL_1`
//! entries is adjusted so the ranks add up on the partner side.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::centralizer::{centralizer_decomposition, match_semisimple, CentralizerFactor};
use super::orbit::SemisimpleDescriptor;
use crate::error::{Error, Result};
use crate::howe::config::HoweConfig;
use crate::howe::cuspidal::{witt_index_of_cuspidal, TowerContext};

/// A cuspidal character of `GL_t`, opaque apart from triviality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GlCuspidal {
    pub size: usize,
    pub label: String,
}

pub const TRIVIAL_LABEL: &str = "1";

impl GlCuspidal {
    pub fn trivial() -> Self {
        GlCuspidal {
            size: 1,
            label: TRIVIAL_LABEL.to_string(),
        }
    }

    pub fn new(size: usize, label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if size == 0 || label.is_empty() || (label == TRIVIAL_LABEL && size != 1) {
            return Err(Error::InvalidSupport(format!("bad GL cuspidal {size}:{label}")));
        }
        Ok(GlCuspidal { size, label })
    }

    pub fn is_trivial(&self) -> bool {
        self.label == TRIVIAL_LABEL
    }
}

impl Ord for GlCuspidal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.is_trivial()
            .cmp(&other.is_trivial())
            .then_with(|| other.size.cmp(&self.size))
            .then_with(|| self.label.cmp(&other.label))
    }
}

impl PartialOrd for GlCuspidal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GlCuspidal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            f.write_str(TRIVIAL_LABEL)
        } else {
            write!(f, "{}:{}", self.size, self.label)
        }
    }
}

impl FromStr for GlCuspidal {
    type Err = Error;
    /// `1` (or `1:1`) is the trivial character of `GL_1`; otherwise `t:label`.
    fn from_str(token: &str) -> Result<Self> {
        let token = token.trim();
        if token == TRIVIAL_LABEL {
            return Ok(GlCuspidal::trivial());
        }
        let (t, label) = token
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected t:label, got {token:?}")))?;
        let size = t
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad size in {token:?}")))?;
        GlCuspidal::new(size, label.trim())
    }
}

/// Parses a comma-separated GL part, e.g. `1,1,2:sigma`.
pub fn parse_gl_part(spec: &str) -> Result<Vec<GlCuspidal>> {
    let mut out: Vec<GlCuspidal> = spec
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect::<Result<_>>()?;
    out.sort();
    Ok(out)
}

fn gl_rank(part: &[GlCuspidal]) -> usize {
    part.iter().map(|g| g.size).sum()
}

/// The cuspidal `phi` on the unitary part of the Levi.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CuspidalDatum {
    /// `lambda_k` on `G_{m(k)}`.
    Unipotent { k: usize },
    /// Any other cuspidal, given with its partner at first occurrence.
    Explicit {
        label: String,
        witt_index: usize,
        partner_label: String,
        partner_witt_index: usize,
    },
}

impl CuspidalDatum {
    pub fn witt_index(&self) -> usize {
        match self {
            CuspidalDatum::Unipotent { k } => witt_index_of_cuspidal(*k),
            CuspidalDatum::Explicit { witt_index, .. } => *witt_index,
        }
    }

    /// `theta(phi)` on the partner tower, with its Witt index (the first
    /// occurrence index).
    pub fn theta(&self, target: &TowerContext, config: &HoweConfig) -> (CuspidalDatum, usize) {
        match self {
            CuspidalDatum::Unipotent { k } => {
                let kp = config.theta_rule.theta(*k, target.dim_parity);
                (CuspidalDatum::Unipotent { k: kp }, witt_index_of_cuspidal(kp))
            }
            CuspidalDatum::Explicit {
                label,
                witt_index,
                partner_label,
                partner_witt_index,
            } => (
                CuspidalDatum::Explicit {
                    label: partner_label.clone(),
                    witt_index: *partner_witt_index,
                    partner_label: label.clone(),
                    partner_witt_index: *witt_index,
                },
                *partner_witt_index,
            ),
        }
    }
}

impl fmt::Display for CuspidalDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CuspidalDatum::Unipotent { k } => write!(f, "lambda_{k}"),
            CuspidalDatum::Explicit { label, witt_index, .. } => write!(f, "{label}@{witt_index}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspidalSupport {
    /// Kept sorted: nontrivial entries first, then the trivial `GL_1`s.
    pub gl_part: Vec<GlCuspidal>,
    pub phi: CuspidalDatum,
}

impl CuspidalSupport {
    pub fn new(mut gl_part: Vec<GlCuspidal>, phi: CuspidalDatum) -> Self {
        gl_part.sort();
        CuspidalSupport { gl_part, phi }
    }

    pub fn trivial_count(&self) -> usize {
        self.gl_part.iter().filter(|g| g.is_trivial()).count()
    }
}

impl fmt::Display for CuspidalSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gl_part.iter().map(ToString::to_string).collect();
        write!(f, "[{}; {}]", parts.join(","), self.phi)
    }
}

/// Transports a cuspidal support from `G_m` to `G'_{m'}`.
///
/// `Ok(None)` means the correspondence is zero (`m'` is below the first
/// occurrence of `phi`).
pub fn transport_support(
    support: &CuspidalSupport,
    ctx: &TowerContext,
    ctx_prime: &TowerContext,
    config: &HoweConfig,
) -> Result<Option<CuspidalSupport>> {
    let t = gl_rank(&support.gl_part);
    if t + support.phi.witt_index() != ctx.witt_index {
        return Err(Error::InvalidSupport(format!(
            "GL rank {t} plus Witt index {} of {} is not m = {}",
            support.phi.witt_index(),
            support.phi,
            ctx.witt_index
        )));
    }
    if let CuspidalDatum::Unipotent { k } = support.phi {
        ctx.series_rank(k)?;
    }
    let (phi_prime, first_occurrence) = support.phi.theta(ctx_prime, config);
    let Some(t_prime) = ctx_prime.witt_index.checked_sub(first_occurrence) else {
        return Ok(None);
    };
    let mut gl_part = support.gl_part.clone();
    if t_prime >= t {
        gl_part.extend(std::iter::repeat_n(GlCuspidal::trivial(), t_prime - t));
    } else {
        let needed = t - t_prime;
        let present = support.trivial_count();
        if present < needed {
            return Err(Error::TrivialUnderflow { needed, present });
        }
        // trivial entries sort last
        gl_part.truncate(gl_part.len() - needed);
    }
    Ok(Some(CuspidalSupport::new(gl_part, phi_prime)))
}

/// A cuspidal pair in Lusztig coordinates: the GL block (nontrivial
/// `sigma`s from `G_#(s)` and `torus_rank` trivial entries), the index `k`
/// of `lambda_k` on the unipotent block, and the semisimple class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspidalPair {
    pub gl_part: Vec<GlCuspidal>,
    pub base_k: usize,
    pub semisimple: SemisimpleDescriptor,
}

impl CuspidalPair {
    pub fn new(mut gl_part: Vec<GlCuspidal>, base_k: usize, semisimple: SemisimpleDescriptor) -> Self {
        gl_part.sort();
        CuspidalPair {
            gl_part,
            base_k,
            semisimple,
        }
    }

    /// The unipotent pair `(G_{m(k)} x T_r, lambda_k x 1)`.
    pub fn unipotent(k: usize, ctx: &TowerContext) -> Result<Self> {
        let r = ctx.series_rank(k)?;
        Ok(CuspidalPair::new(
            vec![GlCuspidal::trivial(); r],
            k,
            SemisimpleDescriptor::identity(ctx.q, ctx.dimension())?,
        ))
    }

    /// Number of trivial `GL_1` entries.
    pub fn torus_rank(&self) -> usize {
        self.gl_part.iter().filter(|g| g.is_trivial()).count()
    }

    fn sigma_rank(&self) -> usize {
        self.gl_part.iter().filter(|g| !g.is_trivial()).map(|g| g.size).sum()
    }
}

impl fmt::Display for CuspidalPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gl_part.iter().map(ToString::to_string).collect();
        write!(
            f,
            "[{}; lambda_{}] over {}",
            parts.join(","),
            self.base_k,
            self.semisimple
        )
    }
}

/// Checks a pair against `ctx` and returns `r = m - l - m(k)`.
pub(crate) fn validate_pair(pair: &CuspidalPair, ctx: &TowerContext) -> Result<usize> {
    let dec = centralizer_decomposition(&pair.semisimple, ctx)?;
    let r = dec.unipotent_block.series_rank(pair.base_k)?;
    if pair.torus_rank() != r {
        return Err(Error::InvalidSupport(format!(
            "{} trivial GL1 entries, but the unipotent block needs r = {r}",
            pair.torus_rank()
        )));
    }
    let hash_dim = pair.semisimple.dimension() - pair.semisimple.one_multiplicity();
    if 2 * pair.sigma_rank() > hash_dim {
        return Err(Error::InvalidSupport(format!(
            "sigma block of rank {} does not fit in G_#(s) of dimension {hash_dim}",
            pair.sigma_rank()
        )));
    }
    Ok(r)
}

/// Transports a Harish-Chandra series; `Ok(None)` when the image is zero.
pub fn transport_series(
    pair: &CuspidalPair,
    ctx: &TowerContext,
    ctx_prime: &TowerContext,
    config: &HoweConfig,
) -> Result<Option<CuspidalPair>> {
    let r = validate_pair(pair, ctx)?;
    let s_prime = match match_semisimple(&pair.semisimple, ctx, ctx_prime) {
        Ok(s) => s,
        Err(Error::DoesNotFit { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let dec_prime = centralizer_decomposition(&s_prime, ctx_prime)?;
    let block_prime = dec_prime.unipotent_block;
    let k_prime = config.theta_rule.theta(pair.base_k, block_prime.dim_parity);
    let Some(r_prime) = block_prime.witt_index.checked_sub(witt_index_of_cuspidal(k_prime)) else {
        return Ok(None);
    };
    let sigma = pair.sigma_rank();
    // phi covers everything in G_m outside the GL block; its partner is
    // pinned by the rank r' the unipotent block needs
    let phi = CuspidalDatum::Explicit {
        label: format!("rho#.lambda_{}", pair.base_k),
        witt_index: ctx.witt_index - sigma - r,
        partner_label: format!("rho#.lambda_{k_prime}"),
        partner_witt_index: ctx_prime.witt_index - sigma - r_prime,
    };
    let support = CuspidalSupport::new(pair.gl_part.clone(), phi);
    let Some(moved) = transport_support(&support, ctx, ctx_prime, config)? else {
        return Ok(None);
    };
    Ok(Some(CuspidalPair::new(moved.gl_part, k_prime, s_prime)))
}

/// `W_G(rho) = W_{G_#(s)}(rho_#) x W_r`, described abstractly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylDescriptor {
    pub hash_factors: Vec<CentralizerFactor>,
    pub b_rank: usize,
}

pub fn weyl_of_cuspidal_pair(pair: &CuspidalPair, ctx: &TowerContext) -> Result<WeylDescriptor> {
    let b_rank = validate_pair(pair, ctx)?;
    let dec = centralizer_decomposition(&pair.semisimple, ctx)?;
    Ok(WeylDescriptor {
        hash_factors: dec.factors,
        b_rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::howe::cuspidal::Parity;

    fn even(m: usize) -> TowerContext {
        TowerContext::new(m, Parity::Even)
    }

    #[test]
    fn parse_gl_tokens() {
        let part = parse_gl_part("1, 2:sigma, 1").unwrap();
        assert_eq!(part.len(), 3);
        assert_eq!(part[0], GlCuspidal::new(2, "sigma").unwrap());
        assert!(part[1].is_trivial() && part[2].is_trivial());
        assert!(parse_gl_part("2:1").is_err());
        assert!(parse_gl_part("sigma").is_err());
        assert_eq!(parse_gl_part("1:1").unwrap(), vec![GlCuspidal::trivial()]);
    }

    #[test]
    fn grow_from_nothing() {
        let cfg = HoweConfig::default();
        let support = CuspidalSupport::new(vec![], CuspidalDatum::Unipotent { k: 0 });
        let moved = transport_support(&support, &even(0), &even(3), &cfg).unwrap().unwrap();
        assert_eq!(moved.gl_part, vec![GlCuspidal::trivial(); 3]);
        assert_eq!(moved.phi, CuspidalDatum::Unipotent { k: 0 });
    }

    #[test]
    fn sigma_preserved() {
        let cfg = HoweConfig::default();
        let sigma = GlCuspidal::new(1, "sigma").unwrap();
        let support = CuspidalSupport::new(vec![sigma.clone()], CuspidalDatum::Unipotent { k: 0 });
        let moved = transport_support(&support, &even(1), &even(1), &cfg).unwrap().unwrap();
        assert_eq!(moved.gl_part, vec![sigma]);
    }

    #[test]
    fn shrink_removes_trivials() {
        let cfg = HoweConfig::default();
        let sigma = GlCuspidal::new(1, "sigma").unwrap();
        let support = CuspidalSupport::new(
            vec![GlCuspidal::trivial(), GlCuspidal::trivial(), sigma.clone()],
            CuspidalDatum::Unipotent { k: 0 },
        );
        let moved = transport_support(&support, &even(3), &even(1), &cfg).unwrap().unwrap();
        assert_eq!(moved.gl_part, vec![sigma.clone()]);
        let short = CuspidalSupport::new(
            vec![GlCuspidal::trivial(), sigma.clone(), GlCuspidal::new(1, "tau").unwrap()],
            CuspidalDatum::Unipotent { k: 0 },
        );
        assert_eq!(
            transport_support(&short, &even(3), &even(1), &cfg),
            Err(Error::TrivialUnderflow { needed: 2, present: 1 })
        );
    }

    #[test]
    fn zero_below_first_occurrence() {
        let cfg = HoweConfig::default();
        // lambda_2 on U_3; the even tower receives lambda_3 on U_6
        let ctx = TowerContext::new(1, Parity::Odd);
        let support = CuspidalSupport::new(vec![], CuspidalDatum::Unipotent { k: 2 });
        assert_eq!(transport_support(&support, &ctx, &even(2), &cfg).unwrap(), None);
        let moved = transport_support(&support, &ctx, &even(3), &cfg).unwrap().unwrap();
        assert_eq!(moved.phi, CuspidalDatum::Unipotent { k: 3 });
        assert!(moved.gl_part.is_empty());
    }

    #[test]
    fn explicit_datum_swaps() {
        let cfg = HoweConfig::default();
        let phi = CuspidalDatum::Explicit {
            label: "phi".into(),
            witt_index: 1,
            partner_label: "phi'".into(),
            partner_witt_index: 2,
        };
        let support = CuspidalSupport::new(vec![GlCuspidal::trivial()], phi.clone());
        let moved = transport_support(&support, &even(2), &even(4), &cfg).unwrap().unwrap();
        assert_eq!(moved.gl_part.len(), 2);
        let back = transport_support(&moved, &even(4), &even(2), &cfg).unwrap().unwrap();
        assert_eq!(back, support);
    }

    #[test]
    fn series_transport_unipotent() {
        let cfg = HoweConfig::default();
        let pair = CuspidalPair::unipotent(0, &even(2)).unwrap();
        let moved = transport_series(&pair, &even(2), &even(3), &cfg).unwrap().unwrap();
        assert_eq!(moved.base_k, 0);
        assert_eq!(moved.torus_rank(), 3);
        let odd = TowerContext::new(1, Parity::Odd);
        let moved = transport_series(&pair, &even(2), &odd, &cfg).unwrap().unwrap();
        assert_eq!(moved.base_k, 1);
        assert_eq!(moved.torus_rank(), 1);
    }

    #[test]
    fn series_transport_keeps_sigma() {
        let cfg = HoweConfig::default();
        // s = (-1)^2 (+) 1^2 on U_4; sigma of GL_1 attached to the -1 block
        let s = SemisimpleDescriptor::parse(3, 8, "4^2,0^2").unwrap();
        let sigma = GlCuspidal::new(1, "sigma").unwrap();
        let pair = CuspidalPair::new(vec![sigma.clone(), GlCuspidal::trivial()], 0, s);
        let moved = transport_series(&pair, &even(2), &even(3), &cfg).unwrap().unwrap();
        assert_eq!(moved.gl_part[0], sigma);
        assert_eq!(moved.torus_rank(), 2);
        assert_eq!(moved.semisimple.one_multiplicity(), 4);
        assert_eq!(transport_series(&pair, &even(2), &even(0), &cfg).unwrap(), None);
    }

    #[test]
    fn weyl_groups() {
        let pair = CuspidalPair::unipotent(0, &even(3)).unwrap();
        let w = weyl_of_cuspidal_pair(&pair, &even(3)).unwrap();
        assert!(w.hash_factors.is_empty());
        assert_eq!(w.b_rank, 3);
        let s = SemisimpleDescriptor::parse(3, 8, "4^2,0^4").unwrap();
        let pair = CuspidalPair::new(vec![GlCuspidal::trivial(); 2], 0, s);
        let w = weyl_of_cuspidal_pair(&pair, &even(3)).unwrap();
        assert_eq!(w.hash_factors.len(), 1);
        assert_eq!(w.b_rank, 2);
    }
}
