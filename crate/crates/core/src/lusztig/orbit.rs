//! Eigenvalue orbits and semisimple class descriptors.
//!
//! An eigenvalue is written `zeta^e` for a fixed generator `zeta` of
//! `F_{q^{2D}}^x`, so exponents live modulo `q^{2D} - 1`. The Frobenius of
//! the unitary group acts on eigenvalues by `x -> x^{-q}`, i.e. on
//! exponents by `e -> -q e`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::howe::cuspidal::is_odd_prime_power;

/// An eigenvalue as entered by the user.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Eigenvalue {
    Zero,
    /// `zeta^e`.
    Power(u64),
}

/// Checks `modulus = q^{2D} - 1` and returns `D`.
pub fn modulus_degree(q: u64, modulus: u64) -> Result<u32> {
    if !is_odd_prime_power(q) {
        return Err(Error::InvalidQ(q));
    }
    let q2 = (q as u128) * (q as u128);
    let mut power = q2;
    let mut d = 1;
    while power - 1 < modulus as u128 {
        power *= q2;
        d += 1;
    }
    if power - 1 == modulus as u128 {
        Ok(d)
    } else {
        Err(Error::InvalidModulus { q, modulus })
    }
}

/// The default modulus `q^2 - 1`, enough for eigenvalues in `F_{q^2}`.
pub fn default_modulus(q: u64) -> u64 {
    q * q - 1
}

/// A Frobenius orbit of nonzero eigenvalues together with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EigenvalueOrbit {
    modulus: u64,
    exponents: BTreeSet<u64>,
    multiplicity: usize,
}

impl EigenvalueOrbit {
    pub fn exponents(&self) -> &BTreeSet<u64> {
        &self.exponents
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Orbit size `d`.
    pub fn size(&self) -> usize {
        self.exponents.len()
    }

    /// `nu`: how many times each eigenvalue of the orbit occurs.
    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    pub fn is_one(&self) -> bool {
        self.exponents.len() == 1 && self.exponents.contains(&0)
    }

    pub fn is_minus_one(&self) -> bool {
        self.exponents.len() == 1 && self.exponents.contains(&(self.modulus / 2))
    }

    /// `d * nu`, the dimension this orbit occupies.
    pub fn dimension(&self) -> usize {
        self.size() * self.multiplicity
    }

    pub fn with_multiplicity(&self, multiplicity: usize) -> Self {
        EigenvalueOrbit {
            multiplicity,
            ..self.clone()
        }
    }
}

/// Closure of `exponent` under `e -> -q e (mod modulus)`, with multiplicity one.
pub fn orbit_closure(q: u64, modulus: u64, eigenvalue: Eigenvalue) -> Result<EigenvalueOrbit> {
    modulus_degree(q, modulus)?;
    let Eigenvalue::Power(e) = eigenvalue else {
        return Err(Error::ZeroEigenvalue);
    };
    let m = modulus as u128;
    let start = e % modulus;
    let mut exponents = BTreeSet::new();
    let mut cur = start as u128;
    loop {
        exponents.insert(cur as u64);
        cur = (m - (q as u128 * cur) % m) % m;
        if cur == start as u128 {
            break;
        }
    }
    Ok(EigenvalueOrbit {
        modulus,
        exponents,
        multiplicity: 1,
    })
}

/// A rational semisimple class of `U_n(q)`, given by its eigenvalue orbits.
///
/// Orbits are merged and kept in canonical order (by smallest exponent).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemisimpleDescriptor {
    q: u64,
    modulus: u64,
    orbits: Vec<EigenvalueOrbit>,
}

impl SemisimpleDescriptor {
    pub fn new(q: u64, modulus: u64, eigenvalues: &[(Eigenvalue, usize)]) -> Result<Self> {
        modulus_degree(q, modulus)?;
        let mut orbits: Vec<EigenvalueOrbit> = Vec::new();
        for &(ev, mult) in eigenvalues {
            if mult == 0 {
                continue;
            }
            let orbit = orbit_closure(q, modulus, ev)?;
            match orbits.iter_mut().find(|o| o.exponents == orbit.exponents) {
                Some(existing) => existing.multiplicity += mult,
                None => orbits.push(orbit.with_multiplicity(mult)),
            }
        }
        orbits.sort();
        Ok(SemisimpleDescriptor { q, modulus, orbits })
    }

    /// The central element `1` of `U_n(q)`.
    pub fn identity(q: u64, n: usize) -> Result<Self> {
        Self::new(q, default_modulus(q), &[(Eigenvalue::Power(0), n)])
    }

    /// Parses `exponent^multiplicity` tokens separated by commas; `z`
    /// stands for the zero eigenvalue (always rejected) and a bare
    /// exponent has multiplicity one. Exponents must lie below `modulus`.
    pub fn parse(q: u64, modulus: u64, spec: &str) -> Result<Self> {
        let mut eigenvalues = Vec::new();
        for token in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (e, mult) = match token.split_once('^') {
                Some((e, m)) => (
                    e.trim(),
                    m.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad multiplicity in {token:?}")))?,
                ),
                None => (token, 1),
            };
            let ev = if e == "z" {
                Eigenvalue::Zero
            } else {
                let e = e
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad exponent in {token:?}")))?;
                if e >= modulus {
                    return Err(Error::Parse(format!("exponent {e} is not below the modulus {modulus}")));
                }
                Eigenvalue::Power(e)
            };
            eigenvalues.push((ev, mult));
        }
        Self::new(q, modulus, &eigenvalues)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn orbits(&self) -> &[EigenvalueOrbit] {
        &self.orbits
    }

    /// `sum d * nu`.
    pub fn dimension(&self) -> usize {
        self.orbits.iter().map(EigenvalueOrbit::dimension).sum()
    }

    /// Multiplicity of the eigenvalue 1.
    pub fn one_multiplicity(&self) -> usize {
        self.orbits.iter().find(|o| o.is_one()).map_or(0, |o| o.multiplicity)
    }

    /// Orbits other than `{1}`.
    pub fn non_one_orbits(&self) -> impl Iterator<Item = &EigenvalueOrbit> {
        self.orbits.iter().filter(|o| !o.is_one())
    }

    /// Same non-1 content, eigenvalue 1 with multiplicity `one_multiplicity`.
    pub fn with_one_multiplicity(&self, one_multiplicity: usize) -> Self {
        let mut orbits: Vec<EigenvalueOrbit> = self.non_one_orbits().cloned().collect();
        if one_multiplicity > 0 {
            orbits.push(EigenvalueOrbit {
                modulus: self.modulus,
                exponents: BTreeSet::from([0]),
                multiplicity: one_multiplicity,
            });
        }
        orbits.sort();
        SemisimpleDescriptor {
            q: self.q,
            modulus: self.modulus,
            orbits,
        }
    }

    pub fn to_json(&self) -> DescriptorJson {
        DescriptorJson {
            q: self.q,
            modulus: self.modulus,
            orbits: self
                .orbits
                .iter()
                .map(|o| OrbitJson {
                    exponents: o.exponents.iter().copied().collect(),
                    multiplicity: o.multiplicity,
                })
                .collect(),
        }
    }

    /// Rebuilds from JSON, recomputing every orbit closure.
    pub fn from_json(json: &DescriptorJson) -> Result<Self> {
        let mut eigenvalues = Vec::new();
        for orbit in &json.orbits {
            let &first = orbit
                .exponents
                .first()
                .ok_or_else(|| Error::Parse("orbit without exponents".into()))?;
            let closed = orbit_closure(json.q, json.modulus, Eigenvalue::Power(first))?;
            let listed: BTreeSet<u64> = orbit.exponents.iter().copied().collect();
            if closed.exponents != listed {
                return Err(Error::Parse(format!(
                    "exponents {:?} are not a Frobenius orbit",
                    orbit.exponents
                )));
            }
            eigenvalues.push((Eigenvalue::Power(first), orbit.multiplicity));
        }
        Self::new(json.q, json.modulus, &eigenvalues)
    }
}

impl fmt::Display for SemisimpleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self
            .orbits
            .iter()
            .map(|o| format!("{:?}^{}", o.exponents, o.multiplicity))
            .collect();
        write!(f, "q={} mod {}: {}", self.q, self.modulus, tokens.join(", "))
    }
}

impl Serialize for SemisimpleDescriptor {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SemisimpleDescriptor {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let json = DescriptorJson::deserialize(deserializer)?;
        SemisimpleDescriptor::from_json(&json).map_err(serde::de::Error::custom)
    }
}

/// `{q, modulus, orbits: [{exponents, multiplicity}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescriptorJson {
    pub q: u64,
    pub modulus: u64,
    pub orbits: Vec<OrbitJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitJson {
    pub exponents: Vec<u64>,
    pub multiplicity: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closures() {
        let one = orbit_closure(3, 8, Eigenvalue::Power(0)).unwrap();
        assert!(one.is_one() && one.size() == 1);
        let minus = orbit_closure(3, 8, Eigenvalue::Power(4)).unwrap();
        assert!(minus.is_minus_one() && !minus.is_one());
        let pair = orbit_closure(3, 8, Eigenvalue::Power(1)).unwrap();
        assert_eq!(pair.exponents(), &BTreeSet::from([1, 5]));
        assert_eq!(orbit_closure(3, 8, Eigenvalue::Zero), Err(Error::ZeroEigenvalue));
    }

    #[test]
    fn closure_is_closed() {
        for (q, modulus) in [(3, 8), (3, 80), (5, 24), (5, 624), (3, 728)] {
            for e in 0..modulus.min(200) {
                let orbit = orbit_closure(q, modulus, Eigenvalue::Power(e)).unwrap();
                for &x in orbit.exponents() {
                    let next = (modulus - (q * x) % modulus) % modulus;
                    assert!(orbit.exponents().contains(&next));
                }
                let d = modulus_degree(q, modulus).unwrap() as usize;
                assert_eq!((2 * d) % orbit.size(), 0);
            }
        }
    }

    #[test]
    fn moduli() {
        assert_eq!(modulus_degree(3, 8).unwrap(), 1);
        assert_eq!(modulus_degree(3, 80).unwrap(), 2);
        assert!(modulus_degree(3, 9).is_err());
        assert!(modulus_degree(4, 15).is_err());
    }

    #[test]
    fn descriptor_merges_and_parses() {
        let s = SemisimpleDescriptor::parse(3, 8, "0^1, 4^2, 5").unwrap();
        assert_eq!(s.dimension(), 5);
        assert_eq!(s.one_multiplicity(), 1);
        // 1 and 5 lie in the same orbit
        let t = SemisimpleDescriptor::parse(3, 8, "1,5").unwrap();
        assert_eq!(t.orbits().len(), 1);
        assert_eq!(t.orbits()[0].multiplicity(), 2);
        assert_eq!(SemisimpleDescriptor::parse(3, 8, "z^1"), Err(Error::ZeroEigenvalue));
        assert!(matches!(SemisimpleDescriptor::parse(3, 8, "x^1"), Err(Error::Parse(_))));
    }

    #[test]
    fn json_round_trip() {
        let s = SemisimpleDescriptor::parse(5, 24, "0^3,12^2,1").unwrap();
        let text = serde_json::to_string(&s.to_json()).unwrap();
        let back: DescriptorJson = serde_json::from_str(&text).unwrap();
        assert_eq!(SemisimpleDescriptor::from_json(&back).unwrap(), s);
        let bogus = DescriptorJson {
            q: 3,
            modulus: 8,
            orbits: vec![OrbitJson {
                exponents: vec![1],
                multiplicity: 1,
            }],
        };
        assert!(SemisimpleDescriptor::from_json(&bogus).is_err());
    }
}
