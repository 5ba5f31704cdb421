//! The four linear characters of `W_n` (n >= 1).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::class_function::{rational, ClassFunction};
use super::classes::BnClassLabel;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LinearCharacter {
    Trivial,
    /// `(-1)^(number of sign changes)`.
    SignChanges,
    /// Sign of the underlying permutation.
    PermutationSign,
    /// Determinant of the signed permutation matrix, `(-1)^(Coxeter length)`.
    CoxeterSign,
}

impl LinearCharacter {
    pub const ALL: [LinearCharacter; 4] = [
        LinearCharacter::Trivial,
        LinearCharacter::SignChanges,
        LinearCharacter::PermutationSign,
        LinearCharacter::CoxeterSign,
    ];

    pub fn value(self, class: &BnClassLabel) -> i64 {
        // a negative cycle carries an odd number of sign changes
        let sign_changes = if class.negative_cycles.len().is_multiple_of(2) {
            1
        } else {
            -1
        };
        let cycles = class.positive_cycles.len() + class.negative_cycles.len();
        let perm_sign = if (class.rank() - cycles).is_multiple_of(2) {
            1
        } else {
            -1
        };
        match self {
            LinearCharacter::Trivial => 1,
            LinearCharacter::SignChanges => sign_changes,
            LinearCharacter::PermutationSign => perm_sign,
            LinearCharacter::CoxeterSign => sign_changes * perm_sign,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LinearCharacter::Trivial => "trivial",
            LinearCharacter::SignChanges => "sign_changes",
            LinearCharacter::PermutationSign => "permutation_sign",
            LinearCharacter::CoxeterSign => "coxeter_sign",
        }
    }
}

impl fmt::Display for LinearCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LinearCharacter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LinearCharacter::ALL
            .into_iter()
            .find(|c| c.name() == s || c.name().replace('_', "-") == s)
            .ok_or_else(|| Error::Parse(format!("unknown linear character {s:?}")))
    }
}

pub fn linear_character(n: usize, which: LinearCharacter) -> ClassFunction {
    ClassFunction::from_fn(n, |c| rational(which.value(c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    #[test]
    fn reflection_values() {
        let sign_change = BnClassLabel::new(Partition::empty(), Partition::row(1));
        assert_eq!(LinearCharacter::CoxeterSign.value(&sign_change), -1);
        let two_cycle = BnClassLabel::new(Partition::row(2), Partition::empty());
        assert_eq!(LinearCharacter::SignChanges.value(&two_cycle), 1);
        assert_eq!(LinearCharacter::PermutationSign.value(&two_cycle), -1);
    }

    #[test]
    fn coxeter_is_product() {
        for n in 0..=5 {
            let prod = &linear_character(n, LinearCharacter::SignChanges)
                * &linear_character(n, LinearCharacter::PermutationSign);
            assert_eq!(prod, linear_character(n, LinearCharacter::CoxeterSign));
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!(
            "coxeter-sign".parse::<LinearCharacter>().unwrap(),
            LinearCharacter::CoxeterSign
        );
        assert_eq!(
            "sign_changes".parse::<LinearCharacter>().unwrap(),
            LinearCharacter::SignChanges
        );
        assert!("sgn".parse::<LinearCharacter>().is_err());
    }
}
