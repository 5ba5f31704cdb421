//! Label-level formulas for `W_n` characters.
//!
//! These are the closed forms the combinatorial side relies on. They are
//! pure partition combinatorics; the oracle in [`crate::bn`] certifies them.

use crate::bn::LinearCharacter;
use crate::partition::{horizontal_strip_additions, vertical_strip_additions, Bipartition, Partition};

/// Label of a linear character of `W_s`.
pub fn linear_label(which: LinearCharacter, s: usize) -> Bipartition {
    match which {
        LinearCharacter::Trivial => Bipartition::new(Partition::row(s), Partition::empty()),
        LinearCharacter::SignChanges => Bipartition::new(Partition::empty(), Partition::row(s)),
        LinearCharacter::PermutationSign => Bipartition::new(Partition::column(s), Partition::empty()),
        LinearCharacter::CoxeterSign => Bipartition::new(Partition::empty(), Partition::column(s)),
    }
}

/// Label of `chi (x) which` for `chi` labelled by `label`.
pub fn twist_label(label: &Bipartition, which: LinearCharacter) -> Bipartition {
    match which {
        LinearCharacter::Trivial => label.clone(),
        LinearCharacter::SignChanges => label.swap(),
        LinearCharacter::PermutationSign => label.conjugate_components(),
        LinearCharacter::CoxeterSign => label.swap().conjugate_components(),
    }
}

/// Constituents of `Ind_{W_l x W_s}^{W_{l+s}} (chi (x) which)`, each of
/// multiplicity one, in canonical order.
pub fn induce_with_linear(chi: &Bipartition, s: usize, which: LinearCharacter) -> Vec<Bipartition> {
    let (first, second) = (&chi.first, &chi.second);
    let mut out: Vec<Bipartition> = match which {
        LinearCharacter::Trivial => horizontal_strip_additions(first, s)
            .into_iter()
            .map(|a| Bipartition::new(a, second.clone()))
            .collect(),
        LinearCharacter::PermutationSign => vertical_strip_additions(first, s)
            .into_iter()
            .map(|a| Bipartition::new(a, second.clone()))
            .collect(),
        LinearCharacter::SignChanges => horizontal_strip_additions(second, s)
            .into_iter()
            .map(|b| Bipartition::new(first.clone(), b))
            .collect(),
        LinearCharacter::CoxeterSign => vertical_strip_additions(second, s)
            .into_iter()
            .map(|b| Bipartition::new(first.clone(), b))
            .collect(),
    };
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bn::tensor_label_map;
    use crate::partition::bipartitions_of;

    #[test]
    fn closed_form_twists_match_oracle() {
        for n in 0..=5 {
            for which in LinearCharacter::ALL {
                let oracle = tensor_label_map(n, which).unwrap();
                for (label, image) in &oracle {
                    assert_eq!(&twist_label(label, which), image, "{which} at n={n}");
                }
            }
        }
    }

    #[test]
    fn twists_are_involutions() {
        for n in 0..6 {
            for label in bipartitions_of(n) {
                for which in LinearCharacter::ALL {
                    assert_eq!(twist_label(&twist_label(&label, which), which), label);
                }
            }
        }
    }

    #[test]
    fn rank_one_induction() {
        let triv = linear_label(LinearCharacter::Trivial, 1);
        let got = induce_with_linear(&Bipartition::empty(), 1, LinearCharacter::Trivial);
        assert_eq!(got, vec![triv]);
    }
}
