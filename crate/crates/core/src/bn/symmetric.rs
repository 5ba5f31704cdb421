//! Symmetric-group characters by the Murnaghan–Nakayama rule.

use crate::error::{Error, Result};
use crate::partition::Partition;

/// `chi^label(class)` for the symmetric group `S_n`.
///
/// Border strips are removed on the beta-set (abacus) of `label`: a strip of
/// length `r` moves one bead from position `b` to `b - r`, with sign
/// `(-1)^(beads jumped over)`.
pub fn sn_character_value(label: &Partition, class: &Partition) -> Result<i64> {
    if label.norm() != class.norm() {
        return Err(Error::NormMismatch {
            left: label.norm(),
            right: class.norm(),
        });
    }
    let len = label.len();
    let beta: Vec<usize> = (0..len).map(|i| label.part(i) + len - 1 - i).collect();
    Ok(mn(beta, class.parts()))
}

fn mn(beta: Vec<usize>, cycles: &[usize]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * mn(next, rest);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(parts: &[usize]) -> Partition {
        Partition::try_from(parts).unwrap()
    }

    #[test]
    fn known_values() {
        for class in partitions_of(4) {
            assert_eq!(sn_character_value(&p(&[4]), &class).unwrap(), 1);
        }
        assert_eq!(sn_character_value(&p(&[1, 1, 1]), &p(&[3])).unwrap(), 1);
        assert_eq!(sn_character_value(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(sn_character_value(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(sn_character_value(&Partition::empty(), &Partition::empty()).unwrap(), 1);
        assert!(sn_character_value(&p(&[2]), &p(&[1])).is_err());
    }

    /// Hook length formula for degrees.
    #[test]
    fn degrees_match_hook_lengths() {
        for n in 0..8 {
            for lam in partitions_of(n) {
                let conj = lam.conjugate();
                let mut hooks = 1u64;
                for i in 0..lam.len() {
                    for j in 0..lam.part(i) {
                        hooks *= (lam.part(i) - j + conj.part(j) - i - 1) as u64;
                    }
                }
                let deg = (1..=n as u64).product::<u64>() / hooks;
                assert_eq!(sn_character_value(&lam, &Partition::column(n)).unwrap(), deg as i64);
            }
        }
    }
}
