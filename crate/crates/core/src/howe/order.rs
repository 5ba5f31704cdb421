//! Partial orders on image sets and extremal elements.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Bipartition;

/// A partial order on the `W_{r'}` labels of an image set.
pub trait ImageOrder: Send + Sync {
    fn leq(&self, a: &Bipartition, b: &Bipartition) -> bool;
    fn name(&self) -> &str;
}

/// Dominance of bipartitions: `(l, m) <= (l', m')` iff for every `i`,
/// `l_1 + .. + l_i <= l'_1 + .. + l'_i` and
/// `|l| + m_1 + .. + m_i <= |l'| + m'_1 + .. + m'_i`.
///
/// Equivalently, dominance of the sequences obtained by padding `l` with
/// zeros to length `n` and appending `m`. Incomparable pairs stay
/// incomparable.
#[derive(Clone, Copy, Debug, Default)]
pub struct BipartitionDominance;

impl ImageOrder for BipartitionDominance {
    fn leq(&self, a: &Bipartition, b: &Bipartition) -> bool {
        if a.norm() != b.norm() {
            return false;
        }
        let n = a.norm();
        let (mut sa, mut sb) = (0, 0);
        for i in 0..n {
            sa += a.first.part(i);
            sb += b.first.part(i);
            if sa > sb {
                return false;
            }
        }
        for i in 0..n {
            sa += a.second.part(i);
            sb += b.second.part(i);
            if sa > sb {
                return false;
            }
        }
        true
    }

    fn name(&self) -> &str {
        "bipartition-dominance"
    }
}

/// Which extreme to look for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extreme {
    Min,
    Max,
}

impl fmt::Display for Extreme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Extreme::Min => "minimal",
            Extreme::Max => "maximal",
        })
    }
}

/// The minimal (or maximal) elements of `set` under `order`.
pub fn extremal_elements<'a>(order: &dyn ImageOrder, set: &'a [Bipartition], which: Extreme) -> Vec<&'a Bipartition> {
    set.iter()
        .filter(|x| {
            !set.iter().any(|y| {
                y != *x
                    && match which {
                        Extreme::Min => order.leq(y, x),
                        Extreme::Max => order.leq(x, y),
                    }
            })
        })
        .collect()
}

/// The unique least (or greatest) element of `set`.
///
/// Errors with the offending antichain when there is more than one
/// minimal (maximal) element, or when the single minimal element fails to
/// lie below everything (possible only if `order` is not transitive).
pub fn unique_extreme<'a>(order: &dyn ImageOrder, set: &'a [Bipartition], which: Extreme) -> Result<&'a Bipartition> {
    if set.is_empty() {
        return Err(Error::EmptyImage);
    }
    let candidates = extremal_elements(order, set, which);
    let antichain = || Error::NoUniqueExtreme {
        which: match which {
            Extreme::Min => "minimal",
            Extreme::Max => "maximal",
        },
        antichain: candidates.iter().map(|b| (*b).clone()).collect(),
    };
    if candidates.len() != 1 {
        return Err(antichain());
    }
    let best = candidates[0];
    let bounds_all = set.iter().all(|y| match which {
        Extreme::Min => order.leq(best, y),
        Extreme::Max => order.leq(y, best),
    });
    if bounds_all {
        Ok(best)
    } else {
        Err(antichain())
    }
}
