//! Exact rational class functions on `W_n` and on products `W_a x W_b`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::classes::{check_bound, class_labels, group_order, BnClassLabel};
use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A class function on `W_n`, defined on every class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    rank: usize,
    values: BTreeMap<BnClassLabel, Rational>,
}

impl ClassFunction {
    pub fn from_fn(rank: usize, mut f: impl FnMut(&BnClassLabel) -> Rational) -> Self {
        let values = class_labels(rank)
            .into_iter()
            .map(|c| {
                let v = f(&c);
                (c, v)
            })
            .collect();
        ClassFunction { rank, values }
    }

    pub fn zero(rank: usize) -> Self {
        Self::from_fn(rank, |_| Rational::zero())
    }

    pub fn constant(rank: usize, value: i64) -> Self {
        Self::from_fn(rank, |_| rational(value))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn value(&self, class: &BnClassLabel) -> &Rational {
        &self.values[class]
    }

    pub fn values(&self) -> &BTreeMap<BnClassLabel, Rational> {
        &self.values
    }

    /// Value at the identity.
    pub fn degree(&self) -> Rational {
        self.value(&BnClassLabel::identity(self.rank)).clone()
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ClassFunction {
            rank: self.rank,
            values: self.values.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// `(1/|W_n|) sum_g f(g) h(g)`. Characters here are real, so no conjugation.
    pub fn inner_product(&self, other: &ClassFunction) -> Result<Rational> {
        if self.rank != other.rank {
            return Err(Error::NormMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut acc = Rational::zero();
        for (class, v) in &self.values {
            let w = &other.values[class];
            if v.is_zero() || w.is_zero() {
                continue;
            }
            acc += v * w / rational(class.centralizer_order() as i64);
        }
        Ok(acc)
    }

    /// True when every value is a rational integer.
    pub fn is_integral(&self) -> bool {
        self.values.values().all(|v| v.is_integer())
    }

    /// Integer values in canonical class order; `None` if some value is not integral.
    pub fn integer_values(&self) -> Option<Vec<i64>> {
        self.values
            .values()
            .map(|v| {
                if v.is_integer() {
                    i64::try_from(v.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }
}

impl Add for &ClassFunction {
    type Output = ClassFunction;
    fn add(self, rhs: &ClassFunction) -> ClassFunction {
        assert_eq!(self.rank, rhs.rank, "adding class functions of different ranks");
        ClassFunction {
            rank: self.rank,
            values: self
                .values
                .iter()
                .map(|(k, v)| (k.clone(), v + &rhs.values[k]))
                .collect(),
        }
    }
}

/// Pointwise product (tensor product of characters).
impl Mul for &ClassFunction {
    type Output = ClassFunction;
    fn mul(self, rhs: &ClassFunction) -> ClassFunction {
        assert_eq!(self.rank, rhs.rank, "multiplying class functions of different ranks");
        ClassFunction {
            rank: self.rank,
            values: self
                .values
                .iter()
                .map(|(k, v)| (k.clone(), v * &rhs.values[k]))
                .collect(),
        }
    }
}

/// A class function on `W_a x W_b`, indexed by pairs of class labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductClassFunction {
    ranks: (usize, usize),
    values: BTreeMap<(BnClassLabel, BnClassLabel), Rational>,
}

impl ProductClassFunction {
    pub fn from_fn(ranks: (usize, usize), mut f: impl FnMut(&BnClassLabel, &BnClassLabel) -> Rational) -> Self {
        let right = class_labels(ranks.1);
        let mut values = BTreeMap::new();
        for c in class_labels(ranks.0) {
            for d in &right {
                let v = f(&c, d);
                values.insert((c.clone(), d.clone()), v);
            }
        }
        ProductClassFunction { ranks, values }
    }

    pub fn zero(ranks: (usize, usize)) -> Self {
        Self::from_fn(ranks, |_, _| Rational::zero())
    }

    /// External tensor product `f x g`.
    pub fn outer(f: &ClassFunction, g: &ClassFunction) -> Self {
        Self::from_fn((f.rank, g.rank), |c, d| f.value(c) * g.value(d))
    }

    /// Restriction of a class function on `W_{a+b}` to `W_a x W_b`.
    pub fn restrict(f: &ClassFunction, a: usize) -> Result<Self> {
        let b = f
            .rank
            .checked_sub(a)
            .ok_or(Error::NormMismatch { left: a, right: f.rank })?;
        Ok(Self::from_fn((a, b), |c, d| f.value(&c.fuse(d)).clone()))
    }

    pub fn ranks(&self) -> (usize, usize) {
        self.ranks
    }

    pub fn value(&self, left: &BnClassLabel, right: &BnClassLabel) -> &Rational {
        &self.values[&(left.clone(), right.clone())]
    }

    pub fn values(&self) -> &BTreeMap<(BnClassLabel, BnClassLabel), Rational> {
        &self.values
    }

    pub fn add_assign(&mut self, other: &ProductClassFunction) {
        assert_eq!(
            self.ranks, other.ranks,
            "adding product class functions of different ranks"
        );
        for (k, v) in self.values.iter_mut() {
            *v += &other.values[k];
        }
    }

    pub fn degree(&self) -> Rational {
        self.value(
            &BnClassLabel::identity(self.ranks.0),
            &BnClassLabel::identity(self.ranks.1),
        )
        .clone()
    }

    pub fn inner_product(&self, other: &ProductClassFunction) -> Result<Rational> {
        if self.ranks != other.ranks {
            return Err(Error::NormMismatch {
                left: self.ranks.0 + self.ranks.1,
                right: other.ranks.0 + other.ranks.1,
            });
        }
        let mut acc = Rational::zero();
        for ((c, d), v) in &self.values {
            let w = &other.values[&(c.clone(), d.clone())];
            if v.is_zero() || w.is_zero() {
                continue;
            }
            let z = c.centralizer_order() * d.centralizer_order();
            acc += v * w / rational(z as i64);
        }
        Ok(acc)
    }

    /// `<self, f x g>` without materialising `f x g`.
    pub fn inner_product_outer(&self, f: &ClassFunction, g: &ClassFunction) -> Rational {
        let mut acc = Rational::zero();
        for ((c, d), v) in &self.values {
            if v.is_zero() {
                continue;
            }
            let z = c.centralizer_order() * d.centralizer_order();
            acc += v * f.value(c) * g.value(d) / rational(z as i64);
        }
        acc
    }
}

/// Induction from `W_a x W_b` to `W_{a+b}`.
///
/// `Ind f (C) = sum over (D1, D2) fusing into C of |C_W(C)| / |C_H(D1, D2)| f(D1, D2)`.
pub fn induce_class_function(f: &ProductClassFunction, bound: usize) -> Result<ClassFunction> {
    let (a, b) = f.ranks;
    let n = a + b;
    check_bound(n, bound)?;
    let mut values: BTreeMap<BnClassLabel, Rational> =
        class_labels(n).into_iter().map(|c| (c, Rational::zero())).collect();
    for ((c, d), v) in &f.values {
        if v.is_zero() {
            continue;
        }
        let fused = c.fuse(d);
        let ratio = Rational::new(
            BigInt::from(fused.centralizer_order()),
            BigInt::from(c.centralizer_order() * d.centralizer_order()),
        );
        *values.get_mut(&fused).expect("fusion lands in W_n") += v * ratio;
    }
    Ok(ClassFunction { rank: n, values })
}

/// `[W_{a+b} : W_a x W_b]`.
pub fn induction_index(a: usize, b: usize) -> Rational {
    Rational::new(
        BigInt::from(group_order(a + b)),
        BigInt::from(group_order(a) * group_order(b)),
    )
}

impl ClassFunction {
    /// The regular character: `|W_n|` at the identity, zero elsewhere.
    pub fn regular(rank: usize) -> Self {
        let id = BnClassLabel::identity(rank);
        Self::from_fn(rank, |c| {
            if *c == id {
                rational(group_order(rank) as i64)
            } else {
                Rational::zero()
            }
        })
    }

    pub fn trivial(rank: usize) -> Self {
        Self::from_fn(rank, |_| Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bn::classes::DEFAULT_ORACLE_BOUND;

    #[test]
    fn identity_induction_is_trivial() {
        let f = ProductClassFunction::outer(&ClassFunction::trivial(0), &ClassFunction::trivial(1));
        let ind = induce_class_function(&f, DEFAULT_ORACLE_BOUND).unwrap();
        assert_eq!(ind, ClassFunction::trivial(1));
    }

    #[test]
    fn induced_degree_is_index_times_degree() {
        for a in 0..4 {
            for b in 0..3 {
                let f = ProductClassFunction::outer(&ClassFunction::trivial(a), &ClassFunction::trivial(b));
                let ind = induce_class_function(&f, DEFAULT_ORACLE_BOUND).unwrap();
                assert_eq!(ind.degree(), induction_index(a, b));
            }
        }
    }

    #[test]
    fn trivial_has_norm_one() {
        for n in 0..6 {
            let t = ClassFunction::trivial(n);
            assert_eq!(t.inner_product(&t).unwrap(), Rational::one());
            let reg = ClassFunction::regular(n);
            assert_eq!(reg.inner_product(&t).unwrap(), Rational::one());
        }
    }

    #[test]
    fn rank_overflow() {
        let f = ProductClassFunction::zero((4, 3));
        assert!(matches!(
            induce_class_function(&f, 6),
            Err(Error::RankTooLarge { rank: 7, bound: 6 })
        ));
    }
}
