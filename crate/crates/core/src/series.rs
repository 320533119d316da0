//! Graded series over the convolution algebra: finitely many stored degrees,
//! a scalar term in degree 0, Cauchy products, and the formal logarithm and
//! exponential within the augmentation ideal.

use std::collections::BTreeMap;

use crate::algebra::{convolve, AlgebraElement, AlgebraError};
use crate::perm::SignedPermutation;
use crate::scalar::{int, Scalar};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedSeries<S> {
    parts: BTreeMap<usize, AlgebraElement<S>>,
}

impl<S: Scalar> GradedSeries<S> {
    pub fn zero() -> Self {
        Self {
            parts: BTreeMap::new(),
        }
    }

    /// The unit series: scalar 1 in degree 0.
    pub fn unit() -> Self {
        let mut s = Self::zero();
        s.set_part(AlgebraElement::unit());
        s
    }

    pub fn from_parts<I>(parts: I) -> Self
    where
        I: IntoIterator<Item = AlgebraElement<S>>,
    {
        let mut s = Self::zero();
        for p in parts {
            s.set_part(p);
        }
        s
    }

    /// Store a homogeneous part under its own degree, dropping zeros.
    pub fn set_part(&mut self, part: AlgebraElement<S>) {
        if part.is_zero() {
            self.parts.remove(&part.degree());
        } else {
            self.parts.insert(part.degree(), part);
        }
    }

    pub fn part(&self, degree: usize) -> Option<&AlgebraElement<S>> {
        self.parts.get(&degree)
    }

    pub fn part_or_zero(&self, degree: usize) -> AlgebraElement<S> {
        self.parts
            .get(&degree)
            .cloned()
            .unwrap_or_else(|| AlgebraElement::zero(degree))
    }

    pub fn parts(&self) -> impl Iterator<Item = &AlgebraElement<S>> {
        self.parts.values()
    }

    /// Coefficient of the empty permutation in degree 0.
    pub fn scalar_term(&self) -> S {
        self.parts
            .get(&0)
            .map(|p| p.coeff(&SignedPermutation::empty()))
            .unwrap_or_else(S::zero)
    }

    pub fn max_degree(&self) -> usize {
        self.parts.keys().next_back().copied().unwrap_or(0)
    }

    pub fn truncate(&self, cap: usize) -> Self {
        Self {
            parts: self
                .parts
                .iter()
                .filter(|(&d, _)| d <= cap)
                .map(|(&d, p)| (d, p.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for part in other.parts() {
            let sum = &out.part_or_zero(part.degree()) + part;
            out.set_part(sum);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for part in other.parts() {
            let diff = &out.part_or_zero(part.degree()) - part;
            out.set_part(diff);
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        let parts = self
            .parts
            .iter()
            .map(|(&d, p)| (d, p.scale(c)))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        Self { parts }
    }

    /// Cauchy product truncated at `cap`, degree by degree.
    pub fn multiply(&self, other: &Self, cap: usize) -> Self {
        let mut out = Self::zero();
        for x in self.parts() {
            if x.degree() > cap {
                continue;
            }
            for y in other.parts() {
                let d = x.degree() + y.degree();
                if d > cap {
                    continue;
                }
                let sum = &out.part_or_zero(d) + &convolve(x, y);
                out.set_part(sum);
            }
        }
        out
    }

    /// Formal logarithm of a series with constant term 1, truncated at `cap`.
    pub fn log(&self, cap: usize) -> Result<Self, AlgebraError> {
        if self.scalar_term() != S::one() {
            return Err(AlgebraError::ConstantTermNotOne);
        }
        let z = self.sub(&Self::unit()).truncate(cap);
        let mut acc = Self::zero();
        let mut zpow = z.clone();
        for j in 1..=cap {
            let coef = if j % 2 == 1 {
                int::<S>(1)
            } else {
                -int::<S>(1)
            } / int::<S>(j as i64);
            acc = acc.add(&zpow.scale(&coef));
            if j < cap {
                zpow = zpow.multiply(&z, cap);
            }
        }
        Ok(acc)
    }

    /// Formal exponential of a series with constant term 0, truncated at
    /// `cap`; inverse to `log` up to the truncation bound.
    pub fn exp(&self, cap: usize) -> Result<Self, AlgebraError> {
        if !self.scalar_term().is_zero() || self.part(0).is_some_and(|p| !p.is_zero()) {
            return Err(AlgebraError::ConstantTermNotZero);
        }
        let y = self.truncate(cap);
        let mut acc = Self::unit();
        let mut ypow = Self::unit();
        let mut factorial = int::<S>(1);
        for j in 1..=cap {
            ypow = ypow.multiply(&y, cap);
            factorial = factorial * int::<S>(j as i64);
            acc = acc.add(&ypow.scale(&(S::one() / factorial.clone())));
        }
        Ok(acc)
    }
}

/// The identity series: the identity permutation in every degree up to
/// `cap`, with scalar term 1.
pub fn identity_series<S: Scalar>(cap: usize) -> GradedSeries<S> {
    GradedSeries::from_parts(
        (0..=cap).map(|n| AlgebraElement::basis(SignedPermutation::identity(n))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use crate::Rat;

    fn sp(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn unit_series_is_neutral() {
        let i = identity_series::<Rat>(4);
        assert_eq!(i.multiply(&GradedSeries::unit(), 4), i);
        assert_eq!(GradedSeries::unit().multiply(&i, 4), i);
    }

    #[test]
    fn degree_two_part_of_i_squared() {
        let i = identity_series::<Rat>(2);
        let sq = i.multiply(&i, 2);
        let expected = convolve(
            &AlgebraElement::basis(sp("1")),
            &AlgebraElement::basis(sp("1")),
        );
        // (1)*(1) plus the two unit cross terms with (1,2)
        let unit_cross = AlgebraElement::basis(sp("1 2")).scale(&int(2));
        assert_eq!(sq.part_or_zero(2), &expected + &unit_cross);
        assert_eq!(
            expected,
            &AlgebraElement::basis(sp("1 2")) + &AlgebraElement::basis(sp("2 1"))
        );
    }

    #[test]
    fn log_of_unit_is_zero() {
        let log = GradedSeries::<Rat>::unit().log(4).unwrap();
        assert_eq!(log, GradedSeries::zero());
    }

    #[test]
    fn log_exp_roundtrip_on_identity_series() {
        let i = identity_series::<Rat>(4);
        let log = i.log(4).unwrap();
        assert_eq!(log.exp(4).unwrap(), i);
    }

    #[test]
    fn low_degrees_of_log_identity() {
        let log = identity_series::<Rat>(4).log(4).unwrap();
        assert_eq!(log.part_or_zero(1), AlgebraElement::basis(sp("1")));
        let mut deg2 = AlgebraElement::zero(2);
        deg2.add_term(sp("1 2"), ratio(1, 2));
        deg2.add_term(sp("2 1"), ratio(-1, 2));
        assert_eq!(log.part_or_zero(2), deg2);
    }

    #[test]
    fn constant_term_guards() {
        assert!(GradedSeries::<Rat>::zero().log(3).is_err());
        assert!(GradedSeries::<Rat>::unit().exp(3).is_err());
    }
}
