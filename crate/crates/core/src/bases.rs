//! Regression and descent bases of the group algebras.
//!
//! `R_S^n` sums the signed permutations whose regression set is exactly `S`,
//! `T_S^n` those whose regression set is contained in `S`, and `D_S^n` sums
//! the unsigned permutations whose descent set is contained in `S`
//! (Solomon's elements). The `T` family is closed under convolution with the
//! same product rule as the `D` family, which makes the span of either an
//! algebra isomorphic to the other; the Eulerian idempotents and the Magnus
//! element of the regression algebra live in these bases.

use std::fmt;

use crate::algebra::{convolve, AlgebraElement, AlgebraError};
use crate::perm::{signed_permutations, unsigned_permutations, SubsetMask};
use crate::scalar::{binomial, int, ratio, Scalar};
use crate::series::GradedSeries;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BasisFamily {
    /// Exact regression class sums (signed).
    R,
    /// Regression containment sums (signed).
    T,
    /// Descent containment sums (unsigned).
    D,
}

impl fmt::Display for BasisFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisFamily::R => write!(f, "R"),
            BasisFamily::T => write!(f, "T"),
            BasisFamily::D => write!(f, "D"),
        }
    }
}

/// A named basis element: family, degree, and subset of `{1,..,n-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BasisId {
    pub family: BasisFamily,
    pub n: usize,
    pub subset: SubsetMask,
}

impl BasisId {
    pub fn new(family: BasisFamily, n: usize, subset: SubsetMask) -> Result<Self, AlgebraError> {
        if subset.degree() != n {
            return Err(AlgebraError::DegreeMismatch(subset.degree(), n));
        }
        Ok(Self { family, n, subset })
    }

    pub fn empty_subset(family: BasisFamily, n: usize) -> Self {
        Self {
            family,
            n,
            subset: SubsetMask::empty(n),
        }
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members = self
            .subset
            .members()
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{}_{{{}}}^{}", self.family, members, self.n)
    }
}

/// Expand a basis element into the canonical (permutation) basis.
pub fn expand_basis<S: Scalar>(id: &BasisId) -> AlgebraElement<S> {
    let mut out = AlgebraElement::zero(id.n);
    match id.family {
        BasisFamily::R => {
            for p in signed_permutations(id.n) {
                if p.regression_set() == id.subset {
                    out.add_term(p, S::one());
                }
            }
        }
        BasisFamily::T => {
            for p in signed_permutations(id.n) {
                if p.regression_set().is_subset_of(&id.subset) {
                    out.add_term(p, S::one());
                }
            }
        }
        BasisFamily::D => {
            for p in unsigned_permutations(id.n) {
                let desc = p
                    .descent_set()
                    .expect("enumeration yields unsigned permutations");
                if desc.is_subset_of(&id.subset) {
                    out.add_term(p, S::one());
                }
            }
        }
    }
    out
}

/// Containment sums from exact sums: `T_S = sum of R_U over U ⊆ S`.
pub fn t_from_r(n: usize, subset: SubsetMask) -> Vec<(i64, BasisId)> {
    subset
        .subsets()
        .map(|u| {
            (
                1,
                BasisId {
                    family: BasisFamily::R,
                    n,
                    subset: u,
                },
            )
        })
        .collect()
}

/// Moebius inversion of the above:
/// `R_S = sum of (-1)^{|S|-|U|} T_U over U ⊆ S`.
pub fn r_from_t(n: usize, subset: SubsetMask) -> Vec<(i64, BasisId)> {
    subset
        .subsets()
        .map(|u| {
            let sign = if (subset.card() - u.card()).is_multiple_of(2) {
                1
            } else {
                -1
            };
            (
                sign,
                BasisId {
                    family: BasisFamily::T,
                    n,
                    subset: u,
                },
            )
        })
        .collect()
}

/// Expand a signed integer combination of basis ids.
pub fn expand_combination<S: Scalar>(combo: &[(i64, BasisId)]) -> AlgebraElement<S> {
    let degree = combo.first().map(|(_, id)| id.n).unwrap_or(0);
    let mut out = AlgebraElement::zero(degree);
    for (c, id) in combo {
        out = &out + &expand_basis::<S>(id).scale(&int(*c));
    }
    out
}

fn combined_subset(n: usize, s: SubsetMask, m: usize, u: SubsetMask) -> SubsetMask {
    let mut subset = SubsetMask::empty(n + m);
    for i in s.members() {
        subset.insert(i);
    }
    subset.insert(n);
    for i in u.members() {
        subset.insert(i + n);
    }
    subset
}

/// Product rule of the regression algebra:
/// `T_S^n * T_U^m = T_{S ∪ {n} ∪ (U+n)}^{n+m}`.
pub fn t_product_rule(a: &BasisId, b: &BasisId) -> Result<BasisId, AlgebraError> {
    product_rule(BasisFamily::T, a, b)
}

/// The same rule in the descent algebra:
/// `D_S^n * D_U^m = D_{S ∪ {n} ∪ (U+n)}^{n+m}`.
pub fn descent_algebra_product(a: &BasisId, b: &BasisId) -> Result<BasisId, AlgebraError> {
    product_rule(BasisFamily::D, a, b)
}

fn product_rule(family: BasisFamily, a: &BasisId, b: &BasisId) -> Result<BasisId, AlgebraError> {
    if a.family != family || b.family != family {
        return Err(AlgebraError::FamilyMismatch);
    }
    Ok(BasisId {
        family,
        n: a.n + b.n,
        subset: combined_subset(a.n, a.subset, b.n, b.subset),
    })
}

/// Verify that `T_S ↦ D_S` intertwines the two products for every pair of
/// basis elements with total degree at most `max_total`, by full expansion
/// on both sides.
pub fn regression_descent_iso_check<S: Scalar>(max_total: usize) -> bool {
    for n in 1..max_total {
        for m in 1..=max_total - n {
            for s in SubsetMask::all(n) {
                for u in SubsetMask::all(m) {
                    let t_lhs = convolve(
                        &expand_basis::<S>(&BasisId {
                            family: BasisFamily::T,
                            n,
                            subset: s,
                        }),
                        &expand_basis::<S>(&BasisId {
                            family: BasisFamily::T,
                            n: m,
                            subset: u,
                        }),
                    );
                    let d_lhs = convolve(
                        &expand_basis::<S>(&BasisId {
                            family: BasisFamily::D,
                            n,
                            subset: s,
                        }),
                        &expand_basis::<S>(&BasisId {
                            family: BasisFamily::D,
                            n: m,
                            subset: u,
                        }),
                    );
                    let combined = combined_subset(n, s, m, u);
                    let t_rhs = expand_basis::<S>(&BasisId {
                        family: BasisFamily::T,
                        n: n + m,
                        subset: combined,
                    });
                    let d_rhs = expand_basis::<S>(&BasisId {
                        family: BasisFamily::D,
                        n: n + m,
                        subset: combined,
                    });
                    if t_lhs != t_rhs || d_lhs != d_rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Solomon's Eulerian idempotent in degree `n`, in the descent basis:
/// `sol_n = sum over S of (-1)^{|S|} / (|S|+1) * D_S^n`.
pub fn solomon_idempotent<S: Scalar>(n: usize) -> AlgebraElement<S> {
    let mut out = AlgebraElement::zero(n);
    for s in SubsetMask::all(n) {
        let sign = if s.card() % 2 == 0 { 1 } else { -1 };
        let coef = ratio::<S>(sign, s.card() as i64 + 1);
        let d = expand_basis::<S>(&BasisId {
            family: BasisFamily::D,
            n,
            subset: s,
        });
        out = &out + &d.scale(&coef);
    }
    out
}

/// The same idempotent expanded directly in the permutation basis:
/// coefficient `(-1)^{|Desc(p)|} / (n * C(n-1, |Desc(p)|))` on each `p`.
pub fn solomon_idempotent_canonical<S: Scalar>(n: usize) -> AlgebraElement<S> {
    let mut out = AlgebraElement::zero(n);
    for p in unsigned_permutations(n) {
        let d = p.descent_set().expect("unsigned enumeration").card();
        let sign = if d % 2 == 0 { 1 } else { -1 };
        let coef = ratio::<S>(sign, n as i64) / binomial::<S>(n - 1, d);
        out.add_term(p, coef);
    }
    out
}

/// Which of the two closed-form expansions of the Magnus element to use.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OmegaBasis {
    /// `sum over S of (-1)^{|S|} / (|S|+1) * T_S^n` per degree.
    T,
    /// `(-1)^{|Reg(p)|} / (n * C(n-1, |Reg(p)|))` on each signed permutation.
    Canonical,
}

/// The Magnus element of the regression algebra: the logarithm of the
/// regression-free series, here built from either closed form. Both must
/// agree with `pic_series(cap).log(cap)` degree by degree.
pub fn omega_r<S: Scalar>(cap: usize, basis: OmegaBasis) -> GradedSeries<S> {
    let mut series = GradedSeries::zero();
    for n in 1..=cap {
        let part = match basis {
            OmegaBasis::T => {
                let mut acc = AlgebraElement::zero(n);
                for s in SubsetMask::all(n) {
                    let sign = if s.card() % 2 == 0 { 1 } else { -1 };
                    let coef = ratio::<S>(sign, s.card() as i64 + 1);
                    let t = expand_basis::<S>(&BasisId {
                        family: BasisFamily::T,
                        n,
                        subset: s,
                    });
                    acc = &acc + &t.scale(&coef);
                }
                acc
            }
            OmegaBasis::Canonical => {
                let mut acc = AlgebraElement::zero(n);
                for p in signed_permutations(n) {
                    let r = p.regression_set().card();
                    let sign = if r % 2 == 0 { 1 } else { -1 };
                    let coef = ratio::<S>(sign, n as i64) / binomial::<S>(n - 1, r);
                    acc.add_term(p, coef);
                }
                acc
            }
        };
        series.set_part(part);
    }
    series
}

/// The regression-free series: scalar 1 plus `R_∅^n` in every degree up to
/// `cap`. Its image under the evaluation map is the Picard-type series of
/// the effective evolution operator.
pub fn pic_series<S: Scalar>(cap: usize) -> GradedSeries<S> {
    let mut series = GradedSeries::<S>::unit();
    for n in 1..=cap {
        series.set_part(expand_basis(&BasisId::empty_subset(BasisFamily::R, n)));
    }
    series
}
