//! Sparse linear combinations of signed permutations of a single degree, and
//! the two products defined on them: the graded convolution product and the
//! internal (composition) product of the group algebra.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use itertools::Itertools;
use thiserror::Error;

use crate::perm::{PermError, SignedPermutation};
use crate::scalar::Scalar;
use crate::word::{perm_word, shuffle, word_perm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("term of degree {term} in an element of degree {element}")]
    TermDegree { term: usize, element: usize },
    #[error("basis ids must share the expected family")]
    FamilyMismatch,
    #[error("series constant term must be 1 to take a logarithm")]
    ConstantTermNotOne,
    #[error("series constant term must be 0 to take an exponential")]
    ConstantTermNotZero,
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A finite sum of signed permutations of one degree with scalar
/// coefficients. Zero coefficients are never stored, and terms iterate in
/// the canonical (lexicographic) order of their permutations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement<S> {
    degree: usize,
    terms: BTreeMap<SignedPermutation, S>,
}

impl<S: Scalar> AlgebraElement<S> {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// A single permutation with coefficient 1.
    pub fn basis(p: SignedPermutation) -> Self {
        let mut e = Self::zero(p.degree());
        e.terms.insert(p, S::one());
        e
    }

    /// The unit: the empty permutation in degree 0.
    pub fn unit() -> Self {
        Self::basis(SignedPermutation::empty())
    }

    /// A scalar in degree 0.
    pub fn scalar(c: S) -> Self {
        let mut e = Self::zero(0);
        e.add_term(SignedPermutation::empty(), c);
        e
    }

    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (SignedPermutation, S)>,
    {
        let mut e = Self::zero(degree);
        for (p, c) in terms {
            if p.degree() != degree {
                return Err(AlgebraError::TermDegree {
                    term: p.degree(),
                    element: degree,
                });
            }
            e.add_term(p, c);
        }
        Ok(e)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SignedPermutation, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &SignedPermutation) -> S {
        self.terms.get(p).cloned().unwrap_or_else(S::zero)
    }

    /// Add `c * p`, dropping the entry when the sum cancels. Panics if the
    /// degree does not match; use `from_terms` for validated construction.
    pub fn add_term(&mut self, p: SignedPermutation, c: S) {
        assert_eq!(p.degree(), self.degree, "term degree mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        let terms = self
            .terms
            .iter()
            .map(|(p, a)| (p.clone(), a.clone() * c.clone()))
            .collect();
        Self {
            degree: self.degree,
            terms,
        }
    }

    /// True when no stored permutation carries a bar.
    pub fn is_unsigned(&self) -> bool {
        self.terms.keys().all(SignedPermutation::is_unsigned)
    }
}

impl<S: Scalar> Add for &AlgebraElement<S> {
    type Output = AlgebraElement<S>;

    fn add(self, rhs: Self) -> AlgebraElement<S> {
        assert_eq!(self.degree, rhs.degree, "degree mismatch");
        let mut out = self.clone();
        for (p, c) in rhs.terms() {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl<S: Scalar> Sub for &AlgebraElement<S> {
    type Output = AlgebraElement<S>;

    fn sub(self, rhs: Self) -> AlgebraElement<S> {
        self + &(-rhs)
    }
}

impl<S: Scalar> Neg for &AlgebraElement<S> {
    type Output = AlgebraElement<S>;

    fn neg(self) -> AlgebraElement<S> {
        let terms = self
            .terms
            .iter()
            .map(|(p, c)| (p.clone(), -c.clone()))
            .collect();
        AlgebraElement {
            degree: self.degree,
            terms,
        }
    }
}

/// The `binomial(n+m, n)` interleavings making up a basis convolution
/// product: for each choice of the `n` values landing in the prefix, the
/// prefix realizes `sigma`'s pattern on those values and the suffix realizes
/// `beta`'s pattern on the rest, bars copied positionally.
pub fn interleavings(
    sigma: &SignedPermutation,
    beta: &SignedPermutation,
) -> Vec<SignedPermutation> {
    let n = sigma.degree();
    let m = beta.degree();
    (1..=n + m)
        .combinations(n)
        .map(|prefix_values| {
            let mut taken = vec![false; n + m];
            for &v in &prefix_values {
                taken[v - 1] = true;
            }
            let suffix_values: Vec<usize> = (1..=n + m).filter(|&v| !taken[v - 1]).collect();
            let mut values = Vec::with_capacity(n + m);
            let mut bars = Vec::with_capacity(n + m);
            for i in 0..n {
                values.push(prefix_values[sigma.values()[i] - 1]);
                bars.push(sigma.bars()[i]);
            }
            for j in 0..m {
                values.push(suffix_values[beta.values()[j] - 1]);
                bars.push(beta.bars()[j]);
            }
            SignedPermutation::from_parts_unchecked(values, bars)
        })
        .collect()
}

/// Convolution product on the graded sum of the group algebras: the
/// bilinear extension of the sum over all interleavings whose standardized
/// prefix and suffix reproduce the two factors.
pub fn convolve<S: Scalar>(x: &AlgebraElement<S>, y: &AlgebraElement<S>) -> AlgebraElement<S> {
    let mut out = AlgebraElement::zero(x.degree() + y.degree());
    for (sigma, a) in x.terms() {
        for (beta, b) in y.terms() {
            let c = a.clone() * b.clone();
            for tau in interleavings(sigma, beta) {
                out.add_term(tau, c.clone());
            }
        }
    }
    out
}

/// Internal product: the bilinear extension of group composition within one
/// degree (the left factor acts after the right one).
pub fn internal_product<S: Scalar>(
    x: &AlgebraElement<S>,
    y: &AlgebraElement<S>,
) -> Result<AlgebraElement<S>, AlgebraError> {
    if x.degree() != y.degree() {
        return Err(AlgebraError::DegreeMismatch(x.degree(), y.degree()));
    }
    let mut out = AlgebraElement::zero(x.degree());
    for (p, a) in x.terms() {
        for (q, b) in y.terms() {
            out.add_term(p.compose(q)?, a.clone() * b.clone());
        }
    }
    Ok(out)
}

/// Check the shuffle form of the convolution product on unsigned
/// permutations: `sigma^{-1} * beta^{-1} = (sigma ⧢ beta[n])^{-1}`, where
/// `beta[n]` shifts every letter of `beta` by `n`.
pub fn shuffle_convolution_relation_check<S: Scalar>(
    sigma: &SignedPermutation,
    beta: &SignedPermutation,
) -> Result<bool, AlgebraError> {
    for p in [sigma, beta] {
        if let Some(i) = p.bars().iter().position(|&b| b) {
            return Err(PermError::SignedInput(i + 1).into());
        }
    }
    let lhs: AlgebraElement<S> = convolve(
        &AlgebraElement::basis(sigma.inverse()),
        &AlgebraElement::basis(beta.inverse()),
    );
    let shuffled = shuffle(&perm_word(sigma, 0), &perm_word(beta, sigma.degree()));
    let mut rhs = AlgebraElement::<S>::zero(sigma.degree() + beta.degree());
    for (word, mult) in shuffled.terms() {
        let p = word_perm(word)?;
        rhs.add_term(p.inverse(), crate::scalar::int(mult));
    }
    Ok(lhs == rhs)
}
