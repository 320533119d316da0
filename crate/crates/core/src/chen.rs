//! Exact iterated integrals of polynomial operator matrices over order
//! simplices.
//!
//! The evaluation map sends a signed permutation of degree `n` to the
//! integral of `X(t_{s(1)}) ... X(t_{s(n)})` over the chain
//! `x <= t_n <= ... <= t_1 <= t`, where the factor at position `i` is `A`
//! when position `i` is unbarred and `B` when it is barred. Everything is
//! computed by expanding the matrix product entrywise into multivariate
//! monomials and integrating each monomial by iterated antiderivatives, so
//! results are exact scalars.
//!
//! Bracket descriptors encode the same integrals the other way around: the
//! letter at index `j` names the product position of the variable `t_j`,
//! decorated by that factor's operator (`a`, `b`, or `h` for the full
//! perturbation, with `h`-letters expanding as plain minus barred). For a
//! signed permutation `s` the descriptor of `<s>` is the one-line word of
//! `s^{-1}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::algebra::{convolve, interleavings, AlgebraElement};
use crate::perm::{PermError, SignedPermutation};
use crate::poly::{Matrix, Poly, PolyMatrix, Projector};
use crate::scalar::{int, Scalar};
use crate::word::{format_word, parse_word, shuffle, Decoration, Letter};

/// Most factors a single monomial-expansion evaluation will accept; term
/// counts grow too fast beyond this.
pub const MAX_EVAL_FACTORS: usize = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChenError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("{0} integration factors exceed the cap of {MAX_EVAL_FACTORS}")]
    FactorCap(usize),
    #[error("factor variables must form a permutation of 1..=n")]
    BadVariables,
    #[error("window must satisfy lower <= upper")]
    BadWindow,
    #[error("descriptor values must form a permutation of 1..=n")]
    BadDescriptor,
    #[error("composite symbols need a head of positive degree")]
    EmptyHead,
    #[error("one operator per product position is required")]
    OperatorCount,
    #[error("dimension {0} exceeds the model cap of {1}")]
    DimensionCap(usize, usize),
    #[error("entry degree {0} exceeds the model cap of {1}")]
    DegreeCap(usize, usize),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Integration bounds `[lower, upper]`.
#[derive(Clone, PartialEq, Debug)]
pub struct Window<S> {
    lower: S,
    upper: S,
}

impl<S: Scalar> Window<S> {
    pub fn new(lower: S, upper: S) -> Result<Self, ChenError> {
        match lower.partial_cmp(&upper) {
            Some(std::cmp::Ordering::Greater) | None => Err(ChenError::BadWindow),
            _ => Ok(Self { lower, upper }),
        }
    }

    pub fn lower(&self) -> &S {
        &self.lower
    }

    pub fn upper(&self) -> &S {
        &self.upper
    }
}

/// `integral over x <= t_n <= ... <= t_1 <= t of prod t_i^{a_i}`, by
/// iterated antiderivatives starting from the innermost variable.
pub fn simplex_monomial_integral<S: Scalar>(exponents: &[u32], window: &Window<S>) -> S {
    let mut f = Poly::one();
    for &a in exponents.iter().rev() {
        let integrand = &f * &Poly::monomial(a as usize);
        let anti = integrand.antiderivative();
        let at_lower = anti.eval(window.lower());
        f = &anti - &Poly::constant(at_lower);
    }
    f.eval(window.upper())
}

/// Square matrix whose entries are multivariate monomial sums over a fixed
/// variable count; the working representation for expanded operator
/// products.
#[derive(Clone, Debug)]
struct MonoMatrix<S> {
    dim: usize,
    nvars: usize,
    entries: Vec<BTreeMap<Vec<u32>, S>>,
}

impl<S: Scalar> MonoMatrix<S> {
    fn from_poly_matrix(op: &PolyMatrix<S>, var: usize, nvars: usize) -> Self {
        debug_assert!(var >= 1 && var <= nvars);
        let entries = op
            .entries()
            .iter()
            .map(|p| {
                let mut mono = BTreeMap::new();
                for (k, c) in p.coeffs().iter().enumerate() {
                    if !c.is_zero() {
                        let mut e = vec![0u32; nvars];
                        e[var - 1] = k as u32;
                        mono.insert(e, c.clone());
                    }
                }
                mono
            })
            .collect();
        Self {
            dim: op.dim(),
            nvars,
            entries,
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.dim, rhs.dim);
        debug_assert_eq!(self.nvars, rhs.nvars);
        let d = self.dim;
        let mut entries = vec![BTreeMap::new(); d * d];
        for r in 0..d {
            for k in 0..d {
                let left = &self.entries[r * d + k];
                if left.is_empty() {
                    continue;
                }
                for c in 0..d {
                    let right = &rhs.entries[k * d + c];
                    if right.is_empty() {
                        continue;
                    }
                    let target: &mut BTreeMap<Vec<u32>, S> = &mut entries[r * d + c];
                    for (ea, ca) in left {
                        for (eb, cb) in right {
                            let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                            let coef = ca.clone() * cb.clone();
                            match target.entry(exps) {
                                std::collections::btree_map::Entry::Occupied(mut e) => {
                                    let sum = e.get().clone() + coef;
                                    if sum.is_zero() {
                                        e.remove();
                                    } else {
                                        *e.get_mut() = sum;
                                    }
                                }
                                std::collections::btree_map::Entry::Vacant(v) => {
                                    if !coef.is_zero() {
                                        v.insert(coef);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Self {
            dim: d,
            nvars: self.nvars,
            entries,
        }
    }
}

/// One factor of a chain integrand: an operator matrix evaluated at the
/// chain variable with the given 1-based index.
pub struct ChainFactor<'a, S> {
    pub op: &'a PolyMatrix<S>,
    pub var: usize,
}

/// Evaluator with a per-window cache of simplex monomial integrals; reuse
/// one instance for a whole verification run over a fixed window.
pub struct ChenEvaluator<S> {
    window: Window<S>,
    cache: HashMap<Vec<u32>, S>,
}

impl<S: Scalar> ChenEvaluator<S> {
    pub fn new(window: Window<S>) -> Self {
        Self {
            window,
            cache: HashMap::new(),
        }
    }

    pub fn window(&self) -> &Window<S> {
        &self.window
    }

    pub fn simplex_integral(&mut self, exponents: &[u32]) -> S {
        if let Some(v) = self.cache.get(exponents) {
            return v.clone();
        }
        let v = simplex_monomial_integral(exponents, &self.window);
        self.cache.insert(exponents.to_vec(), v.clone());
        v
    }

    /// Integrate a product of operator factors over the order simplex. The
    /// factor at product position `i` (left to right) is evaluated at the
    /// chain variable `factors[i].var`; the variables must form a
    /// permutation of `1..=n`.
    pub fn eval_chain(&mut self, factors: &[ChainFactor<'_, S>]) -> Result<Matrix<S>, ChenError> {
        let n = factors.len();
        if n == 0 {
            return Err(ChenError::BadVariables);
        }
        if n > MAX_EVAL_FACTORS {
            return Err(ChenError::FactorCap(n));
        }
        let dim = factors[0].op.dim();
        for f in factors {
            if f.op.dim() != dim {
                return Err(ChenError::DimensionMismatch(dim, f.op.dim()));
            }
        }
        let mut seen = vec![false; n];
        for f in factors {
            if f.var == 0 || f.var > n || seen[f.var - 1] {
                return Err(ChenError::BadVariables);
            }
            seen[f.var - 1] = true;
        }

        let mut acc = MonoMatrix::from_poly_matrix(factors[0].op, factors[0].var, n);
        for f in &factors[1..] {
            acc = acc.mul(&MonoMatrix::from_poly_matrix(f.op, f.var, n));
        }
        Ok(self.integrate(&acc))
    }

    fn integrate(&mut self, m: &MonoMatrix<S>) -> Matrix<S> {
        let mut out = Matrix::zero(m.dim);
        for r in 0..m.dim {
            for c in 0..m.dim {
                let mut acc = S::zero();
                for (exps, coef) in &m.entries[r * m.dim + c] {
                    acc = acc + coef.clone() * self.simplex_integral(exps);
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    /// The evaluation map on a homogeneous element: the linear extension of
    /// `s -> integral of X(t_{s(1)}) ... X(t_{s(n)})` with `X = a` at
    /// unbarred and `X = b` at barred positions. Degree 0 evaluates to the
    /// scalar multiple of the identity matrix.
    pub fn eval_angle(
        &mut self,
        elem: &AlgebraElement<S>,
        a: &PolyMatrix<S>,
        b: &PolyMatrix<S>,
    ) -> Result<Matrix<S>, ChenError> {
        if a.dim() != b.dim() {
            return Err(ChenError::DimensionMismatch(a.dim(), b.dim()));
        }
        let dim = a.dim();
        if elem.degree() == 0 {
            return Ok(Matrix::identity(dim).scale(&elem.coeff(&SignedPermutation::empty())));
        }
        let mut out = Matrix::zero(dim);
        for (p, coef) in elem.terms() {
            let factors: Vec<ChainFactor<'_, S>> = p
                .values()
                .iter()
                .zip(p.bars())
                .map(|(&v, &bar)| ChainFactor {
                    op: if bar { b } else { a },
                    var: v,
                })
                .collect();
            let m = self.eval_chain(&factors)?;
            out = &out + &m.scale(coef);
        }
        Ok(out)
    }

    /// Evaluate a bracket descriptor against a perturbation `h` and model
    /// projector `p`, with `a = (1-P)h` and `b = -P h`; hatted letters
    /// expand as plain minus barred before evaluation.
    pub fn eval_bracket(
        &mut self,
        descriptor: &IntegralDescriptor,
        h: &PolyMatrix<S>,
        p: &Projector,
    ) -> Result<Matrix<S>, ChenError> {
        let (a, b) = gl_operators(h, p)?;
        let n = descriptor.len();
        if n == 0 {
            return Ok(Matrix::identity(h.dim()));
        }
        let mut out = Matrix::zero(h.dim());
        for (sign, word) in expand_hats(descriptor.letters()) {
            // index_at_position[p-1] = j with |word[j]| = p + 1... (1-based)
            let mut index_at_position = vec![0usize; n];
            for (j, l) in word.iter().enumerate() {
                index_at_position[l.value - 1] = j;
            }
            let factors: Vec<ChainFactor<'_, S>> = (0..n)
                .map(|pos| {
                    let j = index_at_position[pos];
                    let op = match word[j].decor {
                        Decoration::Bar => &b,
                        _ => &a,
                    };
                    ChainFactor { op, var: j + 1 }
                })
                .collect();
            let m = self.eval_chain(&factors)?;
            out = &out + &m.scale(&int(sign));
        }
        Ok(out)
    }

    /// Evaluate a composite symbol `<head; m>`: the head factors over the
    /// outer chain bounded by the window, a trailing block of `m` copies of
    /// `h` over an inner chain whose upper bound is the head's innermost
    /// time `t_{head(k)}`.
    pub fn eval_composite(
        &mut self,
        sym: &CompositeSymbol,
        h: &PolyMatrix<S>,
        p: &Projector,
    ) -> Result<Matrix<S>, ChenError> {
        let k = sym.head.degree();
        if k == 0 {
            return Err(ChenError::EmptyHead);
        }
        let (a, b) = gl_operators(h, p)?;
        if sym.tail == 0 {
            return self.eval_angle(&AlgebraElement::basis(sym.head.clone()), &a, &b);
        }
        if k + 1 > MAX_EVAL_FACTORS {
            return Err(ChenError::FactorCap(k + 1));
        }
        let inner = picard_poly(h, self.window.lower(), sym.tail);
        let link = sym.head.value_at(k);
        let mut acc = MonoMatrix::from_poly_matrix(
            if sym.head.bar_at(1) { &b } else { &a },
            sym.head.value_at(1),
            k,
        );
        for i in 2..=k {
            let op = if sym.head.bar_at(i) { &b } else { &a };
            acc = acc.mul(&MonoMatrix::from_poly_matrix(op, sym.head.value_at(i), k));
        }
        acc = acc.mul(&MonoMatrix::from_poly_matrix(&inner, link, k));
        Ok(self.integrate(&acc))
    }

    /// Linear extension of `eval_composite` over the head element.
    pub fn eval_composite_element(
        &mut self,
        heads: &AlgebraElement<S>,
        tail: usize,
        h: &PolyMatrix<S>,
        p: &Projector,
    ) -> Result<Matrix<S>, ChenError> {
        if heads.degree() == 0 {
            return Err(ChenError::EmptyHead);
        }
        let mut out = Matrix::zero(h.dim());
        for (perm, coef) in heads.terms() {
            let m = self.eval_composite(&CompositeSymbol::new(perm.clone(), tail)?, h, p)?;
            out = &out + &m.scale(coef);
        }
        Ok(out)
    }
}

/// The off-space and model-space operators of the effective expansion:
/// `a = (1-P) h` and `b = -P h`. The minus sign makes `h` the formal
/// difference of the two, which is what hat expansion uses.
pub fn gl_operators<S: Scalar>(
    h: &PolyMatrix<S>,
    p: &Projector,
) -> Result<(PolyMatrix<S>, PolyMatrix<S>), ChenError> {
    if h.dim() != p.dim() {
        return Err(ChenError::DimensionMismatch(h.dim(), p.dim()));
    }
    let a = &p.complement().poly_matrix() * h;
    let b = -&(&p.poly_matrix() * h);
    Ok((a, b))
}

/// `m`-fold Picard integral of `h` as a polynomial matrix in the upper
/// bound: `W_0 = 1`, `W_j(u) = integral over [lower, u] of h(s) W_{j-1}(s)`.
pub fn picard_poly<S: Scalar>(h: &PolyMatrix<S>, lower: &S, m: usize) -> PolyMatrix<S> {
    let mut w = PolyMatrix::identity(h.dim());
    for _ in 0..m {
        w = (h * &w).integral_from(lower);
    }
    w
}

fn expand_hats(letters: &[Letter]) -> Vec<(i64, Vec<Letter>)> {
    let mut out: Vec<(i64, Vec<Letter>)> = vec![(1, Vec::with_capacity(letters.len()))];
    for l in letters {
        match l.decor {
            Decoration::Plain | Decoration::Bar => {
                for (_, w) in &mut out {
                    w.push(*l);
                }
            }
            Decoration::Hat => {
                out = out
                    .into_iter()
                    .flat_map(|(sign, w)| {
                        let mut plain = w.clone();
                        plain.push(Letter::plain(l.value));
                        let mut barred = w;
                        barred.push(Letter::barred(l.value));
                        [(sign, plain), (-sign, barred)]
                    })
                    .collect();
            }
        }
    }
    out
}

/// A decorated word whose undecorated values form a permutation: the
/// encoding of one iterated integral by the product positions of its time
/// variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegralDescriptor {
    letters: Vec<Letter>,
}

impl IntegralDescriptor {
    pub fn new(letters: Vec<Letter>) -> Result<Self, ChenError> {
        let n = letters.len();
        let mut seen = vec![false; n];
        for l in &letters {
            if l.value == 0 || l.value > n || seen[l.value - 1] {
                return Err(ChenError::BadDescriptor);
            }
            seen[l.value - 1] = true;
        }
        Ok(Self { letters })
    }

    /// The all-hat word of length `n`; its evaluation is the degree-`n`
    /// Picard term of the full perturbation.
    pub fn all_hats(n: usize) -> Self {
        Self {
            letters: (1..=n).map(Letter::hatted).collect(),
        }
    }

    /// The descriptor whose evaluation equals `<sigma>`: the one-line word
    /// of the group inverse, bars kept as bars.
    pub fn angle(sigma: &SignedPermutation) -> Self {
        Self {
            letters: crate::word::perm_word(&sigma.inverse(), 0),
        }
    }

    pub fn parse(s: &str) -> Result<Self, ChenError> {
        Self::new(parse_word(s)?)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for IntegralDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_word(&self.letters))
    }
}

/// `<head; tail>`: a head permutation over the outer chain followed by
/// `tail` copies of the perturbation over the linked inner chain.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompositeSymbol {
    pub head: SignedPermutation,
    pub tail: usize,
}

impl CompositeSymbol {
    pub fn new(head: SignedPermutation, tail: usize) -> Result<Self, ChenError> {
        if head.degree() == 0 {
            return Err(ChenError::EmptyHead);
        }
        Ok(Self { head, tail })
    }
}

/// Chen's product formula: the product of two evaluations equals the
/// evaluation of the convolution product, exactly.
pub fn chen_product_check<S: Scalar>(
    x: &AlgebraElement<S>,
    y: &AlgebraElement<S>,
    a: &PolyMatrix<S>,
    b: &PolyMatrix<S>,
    window: &Window<S>,
) -> Result<bool, ChenError> {
    let mut ev = ChenEvaluator::new(window.clone());
    let lhs = &ev.eval_angle(x, a, b)? * &ev.eval_angle(y, a, b)?;
    let rhs = ev.eval_angle(&convolve(x, y), a, b)?;
    Ok(lhs == rhs)
}

/// The noncommutative Chen formula with one distinct operator per product
/// position: `A_alpha x B_beta = (AB)_{alpha * beta}`.
pub fn general_chen_check<S: Scalar>(
    alpha: &SignedPermutation,
    beta: &SignedPermutation,
    a_ops: &[PolyMatrix<S>],
    b_ops: &[PolyMatrix<S>],
    window: &Window<S>,
) -> Result<bool, ChenError> {
    if a_ops.len() != alpha.degree() || b_ops.len() != beta.degree() {
        return Err(ChenError::OperatorCount);
    }
    let mut ev = ChenEvaluator::new(window.clone());
    let left = {
        let factors: Vec<ChainFactor<'_, S>> = a_ops
            .iter()
            .enumerate()
            .map(|(i, op)| ChainFactor {
                op,
                var: alpha.value_at(i + 1),
            })
            .collect();
        ev.eval_chain(&factors)?
    };
    let right = {
        let factors: Vec<ChainFactor<'_, S>> = b_ops
            .iter()
            .enumerate()
            .map(|(i, op)| ChainFactor {
                op,
                var: beta.value_at(i + 1),
            })
            .collect();
        ev.eval_chain(&factors)?
    };
    let lhs = &left * &right;

    let ops: Vec<&PolyMatrix<S>> = a_ops.iter().chain(b_ops).collect();
    let mut rhs = Matrix::zero(lhs.dim());
    for tau in interleavings(alpha, beta) {
        let factors: Vec<ChainFactor<'_, S>> = ops
            .iter()
            .enumerate()
            .map(|(i, op)| ChainFactor {
                op,
                var: tau.value_at(i + 1),
            })
            .collect();
        rhs = &rhs + &ev.eval_chain(&factors)?;
    }
    Ok(lhs == rhs)
}

/// Shuffle expansion of a composite symbol: with `i = head(k)`, the symbol
/// `<head; m>` equals the bracket whose first `i` letters spell
/// `head^{-1}` and whose remaining letters shuffle the rest of
/// `head^{-1}` with the hatted block `(k+1, .., k+m)`.
pub fn composite_shuffle_expansion_check<S: Scalar>(
    sym: &CompositeSymbol,
    h: &PolyMatrix<S>,
    p: &Projector,
    window: &Window<S>,
) -> Result<bool, ChenError> {
    let k = sym.head.degree();
    let n = k + sym.tail;
    let mut ev = ChenEvaluator::new(window.clone());
    let lhs = ev.eval_composite(sym, h, p)?;

    let inv_word = crate::word::perm_word(&sym.head.inverse(), 0);
    let split = sym.head.value_at(k);
    let hats: Vec<Letter> = (k + 1..=n).map(Letter::hatted).collect();
    let mut rhs = Matrix::zero(h.dim());
    for (word, mult) in shuffle(&inv_word[split..], &hats).terms() {
        let mut letters = inv_word[..split].to_vec();
        letters.extend_from_slice(word);
        let m = ev.eval_bracket(&IntegralDescriptor::new(letters)?, h, p)?;
        rhs = &rhs + &m.scale(&int(mult));
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use crate::Rat;

    fn window01() -> Window<Rat> {
        Window::new(int(0), int(1)).unwrap()
    }

    fn scalar_one() -> PolyMatrix<Rat> {
        PolyMatrix::identity(1)
    }

    #[test]
    fn simplex_volumes() {
        assert_eq!(simplex_monomial_integral::<Rat>(&[0], &window01()), int(1));
        assert_eq!(
            simplex_monomial_integral::<Rat>(&[0, 0], &window01()),
            ratio(1, 2)
        );
        assert_eq!(
            simplex_monomial_integral::<Rat>(&[0, 0, 0], &window01()),
            ratio(1, 6)
        );
        // integral of t1 t2 over the triangle 0 <= t2 <= t1 <= 1 is 1/8
        assert_eq!(
            simplex_monomial_integral::<Rat>(&[1, 1], &window01()),
            ratio(1, 8)
        );
        assert_eq!(simplex_monomial_integral::<Rat>(&[], &window01()), int(1));
    }

    #[test]
    fn window_validation() {
        assert!(Window::new(int::<Rat>(1), int(0)).is_err());
        assert!(Window::new(int::<Rat>(-1), int(0)).is_ok());
    }

    #[test]
    fn scalar_angles() {
        let mut ev = ChenEvaluator::new(window01());
        let one = scalar_one();
        let tau = |s: &str| AlgebraElement::<Rat>::basis(s.parse().unwrap());
        let m = ev.eval_angle(&tau("1"), &one, &one).unwrap();
        assert_eq!(m.get(0, 0), &int::<Rat>(1));
        for p in ["1 2", "2 1"] {
            let m = ev.eval_angle(&tau(p), &one, &one).unwrap();
            assert_eq!(m.get(0, 0), &ratio::<Rat>(1, 2));
        }
        // degree 0 evaluates to the scalar itself
        let unit = AlgebraElement::<Rat>::unit();
        assert_eq!(
            ev.eval_angle(&unit, &one, &one).unwrap(),
            Matrix::identity(1)
        );
    }

    #[test]
    fn eval_chain_guards() {
        let mut ev = ChenEvaluator::new(window01());
        let one = scalar_one();
        assert_eq!(
            ev.eval_chain(&[
                ChainFactor { op: &one, var: 1 },
                ChainFactor { op: &one, var: 1 }
            ]),
            Err(ChenError::BadVariables)
        );
        let six: Vec<ChainFactor<'_, Rat>> =
            (1..=6).map(|v| ChainFactor { op: &one, var: v }).collect();
        assert_eq!(ev.eval_chain(&six), Err(ChenError::FactorCap(6)));
        let two = PolyMatrix::<Rat>::identity(2);
        assert!(matches!(
            ev.eval_chain(&[
                ChainFactor { op: &one, var: 1 },
                ChainFactor { op: &two, var: 2 }
            ]),
            Err(ChenError::DimensionMismatch(1, 2))
        ));
    }

    #[test]
    fn bracket_of_single_hat_is_integral_of_h() {
        // [1^] = integral of H over the window, independently of P
        let mut h = PolyMatrix::<Rat>::zero(2);
        h.set(0, 1, Poly::monomial(1));
        h.set(1, 0, Poly::one());
        let p = Projector::leading(2, 1);
        let mut ev = ChenEvaluator::new(window01());
        let got = ev
            .eval_bracket(&IntegralDescriptor::all_hats(1), &h, &p)
            .unwrap();
        let expected = h.integral_from(&int(0)).eval(&int(1));
        assert_eq!(got, expected);
    }

    #[test]
    fn hat_expansion_identity() {
        // [1, -2] = [^1, -2] + [-1, -2]
        let mut h = PolyMatrix::<Rat>::zero(2);
        h.set(0, 0, Poly::monomial(1));
        h.set(0, 1, Poly::one());
        h.set(1, 0, Poly::monomial(2));
        let p = Projector::leading(2, 1);
        let mut ev = ChenEvaluator::new(window01());
        let d = |s: &str| IntegralDescriptor::parse(s).unwrap();
        let lhs = ev.eval_bracket(&d("1 -2"), &h, &p).unwrap();
        let rhs = &ev.eval_bracket(&d("^1 -2"), &h, &p).unwrap()
            + &ev.eval_bracket(&d("-1 -2"), &h, &p).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn composite_with_empty_tail_is_an_angle() {
        let mut h = PolyMatrix::<Rat>::zero(2);
        h.set(0, 1, Poly::one());
        h.set(1, 0, Poly::monomial(1));
        let p = Projector::leading(2, 1);
        let (a, b) = gl_operators(&h, &p).unwrap();
        let mut ev = ChenEvaluator::new(window01());
        let head: SignedPermutation = "1".parse().unwrap();
        let sym = CompositeSymbol::new(head.clone(), 0).unwrap();
        let via_composite = ev.eval_composite(&sym, &h, &p).unwrap();
        let via_angle = ev.eval_angle(&AlgebraElement::basis(head), &a, &b).unwrap();
        assert_eq!(via_composite, via_angle);
    }

    #[test]
    fn descriptor_validation() {
        assert!(IntegralDescriptor::parse("^2 -3 1 ^5 -4").is_ok());
        assert_eq!(
            IntegralDescriptor::parse("1 1"),
            Err(ChenError::BadDescriptor)
        );
        assert_eq!(
            IntegralDescriptor::parse("3 1"),
            Err(ChenError::BadDescriptor)
        );
        assert!(CompositeSymbol::new(SignedPermutation::empty(), 1).is_err());
    }

    #[test]
    fn product_formula_scalar_case() {
        let one = scalar_one();
        let win = window01();
        let x = AlgebraElement::<Rat>::basis("1".parse().unwrap());
        assert!(chen_product_check(&x, &x, &one, &one, &win).unwrap());
        assert!(general_chen_check(
            &"1".parse().unwrap(),
            &"1".parse().unwrap(),
            std::slice::from_ref(&one),
            std::slice::from_ref(&one),
            &win
        )
        .unwrap());
        assert!(matches!(
            general_chen_check(
                &"1 2".parse().unwrap(),
                &"1".parse().unwrap(),
                &[one],
                &[],
                &win
            ),
            Err(ChenError::OperatorCount)
        ));
    }

    #[test]
    fn model_space_component_of_b_vanishes() {
        // (1-P) b = 0 as polynomial matrices when b = -P h
        let mut h = PolyMatrix::<Rat>::zero(3);
        h.set(0, 2, Poly::monomial(2));
        h.set(1, 1, Poly::one());
        h.set(2, 0, Poly::monomial(1));
        let p = Projector::leading(3, 2);
        let (_, b) = gl_operators(&h, &p).unwrap();
        assert!((&p.complement().poly_matrix() * &b).is_zero());
    }
}
