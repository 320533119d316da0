//! The Picard-type expansion of the effective adiabatic evolution operator
//! over a finite window, graded by the number of perturbation factors, and
//! its exponential (Magnus) form.
//!
//! All identities are checked in the pre-inverse shape
//! `U P = (P + (1-P) (sum of <R_empty^k>) P) (P U P)`, which avoids
//! inverting a truncated series and keeps every assertion an exact matrix
//! equality.

use crate::algebra::AlgebraElement;
use crate::bases::{expand_basis, omega_r, BasisFamily, BasisId, OmegaBasis};
use crate::chen::{ChenError, ChenEvaluator, IntegralDescriptor, Window};
use crate::model::Model;
use crate::poly::{Matrix, PolyMatrix};
use crate::scalar::{int, ratio, Scalar};
use crate::series::GradedSeries;

/// Per-degree evaluations of the Picard series of the full perturbation:
/// `terms[n]` integrates `n` copies of `H` over the window's order simplex.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedEvolution<S> {
    terms: Vec<Matrix<S>>,
}

impl<S: Scalar> TruncatedEvolution<S> {
    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn term(&self, n: usize) -> &Matrix<S> {
        &self.terms[n]
    }

    pub fn terms(&self) -> &[Matrix<S>] {
        &self.terms
    }
}

/// Evaluate the all-hat bracket words `[1^, .., n^]` for `n` up to `order`.
pub fn picard_terms<S: Scalar>(
    model: &Model<S>,
    order: usize,
) -> Result<TruncatedEvolution<S>, ChenError> {
    let mut ev = ChenEvaluator::new(model.window().clone());
    picard_terms_with(&mut ev, model, order)
}

fn picard_terms_with<S: Scalar>(
    ev: &mut ChenEvaluator<S>,
    model: &Model<S>,
    order: usize,
) -> Result<TruncatedEvolution<S>, ChenError> {
    let terms = (0..=order)
        .map(|n| {
            ev.eval_bracket(
                &IntegralDescriptor::all_hats(n),
                model.perturbation(),
                model.projector(),
            )
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TruncatedEvolution { terms })
}

/// A failed degree of a graded matrix identity, with both exact sides.
#[derive(Clone, PartialEq, Debug)]
pub struct GradedMismatch<S> {
    pub degree: usize,
    pub lhs: Matrix<S>,
    pub rhs: Matrix<S>,
}

fn regression_free_evaluations<S: Scalar>(
    ev: &mut ChenEvaluator<S>,
    model: &Model<S>,
    order: usize,
) -> Result<Vec<Matrix<S>>, ChenError> {
    let (a, b) = model.operators();
    let mut out = vec![Matrix::identity(model.dim())];
    for k in 1..=order {
        let r = expand_basis::<S>(&BasisId::empty_subset(BasisFamily::R, k));
        out.push(ev.eval_angle(&r, &a, &b)?);
    }
    Ok(out)
}

/// Degree-wise check of the Picard-type expansion of the effective
/// evolution operator, in pre-inverse form: for every `1 <= n <= max`,
/// `U_n P = P U_n P + sum over k of (1-P) <R_empty^k> P U_{n-k} P`.
#[allow(clippy::needless_range_loop)]
pub fn gl_expansion_mismatch<S: Scalar>(
    model: &Model<S>,
    max_degree: usize,
) -> Result<Option<GradedMismatch<S>>, ChenError> {
    let mut ev = ChenEvaluator::new(model.window().clone());
    let u = picard_terms_with(&mut ev, model, max_degree)?;
    let r = regression_free_evaluations(&mut ev, model, max_degree)?;
    let p = model.projector().matrix::<S>();
    let q = model.projector().complement().matrix::<S>();
    for n in 1..=max_degree {
        let lhs = u.term(n) * &p;
        let mut rhs = &(&p * u.term(n)) * &p;
        for k in 1..=n {
            let tail = &(u.term(n - k) * &p);
            rhs = &rhs + &(&(&(&q * &r[k]) * &p) * tail);
        }
        if lhs != rhs {
            return Ok(Some(GradedMismatch {
                degree: n,
                lhs,
                rhs,
            }));
        }
    }
    Ok(None)
}

pub fn gl_expansion_check<S: Scalar>(
    model: &Model<S>,
    max_degree: usize,
) -> Result<bool, ChenError> {
    Ok(gl_expansion_mismatch(model, max_degree)?.is_none())
}

/// The recursion that telescopes into the full expansion:
/// `<R_empty^k; n-k> = <R_empty^k> P U_{n-k} + <R_empty^{k+1}; n-k-1>`.
pub fn composite_recursion_check<S: Scalar>(
    model: &Model<S>,
    k: usize,
    n: usize,
) -> Result<bool, ChenError> {
    if k == 0 || k >= n {
        return Err(ChenError::EmptyHead);
    }
    let mut ev = ChenEvaluator::new(model.window().clone());
    let h = model.perturbation();
    let proj = model.projector();
    let r_k = expand_basis::<S>(&BasisId::empty_subset(BasisFamily::R, k));
    let r_next = expand_basis::<S>(&BasisId::empty_subset(BasisFamily::R, k + 1));
    let (a, b) = model.operators();

    let lhs = ev.eval_composite_element(&r_k, n - k, h, proj)?;
    let u_tail = ev.eval_bracket(&IntegralDescriptor::all_hats(n - k), h, proj)?;
    let first = &(&ev.eval_angle(&r_k, &a, &b)? * &proj.matrix()) * &u_tail;
    let second = ev.eval_composite_element(&r_next, n - k - 1, h, proj)?;
    Ok(lhs == &first + &second)
}

fn graded_mul<S: Scalar>(x: &[Matrix<S>], y: &[Matrix<S>]) -> Vec<Matrix<S>> {
    let n = x.len();
    let dim = x[0].dim();
    let mut out = vec![Matrix::zero(dim); n];
    for i in 0..n {
        for j in 0..n - i {
            out[i + j] = &out[i + j] + &(&x[i] * &y[j]);
        }
    }
    out
}

fn graded_unit<S: Scalar>(dim: usize, len: usize) -> Vec<Matrix<S>> {
    let mut u = vec![Matrix::zero(dim); len];
    u[0] = Matrix::identity(dim);
    u
}

/// Exponential of a graded matrix series with vanishing degree-0 part;
/// exact, each degree a finite sum.
pub fn graded_matrix_exp<S: Scalar>(parts: &[Matrix<S>]) -> Vec<Matrix<S>> {
    assert!(parts[0].is_zero(), "degree-0 part must vanish");
    let dim = parts[0].dim();
    let mut acc = graded_unit(dim, parts.len());
    let mut pow = graded_unit(dim, parts.len());
    let mut factorial = int::<S>(1);
    for j in 1..parts.len() {
        pow = graded_mul(&pow, parts);
        factorial = factorial * int::<S>(j as i64);
        let coef = S::one() / factorial.clone();
        for (a, p) in acc.iter_mut().zip(&pow) {
            *a = &*a + &p.scale(&coef);
        }
    }
    acc
}

/// Logarithm of a graded matrix series with identity degree-0 part.
pub fn graded_matrix_log<S: Scalar>(parts: &[Matrix<S>]) -> Vec<Matrix<S>> {
    let dim = parts[0].dim();
    assert_eq!(
        parts[0],
        Matrix::identity(dim),
        "degree-0 part must be the identity"
    );
    let mut z = parts.to_vec();
    z[0] = Matrix::zero(dim);
    let mut acc = vec![Matrix::zero(dim); parts.len()];
    let mut pow = graded_unit(dim, parts.len());
    for j in 1..parts.len() {
        pow = graded_mul(&pow, &z);
        let coef = ratio::<S>(if j % 2 == 1 { 1 } else { -1 }, j as i64);
        for (a, p) in acc.iter_mut().zip(&pow) {
            *a = &*a + &p.scale(&coef);
        }
    }
    acc
}

/// Exponential form of the effective evolution: degree-wise equality of
/// `(1-P) exp(<omega>) P` and `(1-P) (sum of <R_empty^n>) P` up to
/// `max_degree`, the matrix exponential taken formally in the grading.
#[allow(clippy::needless_range_loop)]
pub fn magnus_exp_mismatch<S: Scalar>(
    model: &Model<S>,
    max_degree: usize,
) -> Result<Option<GradedMismatch<S>>, ChenError> {
    let mut ev = ChenEvaluator::new(model.window().clone());
    let (a, b) = model.operators();
    let omega = omega_r::<S>(max_degree, OmegaBasis::T);
    let mut omega_eval = vec![Matrix::zero(model.dim()); max_degree + 1];
    for n in 1..=max_degree {
        omega_eval[n] = ev.eval_angle(&omega.part_or_zero(n), &a, &b)?;
    }
    let exp_eval = graded_matrix_exp(&omega_eval);
    let pic_eval = regression_free_evaluations(&mut ev, model, max_degree)?;
    let p = model.projector().matrix::<S>();
    let q = model.projector().complement().matrix::<S>();
    for n in 1..=max_degree {
        let lhs = &(&q * &exp_eval[n]) * &p;
        let rhs = &(&q * &pic_eval[n]) * &p;
        if lhs != rhs {
            return Ok(Some(GradedMismatch {
                degree: n,
                lhs,
                rhs,
            }));
        }
    }
    Ok(None)
}

pub fn magnus_exp_check<S: Scalar>(model: &Model<S>, max_degree: usize) -> Result<bool, ChenError> {
    Ok(magnus_exp_mismatch(model, max_degree)?.is_none())
}

/// Classical continuous Baker-Campbell-Hausdorff check, single operator and
/// no projector: the formal matrix log of the Picard series equals the
/// evaluation of the log of the identity series, degree by degree.
#[allow(clippy::needless_range_loop)]
pub fn bch_mismatch<S: Scalar>(
    h: &PolyMatrix<S>,
    window: &Window<S>,
    max_degree: usize,
) -> Result<Option<GradedMismatch<S>>, ChenError> {
    let mut ev = ChenEvaluator::new(window.clone());
    let mut picard = vec![Matrix::identity(h.dim())];
    for n in 1..=max_degree {
        let id = AlgebraElement::<S>::basis(crate::perm::SignedPermutation::identity(n));
        picard.push(ev.eval_angle(&id, h, h)?);
    }
    let log_picard = graded_matrix_log(&picard);
    let log_series = crate::series::identity_series::<S>(max_degree)
        .log(max_degree)
        .expect("identity series has unit constant term");
    for n in 1..=max_degree {
        let rhs = ev.eval_angle(&log_series.part_or_zero(n), h, h)?;
        if log_picard[n] != rhs {
            return Ok(Some(GradedMismatch {
                degree: n,
                lhs: log_picard[n].clone(),
                rhs,
            }));
        }
    }
    Ok(None)
}

pub fn bch_check<S: Scalar>(
    h: &PolyMatrix<S>,
    window: &Window<S>,
    max_degree: usize,
) -> Result<bool, ChenError> {
    Ok(bch_mismatch(h, window, max_degree)?.is_none())
}

const THIRD_ORDER_UNIT: [&str; 2] = ["1", "-1"];

const THIRD_ORDER_PLUS_HALF: [&str; 4] = ["1 2", "-1 2", "2 -1", "-2 -1"];

const THIRD_ORDER_MINUS_HALF: [&str; 4] = ["1 -2", "-1 -2", "2 1", "-2 1"];

const THIRD_ORDER_PLUS_THIRD: [&str; 24] = [
    "1 2 3", "-1 2 3", "1 3 -2", "-1 3 -2", "2 -1 3", "-2 -1 3", "2 3 -1", "-2 3 -1", "3 -2 -1",
    "-3 -2 -1", "3 -1 2", "-3 -1 2", "3 2 1", "-3 2 1", "2 -3 1", "-2 -3 1", "1 -2 -3", "-1 -2 -3",
    "1 -3 2", "-1 -3 2", "2 1 -3", "-2 1 -3", "3 1 -2", "-3 1 -2",
];

const THIRD_ORDER_MINUS_SIXTH: [&str; 24] = [
    "1 3 2", "-1 3 2", "2 3 1", "-2 3 1", "2 1 3", "-2 1 3", "3 1 2", "-3 1 2", "1 -3 -2",
    "-1 -3 -2", "1 -2 3", "-1 -2 3", "2 -1 -3", "-2 -1 -3", "3 -1 -2", "-3 -1 -2", "2 -3 -1",
    "-2 -3 -1", "3 -2 1", "-3 -2 1", "1 2 -3", "-1 2 -3", "3 2 -1", "-3 2 -1",
];

/// The third-order truncation of the Magnus element, checked term by term
/// against the frozen coefficient classes: +1 on 2 terms in degree 1,
/// +1/2 and -1/2 on 4 terms each in degree 2, +1/3 and -1/6 on 24 terms
/// each in degree 3.
pub fn third_order_magnus_fixture<S: Scalar>() -> Result<GradedSeries<S>, String> {
    let omega = omega_r::<S>(3, OmegaBasis::T);
    let mut expected = GradedSeries::zero();
    let classes: [(&[&str], S); 5] = [
        (&THIRD_ORDER_UNIT, int(1)),
        (&THIRD_ORDER_PLUS_HALF, ratio(1, 2)),
        (&THIRD_ORDER_MINUS_HALF, ratio(-1, 2)),
        (&THIRD_ORDER_PLUS_THIRD, ratio(1, 3)),
        (&THIRD_ORDER_MINUS_SIXTH, ratio(-1, 6)),
    ];
    for n in 1..=3 {
        let mut part = AlgebraElement::zero(n);
        for (list, coef) in &classes {
            for s in list.iter() {
                let p: crate::perm::SignedPermutation = s
                    .parse()
                    .map_err(|e| format!("bad fixture entry {s:?}: {e}"))?;
                if p.degree() == n {
                    part.add_term(p, coef.clone());
                }
            }
        }
        expected.set_part(part);
    }
    for n in 1..=3 {
        if omega.part_or_zero(n) != expected.part_or_zero(n) {
            return Err(format!(
                "degree-{n} truncation differs from the frozen expansion"
            ));
        }
    }
    Ok(omega)
}
