//! Operator models for the effective-evolution checks: a polynomial
//! perturbation `H(t)`, a diagonal 0/1 projector onto the model space, and
//! an integration window. Dimensions and entry degrees are capped to keep
//! the monomial-expansion oracle tractable.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chen::{gl_operators, ChenError, Window};
use crate::poly::{Poly, PolyMatrix, Projector};
use crate::scalar::{int, Scalar};

pub const MAX_MODEL_DIM: usize = 3;
pub const MAX_MODEL_POLY_DEGREE: usize = 2;

#[derive(Clone, PartialEq, Debug)]
pub struct Model<S> {
    h: PolyMatrix<S>,
    p: Projector,
    window: Window<S>,
}

impl<S: Scalar> Model<S> {
    pub fn new(h: PolyMatrix<S>, p: Projector, window: Window<S>) -> Result<Self, ChenError> {
        if h.dim() != p.dim() {
            return Err(ChenError::DimensionMismatch(h.dim(), p.dim()));
        }
        if h.dim() > MAX_MODEL_DIM {
            return Err(ChenError::DimensionCap(h.dim(), MAX_MODEL_DIM));
        }
        if let Some(d) = h.max_degree() {
            if d > MAX_MODEL_POLY_DEGREE {
                return Err(ChenError::DegreeCap(d, MAX_MODEL_POLY_DEGREE));
            }
        }
        Ok(Self { h, p, window })
    }

    pub fn dim(&self) -> usize {
        self.h.dim()
    }

    pub fn perturbation(&self) -> &PolyMatrix<S> {
        &self.h
    }

    pub fn projector(&self) -> &Projector {
        &self.p
    }

    pub fn window(&self) -> &Window<S> {
        &self.window
    }

    pub fn with_window(&self, window: Window<S>) -> Self {
        Self {
            h: self.h.clone(),
            p: self.p.clone(),
            window,
        }
    }

    /// The derived pair `a = (1-P)H`, `b = -P H`.
    pub fn operators(&self) -> (PolyMatrix<S>, PolyMatrix<S>) {
        gl_operators(&self.h, &self.p).expect("model dimensions are validated")
    }
}

/// A random polynomial matrix with integer coefficients in `[-3, 3]` and
/// entry degree at most `MAX_MODEL_POLY_DEGREE`.
pub fn random_poly_matrix<S: Scalar>(dim: usize, rng: &mut ChaCha8Rng) -> PolyMatrix<S> {
    let mut m = PolyMatrix::zero(dim);
    for r in 0..dim {
        for c in 0..dim {
            let coeffs: Vec<S> = (0..=MAX_MODEL_POLY_DEGREE)
                .map(|_| int(rng.gen_range(-3i64..=3)))
                .collect();
            m.set(r, c, Poly::from_coeffs(coeffs));
        }
    }
    m
}

/// A reproducible random model: seeded coefficients, projector onto the
/// leading half of the coordinates (rounded up), and the given window.
pub fn random_model<S: Scalar>(
    dim: usize,
    seed: u64,
    window: Window<S>,
) -> Result<Model<S>, ChenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = random_poly_matrix(dim, &mut rng);
    let p = Projector::leading(dim, dim.div_ceil(2));
    Model::new(h, p, window)
}
