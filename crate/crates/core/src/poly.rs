//! Univariate polynomials, constant matrices, polynomial-valued matrices,
//! and diagonal 0/1 projectors. Everything is exact; antiderivatives divide
//! by integer embeddings of the scalar type.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::scalar::{int, Scalar};

/// Polynomial in one variable, coefficients stored constant-first with no
/// trailing zeros (the zero polynomial is the empty vector).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![S::zero(); k + 1];
        coeffs[k] = S::one();
        Self { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn eval(&self, at: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at.clone() + c.clone();
        }
        acc
    }

    /// The antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(S::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.clone() / int(k as i64 + 1));
        }
        Self::from_coeffs(coeffs)
    }

    /// Exact definite integral over `[lo, hi]`.
    pub fn definite_integral(&self, lo: &S, hi: &S) -> S {
        let anti = self.antiderivative();
        anti.eval(hi) - anti.eval(lo)
    }
}

impl<S: Scalar> Add for &Poly<S> {
    type Output = Poly<S>;

    fn add(self, rhs: Self) -> Poly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| {
                let a = self.coeffs.get(k).cloned().unwrap_or_else(S::zero);
                let b = rhs.coeffs.get(k).cloned().unwrap_or_else(S::zero);
                a + b
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }
}

impl<S: Scalar> Sub for &Poly<S> {
    type Output = Poly<S>;

    fn sub(self, rhs: Self) -> Poly<S> {
        self + &(-rhs)
    }
}

impl<S: Scalar> Neg for &Poly<S> {
    type Output = Poly<S>;

    fn neg(self) -> Poly<S> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<S: Scalar> Mul for &Poly<S> {
    type Output = Poly<S>;

    fn mul(self, rhs: Self) -> Poly<S> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

/// Dense square matrix of scalars.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<S> {
    dim: usize,
    entries: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![S::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.entries[r * self.dim + c] = v;
    }

    pub fn scale(&self, c: &S) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn rows(&self) -> Vec<Vec<S>> {
        self.entries.chunks(self.dim).map(<[S]>::to_vec).collect()
    }
}

impl<S: Scalar> Add for &Matrix<S> {
    type Output = Matrix<S>;

    fn add(self, rhs: Self) -> Matrix<S> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Matrix {
            dim: self.dim,
            entries,
        }
    }
}

impl<S: Scalar> Sub for &Matrix<S> {
    type Output = Matrix<S>;

    fn sub(self, rhs: Self) -> Matrix<S> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Matrix {
            dim: self.dim,
            entries,
        }
    }
}

impl<S: Scalar> Mul for &Matrix<S> {
    type Output = Matrix<S>;

    fn mul(self, rhs: Self) -> Matrix<S> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let d = self.dim;
        let mut out = Matrix::<S>::zero(d);
        for r in 0..d {
            for k in 0..d {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let v = out.get(r, c).clone() + a.clone() * rhs.get(k, c).clone();
                    out.set(r, c, v);
                }
            }
        }
        out
    }
}

/// Square matrix with polynomial entries: the shape of a time-dependent
/// operator `H(t)` with exact coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix<S> {
    dim: usize,
    entries: Vec<Poly<S>>,
}

impl<S: Scalar> PolyMatrix<S> {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![Poly::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, Poly::one());
        }
        m
    }

    pub fn from_entries(dim: usize, entries: Vec<Poly<S>>) -> Self {
        assert_eq!(entries.len(), dim * dim, "entry count must be dim^2");
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly<S> {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Poly<S>) {
        self.entries[r * self.dim + c] = p;
    }

    pub fn entries(&self) -> &[Poly<S>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    /// Largest entry degree, or `None` for the zero matrix.
    pub fn max_degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(Poly::degree).max()
    }

    pub fn eval(&self, at: &S) -> Matrix<S> {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(|p| p.eval(at)).collect(),
        }
    }

    /// Entrywise antiderivative evaluated between `lo` and the variable:
    /// the polynomial matrix `u -> integral of self over [lo, u]`.
    pub fn integral_from(&self, lo: &S) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|p| {
                let anti = p.antiderivative();
                let at_lo = anti.eval(lo);
                &anti - &Poly::constant(at_lo)
            })
            .collect();
        Self {
            dim: self.dim,
            entries,
        }
    }
}

impl<S: Scalar> Add for &PolyMatrix<S> {
    type Output = PolyMatrix<S>;

    fn add(self, rhs: Self) -> PolyMatrix<S> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        PolyMatrix {
            dim: self.dim,
            entries,
        }
    }
}

impl<S: Scalar> Sub for &PolyMatrix<S> {
    type Output = PolyMatrix<S>;

    fn sub(self, rhs: Self) -> PolyMatrix<S> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        PolyMatrix {
            dim: self.dim,
            entries,
        }
    }
}

impl<S: Scalar> Neg for &PolyMatrix<S> {
    type Output = PolyMatrix<S>;

    fn neg(self) -> PolyMatrix<S> {
        PolyMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(Neg::neg).collect(),
        }
    }
}

impl<S: Scalar> Mul for &PolyMatrix<S> {
    type Output = PolyMatrix<S>;

    fn mul(self, rhs: Self) -> PolyMatrix<S> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let d = self.dim;
        let mut out = PolyMatrix::zero(d);
        for r in 0..d {
            for k in 0..d {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let v = &(a * rhs.get(k, c)) + out.get(r, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }
}

/// Diagonal 0/1 projector; `P^2 = P` holds exactly by construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Projector {
    diag: Vec<bool>,
}

impl Projector {
    pub fn new(diag: Vec<bool>) -> Self {
        Self { diag }
    }

    /// Rank-`k` projector onto the leading coordinates.
    pub fn leading(dim: usize, rank: usize) -> Self {
        assert!(rank <= dim);
        Self {
            diag: (0..dim).map(|i| i < rank).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[bool] {
        &self.diag
    }

    pub fn complement(&self) -> Self {
        Self {
            diag: self.diag.iter().map(|b| !b).collect(),
        }
    }

    pub fn matrix<S: Scalar>(&self) -> Matrix<S> {
        let mut m = Matrix::zero(self.dim());
        for (i, &on) in self.diag.iter().enumerate() {
            if on {
                m.set(i, i, S::one());
            }
        }
        m
    }

    pub fn poly_matrix<S: Scalar>(&self) -> PolyMatrix<S> {
        let mut m = PolyMatrix::zero(self.dim());
        for (i, &on) in self.diag.iter().enumerate() {
            if on {
                m.set(i, i, Poly::one());
            }
        }
        m
    }
}
