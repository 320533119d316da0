//! Exact Chen calculus on symmetric and hyperoctahedral group algebras.
//!
//! Everything here is computed in exact arithmetic over a field-like scalar
//! type (see [`Scalar`]); the intended instantiation is
//! [`num_rational::BigRational`], aliased as [`Rat`], and the serialization
//! layer and verification suites are pinned to it.
//!
//! The main layers, bottom up:
//!
//! * [`perm`] — signed permutations (the hyperoctahedral group `B_n` in
//!   one-line notation), standardization, descent and regression statistics.
//! * [`algebra`] / [`series`] — sparse linear combinations of permutations of
//!   one degree, the convolution product on the graded sum of group algebras,
//!   and formal log/exp of graded series.
//! * [`bases`] — the regression classes `R_S^n`, their containment sums
//!   `T_S^n`, Solomon's descent elements `D_S^n`, the Eulerian idempotents,
//!   and the Magnus element `omega` of the regression algebra.
//! * [`chen`] — exact iterated integrals of polynomial operator matrices over
//!   order simplices: the evaluation map from group-algebra elements to
//!   matrices, bracket descriptors, and composite two-chain domains.
//! * [`effective`] — the Picard-type expansion of the effective adiabatic
//!   evolution operator, its recursion, and the exponential (Magnus) form.
//! * [`verify`] — self-contained pass/fail suites for all of the identities
//!   above, reported as serializable [`report`] structures.

pub mod algebra;
pub mod bases;
pub mod chen;
pub mod effective;
pub mod io;
pub mod model;
pub mod perm;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod series;
pub mod verify;
pub mod word;

pub use algebra::AlgebraElement;
pub use bases::{BasisFamily, BasisId, OmegaBasis};
pub use chen::{ChenEvaluator, CompositeSymbol, IntegralDescriptor, Window};
pub use model::Model;
pub use perm::{SignedPermutation, SubsetMask};
pub use poly::{Matrix, Poly, PolyMatrix, Projector};
pub use scalar::Scalar;
pub use series::GradedSeries;

/// Exact rational scalar; the concrete coefficient type used everywhere a
/// result must be bit-exact.
pub type Rat = num_rational::BigRational;

pub type RatElement = AlgebraElement<Rat>;
pub type RatSeries = GradedSeries<Rat>;
pub type RatPoly = Poly<Rat>;
pub type RatMatrix = Matrix<Rat>;
pub type RatPolyMatrix = PolyMatrix<Rat>;
pub type RatWindow = Window<Rat>;
pub type RatModel = Model<Rat>;

/// Default truncation bound for graded-series computations. `|B_6| = 46080`
/// is the practical ceiling for full expansions.
pub const DEFAULT_MAX_DEGREE: usize = 6;

/// Absolute ceiling accepted by the command-line tools (degree 7 must be
/// requested explicitly).
pub const HARD_MAX_DEGREE: usize = 7;
