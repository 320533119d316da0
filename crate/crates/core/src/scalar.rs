//! The scalar abstraction: any field-like type with exact small-integer
//! embeddings. `BigRational` is the canonical instance; `f64` satisfies the
//! bounds too for quick approximate experiments, but none of the shipped
//! verification suites use it.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

pub trait Scalar: Num + Clone + Neg<Output = Self> + PartialOrd + FromPrimitive + Debug {}

impl<T> Scalar for T where T: Num + Clone + Neg<Output = Self> + PartialOrd + FromPrimitive + Debug {}

/// Embed a small integer.
pub fn int<S: Scalar>(k: i64) -> S {
    S::from_i64(k).expect("scalar must embed small integers")
}

/// Embed the fraction `num/den`.
pub fn ratio<S: Scalar>(num: i64, den: i64) -> S {
    assert!(den != 0, "zero denominator");
    int::<S>(num) / int::<S>(den)
}

/// Binomial coefficient as a scalar (exact for n up to 62).
pub fn binomial<S: Scalar>(n: usize, k: usize) -> S {
    int(num_integer::binomial(n as i64, k as i64))
}
