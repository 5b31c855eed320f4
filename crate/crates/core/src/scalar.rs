//! Floating-point scalar abstraction shared by every real-valued routine.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Real scalar used for bound values, eigenvalue estimates and scaled row sums.
///
/// Implemented for `f32` and `f64`. Integer-valued quantities (degree sums,
/// characteristic polynomial coefficients) stay exact and are converted to the
/// scalar only right before the first inexact operation.
pub trait Scalar: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    fn from_count(value: usize) -> Self {
        Self::from_usize(value).expect("count representable as a float")
    }

    fn from_int(value: i128) -> Self {
        Self::from_i128(value).expect("integer representable as a float")
    }

    fn half() -> Self;
}

impl Scalar for f32 {
    fn half() -> Self {
        0.5
    }
}

impl Scalar for f64 {
    fn half() -> Self {
        0.5
    }
}
