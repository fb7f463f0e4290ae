//! Floating-point scalar abstraction for the numerical lane.

use std::fmt;

/// Floating-point scalar: `f32` or `f64`.
pub trait Float:
    num_traits::Float + num_traits::FloatConst + num_traits::FromPrimitive + fmt::Debug + fmt::Display + 'static
{
}

impl Float for f32 {}
impl Float for f64 {}

/// Converts an `f64` literal into the working scalar.
pub(crate) fn lit<F: Float>(x: f64) -> F {
    F::from_f64(x).expect("literal representable in scalar type")
}

/// Converts an exact integer into the working scalar.
pub(crate) fn int<F: Float>(x: i64) -> F {
    F::from_i64(x).expect("integer representable in scalar type")
}
