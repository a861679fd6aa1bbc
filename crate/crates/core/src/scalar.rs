//! Floating-point scalar abstraction shared by every module.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Real scalar type the algebra is built over: `f32` or `f64`.
///
/// The tolerance hooks carry the thresholds used for rotor membership,
/// singular denominators and null-bivector detection. They are tuned for
/// `f64`; the `f32` values are scaled to its precision.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Maximum `|R R̃ - 1|` accepted for a rotor.
    fn rotor_tolerance() -> Self;
    /// Modulus below which a `{0,4}` denominator is treated as singular.
    fn singular_tolerance() -> Self;
    /// Relative threshold below which `σ²` counts as zero.
    fn null_tolerance() -> Self;

    /// Shorthand for lossless-enough literal conversion.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }
}

impl Scalar for f64 {
    fn rotor_tolerance() -> Self {
        1e-9
    }
    fn singular_tolerance() -> Self {
        1e-12
    }
    fn null_tolerance() -> Self {
        1e-14
    }
}

impl Scalar for f32 {
    fn rotor_tolerance() -> Self {
        1e-4
    }
    fn singular_tolerance() -> Self {
        1e-6
    }
    fn null_tolerance() -> Self {
        1e-6
    }
}
