//! Floating-point scalar abstraction.
//!
//! Every numeric kernel in this crate is generic over [`Real`], which is
//! implemented for `f32` and `f64`. The bounds are the union of what the
//! math needs (`Float`, `FloatConst`) and the marker traits `rustfft`
//! requires of its scalar type.

use num_traits::{Float, FloatConst, FromPrimitive, Signed};
use rand::Rng;
use rand_distr::StandardNormal;
use std::fmt::{Debug, Display};
use std::iter::Sum;

/// Scalar type of a time series: `f32` or `f64`.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + Signed
    + Sum
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Draws one standard-normal sample from `rng`.
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Converts an `f64` constant. Panics only if the target type cannot
    /// represent ordinary finite constants, which cannot happen for the
    /// two implementors.
    #[inline]
    fn cst(v: f64) -> Self {
        Self::from_f64(v).expect("finite constant converts to scalar")
    }

    /// Converts a sample index or length.
    #[inline]
    fn from_index(i: usize) -> Self {
        Self::from_usize(i).expect("index converts to scalar")
    }
}

impl Real for f32 {
    #[inline]
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.sample(StandardNormal)
    }
}

impl Real for f64 {
    #[inline]
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.sample(StandardNormal)
    }
}
