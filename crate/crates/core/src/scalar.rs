//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar the library is generic over. Implemented for `f32` and `f64`.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum
    + Default
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
    /// Default threshold for the relative imaginary residue of a realified result.
    fn residue_tolerance() -> Self;

    /// Coefficients whose magnitude falls below this are pruned from polynomial tables.
    fn prune_threshold() -> Self;

    /// Default relative tolerance for adaptive quadrature.
    fn quad_rel_tol() -> Self;

    /// Default absolute tolerance for adaptive quadrature.
    fn quad_abs_tol() -> Self;

    /// Converts an `f64` literal. Panics only if the value is unrepresentable, which cannot
    /// happen for `f32`/`f64` (out-of-range values saturate to infinity).
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    #[inline]
    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("usize representable")
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }

    #[inline]
    fn two() -> Self {
        Self::lit(2.0)
    }
}

impl Real for f64 {
    fn residue_tolerance() -> Self {
        1e-9
    }
    fn prune_threshold() -> Self {
        1e-300
    }
    fn quad_rel_tol() -> Self {
        1e-10
    }
    fn quad_abs_tol() -> Self {
        1e-12
    }
}

impl Real for f32 {
    fn residue_tolerance() -> Self {
        1e-3
    }
    fn prune_threshold() -> Self {
        f32::MIN_POSITIVE
    }
    fn quad_rel_tol() -> Self {
        1e-5
    }
    fn quad_abs_tol() -> Self {
        1e-6
    }
}
