//! Scalar abstraction shared by every numerical routine in the crate.

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real floating point type the physics is written against.
///
/// Implemented for `f32` and `f64`. All tolerances quoted in this crate
/// assume `f64`; `f32` builds work but will not meet them.
pub trait Real:
    'static
    + Send
    + Sync
    + Float
    + FloatConst
    + FromPrimitive
    + NumAssign
    + Default
    + std::fmt::Debug
    + std::fmt::Display
    + std::fmt::LowerExp
{
    /// Converts an `f64` literal. Panics only if the target type cannot
    /// represent finite `f64` values, which never happens for `f32`/`f64`.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("literal must be representable")
    }

    #[inline]
    fn of_i(x: i64) -> Self {
        Self::from_i64(x).expect("integer must be representable")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Complex number over a [`Real`] scalar.
pub type C<T> = Complex<T>;

#[inline]
pub(crate) fn re<T: Real>(x: T) -> C<T> {
    C::new(x, T::zero())
}

#[inline]
pub(crate) fn im<T: Real>(x: T) -> C<T> {
    C::new(T::zero(), x)
}

#[inline]
pub(crate) fn sqrt2<T: Real>() -> T {
    T::SQRT_2()
}
