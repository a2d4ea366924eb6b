//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real floating point scalar: `f32` or `f64`.
pub trait Real: Float + FloatConst + FromPrimitive + NumAssign + Sum + Debug + Display + Default + Send + Sync + 'static {
    /// Unit roundoff of the type.
    fn eps() -> Self {
        Self::epsilon()
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Complex number over a [`Real`] scalar.
pub type Cplx<T> = Complex<T>;

/// Converts an `f64` literal into the working scalar.
#[inline]
pub fn re<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("f64 literal representable in scalar type")
}

/// Converts an index or count into the working scalar.
#[inline]
pub fn idx<T: Real>(n: usize) -> T {
    T::from_usize(n).expect("index representable in scalar type")
}

/// Complex value from real and imaginary `f64` parts.
#[inline]
pub fn cplx<T: Real>(re_part: f64, im_part: f64) -> Cplx<T> {
    Complex::new(re(re_part), re(im_part))
}

/// Purely real complex value.
#[inline]
pub fn from_real<T: Real>(x: T) -> Cplx<T> {
    Complex::new(x, T::zero())
}

/// Imaginary unit.
#[inline]
pub fn i_unit<T: Real>() -> Cplx<T> {
    Complex::new(T::zero(), T::one())
}

/// Total order on finite reals (NaN compares equal).
pub fn cmp_real<T: Real>(a: &T, b: &T) -> std::cmp::Ordering {
    a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal)
}

/// Relative distance `|a - b| / max(|a|, |b|, floor)`.
pub fn rel_diff<T: Real>(a: Cplx<T>, b: Cplx<T>, floor: T) -> T {
    let scale = a.norm().max(b.norm()).max(floor);
    (a - b).norm() / scale
}

#[cfg(test)]
pub(crate) fn c64(re_part: f64, im_part: f64) -> Cplx<f64> {
    Complex::new(re_part, im_part)
}
