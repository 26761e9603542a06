//! Floating-point scalar abstraction shared by circuits, matrices and the simulator.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real scalar used for gate angles and amplitudes: `f32` or `f64`.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
    /// Lossy conversion from an `f64` literal.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar representable as f64")
    }
}

impl<T> Scalar for T where
    T: Float + FloatConst + FromPrimitive + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
}

/// `e^{iθ}`
pub(crate) fn phase<T: Scalar>(theta: T) -> Complex<T> {
    Complex::new(theta.cos(), theta.sin())
}

pub(crate) fn frac_1_sqrt_2<T: Scalar>() -> T {
    T::FRAC_1_SQRT_2()
}
