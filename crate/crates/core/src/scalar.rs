//! Floating scalar abstraction: f32 or f64.

use num_traits::{Float, FloatConst, FromPrimitive};
use rustfft::FftNum;

/// Floating-point scalar the analysis kernels are generic over.
///
/// Everything downstream of [`crate::sequences::RationalPhaseSequence::render`]
/// (correlation, spectra, metrics) only needs ordinary float arithmetic plus
/// FFT support, so it runs in either precision. The exact construction path
/// is untouched by this choice.
pub trait Scalar: Float + FloatConst + FromPrimitive + FftNum + std::iter::Sum {}

impl Scalar for f32 {}
impl Scalar for f64 {}
