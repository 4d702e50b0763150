//! Scalar abstraction: all dense-state math is generic over the real
//! floating-point type carrying the complex amplitudes.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign};

/// Real floating-point scalar backing states, channels and entropies:
/// `f32` or `f64`.
///
/// Tolerances scale with the precision of the type; the `f64` values are
/// the reference ones asserted by the test suites.
pub trait RealScalar:
    Float + FromPrimitive + NumAssign + Sum + Debug + Display + Send + Sync + 'static
{
    /// Maximum deviation allowed by structural invariants (hermiticity,
    /// unit trace, state normalization, trace preservation).
    fn structural_tol() -> Self;

    /// Looser tolerance for quantities built from chains of arithmetic
    /// (entropy sums, channel compositions, cross-checks).
    fn arithmetic_tol() -> Self;

    /// Eigenvalues with magnitude below this are treated as exact zeros
    /// in entropy sums, so round-off never feeds a logarithm a negative.
    fn eigenvalue_clamp() -> Self;

    /// Lossless conversion of a small literal constant.
    fn constant(x: f64) -> Self {
        Self::from_f64(x).expect("literal constant must be representable")
    }
}

impl RealScalar for f64 {
    fn structural_tol() -> Self {
        1e-10
    }
    fn arithmetic_tol() -> Self {
        1e-8
    }
    fn eigenvalue_clamp() -> Self {
        1e-12
    }
}

impl RealScalar for f32 {
    fn structural_tol() -> Self {
        1e-5
    }
    fn arithmetic_tol() -> Self {
        1e-4
    }
    fn eigenvalue_clamp() -> Self {
        1e-6
    }
}
