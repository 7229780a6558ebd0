//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Real floating-point scalar (implemented for `f32` and `f64`).
///
/// The tolerance hooks scale the physicality checks to the precision of the
/// underlying type; `f64` uses the documented defaults.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + NumAssign + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Tolerance for the uncertainty and positive-semidefiniteness checks.
    fn physical_tol() -> Self;

    /// Relative tolerance for covariance symmetry.
    fn symmetry_tol() -> Self;

    /// Converts an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    #[inline]
    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("usize representable")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    fn physical_tol() -> Self {
        1e-9
    }

    fn symmetry_tol() -> Self {
        1e-12
    }
}

impl Real for f32 {
    fn physical_tol() -> Self {
        1e-3
    }

    fn symmetry_tol() -> Self {
        1e-5
    }
}
