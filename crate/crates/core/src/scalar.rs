//! Scalar traits shared by the exact and the floating-point code paths.

use std::ops::Neg;

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed, ToPrimitive};

/// A field whose elements can serve as pivots in Gaussian elimination.
///
/// Exact fields compare pivots against zero; floating fields compare the
/// magnitude against a caller-supplied tolerance.
pub trait Field: Clone + Num + Neg<Output = Self> {
    const EXACT: bool;

    /// Absolute value as `f64`, used for partial pivoting and tolerance tests.
    fn magnitude(&self) -> f64;

    fn is_negligible(&self, tol: f64) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.magnitude() <= tol
        }
    }
}

macro_rules! float_field {
    ($($t:ty),*) => {$(
        impl Field for $t {
            const EXACT: bool = false;
            fn magnitude(&self) -> f64 {
                self.abs() as f64
            }
        }
        impl Field for Complex<$t> {
            const EXACT: bool = false;
            fn magnitude(&self) -> f64 {
                self.norm() as f64
            }
        }
    )*};
}
float_field!(f32, f64);

impl<I> Field for Ratio<I>
where
    I: Clone + Integer + Signed + ToPrimitive,
{
    const EXACT: bool = true;
    fn magnitude(&self) -> f64 {
        let n = self.numer().abs().to_f64().unwrap_or(f64::MAX);
        let d = self.denom().abs().to_f64().unwrap_or(f64::MAX);
        n / d
    }
}

/// Integral domains admitting exact division, as needed by fraction-free
/// (Bareiss) elimination.
pub trait ExactRing: Clone + Integer + Signed {}

impl ExactRing for i32 {}
impl ExactRing for i64 {}
impl ExactRing for i128 {}
impl ExactRing for BigInt {}
