//! Scalar abstraction for the numeric kernels.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::AddAssign;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar the library is generic over: `f32` or `f64`.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + Sum + AddAssign + Debug + Display + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float
        + FromPrimitive
        + ToPrimitive
        + Sum
        + AddAssign
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

/// Converts an `f64` constant into the working scalar type.
#[inline]
pub fn real<S: Real>(v: f64) -> S {
    S::from_f64(v).expect("f64 constant representable in scalar type")
}

/// Squared Euclidean distance between two equal-length vectors.
#[inline]
pub fn squared_distance<S: Real>(a: &[S], b: &[S]) -> S {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(&x, &y)| (x - y) * (x - y))
        .fold(S::zero(), |acc, v| acc + v)
}

/// Euclidean distance between two equal-length vectors.
#[inline]
pub fn euclidean_distance<S: Real>(a: &[S], b: &[S]) -> S {
    squared_distance(a, b).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distance_works_for_both_scalar_types() {
        assert_eq!(euclidean_distance(&[0.0f64, 0.0], &[3.0, 4.0]), 5.0);
        assert_eq!(euclidean_distance(&[0.0f32, 0.0], &[3.0, 4.0]), 5.0);
    }

    #[test]
    fn real_converts_constants() {
        let x: f32 = real(0.5);
        assert_eq!(x, 0.5f32);
        let y: f64 = real(1e-6);
        assert_eq!(y, 1e-6);
    }
}
