//! Floating-point scalar abstraction shared by every summation kernel.
//!
//! Angles are always reduced exactly in integer arithmetic and evaluated in
//! `f64` before being narrowed to the working type, so the only precision
//! difference between scalar types is in storage and accumulation.

use std::fmt::{Debug, Display};
use std::ops::{Add, Sub};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive, Zero};

/// Real scalar type the sums are accumulated in.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Absolute error budget per summed unit-modulus term.
    const TOL_PER_TERM: f64;

    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 converts to every float type")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Tolerance for a sum of `p` unit-modulus terms.
    fn tol(p: u64) -> Self {
        Self::of(Self::TOL_PER_TERM * p as f64)
    }
}

impl Scalar for f64 {
    const TOL_PER_TERM: f64 = 1e-9;
}

impl Scalar for f32 {
    const TOL_PER_TERM: f64 = 2e-5;
}

/// `exp(2πi · num / den)` evaluated in `f64`, with `num` already reduced.
pub(crate) fn unit_root<T: Scalar>(num: u64, den: u64) -> Complex<T> {
    let theta = std::f64::consts::TAU * (num as f64) / (den as f64);
    Complex::new(T::of(theta.cos()), T::of(theta.sin()))
}

/// Kahan–Babuška style compensated accumulator.
///
/// Works for any type with `+`/`-`, which covers both real scalars and
/// `Complex<T>` (compensation is then componentwise).
#[derive(Debug, Clone, Copy, Default)]
pub struct Compensated<V> {
    sum: V,
    carry: V,
}

impl<V> Compensated<V>
where
    V: Copy + Zero + Add<Output = V> + Sub<Output = V>,
{
    pub fn new() -> Self {
        Self { sum: V::zero(), carry: V::zero() }
    }

    #[inline]
    pub fn add(&mut self, term: V) {
        let y = term - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn total(&self) -> V {
        self.sum
    }
}

impl<V> FromIterator<V> for Compensated<V>
where
    V: Copy + Zero + Add<Output = V> + Sub<Output = V>,
{
    fn from_iter<I: IntoIterator<Item = V>>(iter: I) -> Self {
        let mut acc = Self::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

/// Compensated sum of an iterator.
pub fn csum<V, I>(iter: I) -> V
where
    V: Copy + Zero + Add<Output = V> + Sub<Output = V>,
    I: IntoIterator<Item = V>,
{
    iter.into_iter().collect::<Compensated<V>>().total()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensation_recovers_small_terms() {
        let mut terms = vec![1.0e16_f64];
        terms.extend(std::iter::repeat(1.0).take(1000));
        terms.push(-1.0e16);
        assert_eq!(csum(terms.iter().copied()), 1000.0);
    }

    #[test]
    fn tolerance_scales_with_terms() {
        assert!((f64::tol(1000) - 1e-6).abs() < 1e-20);
        assert!(f32::tol(1000) > 1e-3);
    }

    #[test]
    fn unit_root_quarter_turn() {
        let z: Complex<f64> = unit_root(1, 4);
        assert!(z.re.abs() < 1e-15 && (z.im - 1.0).abs() < 1e-15);
    }
}
