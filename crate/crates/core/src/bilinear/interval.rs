use num_complex::Complex;

use crate::error::{domain, Result};
use crate::sampling::Sampler;
use crate::scalar::{csum, Scalar};

/// The integer interval `[K+1, K+M]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    offset: u64,
    length: u64,
}

impl Interval {
    pub fn new(offset: u64, length: u64) -> Result<Self> {
        if length == 0 {
            return Err(domain("interval length must be at least 1"));
        }
        Ok(Self { offset, length })
    }

    /// `[1, p-1]`.
    pub fn full(p: u64) -> Self {
        Self { offset: 0, length: p - 1 }
    }

    /// `{m}` for `m ≥ 1`.
    pub fn singleton(m: u64) -> Self {
        assert!(m >= 1, "intervals live in the positive integers");
        Self { offset: m - 1, length: 1 }
    }

    /// `K`.
    pub fn offset(&self) -> u64 {
        self.offset
    }

    /// `M`.
    pub fn length(&self) -> u64 {
        self.length
    }

    pub fn first(&self) -> u64 {
        self.offset + 1
    }

    pub fn last(&self) -> u64 {
        self.offset + self.length
    }

    pub fn contains(&self, m: u64) -> bool {
        (self.first()..=self.last()).contains(&m)
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<u64> {
        self.first()..=self.last()
    }

    /// Requires `[K+1, K+M] ⊆ [1, p-1]`.
    pub fn check_within(&self, p: u64) -> Result<()> {
        if self.last() > p - 1 {
            return Err(domain(format!("interval [{}, {}] leaves [1, {}]", self.first(), self.last(), p - 1)));
        }
        Ok(())
    }
}

/// Exponent of a weight norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    Finite(f64),
    Infinity,
}

/// Complex weights `α_{K+1}, …, α_{K+M}` attached to an interval.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSequence<T = f64> {
    interval: Interval,
    values: Vec<Complex<T>>,
}

impl<T: Scalar> WeightSequence<T> {
    pub fn new(interval: Interval, values: Vec<Complex<T>>) -> Result<Self> {
        if values.len() as u64 != interval.length() {
            return Err(domain(format!("{} weights for an interval of length {}", values.len(), interval.length())));
        }
        if values.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(domain("weights must be finite"));
        }
        Ok(Self { interval, values })
    }

    /// All weights equal to 1.
    pub fn ones(interval: Interval) -> Self {
        Self { interval, values: vec![Complex::new(T::one(), T::zero()); interval.length() as usize] }
    }

    /// Unit-modulus weights with independent uniform phases.
    pub fn random_phases(interval: Interval, sampler: &mut Sampler) -> Self {
        let values = (0..interval.length())
            .map(|_| {
                let theta = sampler.phase();
                Complex::new(T::of(theta.cos()), T::of(theta.sin()))
            })
            .collect();
        Self { interval, values }
    }

    pub fn interval(&self) -> Interval {
        self.interval
    }

    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }

    /// Pairs `(m, α_m)`.
    pub fn iter(&self) -> impl Iterator<Item = (u64, Complex<T>)> + '_ {
        self.interval.iter().zip(self.values.iter().copied())
    }

    pub fn negated(&self) -> Self {
        Self { interval: self.interval, values: self.values.iter().map(|z| -*z).collect() }
    }

    /// `‖α‖_σ = (Σ |α_m|^σ)^{1/σ}`, or `max |α_m|` for `σ = ∞`.
    pub fn norm(&self, sigma: Exponent) -> T {
        match sigma {
            Exponent::Infinity => self.values.iter().map(|z| z.norm()).fold(T::zero(), T::max),
            Exponent::Finite(s) => {
                assert!(s > 0.0, "norm exponent must be positive");
                let s = T::of(s);
                let total: T = csum(self.values.iter().map(|z| z.norm().powf(s)));
                if total.is_zero() {
                    T::zero()
                } else {
                    total.powf(T::one() / s)
                }
            }
        }
    }

    pub fn norm1(&self) -> T {
        self.norm(Exponent::Finite(1.0))
    }

    pub fn norm2(&self) -> T {
        self.norm(Exponent::Finite(2.0))
    }

    pub fn norm_sup(&self) -> T {
        self.norm(Exponent::Infinity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn interval_basics() {
        let i = Interval::new(3, 4).unwrap();
        assert_eq!((i.first(), i.last()), (4, 7));
        assert_eq!(i.iter().collect::<Vec<_>>(), vec![4, 5, 6, 7]);
        assert!(i.contains(4) && i.contains(7) && !i.contains(8));
        assert!(i.check_within(11).is_ok());
        assert!(i.check_within(8).is_ok());
        assert!(i.check_within(7).is_err());
        assert!(Interval::new(0, 0).is_err());
        assert_eq!(Interval::full(11).iter().count(), 10);
        assert_eq!(Interval::singleton(5).iter().collect::<Vec<_>>(), vec![5]);
    }

    #[test]
    fn norm_examples() {
        let i = Interval::new(0, 6).unwrap();
        let ones = WeightSequence::<f64>::ones(i);
        assert_eq!(ones.norm1(), 6.0);
        assert_eq!(ones.norm_sup(), 1.0);
        assert!((ones.norm2() - 6f64.sqrt()).abs() < 1e-15);
        let w = WeightSequence::<f64>::new(
            Interval::new(0, 2).unwrap(),
            vec![Complex::new(3.0, 0.0), Complex::new(0.0, 4.0)],
        )
        .unwrap();
        assert!((w.norm2() - 5.0).abs() < 1e-15);
        assert!((w.norm(Exponent::Finite(3.0)) - 91f64.cbrt()).abs() < 1e-12);
    }

    #[test]
    fn weight_validation() {
        let i = Interval::new(0, 2).unwrap();
        assert!(WeightSequence::<f64>::new(i, vec![Complex::new(0.0, 0.0)]).is_err());
        assert!(WeightSequence::new(i, vec![Complex::new(0.0, 0.0), Complex::new(f64::NAN, 0.0)]).is_err());
    }

    #[test]
    fn random_phases_have_unit_modulus() {
        let mut s = Sampler::new(5);
        let w = WeightSequence::<f64>::random_phases(Interval::new(10, 50).unwrap(), &mut s);
        assert!(w.values().iter().all(|z| (z.norm() - 1.0).abs() < 1e-14));
        assert!((w.norm2() - 50f64.sqrt()).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn norms_are_ordered(vals in prop::collection::vec((-10.0f64..10.0, -10.0f64..10.0), 1..40)) {
            let i = Interval::new(0, vals.len() as u64).unwrap();
            let w = WeightSequence::<f64>::new(i, vals.iter().map(|&(a, b)| Complex::new(a, b)).collect()).unwrap();
            let (sup, l2, l1) = (w.norm_sup(), w.norm2(), w.norm1());
            prop_assert!(sup <= l2 * (1.0 + 1e-12) + 1e-300);
            prop_assert!(l2 <= l1 * (1.0 + 1e-12) + 1e-300);
        }
    }
}
