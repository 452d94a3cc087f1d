use num_complex::Complex;
use num_traits::One;

use super::{Interval, WeightSequence};
use crate::error::{domain, Result};
use crate::expsums::RootTable;
use crate::modarith::PrimeContext;
use crate::scalar::{Compensated, Scalar};
use crate::spectral::KloostermanTable;

fn check_pair<T: Scalar>(p: u64, a: &WeightSequence<T>, b: &WeightSequence<T>) -> Result<()> {
    a.interval().check_within(p)?;
    b.interval().check_within(p)
}

/// Row sum `Σ_{n∈J} β_n K_p(m n, 1)` for one `m`, by table lookup.
fn weighted_row<T: Scalar>(table: &KloostermanTable<T>, m: u64, b: &WeightSequence<T>) -> Complex<T> {
    let p = table.p();
    let mut r = m * b.interval().first() % p;
    let mut acc = Compensated::new();
    for &beta in b.values() {
        debug_assert!(r != 0, "m n ≡ 0 cannot happen for m, n in [1, p-1]");
        acc.add(beta * table.at_residue(r));
        r += m;
        if r >= p {
            r -= p;
        }
    }
    acc.total()
}

/// `S_p(A, B; I, J) = Σ_{m∈I} Σ_{n∈J} α_m β_n K_p(m n, 1)`.
pub fn sum_s<T: Scalar>(
    table: &KloostermanTable<T>,
    a: &WeightSequence<T>,
    b: &WeightSequence<T>,
) -> Result<Complex<T>> {
    check_pair(table.p(), a, b)?;
    Ok(a.iter().map(|(m, alpha)| alpha * weighted_row(table, m, b)).collect::<Compensated<_>>().total())
}

/// `S_p(I) = Σ_{m∈I} K_p(m, 1)`.
pub fn sum_si<T: Scalar>(table: &KloostermanTable<T>, i: Interval) -> Result<T> {
    i.check_within(table.p())?;
    Ok(i.iter().map(|m| table.at_residue(m)).collect::<Compensated<_>>().total())
}

/// `S_p(I, J) = Σ_{m∈I} Σ_{n∈J} K_p(m n, 1)`.
pub fn sum_sij<T: Scalar>(table: &KloostermanTable<T>, i: Interval, j: Interval) -> Result<T> {
    let p = table.p();
    i.check_within(p)?;
    j.check_within(p)?;
    let mut total = Compensated::new();
    for m in i.iter() {
        let mut r = m * j.first() % p;
        let mut row = Compensated::new();
        for _ in 0..j.length() {
            row.add(table.at_residue(r));
            r += m;
            if r >= p {
                r -= p;
            }
        }
        total.add(row.total());
    }
    Ok(total.total())
}

/// Result of the completed evaluation of `S_p(A, 1; I, J)`.
#[derive(Debug, Clone)]
pub struct CompletedSum<T> {
    pub value: Complex<T>,
    /// `γ_x = Σ_{n∈J} e_p(n x)` for `x ∈ [1, p-1]`; entry `x - 1`.
    pub gamma: Vec<Complex<T>>,
}

/// Geometric sum `Σ_{n∈J} e_p(n x)` in closed form, `x ≢ 0`.
pub fn interval_geometric<T: Scalar>(roots: &RootTable<T>, j: Interval, x: u64) -> Complex<T> {
    let p = roots.order();
    let x = x % p;
    debug_assert!(x != 0);
    let start = roots.get(j.first() % p * x % p);
    let ratio = roots.get(x);
    let span = roots.get(j.length() % p * x % p);
    let one = Complex::<T>::one();
    start * (one - span) / (one - ratio)
}

/// `S_p(A, 1; I, J)` by completing the inner sum over `n`:
/// `Σ_{x=1}^{p-1} γ_x Σ_{m∈I} α_m e_p(m x̄)`, with `γ_x` the interval
/// geometric sum in closed form.
pub fn sum_s_completed<T: Scalar>(ctx: &PrimeContext, a: &WeightSequence<T>, j: Interval) -> Result<CompletedSum<T>> {
    let p = ctx.p();
    a.interval().check_within(p)?;
    j.check_within(p)?;
    let roots = RootTable::<T>::new(p);
    let first = a.interval().first();

    let mut gamma = Vec::with_capacity((p - 1) as usize);
    let mut acc = Compensated::new();
    for x in 1..p {
        let g = interval_geometric(&roots, j, x);
        gamma.push(g);
        let xbar = ctx.inv(x);
        let mut phase = first * xbar % p;
        let mut inner = Compensated::new();
        for &alpha in a.values() {
            inner.add(alpha * roots.get(phase));
            phase += xbar;
            if phase >= p {
                phase -= p;
            }
        }
        acc.add(g * inner.total());
    }
    Ok(CompletedSum { value: acc.total(), gamma })
}

/// `Σ_{x=1}^{p-1} |γ_x|² = pN − N²` for an interval of length `N < p`.
pub fn gamma_energy(p: u64, n: u64) -> Result<f64> {
    if n == 0 || n >= p {
        return Err(domain(format!("interval length {n} must lie in [1, p-1]")));
    }
    Ok((p * n - n * n) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modarith::dist_to_zero;
    use crate::sampling::Sampler;
    use crate::spectral::{build_table, Method};

    fn setup(p: u64) -> (PrimeContext, KloostermanTable<f64>) {
        let ctx = PrimeContext::new(p).unwrap();
        let t = build_table(&ctx, Method::Direct).unwrap();
        (ctx, t)
    }

    #[test]
    fn single_term() {
        let (_, t) = setup(101);
        let a = WeightSequence::ones(Interval::singleton(7));
        let b = WeightSequence::ones(Interval::singleton(20));
        let s = sum_s(&t, &a, &b).unwrap();
        assert!((s.re - t.get(140)).abs() < 1e-12 && s.im.abs() < 1e-12);
        assert!((sum_si(&t, Interval::singleton(9)).unwrap() - t.get(9)).abs() < 1e-15);
    }

    #[test]
    fn full_interval_closed_forms() {
        let (_, t) = setup(101);
        let full = Interval::full(101);
        let tol = f64::tol(101);
        assert!((sum_si(&t, full).unwrap() - 1.0).abs() <= tol);
        assert!((sum_sij(&t, full, full).unwrap() - 100.0).abs() <= tol);
        let ones = WeightSequence::ones(full);
        let s = sum_s(&t, &ones, &ones).unwrap();
        assert!((s.re - 100.0).abs() <= tol && s.im.abs() <= tol);
    }

    #[test]
    fn negating_weights_negates_sum() {
        let (_, t) = setup(101);
        let mut rng = Sampler::new(3);
        let a = WeightSequence::random_phases(Interval::new(10, 30).unwrap(), &mut rng);
        let b = WeightSequence::random_phases(Interval::new(40, 25).unwrap(), &mut rng);
        let s = sum_s(&t, &a, &b).unwrap();
        let neg = sum_s(&t, &a.negated(), &b).unwrap();
        assert!((s + neg).norm() < 1e-12);
    }

    #[test]
    fn out_of_range_interval_is_rejected() {
        let (ctx, t) = setup(11);
        let bad = WeightSequence::ones(Interval::new(5, 6).unwrap());
        let ok = WeightSequence::ones(Interval::new(0, 3).unwrap());
        assert!(sum_s(&t, &bad, &ok).is_err());
        assert!(sum_s(&t, &ok, &bad).is_err());
        assert!(sum_sij(&t, Interval::new(5, 6).unwrap(), Interval::full(11)).is_err());
        assert!(sum_s_completed(&ctx, &ok, Interval::new(5, 6).unwrap()).is_err());
    }

    #[test]
    fn completed_route_matches_lookup_route() {
        let (ctx, t) = setup(101);
        let mut rng = Sampler::new(11);
        for _ in 0..20 {
            let m = rng.range_inclusive(1, 100);
            let n = rng.range_inclusive(1, 100);
            let i = Interval::new(rng.below(101 - m), m).unwrap();
            let j = Interval::new(rng.below(101 - n), n).unwrap();
            let a = WeightSequence::random_phases(i, &mut rng);
            let lookup = sum_s(&t, &a, &WeightSequence::ones(j)).unwrap();
            let completed = sum_s_completed(&ctx, &a, j).unwrap();
            assert!((lookup - completed.value).norm() <= f64::tol(101) * m.max(n) as f64);
        }
    }

    #[test]
    fn gamma_examples() {
        let p = 101u64;
        let ctx = PrimeContext::new(p).unwrap();
        let a = WeightSequence::<f64>::ones(Interval::new(0, 5).unwrap());
        let full = sum_s_completed(&ctx, &a, Interval::full(p)).unwrap();
        assert!(full.gamma.iter().all(|g| (g - Complex::new(-1.0, 0.0)).norm() < 1e-12));
        let single = sum_s_completed(&ctx, &a, Interval::singleton(17)).unwrap();
        assert!(single.gamma.iter().all(|g| (g.norm() - 1.0).abs() < 1e-12));
        let j = Interval::new(30, 12).unwrap();
        let mid = sum_s_completed(&ctx, &a, j).unwrap();
        for (x, g) in (1..p).zip(&mid.gamma) {
            let bound = (12f64).min(p as f64 / (2.0 * dist_to_zero(x as i64, p) as f64));
            assert!(g.norm() <= bound + 1e-9);
            let literal: Complex<f64> = j.iter().map(|n| crate::expsums::additive_char(((n * x) % p) as i64, p)).sum();
            assert!((g - literal).norm() < 1e-12);
        }
        let energy: f64 = mid.gamma.iter().map(|g| g.norm_sqr()).sum();
        assert!((energy - gamma_energy(p, 12).unwrap()).abs() < 1e-9);
    }
}
