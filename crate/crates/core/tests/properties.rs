//! Randomized invariants checked through the public API.

use klab_core::bilinear::{bound_rhs, BoundId, BoundParams};
use klab_core::boundslab::InversePairCounter;
use klab_core::expsums::{f_sum, h_sum};
use klab_core::modarith::is_prime;
use klab_core::sampling::Sampler;
use klab_core::{
    build_table, completion_majorant, count_inverse_pairs_bruteforce, sum_s, sum_s_completed, sum_sij, Interval,
    KloostermanKernel, Method, PrimeContext, Scalar, WeightSequence,
};
use proptest::prelude::*;

fn odd_prime(max: u64) -> impl Strategy<Value = u64> {
    (3..=max).prop_filter_map("prime", |n| is_prime(n).then_some(n))
}

fn prime_and_residues(max: u64) -> impl Strategy<Value = (u64, i64, i64)> {
    odd_prime(max).prop_flat_map(|p| (Just(p), 0..p as i64, 0..p as i64))
}

fn interval_in(p: u64) -> impl Strategy<Value = Interval> {
    (1..p).prop_flat_map(move |len| (0..p - len).prop_map(move |k| Interval::new(k, len).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kloosterman_is_real_symmetric_and_weil_bounded((p, m, n) in prime_and_residues(2003)) {
        let ctx = PrimeContext::new(p).unwrap();
        let kernel = KloostermanKernel::new(&ctx);
        let z = kernel.eval_complex(m, n);
        let tol = f64::tol(p);
        prop_assert!(z.im.abs() <= tol);
        if m != 0 && n != 0 {
            prop_assert!(z.re.abs() <= 2.0 * (p as f64).sqrt() + tol);
        }
        prop_assert!((kernel.eval(n, m).unwrap() - z.re).abs() <= tol);
        if n != 0 {
            let k = kernel.eval(m * n % p as i64, 1).unwrap();
            prop_assert!((k - z.re).abs() <= tol);
        }
    }

    #[test]
    fn counts_are_symmetric_and_monotone(p in odd_prime(1009), sx in 0.0f64..1.0, sy in 0.0f64..1.0) {
        let counter = InversePairCounter::new(p).unwrap();
        let x = ((sx * (p - 1) as f64) as u64).clamp(1, p - 1);
        let y = ((sy * (p - 1) as f64) as u64).clamp(1, p - 1);
        let c = counter.count(x, y).unwrap();
        prop_assert_eq!(c, count_inverse_pairs_bruteforce(p, x, y).unwrap());
        prop_assert_eq!(c, counter.count(y, x).unwrap());
        if x > 1 {
            prop_assert!(counter.count(x - 1, y).unwrap() <= c);
        }
        if y < p - 1 {
            prop_assert!(counter.count(x, y + 1).unwrap() >= c);
        }
    }

    #[test]
    fn quadratic_family_paths_agree(
        (p, a, b) in odd_prime(211).prop_flat_map(|p| (Just(p), 1..p as i64, 0..p as i64)),
        frac in 0.0f64..1.0,
        start in 0.0f64..1.0,
    ) {
        let len = ((frac * (p - 1) as f64) as u64).clamp(1, p - 1);
        let offset = (start * (p - len) as f64) as u64;
        let i = Interval::new(offset.min(p - 1 - len), len).unwrap();
        let f = f_sum::<f64>(p, a, b, i).unwrap();
        prop_assert!(f.gap() <= f64::tol(p), "gap {}", f.gap());
        let ctx = PrimeContext::new(p).unwrap();
        let h = h_sum::<f64>(&ctx, 2, a, i).unwrap();
        prop_assert!(h.gap() <= f64::tol(p), "gap {}", h.gap());
    }

    #[test]
    fn bilinear_sums_respect_hard_bounds(
        (p, i, j) in odd_prime(401).prop_flat_map(|p| (Just(p), interval_in(p), interval_in(p))),
        seed in any::<u64>(),
    ) {
        let ctx = PrimeContext::new(p).unwrap();
        let table = build_table::<f64>(&ctx, Method::Spectral).unwrap();
        let mut rng = Sampler::new(seed);
        let a = WeightSequence::random_phases(i, &mut rng);
        let b = WeightSequence::random_phases(j, &mut rng);
        let tol = f64::tol(p) * i.length().max(j.length()) as f64;

        let s = sum_s(&table, &a, &b).unwrap().norm();
        let params = BoundParams {
            norm_a1: a.norm1(),
            norm_a2: a.norm2(),
            norm_a_sup: a.norm_sup(),
            norm_b1: b.norm1(),
            ..BoundParams::unit(p, i.length(), j.length())
        };
        prop_assert!(s <= bound_rhs(BoundId::Trivial, &params).unwrap().value + tol);

        let ones = WeightSequence::ones(j);
        let one_sided = sum_s(&table, &a, &ones).unwrap();
        let completed = sum_s_completed(&ctx, &a, j).unwrap();
        prop_assert!((one_sided - completed.value).norm() <= tol);
        prop_assert!(one_sided.norm() <= bound_rhs(BoundId::Vinogradov, &params).unwrap().value + tol);

        let maj = completion_majorant::<f64>(&ctx, i.length(), j.length()).unwrap();
        let sij = sum_sij(&table, i, j).unwrap();
        prop_assert!(sij.abs() <= maj.t_half + tol);
        prop_assert!(maj.decomposition.identity_gap(p, i.length(), j.length()) <= 1e-12);
    }

    #[test]
    fn weight_norms_are_ordered(p in odd_prime(499), seed in any::<u64>()) {
        let mut rng = Sampler::new(seed);
        let len = rng.range_inclusive(1, p - 1);
        let i = Interval::new(0, len).unwrap();
        let a = WeightSequence::random_phases(i, &mut rng);
        prop_assert!(a.norm_sup() <= a.norm2() + 1e-12);
        prop_assert!(a.norm2() <= a.norm1() + 1e-12);
    }
}
