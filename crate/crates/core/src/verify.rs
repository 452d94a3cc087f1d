//! Invariant suites over ranges of primes.
//!
//! Each suite evaluates its identities or inequalities on every instance,
//! counts the checks, and keeps the first few failures with enough context
//! to reproduce them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex;

use crate::bilinear::{completion_majorant, sum_s, sum_s_completed, sum_si, sum_sij, Interval, WeightSequence};
use crate::boundslab::{
    count_inverse_pairs_bruteforce, count_inverse_pairs_divisor, vinogradov_check, InversePairCounter,
};
use crate::error::{domain, Error, Result, Violation};
use crate::expsums::{
    quad_sum_closed_form, quad_sum_complete, CharacterIndex, CharacterSums, KloostermanKernel, QuadraticFamily,
};
use crate::modarith::{dist_to_zero, is_prime, PrimeContext};
use crate::sampling::Sampler;
use crate::scalar::Scalar;
use crate::spectral::{build_table, KloostermanTable, Method};

/// Failures kept verbatim in a report; the rest are only counted.
pub const MAX_LISTED: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Weil,
    Identities,
    Characters,
    Counting,
    Completion,
    Vinogradov,
    All,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Weil,
        Suite::Identities,
        Suite::Characters,
        Suite::Counting,
        Suite::Completion,
        Suite::Vinogradov,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Weil => "weil",
            Suite::Identities => "identities",
            Suite::Characters => "characters",
            Suite::Counting => "counting",
            Suite::Completion => "completion",
            Suite::Vinogradov => "vinogradov",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|suite| suite.name() == s).ok_or_else(|| domain(format!("unknown suite `{s}`")))
    }
}

/// Outcome of one suite run.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SuiteReport {
    pub checks: u64,
    /// The first [`MAX_LISTED`] failures.
    pub violations: Vec<Violation>,
    pub total_violations: u64,
    /// `(checks, failures)` per check name.
    pub by_check: BTreeMap<String, (u64, u64)>,
    /// Reported quantities that are not asserted, with where their maximum occurred.
    pub diagnostics: Vec<(String, f64, String)>,
}

impl SuiteReport {
    pub fn is_clean(&self) -> bool {
        self.total_violations == 0
    }

    fn tally(&mut self, check: &str, ok: bool) -> bool {
        self.checks += 1;
        let entry = self.by_check.entry(check.to_string()).or_default();
        entry.0 += 1;
        if !ok {
            entry.1 += 1;
        }
        ok
    }

    /// Checks and failures over every check whose name starts with one of `prefixes`.
    pub fn tally_of(&self, prefixes: &[&str]) -> (u64, u64) {
        self.by_check
            .iter()
            .filter(|(name, _)| prefixes.iter().any(|p| name.starts_with(p)))
            .fold((0, 0), |acc, (_, &(c, f))| (acc.0 + c, acc.1 + f))
    }

    fn fail(&mut self, check: &str, lhs: f64, rhs: f64, context: String) {
        self.total_violations += 1;
        if self.violations.len() < MAX_LISTED {
            self.violations.push(Violation { check: check.to_string(), lhs, rhs, context });
        }
    }

    /// Records `lhs ≤ rhs`.
    pub fn expect_le(&mut self, check: &str, lhs: f64, rhs: f64, context: impl FnOnce() -> String) {
        if !self.tally(check, lhs <= rhs) {
            self.fail(check, lhs, rhs, context());
        }
    }

    /// Records `|lhs − rhs| ≤ tol`.
    pub fn expect_close(&mut self, check: &str, lhs: f64, rhs: f64, tol: f64, context: impl FnOnce() -> String) {
        if !self.tally(check, (lhs - rhs).abs() <= tol) {
            self.fail(check, lhs, rhs, format!("{} tol={tol:e}", context()));
        }
    }

    pub fn expect_eq(&mut self, check: &str, lhs: u64, rhs: u64, context: impl FnOnce() -> String) {
        if !self.tally(check, lhs == rhs) {
            self.fail(check, lhs as f64, rhs as f64, context());
        }
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.checks += other.checks;
        self.total_violations += other.total_violations;
        for (name, (c, f)) in other.by_check {
            let entry = self.by_check.entry(name).or_default();
            entry.0 += c;
            entry.1 += f;
        }
        self.diagnostics.extend(other.diagnostics);
        let room = MAX_LISTED - self.violations.len().min(MAX_LISTED);
        self.violations.extend(other.violations.into_iter().take(room));
    }
}

/// Odd primes in `[pmin, pmax]`.
pub fn primes_in(pmin: u64, pmax: u64) -> Vec<u64> {
    (pmin.max(3)..=pmax).filter(|&n| is_prime(n)).collect()
}

fn tol(p: u64) -> f64 {
    f64::tol(p)
}

/// `|K_p(m, n)| ≤ 2√p` for every `m, n ∈ [1, p-1]`, by direct summation.
pub fn weil(primes: &[u64]) -> Result<SuiteReport> {
    let mut report = SuiteReport::default();
    for &p in primes {
        let ctx = PrimeContext::new(p)?;
        let kernel = KloostermanKernel::<f64>::new(&ctx);
        let rhs = 2.0 * (p as f64).sqrt() + tol(p);
        for n in 1..p as i64 {
            let scaled = kernel.scaled_inverses(n);
            for m in 1..p as i64 {
                let k = kernel.eval_scaled(m, &scaled).norm();
                report.expect_le("weil", k, rhs, || format!("p={p} m={m} n={n}"));
            }
        }
    }
    Ok(report)
}

/// Spectral and direct tables agree entrywise within `tol(p)`.
pub fn table_agreement(primes: &[u64]) -> Result<SuiteReport> {
    let mut report = SuiteReport::default();
    for &p in primes {
        let ctx = PrimeContext::new(p)?;
        let direct = build_table::<f64>(&ctx, Method::Direct)?;
        let spectral = build_table::<f64>(&ctx, Method::Spectral)?;
        let gap = direct.max_abs_diff(&spectral)?;
        report.expect_le("spectral=direct", gap, tol(p), || format!("p={p}"));
    }
    Ok(report)
}

fn kloosterman_matrix(kernel: &KloostermanKernel<'_, f64>, p: u64) -> Vec<Vec<f64>> {
    // Row n holds K_p(m, n) for m ∈ [0, p-1].
    (0..p as i64)
        .map(|n| {
            let scaled = kernel.scaled_inverses(n);
            (0..p as i64).map(|m| kernel.eval_scaled(m, &scaled).re).collect()
        })
        .collect()
}

/// Change of variable `K_p(mn, 1) = K_p(m, n)`, symmetry, the table
/// methods, and the closed forms of the complete sums `S_p(I)` and `S_p(I, J)`.
pub fn identities(primes: &[u64]) -> Result<SuiteReport> {
    let mut report = table_agreement(primes)?;
    for &p in primes {
        let ctx = PrimeContext::new(p)?;
        let kernel = KloostermanKernel::<f64>::new(&ctx);
        let table = build_table::<f64>(&ctx, Method::Spectral)?;
        let k = kloosterman_matrix(&kernel, p);
        let t = tol(p);
        for n in 0..p as usize {
            for m in 0..p as usize {
                if n != 0 {
                    let lhs = table.get((m * n) as i64);
                    report.expect_close("K(mn,1)=K(m,n)", lhs, k[n][m], t, || format!("p={p} m={m} n={n}"));
                }
                report.expect_close("K(m,n)=K(n,m)", k[n][m], k[m][n], t, || format!("p={p} m={m} n={n}"));
            }
        }
        closed_forms(&mut report, &table)?;
    }
    Ok(report)
}

fn closed_forms(report: &mut SuiteReport, table: &KloostermanTable<f64>) -> Result<()> {
    let p = table.p();
    let full = Interval::full(p);
    report.expect_close("S_I(full)=1", sum_si(table, full)?, 1.0, tol(p), || format!("p={p}"));
    let sij = sum_sij(table, full, full)?;
    report.expect_close("S_IJ(full,full)=p-1", sij, (p - 1) as f64, tol(p), || format!("p={p}"));
    Ok(())
}

/// The complete-sum closed forms alone, cheap enough for larger ranges.
pub fn complete_sums(primes: &[u64]) -> Result<SuiteReport> {
    let mut report = SuiteReport::default();
    for &p in primes {
        let table = build_table::<f64>(&PrimeContext::new(p)?, Method::Spectral)?;
        closed_forms(&mut report, &table)?;
    }
    Ok(report)
}

/// Change of variable and symmetry on `samples` random triples at one prime.
pub fn identities_sampled(p: u64, samples: usize, seed: u64) -> Result<SuiteReport> {
    let ctx = PrimeContext::new(p)?;
    let kernel = KloostermanKernel::<f64>::new(&ctx);
    let table = build_table::<f64>(&ctx, Method::Spectral)?;
    let mut rng = Sampler::new(seed);
    let mut report = SuiteReport::default();
    for i in 0..samples {
        let m = rng.below(p) as i64;
        let n = rng.range_inclusive(1, p - 1) as i64;
        let kmn = kernel.eval(m, n)?;
        let knm = kernel.eval(n, m)?;
        let ctx_str = || format!("p={p} m={m} n={n} seed={seed} sample={i}");
        report.expect_close("K(mn,1)=K(m,n)", table.get(m * n % p as i64), kmn, tol(p), ctx_str);
        report.expect_close("K(m,n)=K(n,m)", kmn, knm, tol(p), ctx_str);
    }
    Ok(report)
}

/// Twisted Gauss sums, the character decomposition of `G_{k,p}`, the
/// quadratic completion, and the complete-interval values of `H` and `F`.
pub fn characters(primes: &[u64]) -> Result<SuiteReport> {
    let mut report = SuiteReport::default();
    for &p in primes {
        let ctx = PrimeContext::new(p)?;
        let sums = CharacterSums::<f64>::new(&ctx);
        let t = tol(p);
        let sqrt_p = (p as f64).sqrt();
        let pi = p as i64;

        for j in 1..p - 1 {
            for a in 1..pi {
                let v = sums.tau(a, CharacterIndex(j)).norm();
                report.expect_close("|tau|=sqrt(p)", v, sqrt_p, t, || format!("p={p} a={a} chi={j}"));
            }
        }

        let ks: Vec<u64> = (1..p).filter(|k| (p - 1) % k == 0).collect();
        let full = Interval::full(p);
        for &k in &ks {
            for a in 1..pi {
                let g = sums.gauss_sum(k, a)?;
                let via = sums.gauss_via_characters(k, a)?;
                report.expect_close("G=sum tau", (g - via).norm(), 0.0, t, || format!("p={p} k={k} a={a}"));
                let h = sums.h_sum(k, a, full)?;
                report.expect_close("H(full)=0", h.direct.norm(), 0.0, t, || format!("p={p} k={k} a={a} route=direct"));
                report.expect_close("H(full)=0", h.companion.norm(), 0.0, t, || {
                    format!("p={p} k={k} a={a} route=companion")
                });
            }
        }

        // The two routes for H agree exactly when a single character is involved.
        if p > 3 {
            let short = Interval::new(0, (p - 1) / 3)?;
            for a in 1..pi {
                let h = sums.h_sum(2, a, short)?;
                report.expect_close("H direct=companion (k=2)", h.gap(), 0.0, t, || {
                    format!("p={p} a={a} I=[1,{}]", short.last())
                });
            }
        }

        for a in 1..pi {
            for b in 0..pi {
                let direct = quad_sum_complete::<f64>(p, a, b)?;
                let closed = quad_sum_closed_form::<f64>(p, a, b)?;
                report.expect_close("quadratic completion", (direct - closed).norm(), 0.0, t, || {
                    format!("p={p} a={a} b={b}")
                });
            }
        }

        let family = QuadraticFamily::<f64>::new(p, full)?;
        for a in 1..pi {
            for b in 1..pi {
                let f = family.eval(a, b)?;
                let ctx_str = || format!("p={p} a={a} b={b}");
                report.expect_close("|F(full)|=p", f.direct.norm(), p as f64, t, ctx_str);
                report.expect_close("|F(full)|=p companion", f.companion.norm(), p as f64, t, ctx_str);
            }
        }
    }
    Ok(report)
}

/// Brute-force and divisor counters agree on the complete box grid, the
/// count is symmetric and monotone in both box sides, and the full box
/// holds `4(p-1)` solutions. The growth of `count / (XY/p + 1)` is reported.
pub fn counting(primes: &[u64]) -> Result<SuiteReport> {
    let mut report = SuiteReport::default();
    let mut growth = (0.0f64, String::new());
    for &p in primes {
        let counter = InversePairCounter::new(p)?;
        let side = p as usize;
        let mut grid = vec![0u64; side * side];
        for x in 1..p {
            for y in 1..p {
                let brute = count_inverse_pairs_bruteforce(p, x, y)?;
                let divisor = counter.count(x, y)?;
                report.expect_eq("brute=divisor", brute, divisor, || format!("p={p} X={x} Y={y}"));
                grid[x as usize * side + y as usize] = brute;
                let ratio = brute as f64 / ((x * y) as f64 / p as f64 + 1.0);
                if ratio > growth.0 {
                    growth = (ratio, format!("p={p} X={x} Y={y}"));
                }
            }
        }
        for x in 1..side {
            for y in 1..side {
                let c = grid[x * side + y];
                report.expect_eq("count symmetric", c, grid[y * side + x], || format!("p={p} X={x} Y={y}"));
                if x > 1 {
                    report.expect_le("count monotone", grid[(x - 1) * side + y] as f64, c as f64, || {
                        format!("p={p} X={x} Y={y} direction=X")
                    });
                }
                if y > 1 {
                    report.expect_le("count monotone", grid[x * side + y - 1] as f64, c as f64, || {
                        format!("p={p} X={x} Y={y} direction=Y")
                    });
                }
            }
        }
        let full = count_inverse_pairs_divisor(p, p - 1, p - 1)?;
        report.expect_eq("count(full box)=4(p-1)", full, 4 * (p - 1), || format!("p={p}"));
    }
    if !primes.is_empty() {
        report.diagnostics.push(("max count/(XY/p+1)".into(), growth.0, growth.1));
    }
    Ok(report)
}

/// The two counters on `samples` random boxes at one prime.
pub fn counting_sampled(p: u64, samples: usize, seed: u64) -> Result<SuiteReport> {
    let counter = InversePairCounter::new(p)?;
    let mut rng = Sampler::new(seed);
    let mut report = SuiteReport::default();
    for i in 0..samples {
        let x = rng.range_inclusive(1, p - 1);
        let y = rng.range_inclusive(1, p - 1);
        let brute = count_inverse_pairs_bruteforce(p, x, y)?;
        report.expect_eq("brute=divisor", brute, counter.count(x, y)?, || {
            format!("p={p} X={x} Y={y} seed={seed} sample={i}")
        });
    }
    Ok(report)
}

/// Log-uniform length in `[1, p-1]`, so short and long intervals both occur.
fn random_length(rng: &mut Sampler, p: u64) -> u64 {
    let len = ((p - 1) as f64).powf(rng.unit()).floor() as u64;
    len.clamp(1, p - 1)
}

/// Two-dimensional prefix sums of `K_p(mn, 1)` over `[1, p-1]²`, so any
/// `S_p(I, J)` is four lookups.
struct WindowSums {
    side: usize,
    prefix: Vec<f64>,
}

impl WindowSums {
    fn new(table: &KloostermanTable<f64>) -> Self {
        let p = table.p();
        let side = p as usize;
        let mut prefix = vec![0.0; side * side];
        for m in 1..side {
            let mut row = 0.0;
            let mut r = 0u64;
            for n in 1..side {
                r += m as u64;
                if r >= p {
                    r -= p;
                }
                row += table.at_residue(r);
                prefix[m * side + n] = prefix[(m - 1) * side + n] + row;
            }
        }
        Self { side, prefix }
    }

    /// `S_p(I, J)` for `I = [k+1, k+M]`, `J = [l+1, l+N]`.
    fn window(&self, k: usize, m: usize, l: usize, n: usize) -> f64 {
        let s = self.side;
        let at = |i: usize, j: usize| self.prefix[i * s + j];
        at(k + m, l + n) - at(k, l + n) - at(k + m, l) + at(k, l)
    }
}

/// The completion majorant and its four-region identity, domination of
/// `|S_p(I, J)|` at every interval position, and the completed evaluation
/// of `S_p(A, 1; I, J)`, on `instances` random `(p, M, N)` drawn from `primes`.
pub fn completion(primes: &[u64], instances: usize, seed: u64) -> Result<SuiteReport> {
    if primes.is_empty() {
        return Ok(SuiteReport::default());
    }
    let mut rng = Sampler::new(seed);
    let mut by_prime: BTreeMap<u64, Vec<(usize, u64, u64)>> = BTreeMap::new();
    for i in 0..instances {
        let p = primes[rng.below(primes.len() as u64) as usize];
        let m = random_length(&mut rng, p);
        let n = random_length(&mut rng, p);
        by_prime.entry(p).or_default().push((i, m, n));
    }

    let mut report = SuiteReport::default();
    for (p, shapes) in by_prime {
        let ctx = PrimeContext::new(p)?;
        let table = build_table::<f64>(&ctx, Method::Spectral)?;
        let windows = WindowSums::new(&table);
        let t = tol(p);
        for (i, m, n) in shapes {
            let ctx_str = || format!("p={p} M={m} N={n} seed={seed} instance={i}");
            let maj = completion_majorant::<f64>(&ctx, m, n)?;
            let gap = maj.decomposition.identity_gap(p, m, n);
            report.expect_le("majorant identity", gap, 1e-12, ctx_str);

            let mut worst = (0.0f64, 0, 0);
            for k in 0..=(p - 1 - m) as usize {
                for l in 0..=(p - 1 - n) as usize {
                    let s = windows.window(k, m as usize, l, n as usize).abs();
                    if s > worst.0 {
                        worst = (s, k, l);
                    }
                }
            }
            report.expect_le("|S_IJ|<=t_half", worst.0, maj.t_half + t * m.max(n) as f64, || {
                format!("{} K={} L={}", ctx_str(), worst.1, worst.2)
            });

            let mut local = Sampler::stream(seed, i as u64);
            let ii = Interval::new(local.below(p - m), m)?;
            let jj = Interval::new(local.below(p - n), n)?;
            let a = WeightSequence::<f64>::random_phases(ii, &mut local);
            let direct = sum_s(&table, &a, &WeightSequence::ones(jj))?;
            let completed = sum_s_completed(&ctx, &a, jj)?;
            let place = || format!("{} K={} L={}", ctx_str(), ii.offset(), jj.offset());
            report.expect_close("completed=direct", (direct - completed.value).norm(), 0.0, t * m.max(n) as f64, place);
            let mut gamma_worst = f64::NEG_INFINITY;
            for (x, g) in (1..p).zip(&completed.gamma) {
                let cap = (n as f64).min(p as f64 / (2.0 * dist_to_zero(x as i64, p) as f64));
                gamma_worst = gamma_worst.max(g.norm() - cap);
            }
            report.expect_le("|gamma|<=min(N,p/2|x|)", gamma_worst, t, place);
        }
    }
    Ok(report)
}

fn random_subset(rng: &mut Sampler, p: u64, size: usize) -> Vec<u64> {
    let mut pool: Vec<u64> = (0..p).collect();
    for i in 0..size {
        let j = i + rng.below(p - i as u64) as usize;
        pool.swap(i, j);
    }
    pool.truncate(size);
    pool
}

fn random_weights(rng: &mut Sampler, len: usize) -> Vec<Complex<f64>> {
    (0..len).map(|_| Complex::from_polar(rng.unit(), rng.phase())).collect()
}

/// Largest set size used for the Vinogradov check; keeps large primes cheap.
pub const VINOGRADOV_SET_CAP: u64 = 512;

/// `|Σ_u Σ_v φ_u ψ_v e_p(uv)| ≤ √(Φ Ψ p)` on `instances` random instances
/// per prime.
pub fn vinogradov(primes: &[u64], instances: usize, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::default();
    for &p in primes {
        let cap = p.min(VINOGRADOV_SET_CAP);
        for i in 0..instances {
            let mut rng = Sampler::stream(seed ^ p, i as u64);
            let su = rng.range_inclusive(1, cap) as usize;
            let sv = rng.range_inclusive(1, cap) as usize;
            let u = random_subset(&mut rng, p, su);
            let v = random_subset(&mut rng, p, sv);
            let phi = random_weights(&mut rng, su);
            let psi = random_weights(&mut rng, sv);
            let out = vinogradov_check(p, &u, &v, &phi, &psi)?;
            report.expect_le("vinogradov", out.lhs, out.rhs + tol(p), || {
                format!("p={p} |U|={su} |V|={sv} seed={seed} instance={i}")
            });
        }
    }
    Ok(report)
}

/// Parameters of a suite run from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub pmin: u64,
    pub pmax: u64,
    pub seed: u64,
    /// Random instances for the sampled suites.
    pub instances: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { pmin: 3, pmax: 199, seed: 0, instances: 1000 }
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport> {
    if cfg.pmin > cfg.pmax {
        return Err(domain(format!("empty prime range [{}, {}]", cfg.pmin, cfg.pmax)));
    }
    let primes = primes_in(cfg.pmin, cfg.pmax);
    match suite {
        Suite::Weil => weil(&primes),
        Suite::Identities => identities(&primes),
        Suite::Characters => characters(&primes),
        Suite::Counting => counting(&primes),
        Suite::Completion => completion(&primes, cfg.instances, cfg.seed),
        Suite::Vinogradov => vinogradov(&primes, cfg.instances, cfg.seed),
        Suite::All => {
            let mut report = SuiteReport::default();
            for s in &Suite::ALL[..6] {
                report.merge(run_suite(*s, cfg)?);
            }
            Ok(report)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranges_are_clean() {
        let cfg = SuiteConfig { pmin: 3, pmax: 23, seed: 1, instances: 20 };
        for suite in Suite::ALL {
            let r = run_suite(suite, &cfg).unwrap();
            assert!(r.is_clean(), "{suite}: {:?}", r.violations);
            assert!(r.checks > 0, "{suite} ran no checks");
        }
    }

    #[test]
    fn report_keeps_first_failures_only() {
        let mut r = SuiteReport::default();
        for i in 0..25 {
            r.expect_le("x", 2.0, 1.0, || format!("i={i}"));
        }
        r.expect_close("y", 1.0, 1.0 + 1e-3, 1e-2, String::new);
        assert_eq!(r.checks, 26);
        assert_eq!(r.total_violations, 25);
        assert_eq!(r.violations.len(), MAX_LISTED);
        assert_eq!(r.violations[9].context, "i=9");
        assert!(!r.is_clean());
        assert_eq!(r.tally_of(&["x"]), (25, 25));
        assert_eq!(r.tally_of(&["y"]), (1, 0));
    }

    #[test]
    fn nan_counts_as_failure() {
        let mut r = SuiteReport::default();
        r.expect_le("nan", f64::NAN, 1.0, String::new);
        r.expect_close("nan", f64::NAN, 1.0, 1.0, String::new);
        assert_eq!(r.total_violations, 2);
    }

    #[test]
    fn window_sums_match_direct() {
        let ctx = PrimeContext::new(31).unwrap();
        let table = build_table::<f64>(&ctx, Method::Direct).unwrap();
        let w = WindowSums::new(&table);
        for (k, m, l, n) in [(0, 30, 0, 30), (3, 5, 7, 11), (29, 1, 0, 1), (10, 20, 20, 10)] {
            let direct = sum_sij(&table, Interval::new(k, m).unwrap(), Interval::new(l, n).unwrap()).unwrap();
            assert!((w.window(k as usize, m as usize, l as usize, n as usize) - direct).abs() < 1e-10);
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!(primes_in(1, 20), vec![3, 5, 7, 11, 13, 17, 19]);
    }
}
