//! Seeded parameter sweeps of the bilinear sums against every applicable bound.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bilinear::{bound_rhs, completion_majorant, sum_s, BoundId, BoundParams, Interval, WeightSequence};
use crate::error::{domain, Error, Result, Violation};
use crate::modarith::PrimeContext;
use crate::sampling::{mix, Sampler};
use crate::scalar::Scalar;
use crate::spectral::KloostermanTable;

/// Where the two intervals are placed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PositionPolicy {
    /// `K` and `L` uniform over all valid offsets.
    Uniform,
    /// `K = L = 0`.
    Initial,
}

/// Which weights the row uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightScheme {
    /// `α = β = 1`: the unweighted double sum.
    Unit,
    /// Random unit-modulus `α`, `β = 1`: the one-sided weighted sum.
    RandomA,
    /// Random unit-modulus `α` and `β`.
    RandomAB,
}

macro_rules! named_enum {
    ($ty:ty { $($variant:path => $name:literal),+ $(,)? }) => {
        impl $ty {
            pub fn name(self) -> &'static str {
                match self { $($variant => $name),+ }
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }

        impl FromStr for $ty {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok($variant),)+
                    other => Err(domain(format!("unknown {} `{other}`", stringify!($ty)))),
                }
            }
        }
    };
}

named_enum!(PositionPolicy {
    PositionPolicy::Uniform => "uniform",
    PositionPolicy::Initial => "initial",
});

named_enum!(WeightScheme {
    WeightScheme::Unit => "unit",
    WeightScheme::RandomA => "random_a",
    WeightScheme::RandomAB => "random_ab",
});

/// One grid entry; expands into `positions` rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridPoint {
    pub m: u64,
    pub n: u64,
    pub positions: u32,
    pub policy: PositionPolicy,
    pub scheme: WeightScheme,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepOptions {
    pub seed: u64,
    /// Power `c` of `ln p` used for `p^{o(1)}`.
    pub log_power: f64,
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
    /// Multiplier on the default tolerances of the hard checks.
    pub tol_scale: f64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self { seed: 0, log_power: 2.0, jobs: None, tol_scale: 1.0 }
    }
}

/// Bound columns of a report, in output order.
pub const REPORT_BOUNDS: [&str; 11] = [
    "trivial",
    "majorant",
    "vinogradov",
    "interval_pair",
    "prior_double",
    "weighted_l2",
    "weighted_sup",
    "initial_l1",
    "initial_mixed",
    "initial_l1_sup",
    "initial_mixed_sup",
];

/// One evaluated sweep row.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub grid: usize,
    pub row: usize,
    pub p: u64,
    pub m: u64,
    pub n: u64,
    pub k: u64,
    pub l: u64,
    pub scheme: WeightScheme,
    pub policy: PositionPolicy,
    pub seed: u64,
    /// `|S|`.
    pub s_value: f64,
    pub norm_a2: f64,
    /// Power `c` of `ln p` standing in for `p^{o(1)}`.
    pub log_power: f64,
    /// Applicable bounds, in [`REPORT_BOUNDS`] order.
    pub bounds: Vec<(&'static str, f64)>,
    /// `s_value / bound` for every bound above.
    pub ratios: Vec<(&'static str, f64)>,
    /// Bounds above whose value depends on the `(ln p)^c` stand-in.
    pub surrogates: Vec<&'static str>,
}

impl BoundReport {
    pub fn bound(&self, name: &str) -> Option<f64> {
        self.bounds.iter().find(|(k, _)| *k == name).map(|(_, v)| *v)
    }

    pub fn ratio(&self, name: &str) -> Option<f64> {
        self.ratios.iter().find(|(k, _)| *k == name).map(|(_, v)| *v)
    }
}

struct Job {
    grid: usize,
    row: usize,
    point: GridPoint,
}

fn validate(p: u64, grid: &[GridPoint]) -> Result<()> {
    for (i, g) in grid.iter().enumerate() {
        if g.m == 0 || g.n == 0 || g.m >= p || g.n >= p {
            return Err(domain(format!("grid point {i}: lengths M = {}, N = {} must lie in [1, {}]", g.m, g.n, p - 1)));
        }
    }
    Ok(())
}

fn place(p: u64, len: u64, policy: PositionPolicy, sampler: &mut Sampler) -> Interval {
    let offset = match policy {
        PositionPolicy::Initial => 0,
        PositionPolicy::Uniform => sampler.below(p - len),
    };
    Interval::new(offset, len).expect("lengths validated")
}

fn evaluate(
    table: &KloostermanTable<f64>,
    majorants: &HashMap<(u64, u64), f64>,
    job: &Job,
    opts: &SweepOptions,
) -> Result<BoundReport> {
    let p = table.p();
    let GridPoint { m, n, scheme, policy, .. } = job.point;
    let mut sampler = Sampler::stream(mix(opts.seed, job.grid as u64), job.row as u64);
    let i = place(p, m, policy, &mut sampler);
    let j = place(p, n, policy, &mut sampler);
    let (a, b) = match scheme {
        WeightScheme::Unit => (WeightSequence::ones(i), WeightSequence::ones(j)),
        WeightScheme::RandomA => (WeightSequence::random_phases(i, &mut sampler), WeightSequence::ones(j)),
        WeightScheme::RandomAB => {
            let a = WeightSequence::random_phases(i, &mut sampler);
            (a, WeightSequence::random_phases(j, &mut sampler))
        }
    };
    let s_value = sum_s(table, &a, &b)?.norm();

    let params = BoundParams {
        p,
        m,
        n,
        norm_a1: a.norm1(),
        norm_a2: a.norm2(),
        norm_a_sup: a.norm_sup(),
        norm_b1: b.norm1(),
        nu: 2,
        log_power: opts.log_power,
    };
    let rhs = |id: BoundId| bound_rhs(id, &params).map(|v| v.value);

    let one_sided = matches!(scheme, WeightScheme::Unit | WeightScheme::RandomA);
    // These four displays are only proved for intervals starting at 1.
    let initial = one_sided && policy == PositionPolicy::Initial;
    let mut bounds = Vec::with_capacity(REPORT_BOUNDS.len());
    for name in REPORT_BOUNDS {
        let value = match name {
            "trivial" => Some(rhs(BoundId::Trivial)?),
            "majorant" if scheme == WeightScheme::Unit => Some(majorants[&(m, n)]),
            "interval_pair" if scheme == WeightScheme::Unit => Some(rhs(BoundId::IntervalPair)?),
            "prior_double" if scheme == WeightScheme::Unit => Some(rhs(BoundId::PriorDouble)?),
            "vinogradov" if one_sided => Some(rhs(BoundId::Vinogradov)?),
            "weighted_l2" if one_sided => Some(rhs(BoundId::WeightedL2)?),
            "weighted_sup" if one_sided => Some(rhs(BoundId::WeightedSup)?),
            "initial_l1" if initial => Some(rhs(BoundId::InitialL1)?),
            "initial_mixed" if initial => Some(rhs(BoundId::InitialMixed)?),
            "initial_l1_sup" if initial => Some(rhs(BoundId::InitialL1Sup)?),
            "initial_mixed_sup" if initial => Some(rhs(BoundId::InitialMixedSup)?),
            _ => None,
        };
        if let Some(v) = value {
            bounds.push((name, v));
        }
    }

    // Constant-explicit inequalities must hold on every row.
    let tol = f64::tol(p) * m.max(n) as f64 * opts.tol_scale;
    for &(name, value) in &bounds {
        let hard = matches!(name, "trivial" | "majorant" | "vinogradov");
        if hard && s_value > value + tol {
            return Err(Error::Violation(Violation {
                check: name.to_string(),
                lhs: s_value,
                rhs: value,
                context: format!(
                    "p={p} M={m} N={n} K={} L={} scheme={scheme} seed={} grid={} row={}",
                    i.offset(),
                    j.offset(),
                    opts.seed,
                    job.grid,
                    job.row
                ),
            }));
        }
    }

    let ratios = bounds.iter().filter(|(_, v)| *v > 0.0).map(|&(k, v)| (k, s_value / v)).collect();
    let surrogates =
        bounds.iter().map(|&(k, _)| k).filter(|k| k.parse::<BoundId>().map_or(false, BoundId::is_surrogate)).collect();
    Ok(BoundReport {
        grid: job.grid,
        row: job.row,
        p,
        m,
        n,
        k: i.offset(),
        l: j.offset(),
        scheme,
        policy,
        seed: opts.seed,
        s_value,
        norm_a2: params.norm_a2,
        log_power: opts.log_power,
        bounds,
        ratios,
        surrogates,
    })
}

/// Checks `|K_p(m, 1)| ≤ 2√p + tol(p)` over the whole table.
pub fn check_weil_table(table: &KloostermanTable<f64>, tol_scale: f64) -> Result<()> {
    let p = table.p();
    let rhs = 2.0 * (p as f64).sqrt();
    for m in 1..p {
        let v = table.at_residue(m).abs();
        if v > rhs + f64::tol(p) * tol_scale {
            return Err(Error::Violation(Violation {
                check: "weil".into(),
                lhs: v,
                rhs,
                context: format!("p={p} m={m} n=1"),
            }));
        }
    }
    Ok(())
}

/// Evaluates every row of `grid` and returns the reports sorted by
/// `(grid, row)`. Output depends only on `(p, grid, seed, log_power)`,
/// never on the worker count.
pub fn run_sweep(
    ctx: &PrimeContext,
    table: &KloostermanTable<f64>,
    grid: &[GridPoint],
    opts: &SweepOptions,
) -> Result<Vec<BoundReport>> {
    let p = ctx.p();
    if table.p() != p {
        return Err(domain(format!("table is for p = {}, context for p = {p}", table.p())));
    }
    validate(p, grid)?;
    check_weil_table(table, opts.tol_scale)?;

    let jobs: Vec<Job> = grid
        .iter()
        .enumerate()
        .flat_map(|(g, point)| (0..point.positions as usize).map(move |row| Job { grid: g, row, point: *point }))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.unwrap_or(0))
        .build()
        .map_err(|e| domain(format!("cannot start worker pool: {e}")))?;

    pool.install(|| {
        let mut shapes: Vec<(u64, u64)> =
            grid.iter().filter(|g| g.scheme == WeightScheme::Unit).map(|g| (g.m, g.n)).collect();
        shapes.sort_unstable();
        shapes.dedup();
        let majorants = shapes
            .par_iter()
            .map(|&(m, n)| Ok(((m, n), completion_majorant::<f64>(ctx, m, n)?.t_half)))
            .collect::<Result<HashMap<_, _>>>()?;

        let results: Vec<Result<BoundReport>> =
            jobs.par_iter().map(|job| evaluate(table, &majorants, job, opts)).collect();
        // First failure in row order, independent of scheduling.
        results.into_iter().collect()
    })
}

/// Per-grid-point maxima.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSummary {
    pub grid: usize,
    pub p: u64,
    pub m: u64,
    pub n: u64,
    pub scheme: WeightScheme,
    pub policy: PositionPolicy,
    pub rows: usize,
    pub max_s: f64,
    /// Largest ratio per bound, in [`REPORT_BOUNDS`] order.
    pub max_ratios: Vec<(&'static str, f64)>,
    /// Max of `|S| / ((p + MN)(ln p)^c)` for `c = 0, 1, 2` (unit rows only).
    pub interval_pair_by_power: Option<[f64; 3]>,
}

pub fn summarize(reports: &[BoundReport]) -> Vec<GridSummary> {
    let mut out: Vec<GridSummary> = Vec::new();
    for r in reports {
        if out.last().map_or(true, |s| s.grid != r.grid) {
            out.push(GridSummary {
                grid: r.grid,
                p: r.p,
                m: r.m,
                n: r.n,
                scheme: r.scheme,
                policy: r.policy,
                rows: 0,
                max_s: 0.0,
                max_ratios: r.ratios.iter().map(|&(k, _)| (k, 0.0)).collect(),
                interval_pair_by_power: (r.scheme == WeightScheme::Unit).then_some([0.0; 3]),
            });
        }
        let s = out.last_mut().expect("pushed above");
        s.rows += 1;
        s.max_s = s.max_s.max(r.s_value);
        for (slot, &(_, v)) in s.max_ratios.iter_mut().zip(&r.ratios) {
            slot.1 = slot.1.max(v);
        }
        if let Some(by_power) = s.interval_pair_by_power.as_mut() {
            let pf = r.p as f64;
            let base = pf + (r.m * r.n) as f64;
            for (c, slot) in by_power.iter_mut().enumerate() {
                *slot = slot.max(r.s_value / (base * pf.ln().powi(c as i32)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{build_table, Method};

    fn setup(p: u64) -> (PrimeContext, KloostermanTable<f64>) {
        let ctx = PrimeContext::new(p).unwrap();
        let table = build_table(&ctx, Method::Spectral).unwrap();
        (ctx, table)
    }

    fn point(m: u64, positions: u32, policy: PositionPolicy, scheme: WeightScheme) -> GridPoint {
        GridPoint { m, n: m, positions, policy, scheme }
    }

    #[test]
    fn unit_single_term_rows() {
        let (ctx, table) = setup(101);
        let grid = [point(1, 10, PositionPolicy::Uniform, WeightScheme::Unit)];
        let reports = run_sweep(&ctx, &table, &grid, &SweepOptions::default()).unwrap();
        assert_eq!(reports.len(), 10);
        for r in &reports {
            let q = (r.k + 1) * (r.l + 1);
            assert!((r.s_value - table.get(q as i64).abs()).abs() < 1e-12);
            let ratio = r.ratio("trivial").unwrap();
            assert!((ratio - r.s_value / (2.0 * 101f64.sqrt())).abs() < 1e-12);
            assert!(ratio <= 1.0);
        }
    }

    #[test]
    fn full_interval_row() {
        let (ctx, table) = setup(101);
        let grid = [point(100, 1, PositionPolicy::Initial, WeightScheme::Unit)];
        let r = &run_sweep(&ctx, &table, &grid, &SweepOptions::default()).unwrap()[0];
        assert!((r.s_value - 100.0).abs() < 1e-6);
        let expected = 100.0 / (2.0 * 100.0 * 100.0 * 101f64.sqrt());
        assert!((r.ratio("trivial").unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn ratios_times_bounds_recover_value() {
        let (ctx, table) = setup(211);
        let grid = [
            point(8, 4, PositionPolicy::Uniform, WeightScheme::Unit),
            point(16, 4, PositionPolicy::Uniform, WeightScheme::RandomA),
            point(32, 4, PositionPolicy::Initial, WeightScheme::RandomAB),
        ];
        let reports = run_sweep(&ctx, &table, &grid, &SweepOptions::default()).unwrap();
        for r in &reports {
            for (&(k, b), &(k2, ratio)) in r.bounds.iter().zip(&r.ratios) {
                assert_eq!(k, k2);
                assert!((ratio * b - r.s_value).abs() <= 1e-12 * r.s_value.max(1e-300));
            }
        }
        let summary = summarize(&reports);
        assert_eq!(summary.len(), 3);
        assert!(summary[0].interval_pair_by_power.is_some());
        assert!(summary[1].interval_pair_by_power.is_none());
        assert!(summary.iter().all(|s| s.rows == 4));
    }

    #[test]
    fn same_seed_same_rows_any_worker_count() {
        let (ctx, table) = setup(211);
        let grid = [
            point(4, 6, PositionPolicy::Uniform, WeightScheme::RandomA),
            point(9, 6, PositionPolicy::Uniform, WeightScheme::Unit),
        ];
        let opts = SweepOptions { seed: 17, jobs: Some(1), ..SweepOptions::default() };
        let serial = run_sweep(&ctx, &table, &grid, &opts).unwrap();
        let parallel = run_sweep(&ctx, &table, &grid, &SweepOptions { jobs: Some(3), ..opts }).unwrap();
        assert_eq!(serial, parallel);
        let other = run_sweep(&ctx, &table, &grid, &SweepOptions { seed: 18, ..opts }).unwrap();
        assert_ne!(serial, other);
    }

    #[test]
    fn invalid_grid_is_rejected() {
        let (ctx, table) = setup(11);
        let grid = [point(11, 1, PositionPolicy::Uniform, WeightScheme::Unit)];
        assert!(run_sweep(&ctx, &table, &grid, &SweepOptions::default()).is_err());
        let (_, other) = setup(13);
        assert!(run_sweep(&ctx, &other, &[], &SweepOptions::default()).is_err());
    }

    #[test]
    fn corrupted_table_trips_weil_check() {
        let (ctx, table) = setup(11);
        let mut values = table.values().to_vec();
        values[3] = 50.0;
        let bad = KloostermanTable::from_values(11, values).unwrap();
        let err = run_sweep(&ctx, &bad, &[], &SweepOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Violation(v) if v.check == "weil"));
    }

    #[test]
    fn initial_interval_bounds_need_initial_policy() {
        let (ctx, table) = setup(101);
        let grid = [
            point(8, 2, PositionPolicy::Uniform, WeightScheme::RandomA),
            point(8, 2, PositionPolicy::Initial, WeightScheme::RandomA),
        ];
        let reports = run_sweep(&ctx, &table, &grid, &SweepOptions::default()).unwrap();
        assert!(reports[0].bound("initial_l1").is_none());
        assert!(reports[0].bound("weighted_sup").is_some());
        assert!(reports[2].bound("initial_mixed_sup").is_some());
        assert_eq!((reports[2].k, reports[2].l), (0, 0));
        assert!(reports[2].surrogates.contains(&"initial_l1"));
        assert!(!reports[2].surrogates.contains(&"weighted_l2"));
        assert!(!reports[2].surrogates.contains(&"trivial"));
    }

    #[test]
    fn names_parse() {
        assert_eq!("random_a".parse::<WeightScheme>().unwrap(), WeightScheme::RandomA);
        assert_eq!("initial".parse::<PositionPolicy>().unwrap(), PositionPolicy::Initial);
        assert!("bogus".parse::<WeightScheme>().is_err());
    }
}
