mod config;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use klab_core::boundslab::{
    summarize, write_csv, write_jsonl, write_summary, GridPoint, PositionPolicy, SweepOptions, WeightScheme,
};
use klab_core::format::sig;
use klab_core::modarith::{check_prime, reduce};
use klab_core::spectral::build_table_with_stats;
use klab_core::verify::{run_suite, Suite, SuiteConfig};
use klab_core::{
    build_table, load_table, run_sweep, save_table, Error, KloostermanKernel, KloostermanTable, Method, PrimeContext,
    Scalar,
};

use config::RunConfig;

const DEFAULT_CACHE_DIR: &str = ".klab-cache";

#[derive(Parser, Debug)]
#[command(name = "klab", version, about = "Kloosterman sums and bilinear-form bound checking")]
struct Cli {
    /// Directory holding cached KLT1 tables.
    #[arg(long, global = true, env = "KLAB_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    /// JSON file with default values for any flag; flags win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one Kloosterman sum K_p(m, n).
    Ksum(KsumArgs),
    /// Build the K_p(., 1) table and write it as a KLT1 file.
    Table(TableArgs),
    /// Run an invariant suite over a range of primes.
    Verify(VerifyArgs),
    /// Sweep bilinear sums against every applicable bound.
    Sweep(SweepArgs),
}

#[derive(Args, Debug)]
struct KsumArgs {
    #[arg(long)]
    p: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<i64>,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    p: Option<u64>,
    /// direct, spectral or both (both checks agreement and writes the direct values).
    #[arg(long)]
    method: Option<String>,
    /// Output file; defaults to the cache directory.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// weil, identities, characters, counting, completion, vinogradov or all.
    #[arg(long)]
    suite: Option<String>,
    #[arg(long)]
    pmin: Option<u64>,
    #[arg(long)]
    pmax: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Random instances for the sampled suites.
    #[arg(long)]
    instances: Option<usize>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long)]
    p: Option<u64>,
    /// Interval lengths: `M` for M = N, or `MxN`; comma separated.
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<String>>,
    /// Rows per size and scheme.
    #[arg(long)]
    positions: Option<u32>,
    /// uniform or initial.
    #[arg(long)]
    policy: Option<String>,
    /// unit, random_a, random_ab; comma separated.
    #[arg(long, value_delimiter = ',')]
    schemes: Option<Vec<String>>,
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
    /// Power c in the (ln p)^c stand-in for p^{o(1)}.
    #[arg(long, allow_hyphen_values = true)]
    log_power: Option<f64>,
    /// Multiplier on the tolerances of the hard checks.
    #[arg(long)]
    tol_scale: Option<f64>,
    /// csv or jsonl.
    #[arg(long)]
    format: Option<String>,
    /// Output file; defaults to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print per-grid-point maxima to stderr.
    #[arg(long)]
    summary: bool,
}

/// Why a command stopped; maps onto the exit code.
enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotPrime(_)
            | Error::EvenPrime
            | Error::PrimeTooLarge(_)
            | Error::NoInverse { .. }
            | Error::Domain(_) => Failure::Usage(e.to_string()),
            Error::Violation(_) | Error::NotReal { .. } | Error::Format(_) | Error::Io(_) => {
                Failure::Runtime(e.to_string())
            }
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn required<T>(flag: Option<T>, file: Option<T>, name: &str) -> Result<T, Failure> {
    flag.or(file).ok_or_else(|| Failure::Usage(format!("missing --{name}")))
}

fn parse<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, Failure>
where
    T::Err: std::fmt::Display,
{
    s.parse().map_err(|e| Failure::Usage(format!("bad {what} `{s}`: {e}")))
}

fn valid_prime(p: u64) -> Result<u64, Failure> {
    check_prime(p)?;
    Ok(p)
}

struct Env {
    cache_dir: PathBuf,
    config: RunConfig,
}

impl Env {
    fn cache_path(&self, p: u64) -> PathBuf {
        self.cache_dir.join(format!("kloosterman_{p}.klt1"))
    }

    fn cached_table(&self, p: u64) -> Result<Option<KloostermanTable>, Failure> {
        let path = self.cache_path(p);
        if !path.exists() {
            return Ok(None);
        }
        Ok(Some(load_table(&path)?))
    }
}

fn ksum(env: &Env, args: KsumArgs) -> Outcome {
    let cfg = &env.config;
    let p = valid_prime(required(args.p, cfg.p, "p")?)?;
    let m = required(args.m, cfg.m, "m")?;
    let n = required(args.n, cfg.n, "n")?;

    let (value, source) = match env.cached_table(p)? {
        Some(table) if reduce(n, p) != 0 => {
            let mn = reduce(m, p) * reduce(n, p) % p;
            (table.get(mn as i64), "cache")
        }
        _ => {
            let ctx = PrimeContext::new(p)?;
            (KloostermanKernel::new(&ctx).eval(m, n)?, "direct")
        }
    };
    let weil = 2.0 * (p as f64).sqrt();
    println!("K_{p}({m}, {n}) = {}", sig(value));
    println!("2*sqrt(p) = {}", sig(weil));
    println!("|K|/(2*sqrt(p)) = {}", sig(value.abs() / weil));
    println!("source: {source}");
    Ok(())
}

fn table(env: &Env, args: TableArgs) -> Outcome {
    let cfg = &env.config;
    let p = valid_prime(required(args.p, cfg.p, "p")?)?;
    let method = args.method.or(cfg.method.clone()).unwrap_or_else(|| "spectral".into());
    let out = args.out.or(cfg.out.clone()).unwrap_or_else(|| env.cache_path(p));
    let methods: Vec<Method> = match method.as_str() {
        "both" => vec![Method::Direct, Method::Spectral],
        other => vec![parse(other, "method")?],
    };

    let ctx = PrimeContext::new(p)?;
    let mut built = Vec::new();
    for method in methods {
        let start = Instant::now();
        let b = build_table_with_stats::<f64>(&ctx, method)?;
        println!(
            "built p={p} method={} in {:.3}s, max |imag| = {}",
            method_name(method),
            start.elapsed().as_secs_f64(),
            sig(b.max_imag)
        );
        built.push(b.table);
    }
    if let [direct, spectral] = built.as_slice() {
        let gap = direct.max_abs_diff(spectral)?;
        println!("max |direct - spectral| = {}", sig(gap));
        if gap > f64::tol(p) {
            return Err(Failure::Runtime(format!(
                "direct and spectral tables differ by {gap:e} > tol {:e}",
                f64::tol(p)
            )));
        }
    }
    if let Some(dir) = out.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    save_table(&built[0], &out)?;
    println!("wrote {}", out.display());
    Ok(())
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Direct => "direct",
        Method::Spectral => "spectral",
    }
}

fn verify(env: &Env, args: VerifyArgs) -> Outcome {
    let cfg = &env.config;
    let suite: Suite = parse(&required(args.suite, cfg.suite.clone(), "suite")?, "suite")?;
    let defaults = SuiteConfig::default();
    let suite_cfg = SuiteConfig {
        pmin: args.pmin.or(cfg.pmin).unwrap_or(defaults.pmin),
        pmax: args.pmax.or(cfg.pmax).unwrap_or(defaults.pmax),
        seed: args.seed.or(cfg.seed).unwrap_or(defaults.seed),
        instances: args.instances.or(cfg.instances).unwrap_or(defaults.instances),
    };
    if suite_cfg.pmin > suite_cfg.pmax {
        return Err(Failure::Usage(format!("--pmin {} exceeds --pmax {}", suite_cfg.pmin, suite_cfg.pmax)));
    }
    let start = Instant::now();
    let report = run_suite(suite, &suite_cfg)?;
    println!(
        "suite {suite} p in [{}, {}] seed={} instances={}: {} checks in {:.2}s",
        suite_cfg.pmin,
        suite_cfg.pmax,
        suite_cfg.seed,
        suite_cfg.instances,
        report.checks,
        start.elapsed().as_secs_f64()
    );
    for (name, (checks, failures)) in &report.by_check {
        println!("  {name}: {checks} checks, {failures} violations");
    }
    for (name, value, at) in &report.diagnostics {
        println!("  {name} = {} at {at} (reported, not asserted)", sig(*value));
    }
    if report.is_clean() {
        println!("PASS");
        return Ok(());
    }
    println!("FAIL: {} violations; first {}:", report.total_violations, report.violations.len());
    for v in &report.violations {
        println!("  {v}");
    }
    Err(Failure::Runtime(format!("suite {suite} found {} violations", report.total_violations)))
}

fn parse_size(s: &str) -> Result<(u64, u64), Failure> {
    match s.split_once('x') {
        Some((m, n)) => Ok((parse(m.trim(), "size")?, parse(n.trim(), "size")?)),
        None => {
            let m = parse(s.trim(), "size")?;
            Ok((m, m))
        }
    }
}

fn sweep(env: &Env, args: SweepArgs) -> Outcome {
    let cfg = &env.config;
    let p = valid_prime(required(args.p, cfg.p, "p")?)?;
    let sizes = required(args.sizes, cfg.sizes.clone(), "sizes")?
        .iter()
        .map(|s| parse_size(s))
        .collect::<Result<Vec<_>, _>>()?;
    let positions = args.positions.or(cfg.positions).unwrap_or(10);
    let policy: PositionPolicy =
        parse(&args.policy.or(cfg.policy.clone()).unwrap_or_else(|| "uniform".into()), "policy")?;
    let schemes = args
        .schemes
        .or(cfg.schemes.clone())
        .unwrap_or_else(|| vec!["unit".into()])
        .iter()
        .map(|s| parse::<WeightScheme>(s, "scheme"))
        .collect::<Result<Vec<_>, _>>()?;
    let format = args.format.or(cfg.format.clone()).unwrap_or_else(|| "csv".into());
    if format != "csv" && format != "jsonl" {
        return Err(Failure::Usage(format!("bad format `{format}`: expected csv or jsonl")));
    }
    let jobs = args.jobs.or(cfg.jobs);
    if jobs == Some(0) {
        return Err(Failure::Usage("--jobs must be at least 1".into()));
    }
    let opts = SweepOptions {
        seed: args.seed.or(cfg.seed).unwrap_or(0),
        log_power: args.log_power.or(cfg.log_power).unwrap_or(2.0),
        jobs,
        tol_scale: args.tol_scale.or(cfg.tol_scale).unwrap_or(1.0),
    };
    if !(opts.tol_scale > 0.0 && opts.tol_scale.is_finite()) || !opts.log_power.is_finite() {
        return Err(Failure::Usage("--tol-scale must be positive and --log-power finite".into()));
    }
    if positions == 0 || sizes.iter().any(|&(m, n)| m == 0 || n == 0 || m >= p || n >= p) {
        return Err(Failure::Usage(format!("sizes must lie in [1, {}] and positions be at least 1", p - 1)));
    }
    let grid: Vec<GridPoint> = schemes
        .iter()
        .flat_map(|&scheme| sizes.iter().map(move |&(m, n)| GridPoint { m, n, positions, policy, scheme }))
        .collect();

    let ctx = PrimeContext::new(p)?;
    let table = match env.cached_table(p)? {
        Some(t) => t,
        None => build_table(&ctx, Method::Spectral)?,
    };
    let reports = run_sweep(&ctx, &table, &grid, &opts)?;

    let out = args.out.or(cfg.out.clone());
    let sink: Box<dyn Write> = match &out {
        Some(path) => Box::new(File::create(path).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?),
        None => Box::new(io::stdout().lock()),
    };
    let mut sink = BufWriter::new(sink);
    if format == "csv" {
        write_csv(&mut sink, &reports)?;
    } else {
        write_jsonl(&mut sink, &reports)?;
    }
    sink.flush()?;
    if args.summary || cfg.summary.unwrap_or(false) {
        write_summary(io::stderr().lock(), &summarize(&reports))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    let config = match &cli.config {
        Some(path) => RunConfig::load(path).map_err(Failure::Usage)?,
        None => RunConfig::default(),
    };
    let cache_dir =
        cli.cache_dir.or(config.cache_dir.clone()).unwrap_or_else(|| Path::new(DEFAULT_CACHE_DIR).to_path_buf());
    let env = Env { cache_dir, config };
    match cli.command {
        Command::Ksum(a) => ksum(&env, a),
        Command::Table(a) => table(&env, a),
        Command::Verify(a) => verify(&env, a),
        Command::Sweep(a) => sweep(&env, a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
