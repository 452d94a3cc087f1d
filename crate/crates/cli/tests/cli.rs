use std::path::Path;
use std::process::{Command, Output};

fn klab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klab")).args(args).env_remove("KLAB_CACHE_DIR").output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn first_value(out: &Output) -> f64 {
    let text = stdout(out);
    let line = text.lines().next().unwrap();
    line.rsplit(" = ").next().unwrap().parse().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn ksum_examples() {
    let out = klab(&["ksum", "--p", "5", "--m", "1", "--n", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("K_5(1, 1) = 0.381966011250\n"));
    assert!(stdout(&out).contains("2*sqrt(p) = 4.47213595500"));

    let out = klab(&["ksum", "--p", "7", "--m", "3", "--n", "0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(first_value(&out), -1.0);
}

#[test]
fn usage_errors_exit_2() {
    let out = klab(&["ksum", "--p", "4", "--m", "1", "--n", "1"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not prime"));

    assert_eq!(code(&klab(&["ksum", "--p", "7"])), 2);
    assert_eq!(code(&klab(&["ksum", "--p", "seven", "--m", "1", "--n", "1"])), 2);
    assert_eq!(code(&klab(&["table", "--p", "9"])), 2);
    assert_eq!(code(&klab(&["table", "--p", "11", "--method", "fast"])), 2);
    assert_eq!(code(&klab(&["verify", "--suite", "nonsense"])), 2);
    assert_eq!(code(&klab(&["sweep", "--p", "101", "--sizes", "101"])), 2);
    assert_eq!(code(&klab(&["sweep", "--p", "101", "--sizes", "4", "--format", "xml"])), 2);
    assert_eq!(code(&klab(&["frobnicate"])), 2);
}

#[test]
fn table_then_ksum_reads_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let out = klab(&["table", "--p", "101", "--cache-dir", cache]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("max |imag|"));

    let cached = klab(&["ksum", "--p", "101", "--m", "3", "--n", "5", "--cache-dir", cache]);
    assert!(stdout(&cached).contains("source: cache"));
    let direct = klab(&["ksum", "--p", "101", "--m", "3", "--n", "5"]);
    assert!(stdout(&direct).contains("source: direct"));
    assert!((first_value(&cached) - first_value(&direct)).abs() <= 1e-9);
}

#[test]
fn env_var_sets_cache_dir() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_klab"))
        .args(["table", "--p", "31"])
        .env("KLAB_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert!(dir.path().join("kloosterman_31.klt1").exists());
}

#[test]
fn rebuild_is_bit_exact_and_both_writes_direct_values() {
    let dir = tempfile::tempdir().unwrap();
    let path = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
    for (name, method) in [("a", "direct"), ("b", "direct"), ("c", "both"), ("d", "spectral")] {
        let out = klab(&["table", "--p", "211", "--method", method, "--out", &path(name)]);
        assert_eq!(code(&out), 0);
    }
    let read = |name: &str| std::fs::read(path(name)).unwrap();
    assert_eq!(read("a"), read("b"));
    assert_eq!(read("a"), read("c"));
    assert_eq!(read("a").len(), 4 + 8 + 8 * 210);

    let direct = klab_core::load_table(path("a")).unwrap();
    let spectral = klab_core::load_table(path("d")).unwrap();
    assert!(direct.max_abs_diff(&spectral).unwrap() <= 1e-9 * 211.0);
}

#[test]
fn table_io_failure_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, b"x").unwrap();
    let target = blocker.join("table.klt1");
    let out = klab(&["table", "--p", "11", "--out", target.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
}

#[test]
fn corrupted_cache_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("kloosterman_11.klt1"), b"KLT0garbage").unwrap();
    let out = klab(&["ksum", "--p", "11", "--m", "1", "--n", "1", "--cache-dir", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 1);
}

#[test]
fn verify_suites_pass() {
    for (suite, pmax) in [("weil", "199"), ("counting", "199"), ("identities", "97")] {
        let out = klab(&["verify", "--suite", suite, "--pmax", pmax]);
        assert_eq!(code(&out), 0, "{suite}: {}", stdout(&out));
        assert!(stdout(&out).trim_end().ends_with("PASS"));
    }
    let out = klab(&["verify", "--suite", "all", "--pmax", "31", "--instances", "50", "--seed", "3"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

fn sweep_args<'a>(out: &'a str, format: &'a str, jobs: &'a str) -> Vec<&'a str> {
    vec![
        "sweep",
        "--p",
        "101",
        "--sizes",
        "2,4,8,16",
        "--positions",
        "5",
        "--seed",
        "7",
        "--format",
        format,
        "--jobs",
        jobs,
        "--out",
        out,
    ]
}

#[test]
fn sweep_rows_schema_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let file = |n: &str| dir.path().join(n).to_str().unwrap().to_string();
    let (a, b, c) = (file("a.jsonl"), file("b.jsonl"), file("c.csv"));
    assert_eq!(code(&klab(&sweep_args(&a, "jsonl", "1"))), 0);
    assert_eq!(code(&klab(&sweep_args(&b, "jsonl", "3"))), 0);
    assert_eq!(code(&klab(&sweep_args(&c, "csv", "2"))), 0);

    let jsonl = std::fs::read_to_string(&a).unwrap();
    assert_eq!(jsonl, std::fs::read_to_string(&b).unwrap());
    let rows: Vec<serde_json::Value> = jsonl.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 20);
    for row in &rows {
        for key in ["p", "M", "N", "K", "L", "s_value", "bounds", "ratios", "seed"] {
            assert!(row.get(key).is_some(), "missing {key}");
        }
        let ratio = row["ratios"]["majorant"].as_f64().unwrap();
        assert!(ratio <= 1.0);
    }

    let csv = std::fs::read_to_string(&c).unwrap();
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&header[..11], &["grid", "row", "p", "M", "N", "K", "L", "scheme", "policy", "seed", "s_value"]);
    assert_eq!(lines.count(), 20);
}

#[test]
fn config_file_fills_missing_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    std::fs::write(&cfg, r#"{"p": 101, "sizes": ["3", "5x7"], "positions": 2, "format": "jsonl", "seed": 4}"#).unwrap();
    let cfg = cfg.to_str().unwrap();

    let out = klab(&["sweep", "--config", cfg]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4);
    assert!(text.contains("\"M\":5,\"N\":7"));

    // A flag overrides the file.
    let out = klab(&["sweep", "--config", cfg, "--p", "103"]);
    assert!(stdout(&out).contains("\"p\":103"));

    std::fs::write(dir.path().join("bad.json"), r#"{"bogus": 1}"#).unwrap();
    let out = klab(&["sweep", "--config", dir.path().join("bad.json").to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn missing_config_file_is_usage_error() {
    let out = klab(&["sweep", "--config", Path::new("/nonexistent/klab.json").to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}
