//! Textual serializations of sweep rows. Every float is printed through
//! [`sig`], so identical inputs give byte-identical files.

use std::io::{self, Write};

use super::sweep::{BoundReport, GridSummary, REPORT_BOUNDS};
use crate::format::sig;

/// Column names of [`write_csv`].
pub fn csv_header() -> String {
    let mut cols: Vec<String> = ["grid", "row", "p", "M", "N", "K", "L", "scheme", "policy", "seed", "s_value"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    cols.extend(REPORT_BOUNDS.iter().map(|b| format!("bound_{b}")));
    cols.extend(REPORT_BOUNDS.iter().map(|b| format!("ratio_{b}")));
    cols.extend(["log_power".to_string(), "surrogates".to_string()]);
    cols.join(",")
}

pub fn csv_row(r: &BoundReport) -> String {
    let mut cols = vec![
        r.grid.to_string(),
        r.row.to_string(),
        r.p.to_string(),
        r.m.to_string(),
        r.n.to_string(),
        r.k.to_string(),
        r.l.to_string(),
        r.scheme.to_string(),
        r.policy.to_string(),
        r.seed.to_string(),
        sig(r.s_value),
    ];
    let cell = |v: Option<f64>| v.map(sig).unwrap_or_default();
    cols.extend(REPORT_BOUNDS.iter().map(|b| cell(r.bound(b))));
    cols.extend(REPORT_BOUNDS.iter().map(|b| cell(r.ratio(b))));
    cols.push(sig(r.log_power));
    cols.push(r.surrogates.join(";"));
    cols.join(",")
}

pub fn write_csv<W: Write>(mut out: W, reports: &[BoundReport]) -> io::Result<()> {
    writeln!(out, "{}", csv_header())?;
    for r in reports {
        writeln!(out, "{}", csv_row(r))?;
    }
    Ok(())
}

fn json_map(entries: &[(&'static str, f64)]) -> String {
    let body: Vec<String> = entries.iter().map(|(k, v)| format!("\"{k}\":{}", sig(*v))).collect();
    format!("{{{}}}", body.join(","))
}

/// One JSON object per row, keys in a fixed order.
pub fn jsonl_row(r: &BoundReport) -> String {
    format!(
        "{{\"grid\":{},\"row\":{},\"p\":{},\"M\":{},\"N\":{},\"K\":{},\"L\":{},\"scheme\":\"{}\",\"policy\":\"{}\",\"seed\":{},\"s_value\":{},\"bounds\":{},\"ratios\":{},\"log_power\":{},\"surrogates\":[{}]}}",
        r.grid,
        r.row,
        r.p,
        r.m,
        r.n,
        r.k,
        r.l,
        r.scheme,
        r.policy,
        r.seed,
        sig(r.s_value),
        json_map(&r.bounds),
        json_map(&r.ratios),
        sig(r.log_power),
        r.surrogates.iter().map(|s| format!("\"{s}\"")).collect::<Vec<_>>().join(","),
    )
}

pub fn write_jsonl<W: Write>(mut out: W, reports: &[BoundReport]) -> io::Result<()> {
    for r in reports {
        writeln!(out, "{}", jsonl_row(r))?;
    }
    Ok(())
}

/// Human-readable table of per-grid maxima.
pub fn write_summary<W: Write>(mut out: W, summary: &[GridSummary]) -> io::Result<()> {
    for s in summary {
        writeln!(
            out,
            "grid {} p={} M={} N={} scheme={} policy={} rows={} max|S|={}",
            s.grid,
            s.p,
            s.m,
            s.n,
            s.scheme,
            s.policy,
            s.rows,
            sig(s.max_s)
        )?;
        for (name, v) in &s.max_ratios {
            writeln!(out, "  max ratio {name:<18} {}", sig(*v))?;
        }
        if let Some(by_power) = s.interval_pair_by_power {
            for (c, v) in by_power.iter().enumerate() {
                writeln!(out, "  max |S|/((p+MN)(ln p)^{c}) {}", sig(*v))?;
            }
        }
    }
    Ok(())
}
