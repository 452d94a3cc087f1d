//! Numerical laboratory: inverse-pair counting, the Vinogradov inequality
//! and seeded sweeps of bilinear sums against their bounds.

mod counting;
mod report;
mod sweep;
mod vinogradov;

pub use counting::{count_inverse_pairs_bruteforce, count_inverse_pairs_divisor, InversePairCounter};
pub use report::{csv_header, csv_row, jsonl_row, write_csv, write_jsonl, write_summary};
pub use sweep::{
    check_weil_table, run_sweep, summarize, BoundReport, GridPoint, GridSummary, PositionPolicy, SweepOptions,
    WeightScheme, REPORT_BOUNDS,
};
pub use vinogradov::{vinogradov_check, VinogradovOutcome};
