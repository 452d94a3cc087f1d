//! Bilinear forms of Kloosterman sums over intervals.
//!
//! [`sum_s`] evaluates `S_p(A, B; I, J)` by table lookup; [`sum_s_completed`]
//! evaluates the one-sided case by completing the sum over `J`. The two share
//! no code path beyond the root table and are cross-checked in tests.

mod bounds;
mod interval;
mod majorant;
mod sums;

pub use bounds::{bound_rhs, BoundId, BoundParams, BoundValue};
pub use interval::{Exponent, Interval, WeightSequence};
pub use majorant::{completion_majorant, DyadicDecomposition, Majorant};
pub use sums::{gamma_energy, interval_geometric, sum_s, sum_s_completed, sum_si, sum_sij, CompletedSum};
