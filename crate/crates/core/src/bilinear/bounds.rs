//! Numeric right-hand sides of the known bounds for Kloosterman-type sums.
//!
//! Bounds stated with a `p^{o(1)}` factor are evaluated with `(ln p)^c` in its
//! place, for a caller-chosen `c`; such values are flagged as surrogates and
//! are only ever compared against data, never asserted.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

/// Identifier of a bound display.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    /// `2 ‖A‖₁ ‖B‖₁ √p` (Weil bound termwise).
    Trivial,
    /// `p ln p` for the single sum over one interval.
    SingleLogP,
    /// `MN p^{1/4} + (MN)^{1/2} p^{1+o(1)}` for the unweighted double sum.
    PriorDouble,
    /// `(p + MN) p^{o(1)}` for the unweighted double sum.
    IntervalPair,
    /// `‖A‖₂ N^{1/2} p` for the one-sided weighted sum.
    WeightedL2,
    /// `‖A‖₁ p^{1+o(1)}` (initial intervals).
    InitialL1,
    /// `(‖A‖₁‖A‖₂)^{1/2} M^{1/12} N^{7/12} p^{3/4+o(1)}` (initial intervals).
    InitialMixed,
    /// `‖A‖_∞ M p^{1+o(1)}`.
    InitialL1Sup,
    /// `‖A‖_∞ M^{5/6} N^{7/12} p^{3/4+o(1)}`.
    InitialMixedSup,
    /// `‖A‖_∞ M^{1/2} N^{1/2} p^{1+o(1)}`.
    WeightedSup,
    /// `M^{1-1/ν} p^{(2ν²+ν+1)/(4ν²)} (ln p)^{1/ν}` for sums of Gauss sums.
    GaussBurgess,
    /// `M^{1-1/ν} p^{(2ν-1)/(4(ν-1))} (ln p)²` for quadratic double sums.
    QuadraticBurgess,
    /// `(XY/p + 1) p^{o(1)}` for inverse pairs in a box (`M = X`, `N = Y`).
    InversePairs,
    /// `‖A‖₂ ((pN − N²) p)^{1/2}`: the bilinear exponential-sum inequality
    /// applied to the completed one-sided weighted sum. Explicit constant.
    Vinogradov,
}

impl BoundId {
    pub const ALL: [BoundId; 14] = [
        BoundId::Trivial,
        BoundId::SingleLogP,
        BoundId::PriorDouble,
        BoundId::IntervalPair,
        BoundId::WeightedL2,
        BoundId::InitialL1,
        BoundId::InitialMixed,
        BoundId::InitialL1Sup,
        BoundId::InitialMixedSup,
        BoundId::WeightedSup,
        BoundId::GaussBurgess,
        BoundId::QuadraticBurgess,
        BoundId::InversePairs,
        BoundId::Vinogradov,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::Trivial => "trivial",
            BoundId::SingleLogP => "single_plogp",
            BoundId::PriorDouble => "prior_double",
            BoundId::IntervalPair => "interval_pair",
            BoundId::WeightedL2 => "weighted_l2",
            BoundId::InitialL1 => "initial_l1",
            BoundId::InitialMixed => "initial_mixed",
            BoundId::InitialL1Sup => "initial_l1_sup",
            BoundId::InitialMixedSup => "initial_mixed_sup",
            BoundId::WeightedSup => "weighted_sup",
            BoundId::GaussBurgess => "gauss_burgess",
            BoundId::QuadraticBurgess => "quadratic_burgess",
            BoundId::InversePairs => "inverse_pairs",
            BoundId::Vinogradov => "vinogradov",
        }
    }

    /// Whether a `p^{o(1)}` factor was replaced by `(ln p)^c`.
    pub fn is_surrogate(self) -> bool {
        matches!(
            self,
            BoundId::PriorDouble
                | BoundId::IntervalPair
                | BoundId::InitialL1
                | BoundId::InitialMixed
                | BoundId::InitialL1Sup
                | BoundId::InitialMixedSup
                | BoundId::WeightedSup
                | BoundId::InversePairs
        )
    }

    /// Whether the inequality holds with exactly this constant, so that a
    /// violation is an error rather than a finding.
    pub fn is_explicit(self) -> bool {
        matches!(self, BoundId::Trivial | BoundId::Vinogradov)
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL.into_iter().find(|b| b.name() == s).ok_or_else(|| domain(format!("unknown bound `{s}`")))
    }
}

/// Inputs to [`bound_rhs`]. Unused fields are ignored by a given bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundParams {
    pub p: u64,
    pub m: u64,
    pub n: u64,
    pub norm_a1: f64,
    pub norm_a2: f64,
    pub norm_a_sup: f64,
    pub norm_b1: f64,
    pub nu: u32,
    /// Power `c` of `ln p` standing in for `p^{o(1)}`.
    pub log_power: f64,
}

impl BoundParams {
    /// Parameters for unit weights on intervals of lengths `m` and `n`.
    pub fn unit(p: u64, m: u64, n: u64) -> Self {
        Self {
            p,
            m,
            n,
            norm_a1: m as f64,
            norm_a2: (m as f64).sqrt(),
            norm_a_sup: 1.0,
            norm_b1: n as f64,
            nu: 2,
            log_power: 2.0,
        }
    }
}

/// A bound value and whether it contains a surrogate factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundValue {
    pub value: f64,
    pub surrogate: bool,
}

/// Evaluates the right-hand side of `id` at `params`.
pub fn bound_rhs(id: BoundId, params: &BoundParams) -> Result<BoundValue> {
    let BoundParams { p, m, n, norm_a1, norm_a2, norm_a_sup, norm_b1, nu, log_power } = *params;
    if p < 3 || m == 0 || n == 0 {
        return Err(domain("bound parameters must be positive with p ≥ 3"));
    }
    let (pf, mf, nf) = (p as f64, m as f64, n as f64);
    let log_p = pf.ln();
    let surrogate = log_p.powf(log_power);
    let value = match id {
        BoundId::Trivial => 2.0 * norm_a1 * norm_b1 * pf.sqrt(),
        BoundId::SingleLogP => pf * log_p,
        BoundId::PriorDouble => mf * nf * pf.powf(0.25) + (mf * nf).sqrt() * pf * surrogate,
        BoundId::IntervalPair => (pf + mf * nf) * surrogate,
        BoundId::WeightedL2 => norm_a2 * nf.sqrt() * pf,
        BoundId::InitialL1 => norm_a1 * pf * surrogate,
        BoundId::InitialMixed => {
            (norm_a1 * norm_a2).sqrt() * mf.powf(1.0 / 12.0) * nf.powf(7.0 / 12.0) * pf.powf(0.75) * surrogate
        }
        BoundId::InitialL1Sup => norm_a_sup * mf * pf * surrogate,
        BoundId::InitialMixedSup => norm_a_sup * mf.powf(5.0 / 6.0) * nf.powf(7.0 / 12.0) * pf.powf(0.75) * surrogate,
        BoundId::WeightedSup => norm_a_sup * mf.sqrt() * nf.sqrt() * pf * surrogate,
        BoundId::GaussBurgess => {
            if nu < 1 {
                return Err(domain(format!("ν = {nu} must be at least 1")));
            }
            let v = nu as f64;
            mf.powf(1.0 - 1.0 / v) * pf.powf((2.0 * v * v + v + 1.0) / (4.0 * v * v)) * log_p.powf(1.0 / v)
        }
        BoundId::QuadraticBurgess => {
            if nu < 2 {
                return Err(domain(format!("ν = {nu} must be at least 2")));
            }
            let v = nu as f64;
            mf.powf(1.0 - 1.0 / v) * pf.powf((2.0 * v - 1.0) / (4.0 * (v - 1.0))) * log_p * log_p
        }
        BoundId::InversePairs => (mf * nf / pf + 1.0) * surrogate,
        BoundId::Vinogradov => {
            if n >= p {
                return Err(domain("the completed inequality needs N < p"));
            }
            norm_a2 * ((pf * nf - nf * nf) * pf).sqrt()
        }
    };
    Ok(BoundValue { value, surrogate: id.is_surrogate() })
}
