//! The completed majorant of `S_p(I, J)` and its four-region split.
//!
//! Writing `S_p(I, J) = Σ_x (Σ_{m∈I} e_p(m x)) (Σ_{n∈J} e_p(n x̄))` and
//! bounding each geometric factor gives
//! `|S_p(I, J)| ≤ Σ_x min(M, p/(2‖x‖_p)) · min(N, p/(2‖x̄‖_p))`
//! for intervals at any position. The factor-free variant
//! `t = Σ_x min(M, p/‖x‖_p) · min(N, p/‖x̄‖_p)` splits by whether
//! `‖x‖_p ≤ p/M` and `‖x̄‖_p ≤ p/N` into
//! `t = MN·s1 + Mp·s2 + Np·s3 + p²·s4`, and the unbounded regions split
//! further into exponential shells `e^i p/M < ‖x‖_p ≤ e^{i+1} p/M`.

use crate::error::{domain, Result};
use crate::modarith::{dist_to_zero, PrimeContext};
use crate::scalar::{Compensated, Scalar};

/// The four region sums of the factor-free majorant, plus shell refinements.
#[derive(Debug, Clone, PartialEq)]
pub struct DyadicDecomposition<T = f64> {
    /// `#{x : ‖x‖ ≤ p/M, ‖x̄‖ ≤ p/N}`.
    pub s1: T,
    /// `Σ 1/‖x̄‖` over `‖x‖ ≤ p/M, ‖x̄‖ > p/N`.
    pub s2: T,
    /// `Σ 1/‖x‖` over `‖x‖ > p/M, ‖x̄‖ ≤ p/N`.
    pub s3: T,
    /// `Σ 1/(‖x‖‖x̄‖)` over `‖x‖ > p/M, ‖x̄‖ > p/N`.
    pub s4: T,
    /// The factor-free majorant, summed independently of the split.
    pub t: T,
    /// `⌈ln p⌉`.
    pub i_max: u32,
    /// `s2` split by the shell of `‖x̄‖`; length `i_max + 1`.
    pub s2_shells: Vec<T>,
    /// `s3` split by the shell of `‖x‖`.
    pub s3_shells: Vec<T>,
    /// `s4` split by the shell pair; `s4_shells[i][j]`.
    pub s4_shells: Vec<Vec<T>>,
}

impl<T: Scalar> DyadicDecomposition<T> {
    /// `MN·s1 + Mp·s2 + Np·s3 + p²·s4`.
    pub fn recombined(&self, p: u64, m: u64, n: u64) -> T {
        let (p, m, n) = (T::of(p as f64), T::of(m as f64), T::of(n as f64));
        let mut acc = Compensated::new();
        acc.add(m * n * self.s1);
        acc.add(m * p * self.s2);
        acc.add(n * p * self.s3);
        acc.add(p * p * self.s4);
        acc.total()
    }

    /// `|t − recombined| / t`.
    pub fn identity_gap(&self, p: u64, m: u64, n: u64) -> T {
        (self.t - self.recombined(p, m, n)).abs() / self.t
    }
}

/// Majorants for one `(p, M, N)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Majorant<T = f64> {
    /// `Σ_x min(M, p/(2‖x‖)) · min(N, p/(2‖x̄‖))`, valid for every interval position.
    pub t_half: T,
    pub decomposition: DyadicDecomposition<T>,
}

/// Smallest `i ≥ 0` with `dist · len ≤ e^{i+1} p`, given `dist · len > p`.
fn shell(dist: u64, len: u64, p: u64, i_max: u32) -> usize {
    let ratio = (dist as f64) * (len as f64) / p as f64;
    let mut i = 0u32;
    while ratio > ((i + 1) as f64).exp() && i < i_max {
        i += 1;
    }
    i as usize
}

/// Completed majorant of `S_p(I, J)` for interval lengths `M`, `N`.
pub fn completion_majorant<T: Scalar>(ctx: &PrimeContext, m: u64, n: u64) -> Result<Majorant<T>> {
    let p = ctx.p();
    if m == 0 || n == 0 || m >= p || n >= p {
        return Err(domain(format!("lengths M = {m}, N = {n} must lie in [1, {}]", p - 1)));
    }
    let i_max = (p as f64).ln().ceil() as u32;
    let shells = i_max as usize + 1;
    let (pf, mf, nf) = (T::of(p as f64), T::of(m as f64), T::of(n as f64));
    let two = T::of(2.0);

    let mut t_half = Compensated::new();
    let mut t = Compensated::new();
    let (mut s1, mut s2, mut s3, mut s4) = (0u64, Compensated::new(), Compensated::new(), Compensated::new());
    let mut s2_shells = vec![Compensated::new(); shells];
    let mut s3_shells = vec![Compensated::new(); shells];
    let mut s4_shells = vec![vec![Compensated::new(); shells]; shells];

    for x in 1..p {
        let dx = dist_to_zero(x as i64, p);
        let dy = dist_to_zero(ctx.inv(x) as i64, p);
        let (fx, fy) = (T::of(dx as f64), T::of(dy as f64));

        t_half.add(mf.min(pf / (two * fx)) * nf.min(pf / (two * fy)));
        t.add(mf.min(pf / fx) * nf.min(pf / fy));

        let x_small = dx * m <= p;
        let y_small = dy * n <= p;
        match (x_small, y_small) {
            (true, true) => s1 += 1,
            (true, false) => {
                let v = T::one() / fy;
                s2.add(v);
                s2_shells[shell(dy, n, p, i_max)].add(v);
            }
            (false, true) => {
                let v = T::one() / fx;
                s3.add(v);
                s3_shells[shell(dx, m, p, i_max)].add(v);
            }
            (false, false) => {
                let v = T::one() / (fx * fy);
                s4.add(v);
                s4_shells[shell(dx, m, p, i_max)][shell(dy, n, p, i_max)].add(v);
            }
        }
    }

    let totals = |v: Vec<Compensated<T>>| v.into_iter().map(|c| c.total()).collect::<Vec<_>>();
    Ok(Majorant {
        t_half: t_half.total(),
        decomposition: DyadicDecomposition {
            s1: T::of(s1 as f64),
            s2: s2.total(),
            s3: s3.total(),
            s4: s4.total(),
            t: t.total(),
            i_max,
            s2_shells: totals(s2_shells),
            s3_shells: totals(s3_shells),
            s4_shells: s4_shells.into_iter().map(totals).collect(),
        },
    })
}
