//! Whole-table computation of `m ↦ K_p(m, 1)`.
//!
//! With `h(x) = e_p(x̄)` for `x ≠ 0` and `h(0) = 0`, the sign-`+` DFT of `h`
//! sampled at `m` is exactly `K_p(m, 1)`, so one prime-length transform
//! yields the whole table.

mod cache;
mod dft;

use std::str::FromStr;

use num_complex::Complex;
use num_traits::Zero;
use rayon::prelude::*;

pub use cache::{load_table, read_table, save_table, write_table, MAGIC};
pub use dft::{naive_dft, prime_dft, RaderPlan, Radix2, Sign};

use crate::error::{domain, Error, Result};
use crate::expsums::{KloostermanKernel, RootTable};
use crate::modarith::{reduce, PrimeContext};
use crate::scalar::Scalar;

/// How a table is built.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// `p - 1` direct summations, `O(p²)`.
    Direct,
    /// One Rader DFT, `O(p log p)`.
    Spectral,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(Method::Direct),
            "spectral" => Ok(Method::Spectral),
            other => Err(domain(format!("unknown table method `{other}`"))),
        }
    }
}

/// `K_p(m, 1)` for every `m ∈ [1, p-1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct KloostermanTable<T = f64> {
    p: u64,
    values: Vec<T>,
}

impl<T: Scalar> KloostermanTable<T> {
    /// Wraps raw values; `values[i]` is `K_p(i + 1, 1)`.
    pub fn from_values(p: u64, values: Vec<T>) -> Result<Self> {
        crate::modarith::check_prime(p)?;
        if values.len() as u64 != p - 1 {
            return Err(domain(format!("table for p = {p} needs {} values, got {}", p - 1, values.len())));
        }
        Ok(Self { p, values })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `K_p(m, 1)` for any integer `m`. The `m ≡ 0` entry is not stored and
    /// is the constant `K_p(0, 1) = -1`.
    #[inline]
    pub fn get(&self, m: i64) -> T {
        let r = reduce(m, self.p);
        if r == 0 {
            -T::one()
        } else {
            self.values[(r - 1) as usize]
        }
    }

    /// Same as [`Self::get`] for an already reduced nonzero residue.
    #[inline]
    pub fn at_residue(&self, r: u64) -> T {
        self.values[(r - 1) as usize]
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// Largest entrywise difference against another table for the same prime.
    pub fn max_abs_diff(&self, other: &Self) -> Result<T> {
        if self.p != other.p {
            return Err(domain(format!("tables for p = {} and p = {} differ in size", self.p, other.p)));
        }
        Ok(self.values.iter().zip(&other.values).map(|(a, b)| (*a - *b).abs()).fold(T::zero(), T::max))
    }

    pub fn max_abs(&self) -> T {
        self.values.iter().map(|v| v.abs()).fold(T::zero(), T::max)
    }
}

/// A freshly built table together with the largest imaginary part that was
/// discarded while building it.
#[derive(Debug, Clone)]
pub struct BuiltTable<T> {
    pub table: KloostermanTable<T>,
    pub max_imag: T,
}

fn realify<T: Scalar>(p: u64, sums: Vec<Complex<T>>) -> Result<BuiltTable<T>> {
    let tol = T::tol(p);
    let max_imag = sums.iter().map(|z| z.im.abs()).fold(T::zero(), T::max);
    if max_imag > tol {
        return Err(Error::NotReal { imag: max_imag.to_f64_lossy(), tol: tol.to_f64_lossy() });
    }
    Ok(BuiltTable { table: KloostermanTable { p, values: sums.into_iter().map(|z| z.re).collect() }, max_imag })
}

/// Builds the table and reports the discarded imaginary mass.
pub fn build_table_with_stats<T: Scalar>(ctx: &PrimeContext, method: Method) -> Result<BuiltTable<T>> {
    let p = ctx.p();
    let sums = match method {
        Method::Direct => {
            let kernel = KloostermanKernel::<T>::new(ctx);
            let inverses: Vec<u32> = ctx.inverse_table().to_vec();
            (1..p as i64).into_par_iter().map(|m| kernel.eval_scaled(m, &inverses)).collect()
        }
        Method::Spectral => {
            let roots = RootTable::<T>::new(p);
            let mut h = vec![Complex::zero(); p as usize];
            for x in 1..p {
                h[x as usize] = roots.get(ctx.inv(x));
            }
            let mut out = prime_dft(&h, p, Sign::Plus)?;
            out.remove(0);
            out
        }
    };
    realify(p, sums)
}

/// Builds the `K_p(·, 1)` table with the requested method.
pub fn build_table<T: Scalar>(ctx: &PrimeContext, method: Method) -> Result<KloostermanTable<T>> {
    Ok(build_table_with_stats(ctx, method)?.table)
}
