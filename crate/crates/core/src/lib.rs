//! Exact computation of Kloosterman sums and of bilinear forms in
//! Kloosterman sums, with a laboratory for checking the identities and
//! inequalities they satisfy.
//!
//! The numeric kernels are generic over a [`Scalar`] (`f64` or `f32`);
//! the aliases below fix the double-precision instantiation used by the
//! command-line tool and the sweep harness.
//!
//! ```
//! use klab_core::{kloosterman, PrimeContext, build_table, Method, sum_sij, Interval};
//!
//! let k: f64 = kloosterman(5, 1, 1).unwrap();
//! assert!((k - 0.381966011250105).abs() < 1e-12);
//!
//! let ctx = PrimeContext::new(101).unwrap();
//! let table = build_table::<f64>(&ctx, Method::Spectral).unwrap();
//! let full = Interval::full(101);
//! assert!((sum_sij(&table, full, full).unwrap() - 100.0).abs() < 1e-6);
//! ```

pub mod bilinear;
pub mod boundslab;
pub mod error;
pub mod expsums;
pub mod format;
pub mod modarith;
pub mod sampling;
pub mod scalar;
pub mod spectral;
pub mod verify;

pub use bilinear::{
    bound_rhs, completion_majorant, sum_s, sum_s_completed, sum_si, sum_sij, BoundId, BoundParams, DyadicDecomposition,
    Exponent, Interval, Majorant,
};
pub use boundslab::{
    count_inverse_pairs_bruteforce, count_inverse_pairs_divisor, run_sweep, vinogradov_check, BoundReport, GridPoint,
    PositionPolicy, SweepOptions, WeightScheme,
};
pub use error::{Error, Result, Violation};
pub use expsums::{
    additive_char, char_value, gauss_sum, gauss_via_characters, kloosterman, quad_sum_closed_form, quad_sum_complete,
    tau, CharacterIndex, DualPath,
};
pub use modarith::{dist_to_zero, divisors, find_primitive_root, legendre, mod_inverse, PrimeContext};
pub use scalar::Scalar;
pub use spectral::{build_table, load_table, save_table, Method};

/// Double-precision complex value.
pub type ComplexValue = num_complex::Complex<f64>;
pub type Complex32 = num_complex::Complex<f32>;

pub type KloostermanTable = spectral::KloostermanTable<f64>;
pub type KloostermanTable32 = spectral::KloostermanTable<f32>;

pub type WeightSequence = bilinear::WeightSequence<f64>;
pub type WeightSequence32 = bilinear::WeightSequence<f32>;

pub type CharacterSums<'a> = expsums::CharacterSums<'a, f64>;
pub type KloostermanKernel<'a> = expsums::KloostermanKernel<'a, f64>;
