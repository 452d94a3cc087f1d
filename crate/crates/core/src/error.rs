use std::fmt;

/// Errors produced by the toolkit.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p = 2 is not supported; only odd primes are handled")]
    EvenPrime,
    #[error("prime {0} exceeds the 2^31 cap")]
    PrimeTooLarge(u64),
    #[error("{value} has no inverse modulo {p}")]
    NoInverse { value: i64, p: u64 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("sum expected to be real has imaginary part {imag:e} (tolerance {tol:e})")]
    NotReal { imag: f64, tol: f64 },
    #[error("bad table file: {0}")]
    Format(String),
    #[error("{0}")]
    Violation(Violation),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

/// A constant-explicit inequality that failed on a concrete instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub check: String,
    pub lhs: f64,
    pub rhs: f64,
    /// Parameters needed to reproduce the failing instance.
    pub context: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated: lhs {:e}, rhs {:e} [{}]", self.check, self.lhs, self.rhs, self.context)
    }
}
