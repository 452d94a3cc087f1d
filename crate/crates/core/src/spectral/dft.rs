//! Prime-length DFT: a naive `O(p²)` reference and Rader's algorithm on top of
//! a radix-2 convolution.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{domain, Result};
use crate::expsums::RootTable;
use crate::modarith::{check_prime, find_primitive_root};
use crate::scalar::{unit_root, Compensated, Scalar};

/// Sign of the exponent in `out[t] = Σ_x v[x] e_p(±t x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn apply(self, k: u64, n: u64) -> u64 {
        match self {
            Sign::Plus => k % n,
            Sign::Minus => (n - k % n) % n,
        }
    }
}

fn check_len<T>(v: &[T], p: u64) -> Result<()> {
    if v.len() as u64 != p {
        return Err(domain(format!("input has length {} but p = {p}", v.len())));
    }
    Ok(())
}

/// `O(p²)` DFT by compensated direct summation. Works for any length `p ≥ 1`.
pub fn naive_dft<T: Scalar>(v: &[Complex<T>], p: u64, sign: Sign) -> Result<Vec<Complex<T>>> {
    check_len(v, p)?;
    if p == 0 {
        return Ok(Vec::new());
    }
    let roots = RootTable::<T>::new(p);
    Ok((0..p)
        .map(|t| {
            let mut acc = Compensated::new();
            let mut tx = 0u64;
            for &vx in v {
                acc.add(vx * roots.get(sign.apply(tx, p)));
                tx += t;
                if tx >= p {
                    tx -= p;
                }
            }
            acc.total()
        })
        .collect())
}

/// In-place iterative radix-2 FFT with precomputed twiddles.
#[derive(Debug, Clone)]
pub struct Radix2<T> {
    len: usize,
    /// `exp(-2πi k / len)` for `k < len / 2`.
    twiddles: Vec<Complex<T>>,
}

impl<T: Scalar> Radix2<T> {
    pub fn new(len: usize) -> Self {
        assert!(len.is_power_of_two(), "radix-2 length must be a power of two");
        let n = len as u64;
        let twiddles = (0..len as u64 / 2).map(|k| unit_root((n - k) % n, n)).collect();
        Self { len, twiddles }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn bit_reverse(&self, buf: &mut [Complex<T>]) {
        let bits = self.len.trailing_zeros();
        if bits == 0 {
            return;
        }
        for i in 0..self.len {
            let j = i.reverse_bits() >> (usize::BITS - bits);
            if j > i {
                buf.swap(i, j);
            }
        }
    }

    fn transform(&self, buf: &mut [Complex<T>], inverse: bool) {
        assert_eq!(buf.len(), self.len);
        self.bit_reverse(buf);
        let mut half = 1;
        while half < self.len {
            let stride = self.len / (2 * half);
            for start in (0..self.len).step_by(2 * half) {
                for k in 0..half {
                    let mut w = self.twiddles[k * stride];
                    if inverse {
                        w = w.conj();
                    }
                    let a = buf[start + k];
                    let b = buf[start + k + half] * w;
                    buf[start + k] = a + b;
                    buf[start + k + half] = a - b;
                }
            }
            half *= 2;
        }
    }

    /// Unnormalized forward transform (kernel `exp(-2πi jk/len)`).
    pub fn forward(&self, buf: &mut [Complex<T>]) {
        self.transform(buf, false);
    }

    /// Inverse transform including the `1/len` factor.
    pub fn inverse(&self, buf: &mut [Complex<T>]) {
        self.transform(buf, true);
        let scale = T::one() / T::of(self.len as f64);
        for z in buf.iter_mut() {
            *z = *z * scale;
        }
    }
}

/// Reusable Rader plan for one prime and one sign.
///
/// For `t = g^r` and `x = g^{-s}` the nonzero part of the DFT is the cyclic
/// convolution `c[r] = Σ_s v[g^{-s}] · e_p(±g^{r-s})` of length `p - 1`,
/// evaluated as a zero-padded linear convolution and folded.
#[derive(Debug, Clone)]
pub struct RaderPlan<T> {
    p: u64,
    /// `g^{-s} mod p` for `s ∈ [0, p-1)`.
    input_order: Vec<usize>,
    /// `g^r mod p` for `r ∈ [0, p-1)`.
    output_order: Vec<usize>,
    fft: Radix2<T>,
    /// Forward FFT of the kernel `e_p(±g^q)`, zero-padded.
    kernel_spectrum: Vec<Complex<T>>,
}

impl<T: Scalar> RaderPlan<T> {
    pub fn new(p: u64, sign: Sign) -> Result<Self> {
        check_prime(p)?;
        let g = find_primitive_root(p)?;
        let n = (p - 1) as usize;
        let mut powers = Vec::with_capacity(n);
        let mut x = 1u64;
        for _ in 0..n {
            powers.push(x as usize);
            x = x * g % p;
        }
        let input_order = (0..n).map(|s| powers[(n - s) % n]).collect();
        let len = (2 * n - 1).next_power_of_two();
        let fft = Radix2::new(len);
        let mut kernel_spectrum = vec![Complex::zero(); len];
        for (q, &gq) in powers.iter().enumerate() {
            kernel_spectrum[q] = unit_root(sign.apply(gq as u64, p), p);
        }
        fft.forward(&mut kernel_spectrum);
        Ok(Self { p, input_order, output_order: powers, fft, kernel_spectrum })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Length of the padded convolution.
    pub fn convolution_len(&self) -> usize {
        self.fft.len()
    }

    pub fn process(&self, v: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
        check_len(v, self.p)?;
        let n = (self.p - 1) as usize;
        let mut buf = vec![Complex::zero(); self.fft.len()];
        for (s, &idx) in self.input_order.iter().enumerate() {
            buf[s] = v[idx];
        }
        self.fft.forward(&mut buf);
        for (z, k) in buf.iter_mut().zip(&self.kernel_spectrum) {
            *z = *z * *k;
        }
        self.fft.inverse(&mut buf);

        let mut out = vec![Complex::zero(); self.p as usize];
        out[0] = v.iter().copied().collect::<Compensated<_>>().total();
        for r in 0..n {
            let folded = if r + n < buf.len() { buf[r] + buf[r + n] } else { buf[r] };
            out[self.output_order[r]] = v[0] + folded;
        }
        Ok(out)
    }
}

/// Prime-length DFT with the same contract as [`naive_dft`], in `O(p log p)`.
pub fn prime_dft<T: Scalar>(v: &[Complex<T>], p: u64, sign: Sign) -> Result<Vec<Complex<T>>> {
    check_len(v, p)?;
    RaderPlan::new(p, sign)?.process(v)
}
