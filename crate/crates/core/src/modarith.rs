//! Exact modular arithmetic over odd primes below 2^31.
//!
//! All products are formed in `u64` (or `u128` inside Miller–Rabin) before
//! reduction, so nothing here ever rounds.

use crate::error::{domain, Error, Result};

/// Largest supported modulus (exclusive).
pub const PRIME_CAP: u64 = 1 << 31;

/// `base^exp mod m` by square-and-multiply.
pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut b = (base % m) as u128;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Deterministic Miller–Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n % w == 0 {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Checks that `p` is an odd prime below [`PRIME_CAP`].
pub fn check_prime(p: u64) -> Result<()> {
    if p == 2 {
        return Err(Error::EvenPrime);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p >= PRIME_CAP {
        return Err(Error::PrimeTooLarge(p));
    }
    Ok(())
}

/// Least nonnegative residue of a signed integer.
#[inline]
pub fn reduce(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

/// Inverse of `x` modulo `p` in `[1, p-1]`, via the extended Euclidean algorithm.
pub fn mod_inverse(x: i64, p: u64) -> Result<u64> {
    let r = reduce(x, p);
    if r == 0 {
        return Err(Error::NoInverse { value: x, p });
    }
    let (mut old_r, mut cur_r) = (r as i64, p as i64);
    let (mut old_s, mut cur_s) = (1i64, 0i64);
    while cur_r != 0 {
        let q = old_r / cur_r;
        (old_r, cur_r) = (cur_r, old_r - q * cur_r);
        (old_s, cur_s) = (cur_s, old_s - q * cur_s);
    }
    if old_r != 1 {
        return Err(Error::NoInverse { value: x, p });
    }
    Ok(reduce(old_s, p))
}

/// Distinct prime factors of `n` by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest generator of the multiplicative group modulo the odd prime `p`.
pub fn find_primitive_root(p: u64) -> Result<u64> {
    if p == 2 {
        return Err(Error::EvenPrime);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let order = p - 1;
    let factors = prime_factors(order);
    (2..p)
        .find(|&g| factors.iter().all(|&q| mod_pow(g, order / q, p) != 1))
        .ok_or_else(|| domain(format!("no primitive root found for {p}")))
}

/// Legendre symbol `(a/p)` by Euler's criterion.
pub fn legendre(a: i64, p: u64) -> i8 {
    let r = reduce(a, p);
    if r == 0 {
        return 0;
    }
    if mod_pow(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// `‖u‖_p`: distance from `u` to the nearest multiple of `p`.
#[inline]
pub fn dist_to_zero(u: i64, p: u64) -> u64 {
    let r = reduce(u, p);
    r.min(p - r)
}

/// All positive divisors of `n`, ascending.
///
/// Trial division up to the square root of the unfactored cofactor, then
/// expansion of the factorization.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(domain("divisors of 0 are not defined"));
    }
    let mut rest = n;
    let mut out = vec![1u64];
    let mut d = 2u64;
    while d * d <= rest {
        if rest % d == 0 {
            let mut mult = 0;
            while rest % d == 0 {
                rest /= d;
                mult += 1;
            }
            extend_with_prime_power(&mut out, d, mult);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        extend_with_prime_power(&mut out, rest, 1);
    }
    out.sort_unstable();
    Ok(out)
}

fn extend_with_prime_power(divs: &mut Vec<u64>, q: u64, mult: u32) {
    let base_len = divs.len();
    let mut power = 1;
    for _ in 0..mult {
        power *= q;
        for i in 0..base_len {
            divs.push(divs[i] * power);
        }
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A validated odd prime together with its generator, discrete-log table
/// and inverse table.
///
/// Immutable once built; share it freely between threads.
#[derive(Debug, Clone)]
pub struct PrimeContext {
    p: u64,
    g: u64,
    dlog: Vec<u32>,
    inv: Vec<u32>,
}

impl PrimeContext {
    pub fn new(p: u64) -> Result<Self> {
        check_prime(p)?;
        let g = find_primitive_root(p)?;
        let n = (p - 1) as usize;
        let mut powers = vec![0u32; n];
        let mut dlog = vec![0u32; p as usize];
        let mut x = 1u64;
        for (j, slot) in powers.iter_mut().enumerate() {
            *slot = x as u32;
            dlog[x as usize] = j as u32;
            x = x * g % p;
        }
        // g^j * g^(n-j) = 1
        let mut inv = vec![0u32; p as usize];
        for j in 0..n {
            inv[powers[j] as usize] = powers[(n - j) % n];
        }
        Ok(Self { p, g, dlog, inv })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    /// The smallest primitive root.
    #[inline]
    pub fn generator(&self) -> u64 {
        self.g
    }

    /// Exponent `j ∈ [0, p-2]` with `g^j ≡ x`. Panics if `p | x`.
    #[inline]
    pub fn dlog(&self, x: u64) -> u64 {
        let r = x % self.p;
        assert!(r != 0, "discrete log of 0 is undefined");
        self.dlog[r as usize] as u64
    }

    /// Inverse of `x` modulo `p`. Panics if `p | x`.
    #[inline]
    pub fn inv(&self, x: u64) -> u64 {
        let r = x % self.p;
        assert!(r != 0, "0 has no inverse");
        self.inv[r as usize] as u64
    }

    /// The inverse table indexed by residue (entry 0 unused).
    pub fn inverse_table(&self) -> &[u32] {
        &self.inv
    }

    pub fn dlog_table(&self) -> &[u32] {
        &self.dlog
    }
}
