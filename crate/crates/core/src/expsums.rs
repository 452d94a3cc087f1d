//! Pointwise exponential and character sums modulo a prime.
//!
//! Every sum here is a direct `O(p)` (or `O(Mp)`) compensated summation over
//! precomputed roots of unity. Where two algebraic routes to the same value
//! exist, both are exposed so callers can cross-check them.

use num_complex::Complex;
use num_traits::Zero;

use crate::bilinear::Interval;
use crate::error::{domain, Error, Result};
use crate::modarith::{check_prime, gcd, legendre, mod_inverse, mod_pow, reduce, PrimeContext};
use crate::scalar::{unit_root, Compensated, Scalar};

/// The `order`-th roots of unity, `exp(2πi k / order)` for `k ∈ [0, order)`.
#[derive(Debug, Clone)]
pub struct RootTable<T> {
    order: u64,
    roots: Vec<Complex<T>>,
}

impl<T: Scalar> RootTable<T> {
    pub fn new(order: u64) -> Self {
        assert!(order >= 1, "root table needs a positive order");
        let roots = (0..order).map(|k| unit_root(k, order)).collect();
        Self { order, roots }
    }

    #[inline]
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Root at an already-reduced exponent.
    #[inline]
    pub fn get(&self, k: u64) -> Complex<T> {
        self.roots[k as usize]
    }

    /// Root at an arbitrary signed exponent.
    #[inline]
    pub fn at(&self, z: i64) -> Complex<T> {
        self.roots[reduce(z, self.order) as usize]
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.roots
    }
}

/// `e_p(z) = exp(2πi z / p)`, with `z` reduced modulo `p` first.
pub fn additive_char<T: Scalar>(z: i64, p: u64) -> Complex<T> {
    unit_root(reduce(z, p), p)
}

/// Fails with [`Error::NotReal`] if `z` is not real to within `tol`.
pub fn expect_real<T: Scalar>(z: Complex<T>, tol: T) -> Result<T> {
    if z.im.abs() > tol {
        return Err(Error::NotReal { imag: z.im.to_f64_lossy(), tol: tol.to_f64_lossy() });
    }
    Ok(z.re)
}

/// Direct evaluator of `K_p(m, n)` backed by a prime context and a root table.
#[derive(Debug, Clone)]
pub struct KloostermanKernel<'a, T> {
    ctx: &'a PrimeContext,
    roots: RootTable<T>,
}

impl<'a, T: Scalar> KloostermanKernel<'a, T> {
    pub fn new(ctx: &'a PrimeContext) -> Self {
        Self { ctx, roots: RootTable::new(ctx.p()) }
    }

    pub fn context(&self) -> &'a PrimeContext {
        self.ctx
    }

    pub fn roots(&self) -> &RootTable<T> {
        &self.roots
    }

    /// `n · x̄ mod p` for every `x`, the second phase of `K_p(·, n)`.
    pub fn scaled_inverses(&self, n: i64) -> Vec<u32> {
        let p = self.ctx.p();
        let n = reduce(n, p);
        self.ctx.inverse_table().iter().map(|&xi| (n * xi as u64 % p) as u32).collect()
    }

    /// `Σ_{x=1}^{p-1} e_p(m x + s[x])` where `s` comes from [`Self::scaled_inverses`].
    pub fn eval_scaled(&self, m: i64, scaled: &[u32]) -> Complex<T> {
        let p = self.ctx.p();
        let m = reduce(m, p);
        let mut acc = Compensated::new();
        let mut mx = 0u64;
        for &s in &scaled[1..] {
            mx += m;
            if mx >= p {
                mx -= p;
            }
            let mut idx = mx + s as u64;
            if idx >= p {
                idx -= p;
            }
            acc.add(self.roots.get(idx));
        }
        acc.total()
    }

    /// `K_p(m, n)` before the imaginary part is dropped.
    pub fn eval_complex(&self, m: i64, n: i64) -> Complex<T> {
        self.eval_scaled(m, &self.scaled_inverses(n))
    }

    /// `K_p(m, n)`, checked to be real within `tol(p)`.
    pub fn eval(&self, m: i64, n: i64) -> Result<T> {
        expect_real(self.eval_complex(m, n), T::tol(self.ctx.p()))
    }
}

/// `K_p(m, n) = Σ_{x=1}^{p-1} e_p(m x + n x̄)` by direct summation.
pub fn kloosterman<T: Scalar>(p: u64, m: i64, n: i64) -> Result<T> {
    let ctx = PrimeContext::new(p)?;
    KloostermanKernel::<T>::new(&ctx).eval(m, n)
}

/// Index `j ∈ [0, p-2]` of the multiplicative character
/// `χ_j(x) = exp(2πi j·dlog(x) / (p-1))`, relative to the smallest primitive root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharacterIndex(pub u64);

impl CharacterIndex {
    pub const PRINCIPAL: Self = Self(0);

    pub fn is_principal(self) -> bool {
        self.0 == 0
    }

    /// Index of the complex-conjugate character.
    pub fn conj(self, p: u64) -> Self {
        let n = p - 1;
        Self((n - self.0 % n) % n)
    }

    /// Multiplicative order of the character.
    pub fn order(self, p: u64) -> u64 {
        let n = p - 1;
        n / gcd(self.0 % n, n)
    }

    /// The quadratic character.
    pub fn quadratic(p: u64) -> Self {
        Self((p - 1) / 2)
    }

    /// Nonprincipal characters whose `k`-th power is principal.
    pub fn kth_roots_of_principal(p: u64, k: u64) -> impl Iterator<Item = Self> {
        let n = p - 1;
        let d = gcd(k, n);
        let step = n / d;
        (1..d).map(move |t| Self(t * step))
    }
}

/// `χ_j(x)`, zero when `p | x`.
pub fn char_value<T: Scalar>(ctx: &PrimeContext, j: CharacterIndex, x: i64) -> Complex<T> {
    let p = ctx.p();
    let r = reduce(x, p);
    if r == 0 {
        return Complex::zero();
    }
    let n = p - 1;
    unit_root((j.0 % n) * ctx.dlog(r) % n, n)
}

fn check_k_divides(p: u64, k: u64) -> Result<()> {
    if k == 0 || (p - 1) % k != 0 {
        return Err(domain(format!("k = {k} must be a positive divisor of p - 1 = {}", p - 1)));
    }
    Ok(())
}

fn check_unit(a: i64, p: u64) -> Result<u64> {
    let r = reduce(a, p);
    if r == 0 {
        return Err(domain(format!("a = {a} must be coprime to p = {p}")));
    }
    Ok(r)
}

/// Character and Gauss sums sharing one prime context and its root tables.
#[derive(Debug, Clone)]
pub struct CharacterSums<'a, T> {
    ctx: &'a PrimeContext,
    additive: RootTable<T>,
    multiplicative: RootTable<T>,
}

impl<'a, T: Scalar> CharacterSums<'a, T> {
    pub fn new(ctx: &'a PrimeContext) -> Self {
        Self { ctx, additive: RootTable::new(ctx.p()), multiplicative: RootTable::new(ctx.p() - 1) }
    }

    pub fn p(&self) -> u64 {
        self.ctx.p()
    }

    #[inline]
    fn chi(&self, j: CharacterIndex, r: u64) -> Complex<T> {
        let n = self.ctx.p() - 1;
        self.multiplicative.get((j.0 % n) * self.ctx.dlog(r) % n)
    }

    /// `τ_p(a; χ_j) = Σ_{x=1}^{p-1} χ_j(x) e_p(a x)`.
    pub fn tau(&self, a: i64, j: CharacterIndex) -> Complex<T> {
        let p = self.ctx.p();
        let a = reduce(a, p);
        let mut acc = Compensated::new();
        let mut ax = 0u64;
        for x in 1..p {
            ax += a;
            if ax >= p {
                ax -= p;
            }
            acc.add(self.chi(j, x) * self.additive.get(ax));
        }
        acc.total()
    }

    /// `x^k mod p` for every residue, by square-and-multiply.
    pub fn power_table(&self, k: u64) -> Vec<u64> {
        let p = self.ctx.p();
        (0..p).map(|x| mod_pow(x, k, p)).collect()
    }

    fn gauss_from_powers(&self, powers: &[u64], a: u64) -> Complex<T> {
        let p = self.ctx.p();
        let mut acc = Compensated::new();
        for &xk in powers {
            acc.add(self.additive.get(a * xk % p));
        }
        acc.total()
    }

    /// `G_{k,p}(a) = Σ_{x=0}^{p-1} e_p(a x^k)`.
    pub fn gauss_sum(&self, k: u64, a: i64) -> Result<Complex<T>> {
        let p = self.ctx.p();
        check_k_divides(p, k)?;
        Ok(self.gauss_from_powers(&self.power_table(k), reduce(a, p)))
    }

    /// `G_{k,p}(a)` as the sum of `τ_p(a; χ)` over nonprincipal `χ` with `χ^k = χ_0`.
    pub fn gauss_via_characters(&self, k: u64, a: i64) -> Result<Complex<T>> {
        let p = self.ctx.p();
        check_k_divides(p, k)?;
        check_unit(a, p)?;
        Ok(CharacterIndex::kth_roots_of_principal(p, k).map(|j| self.tau(a, j)).collect::<Compensated<_>>().total())
    }

    /// `H_{k,p}(a; I) = Σ_{m∈I} G_{k,p}(a m)` by direct double summation and
    /// through `Σ_χ τ_p(1; χ) Σ_{m∈I} χ̄(a m)`.
    pub fn h_sum(&self, k: u64, a: i64, interval: Interval) -> Result<DualPath<Complex<T>>> {
        let p = self.ctx.p();
        check_k_divides(p, k)?;
        let a = check_unit(a, p)?;
        interval.check_within(p)?;

        let powers = self.power_table(k);
        let direct =
            interval.iter().map(|m| self.gauss_from_powers(&powers, a * m % p)).collect::<Compensated<_>>().total();

        let companion = CharacterIndex::kth_roots_of_principal(p, k)
            .map(|j| {
                let conj = j.conj(p);
                let inner = interval.iter().map(|m| self.chi(conj, a * m % p)).collect::<Compensated<_>>().total();
                self.tau(1, j) * inner
            })
            .collect::<Compensated<_>>()
            .total();

        Ok(DualPath { direct, companion })
    }
}

/// A value computed along two independent routes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualPath<V> {
    pub direct: V,
    pub companion: V,
}

impl<T: Scalar> DualPath<Complex<T>> {
    /// `|direct − companion|`.
    pub fn gap(&self) -> T {
        (self.direct - self.companion).norm()
    }
}

/// `τ_p(a; χ_j)`.
pub fn tau<T: Scalar>(ctx: &PrimeContext, a: i64, j: CharacterIndex) -> Complex<T> {
    CharacterSums::new(ctx).tau(a, j)
}

/// `G_{k,p}(a)` for `k | p - 1`.
pub fn gauss_sum<T: Scalar>(p: u64, k: u64, a: i64) -> Result<Complex<T>> {
    check_prime(p)?;
    check_k_divides(p, k)?;
    let roots = RootTable::<T>::new(p);
    let a = reduce(a, p);
    Ok((0..p).map(|x| roots.get(a * mod_pow(x, k, p) % p)).collect::<Compensated<_>>().total())
}

pub fn gauss_via_characters<T: Scalar>(ctx: &PrimeContext, k: u64, a: i64) -> Result<Complex<T>> {
    CharacterSums::new(ctx).gauss_via_characters(k, a)
}

pub fn h_sum<T: Scalar>(ctx: &PrimeContext, k: u64, a: i64, interval: Interval) -> Result<DualPath<Complex<T>>> {
    CharacterSums::new(ctx).h_sum(k, a, interval)
}

fn check_quadratic(p: u64, a: i64) -> Result<u64> {
    check_prime(p)?;
    let r = reduce(a, p);
    if r == 0 {
        return Err(domain(format!(
            "leading coefficient {a} vanishes modulo {p}; the sum degenerates to a linear one"
        )));
    }
    Ok(r)
}

fn quadratic_direct<T: Scalar>(roots: &RootTable<T>, a: u64, b: u64) -> Complex<T> {
    let p = roots.order();
    (0..p).map(|x| roots.get((a * (x * x % p) + b * x) % p)).collect::<Compensated<_>>().total()
}

/// `Σ_{x=0}^{p-1} e_p(a x² + b x)` by direct summation.
pub fn quad_sum_complete<T: Scalar>(p: u64, a: i64, b: i64) -> Result<Complex<T>> {
    let a = check_quadratic(p, a)?;
    Ok(quadratic_direct(&RootTable::new(p), a, reduce(b, p)))
}

/// Completed-square form `(a/p) · e_p(−b² (4a)^{-1}) · G_{2,p}(1)`.
pub fn quad_sum_closed_form<T: Scalar>(p: u64, a: i64, b: i64) -> Result<Complex<T>> {
    let a_red = check_quadratic(p, a)?;
    let b = reduce(b, p);
    let shift = b * b % p * mod_inverse((4 * a_red % p) as i64, p)? % p;
    let g2 = gauss_sum::<T>(p, 2, 1)?;
    let sign = T::of(legendre(a_red as i64, p) as f64);
    Ok(additive_char::<T>(-(shift as i64), p) * g2 * sign)
}

/// Evaluator for `F_p(a, b; I) = Σ_{m∈I} Σ_x e_p(m(a x² + b x))` on a fixed interval.
///
/// The direct route regroups the double sum by the value `c = a x² + b x`
/// and uses the literal row sums `R[c] = Σ_{m∈I} e_p(m c)`, so each query
/// costs `O(p)` once the rows are in place.
#[derive(Debug, Clone)]
pub struct QuadraticFamily<T> {
    p: u64,
    interval: Interval,
    roots: RootTable<T>,
    rows: Vec<Complex<T>>,
    g2: Complex<T>,
}

impl<T: Scalar> QuadraticFamily<T> {
    pub fn new(p: u64, interval: Interval) -> Result<Self> {
        check_prime(p)?;
        interval.check_within(p)?;
        let roots = RootTable::<T>::new(p);
        let rows =
            (0..p).map(|c| interval.iter().map(|m| roots.get(m * c % p)).collect::<Compensated<_>>().total()).collect();
        let g2 = quadratic_direct(&roots, 1, 0);
        Ok(Self { p, interval, roots, rows, g2 })
    }

    pub fn direct(&self, a: i64, b: i64) -> Result<Complex<T>> {
        let p = self.p;
        let a = check_quadratic(p, a)?;
        let b = reduce(b, p);
        Ok((0..p).map(|x| self.rows[((a * (x * x % p) + b * x) % p) as usize]).collect::<Compensated<_>>().total())
    }

    /// `(a/p) G_{2,p}(1) Σ_{m∈I} (m/p) e_p(−b² (4a)^{-1} m)`.
    pub fn companion(&self, a: i64, b: i64) -> Result<Complex<T>> {
        let p = self.p;
        let a = check_quadratic(p, a)?;
        let b = reduce(b, p);
        let shift = b * b % p * mod_inverse((4 * a % p) as i64, p)? % p;
        let inner = self
            .interval
            .iter()
            .map(|m| {
                let sign = T::of(legendre(m as i64, p) as f64);
                self.roots.at(-((shift * m % p) as i64)) * sign
            })
            .collect::<Compensated<_>>()
            .total();
        Ok(self.g2 * inner * T::of(legendre(a as i64, p) as f64))
    }

    pub fn eval(&self, a: i64, b: i64) -> Result<DualPath<Complex<T>>> {
        Ok(DualPath { direct: self.direct(a, b)?, companion: self.companion(a, b)? })
    }
}

/// `F_p(a, b; I)` along both routes.
pub fn f_sum<T: Scalar>(p: u64, a: i64, b: i64, interval: Interval) -> Result<DualPath<Complex<T>>> {
    check_quadratic(p, a)?;
    QuadraticFamily::new(p, interval)?.eval(a, b)
}
