use num_complex::Complex;

use crate::error::{domain, Result};
use crate::expsums::RootTable;
use crate::scalar::{csum, Compensated, Scalar};

/// Both sides of `|Σ_u Σ_v φ_u ψ_v e_p(u v)| ≤ √(Φ Ψ p)` for one instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VinogradovOutcome<T = f64> {
    pub lhs: T,
    pub rhs: T,
    pub holds: bool,
}

fn check_set(name: &str, set: &[u64], weights: usize, p: u64) -> Result<()> {
    if set.len() != weights {
        return Err(domain(format!("{name} has {} indices but {weights} weights", set.len())));
    }
    let mut seen = vec![false; p as usize];
    for &u in set {
        if u >= p {
            return Err(domain(format!("index {u} in {name} is outside [0, {}]", p - 1)));
        }
        if std::mem::replace(&mut seen[u as usize], true) {
            return Err(domain(format!("index {u} repeats in {name}")));
        }
    }
    Ok(())
}

/// Evaluates the double sum directly and compares it with `√(Φ Ψ p)`, where
/// `Φ = Σ|φ_u|²` and `Ψ = Σ|ψ_v|²`.
pub fn vinogradov_check<T: Scalar>(
    p: u64,
    u_set: &[u64],
    v_set: &[u64],
    phi: &[Complex<T>],
    psi: &[Complex<T>],
) -> Result<VinogradovOutcome<T>> {
    crate::modarith::check_prime(p)?;
    check_set("U", u_set, phi.len(), p)?;
    check_set("V", v_set, psi.len(), p)?;
    let roots = RootTable::<T>::new(p);
    let mut acc = Compensated::new();
    for (&u, &f) in u_set.iter().zip(phi) {
        let inner = v_set.iter().zip(psi).map(|(&v, &g)| g * roots.get(u * v % p)).collect::<Compensated<_>>().total();
        acc.add(f * inner);
    }
    let lhs = acc.total().norm();
    let big_phi: T = csum(phi.iter().map(|z| z.norm_sqr()));
    let big_psi: T = csum(psi.iter().map(|z| z.norm_sqr()));
    let rhs = (big_phi * big_psi * T::of(p as f64)).sqrt();
    Ok(VinogradovOutcome { lhs, rhs, holds: lhs <= rhs + T::tol(p) })
}
