//! Solutions of `x y ≡ 1 (mod p)` with `1 ≤ |x| ≤ X`, `1 ≤ |y| ≤ Y`.
//!
//! Two independent counters: one walks the signed `x` and tests the two
//! integer representatives of `x̄`; the other lifts the congruence to
//! `x y = 1 + k p` and enumerates factorizations of `1 + k p`.

use crate::error::{domain, Result};
use crate::modarith::{check_prime, divisors, mod_inverse};

fn check_box(p: u64, x_max: u64, y_max: u64) -> Result<()> {
    check_prime(p)?;
    if x_max == 0 || y_max == 0 || x_max >= p || y_max >= p {
        return Err(domain(format!("box X = {x_max}, Y = {y_max} must satisfy 1 ≤ X, Y < p = {p}")));
    }
    Ok(())
}

/// Count by scanning `x ∈ [-X, -1] ∪ [1, X]`; `O(X log p)`.
pub fn count_inverse_pairs_bruteforce(p: u64, x_max: u64, y_max: u64) -> Result<u64> {
    check_box(p, x_max, y_max)?;
    let mut count = 0;
    for x in 1..=x_max as i64 {
        for signed in [x, -x] {
            let xbar = mod_inverse(signed, p)?;
            // |y| < p leaves exactly two candidates in the class of x̄.
            if xbar <= y_max {
                count += 1;
            }
            if p - xbar <= y_max {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Factorizations `x y = v` with `1 ≤ |x| ≤ X`, `1 ≤ |y| ≤ Y`, given the
/// divisors of `|v|`. Each admissible `|x|` contributes both signs of `x`.
fn count_factorizations(abs_v: u64, divs: &[u64], x_max: u64, y_max: u64) -> u64 {
    divs.iter().filter(|&&d| d <= x_max && abs_v / d <= y_max).count() as u64 * 2
}

fn k_bound(p: u64, x_max: u64, y_max: u64) -> i64 {
    ((x_max * y_max + 1) / p) as i64
}

/// Count by enumerating `k` with `|k| ≤ (XY + 1)/p` and the divisors of
/// `|1 + k p|`; `O((XY/p) √(XY))`.
pub fn count_inverse_pairs_divisor(p: u64, x_max: u64, y_max: u64) -> Result<u64> {
    check_box(p, x_max, y_max)?;
    let k_max = k_bound(p, x_max, y_max);
    let mut count = 0;
    for k in -k_max..=k_max {
        let v = 1 + k as i128 * p as i128;
        let abs_v = v.unsigned_abs() as u64;
        if abs_v > x_max * y_max {
            continue;
        }
        count += count_factorizations(abs_v, &divisors(abs_v)?, x_max, y_max);
    }
    Ok(count)
}

/// The divisor counter with the divisor lists of every `|1 + k p|` that can
/// occur for a box inside `[1, p-1]²` computed once, for sweeping many boxes.
#[derive(Debug, Clone)]
pub struct InversePairCounter {
    p: u64,
    k_max: i64,
    /// Divisors of `|1 + k p|`, indexed by `k + k_max`.
    divisors: Vec<Vec<u64>>,
}

impl InversePairCounter {
    pub fn new(p: u64) -> Result<Self> {
        check_prime(p)?;
        let k_max = k_bound(p, p - 1, p - 1);
        let divisors = (-k_max..=k_max).map(|k| divisors((1 + k * p as i64).unsigned_abs())).collect::<Result<_>>()?;
        Ok(Self { p, k_max, divisors })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn count(&self, x_max: u64, y_max: u64) -> Result<u64> {
        check_box(self.p, x_max, y_max)?;
        let k_max = k_bound(self.p, x_max, y_max);
        let mut count = 0;
        for k in -k_max..=k_max {
            let abs_v = (1 + k * self.p as i64).unsigned_abs();
            if abs_v > x_max * y_max {
                continue;
            }
            let divs = &self.divisors[(k + self.k_max) as usize];
            count += count_factorizations(abs_v, divs, x_max, y_max);
        }
        Ok(count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Literal enumeration of the box.
    fn box_oracle(p: u64, x_max: i64, y_max: i64) -> u64 {
        let mut n = 0;
        for x in -x_max..=x_max {
            for y in -y_max..=y_max {
                if x != 0 && y != 0 && (x * y).rem_euclid(p as i64) == 1 {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn anchors() {
        assert_eq!(count_inverse_pairs_bruteforce(5, 1, 1).unwrap(), 2);
        assert_eq!(count_inverse_pairs_divisor(5, 1, 1).unwrap(), 2);
        assert_eq!(count_inverse_pairs_bruteforce(7, 3, 3).unwrap(), 6);
        assert_eq!(count_inverse_pairs_divisor(7, 3, 3).unwrap(), 6);
        assert_eq!(count_inverse_pairs_bruteforce(11, 10, 10).unwrap(), 40);
        assert_eq!(count_inverse_pairs_divisor(11, 10, 10).unwrap(), 40);
        let b = count_inverse_pairs_bruteforce(101, 50, 50).unwrap();
        assert_eq!(count_inverse_pairs_divisor(101, 50, 50).unwrap(), b);
    }

    #[test]
    fn both_counters_match_literal_enumeration() {
        for p in [3u64, 5, 7, 11, 13, 31] {
            for x in 1..p {
                for y in 1..p {
                    let oracle = box_oracle(p, x as i64, y as i64);
                    assert_eq!(count_inverse_pairs_bruteforce(p, x, y).unwrap(), oracle);
                    assert_eq!(count_inverse_pairs_divisor(p, x, y).unwrap(), oracle);
                }
            }
        }
    }

    #[test]
    fn cached_counter_agrees() {
        for p in [13u64, 97] {
            let counter = InversePairCounter::new(p).unwrap();
            for x in 1..p {
                for y in (1..p).step_by(5) {
                    assert_eq!(counter.count(x, y).unwrap(), count_inverse_pairs_divisor(p, x, y).unwrap());
                }
            }
        }
    }

    #[test]
    fn rejects_bad_boxes() {
        assert!(count_inverse_pairs_bruteforce(7, 0, 3).is_err());
        assert!(count_inverse_pairs_bruteforce(7, 7, 3).is_err());
        assert!(count_inverse_pairs_divisor(7, 3, 7).is_err());
        assert!(count_inverse_pairs_divisor(8, 3, 3).is_err());
        assert!(InversePairCounter::new(7).unwrap().count(0, 1).is_err());
    }
}
