//! Two-variable counts: `ax + by = n`, the window of unique solutions, the
//! Frobenius number and Sylvester's count of non-representable integers.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, ExactInt};
use crate::error::{Error, Result};
use crate::report::decimal;

/// Coprime instance of `ax + by = n` with its residue offsets
/// `a1 = n·a⁻¹ mod b` and `b1 = n·b⁻¹ mod a`, both zero-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance2 {
    #[serde(with = "decimal")]
    pub a: ExactInt,
    #[serde(with = "decimal")]
    pub b: ExactInt,
    #[serde(with = "decimal")]
    pub n: ExactInt,
    #[serde(with = "decimal")]
    pub a1: ExactInt,
    #[serde(with = "decimal")]
    pub b1: ExactInt,
}

impl Instance2 {
    /// Requires `gcd(a, b) = 1`.
    pub fn new(a: impl Into<ExactInt>, b: impl Into<ExactInt>, n: impl Into<ExactInt>) -> Result<Self> {
        let (a, b, n) = (a.into(), b.into(), n.into());
        check_positive(&a, &b)?;
        if n.is_negative() {
            return Err(Error::invalid(format!("right-hand side must be >= 0, got {n}")));
        }
        if !arith::is_coprime(&a, &b) {
            return Err(Error::invalid(format!("gcd({a}, {b}) != 1")));
        }
        let a1 = (&n * arith::mod_inverse(&a, &b)?).mod_floor(&b);
        let b1 = (&n * arith::mod_inverse(&b, &a)?).mod_floor(&a);
        Ok(Instance2 { a, b, n, a1, b1 })
    }

    pub fn count(&self) -> Result<ExactInt> {
        let residual = &self.n - &self.a * &self.a1 - &self.b * &self.b1;
        let count = arith::exact_div(&residual, &(&self.a * &self.b), "(n - a*a1 - b*b1) / ab")? + 1u32;
        if count.is_negative() {
            return Err(Error::internal(format!("negative two-variable count for {self:?}")));
        }
        Ok(count)
    }
}

fn check_positive(a: &ExactInt, b: &ExactInt) -> Result<()> {
    if a < &ExactInt::one() || b < &ExactInt::one() {
        return Err(Error::invalid(format!("coefficients must be >= 1, got ({a}, {b})")));
    }
    Ok(())
}

/// Number of non-negative solutions of `ax + by = n`.
pub fn count2(a: impl Into<ExactInt>, b: impl Into<ExactInt>, n: impl Into<ExactInt>) -> Result<ExactInt> {
    let (a, b, n) = (a.into(), b.into(), n.into());
    check_positive(&a, &b)?;
    if n.is_negative() {
        return Err(Error::invalid(format!("right-hand side must be >= 0, got {n}")));
    }
    let g = a.gcd(&b);
    if !n.is_multiple_of(&g) {
        return Ok(ExactInt::zero());
    }
    Instance2::new(&a / &g, &b / &g, &n / &g)?.count()
}

/// Direct enumeration over `y`.
pub fn count2_oracle_enum(a: u64, b: u64, n: u64) -> u64 {
    (0..=n / b).filter(|y| (n - b * y).is_multiple_of(a)).count() as u64
}

fn coprime_pair(a: &ExactInt, b: &ExactInt) -> Result<()> {
    if a < &ExactInt::from(2u32) || b < &ExactInt::from(2u32) {
        return Err(Error::invalid(format!("need a, b >= 2, got ({a}, {b})")));
    }
    if !arith::is_coprime(a, b) {
        return Err(Error::invalid(format!("gcd({a}, {b}) != 1")));
    }
    Ok(())
}

/// `[(a-1)(b-1), ab)`: every `n` in this range has exactly one solution.
pub fn unique_window(a: impl Into<ExactInt>, b: impl Into<ExactInt>) -> Result<(ExactInt, ExactInt)> {
    let (a, b) = (a.into(), b.into());
    coprime_pair(&a, &b)?;
    Ok(((&a - 1u32) * (&b - 1u32), &a * &b))
}

/// Largest integer with no representation `ax + by`, namely `ab - a - b`.
pub fn frobenius2(a: impl Into<ExactInt>, b: impl Into<ExactInt>) -> Result<ExactInt> {
    let (a, b) = (a.into(), b.into());
    coprime_pair(&a, &b)?;
    Ok(&a * &b - &a - &b)
}

/// Sylvester's count `(p-1)(q-1)/2` of positive integers with no representation.
pub fn nonrepresentable_count(p: impl Into<ExactInt>, q: impl Into<ExactInt>) -> Result<ExactInt> {
    let (p, q) = (p.into(), q.into());
    coprime_pair(&p, &q)?;
    Ok(((&p - 1u32) * (&q - 1u32)) >> 1)
}

/// The positive integers with no representation `px + qy`, found by marking
/// every reachable value below `pq`.
pub fn nonrepresentable_set(p: u64, q: u64) -> Result<BTreeSet<u64>> {
    if p == 0 || q == 0 {
        return Err(Error::invalid("generators must be >= 1"));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::invalid(format!("gcd({p}, {q}) != 1")));
    }
    let limit = (p as u128 * q as u128) as usize;
    let mut reachable = vec![false; limit + 1];
    reachable[0] = true;
    for i in 1..=limit {
        reachable[i] = (i >= p as usize && reachable[i - p as usize])
            || (i >= q as usize && reachable[i - q as usize]);
    }
    Ok((1..=limit as u64).filter(|&i| !reachable[i as usize]).collect())
}
