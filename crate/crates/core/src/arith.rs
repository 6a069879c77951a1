//! Exact integer primitives shared by every other module.
//!
//! Everything here works on [`ExactInt`], an arbitrary-precision signed
//! integer, so no intermediate ever wraps.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer used for all inputs and intermediates.
pub type ExactInt = BigInt;

/// Extended Euclid on non-negative inputs.
///
/// Returns `(g, x, y)` with `g = gcd(a, b) > 0` and `a*x + b*y = g`.
pub fn egcd(a: &ExactInt, b: &ExactInt) -> Result<(ExactInt, ExactInt, ExactInt)> {
    if a.is_negative() || b.is_negative() {
        return Err(Error::invalid("egcd expects non-negative arguments"));
    }
    if a.is_zero() && b.is_zero() {
        return Err(Error::invalid("egcd(0, 0) is undefined"));
    }
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (ExactInt::one(), ExactInt::zero());
    let (mut old_t, mut t) = (ExactInt::zero(), ExactInt::one());
    while !r.is_zero() {
        let (q, rem) = old_r.div_rem(&r);
        old_r = std::mem::replace(&mut r, rem);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    Ok((old_r, old_s, old_t))
}

/// Inverse of `x` modulo `m`, in `[0, m)`. By convention the inverse modulo 1 is 0.
pub fn mod_inverse(x: &ExactInt, m: &ExactInt) -> Result<ExactInt> {
    if m < &ExactInt::one() {
        return Err(Error::invalid(format!("modulus must be >= 1, got {m}")));
    }
    if m.is_one() {
        return Ok(ExactInt::zero());
    }
    let xr = x.mod_floor(m);
    let (g, s, _) = egcd(&xr, m)?;
    if !g.is_one() {
        return Err(Error::NotInvertible {
            value: x.to_string(),
            modulus: m.to_string(),
        });
    }
    Ok(s.mod_floor(m))
}

/// Residue of `v` modulo `m` taken in `[1, m]`: a zero residue maps to `m`.
pub fn residue_one_based(v: &ExactInt, m: &ExactInt) -> Result<ExactInt> {
    if m < &ExactInt::one() {
        return Err(Error::invalid(format!("modulus must be >= 1, got {m}")));
    }
    let r = v.mod_floor(m);
    Ok(if r.is_zero() { m.clone() } else { r })
}

/// `num / den`, failing loudly if the division leaves a remainder.
pub(crate) fn exact_div(num: &ExactInt, den: &ExactInt, what: &str) -> Result<ExactInt> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::internal(format!(
            "{what}: {num} is not divisible by {den}"
        )));
    }
    Ok(q)
}

pub(crate) fn gcd(a: &ExactInt, b: &ExactInt) -> ExactInt {
    a.gcd(b)
}

pub(crate) fn is_coprime(a: &ExactInt, b: &ExactInt) -> bool {
    a.gcd(b).is_one()
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
