//! Quadratic residues through floor sums.
//!
//! For distinct odd primes `p, q` the Eisenstein exponent
//! `t(p, q) = sum_{i=1}^{(p-1)/2} floor(iq/p)` gives the Legendre symbol
//! `(q/p) = (-1)^t`, and the number `N(p, q)` of non-negative solutions of
//! `px + qy + z = q(p-1)/2` equals `(p+1)/2 + t(p, q)`. Counting solutions of
//! a few related equations in two ways ties together Gauss's lemma on
//! `t(p, q) + t(q, p)`, Sylvester's count of non-representable integers,
//! a summation by-product and a parity statement. Every relation here is
//! returned as an [`IdentityReport`] so it can be checked over sweeps.

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{self, ExactInt};
use crate::denumerant3::count3_closed;
use crate::error::{Error, Result};
use crate::floor_sum::{floor_sum_fast, FloorSumQuery};
use crate::linear2::nonrepresentable_set;
use crate::report::{decimal, IdentityReport};

/// Two distinct odd primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePair {
    p: u64,
    q: u64,
}

impl PrimePair {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        for v in [p, q] {
            if v == 2 || !arith::is_prime(v) {
                return Err(Error::invalid(format!("{v} is not an odd prime")));
            }
        }
        if p == q {
            return Err(Error::invalid(format!("primes must be distinct, got {p} twice")));
        }
        Ok(PrimePair { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn swapped(&self) -> Self {
        PrimePair { p: self.q, q: self.p }
    }

    fn big(&self) -> (ExactInt, ExactInt) {
        (ExactInt::from(self.p), ExactInt::from(self.q))
    }
}

/// Odd primes below `limit`, ascending.
pub fn odd_primes_below(limit: u64) -> Vec<u64> {
    (3..limit).step_by(2).filter(|&v| arith::is_prime(v)).collect()
}

fn half(v: u64) -> u64 {
    (v - 1) / 2
}

fn eisenstein(p: u64, q: u64) -> Result<ExactInt> {
    floor_sum_fast(&FloorSumQuery::new(half(p), q, p)?)
}

/// `t = sum_{i=1}^{(p-1)/2} floor(iq/p)`.
pub fn eisenstein_t(p: u64, q: u64) -> Result<ExactInt> {
    PrimePair::new(p, q)?;
    eisenstein(p, q)
}

fn parity_sign(v: &ExactInt) -> i8 {
    if v.is_even() {
        1
    } else {
        -1
    }
}

/// Legendre symbol `(q/p)` as `(-1)^t(p, q)`.
pub fn legendre(q: u64, p: u64) -> Result<i8> {
    Ok(parity_sign(&eisenstein_t(p, q)?))
}

/// Legendre symbol `(q/p)` by Euler's criterion `q^((p-1)/2) mod p`.
/// `q` need not be prime, only coprime to the odd prime `p`.
pub fn legendre_euler(q: u64, p: u64) -> Result<i8> {
    if p == 2 || !arith::is_prime(p) {
        return Err(Error::invalid(format!("{p} is not an odd prime")));
    }
    if q.is_multiple_of(p) {
        return Err(Error::invalid(format!("{p} divides {q}")));
    }
    match arith::pow_mod(q, half(p), p) {
        1 => Ok(1),
        r if r == p - 1 => Ok(-1),
        r => Err(Error::internal(format!("Euler criterion gave {r} for ({q}/{p})"))),
    }
}

/// Solutions of `px + qy + z = q(p-1)/2`: closed form with `c = 1`,
/// cross-checked by summing over `y`.
pub fn npq_count(p: u64, q: u64) -> Result<ExactInt> {
    PrimePair::new(p, q)?;
    let n = q * half(p);
    let closed = count3_closed(p, q, 1u32, n)?.count;
    let direct: u64 = (0..=n / q).map(|y| (n - q * y) / p + 1).sum();
    if closed != ExactInt::from(direct) {
        return Err(Error::internal(format!(
            "N({p},{q}): closed form {closed} != direct count {direct}"
        )));
    }
    Ok(closed)
}

/// `(p+1)/2 + (p-1)(q-1)/4 - sum_{i=1}^{(q-1)/2} floor(ip/q)`, valid for `q < p`.
pub fn lemma8_count(p: u64, q: u64) -> Result<ExactInt> {
    PrimePair::new(p, q)?;
    if q >= p {
        return Err(Error::invalid(format!("need q < p, got p={p}, q={q}")));
    }
    let base = ExactInt::from(p.div_ceil(2) + (p - 1) * (q - 1) / 4);
    Ok(base - eisenstein(q, p)?)
}

/// Gauss: `t(p, q) + t(q, p) = (p-1)(q-1)/4`.
pub fn gauss_identity(pair: PrimePair) -> Result<IdentityReport> {
    let (p, q) = (pair.p, pair.q);
    let t1 = eisenstein(p, q)?;
    let t2 = eisenstein(q, p)?;
    Ok(IdentityReport::new("gauss", &t1 + &t2, ExactInt::from((p - 1) * (q - 1) / 4))
        .with("p", p)
        .with("q", q)
        .with("t1", t1)
        .with("t2", t2))
}

/// `N0 + 2(t1 + t2) = (p-1)(q-1)` with `N0` the number of non-representable
/// positive integers, found by enumeration.
pub fn sylvester_gauss_equivalence(pair: PrimePair) -> Result<IdentityReport> {
    let (p, q) = (pair.p, pair.q);
    let n0 = ExactInt::from(nonrepresentable_set(p, q)?.len());
    let t1 = eisenstein(p, q)?;
    let t2 = eisenstein(q, p)?;
    let lhs = &n0 + ExactInt::from(2u32) * (&t1 + &t2);
    Ok(IdentityReport::new("equivalence", lhs, ExactInt::from((p - 1) * (q - 1)))
        .with("p", p)
        .with("q", q)
        .with("N0", n0)
        .with("t1", t1)
        .with("t2", t2))
}

/// Sylvester: the number of positive integers with no representation
/// `px + qy` is `(p-1)(q-1)/2`. Only coprimality is needed.
pub fn sylvester_report(p: u64, q: u64) -> Result<IdentityReport> {
    let n0 = nonrepresentable_set(p, q)?.len();
    let rhs = crate::linear2::nonrepresentable_count(p, q)?;
    Ok(IdentityReport::new("sylvester", ExactInt::from(n0), rhs)
        .with("p", p)
        .with("q", q))
}

fn split_target(p: u64, q: u64) -> u64 {
    p * half(q) + q * half(p)
}

/// Solutions of `px + qy + z = p(q-1)/2 + q(p-1)/2`, which equals
/// `p(q-1)/2 + q(p-1)/2 + 1 - N0`.
pub fn lemma6_count(pair: PrimePair) -> Result<ExactInt> {
    let (p, q) = (pair.p, pair.q);
    let m = split_target(p, q);
    let n0 = nonrepresentable_set(p, q)?.len() as u64;
    let formula = ExactInt::from(m + 1 - n0);
    let direct = count3_closed(p, q, 1u32, m)?.count;
    if direct != formula {
        return Err(Error::internal(format!(
            "({p},{q}): direct count {direct} != m + 1 - N0 = {formula}"
        )));
    }
    Ok(formula)
}

/// The same count as [`lemma6_count`] by the four-case split:
/// `2(N(p,q) + N(q,p)) - ((p+1)/2 + (q+1)/2 + 1)`.
pub fn lemma7_count(pair: PrimePair) -> Result<ExactInt> {
    let (p, q) = (pair.p, pair.q);
    let sum = npq_count(p, q)? + npq_count(q, p)?;
    Ok(ExactInt::from(2u32) * sum - ExactInt::from(p.div_ceil(2) + q.div_ceil(2) + 1))
}

/// Both counts of `px + qy + z = p(q-1)/2 + q(p-1)/2` against the closed form.
pub fn split_count_report(pair: PrimePair) -> Result<IdentityReport> {
    let (p, q) = (pair.p, pair.q);
    let six = lemma6_count(pair)?;
    let seven = lemma7_count(pair)?;
    Ok(IdentityReport::new("split-count", six.clone(), seven)
        .with("p", p)
        .with("q", q)
        .with("target", split_target(p, q))
        .with("count", six))
}

/// `N(p, q) - t(p, q) = (p+1)/2`, and the Legendre symbol read off the
/// shifted count agrees with Euler's criterion.
pub fn npq_constant_report(pair: PrimePair) -> Result<IdentityReport> {
    let (p, q) = (pair.p, pair.q);
    let npq = npq_count(p, q)?;
    let t = eisenstein(p, q)?;
    let exponent = &npq - ExactInt::from(p.div_ceil(2));
    let euler = legendre_euler(q, p)?;
    let mut report = IdentityReport::new("npq-constant", &npq - &t, ExactInt::from(p.div_ceil(2)))
        .with("p", p)
        .with("q", q)
        .with("Npq", npq)
        .with("t", t)
        .with("legendre", euler);
    report.holds = report.holds && parity_sign(&exponent) == euler;
    Ok(report)
}

/// `N(p, q)` by direct counting against the alternate formula, for `q < p`.
pub fn npq_closed_report(pair: PrimePair) -> Result<IdentityReport> {
    let (p, q) = (pair.p, pair.q);
    Ok(IdentityReport::new("npq-closed", npq_count(p, q)?, lemma8_count(p, q)?)
        .with("p", p)
        .with("q", q))
}

/// Floor-sum symbol against Euler's criterion.
pub fn legendre_report(pair: PrimePair) -> Result<IdentityReport> {
    let (p, q) = (pair.p, pair.q);
    let t = eisenstein(p, q)?;
    let via_sum = parity_sign(&t);
    let via_euler = legendre_euler(q, p)?;
    Ok(IdentityReport::new("legendre", ExactInt::from(via_sum), ExactInt::from(via_euler))
        .with("p", p)
        .with("q", q)
        .with("t", t))
}

/// For `p < q`, with `F = floor((q-p)/(2p))` and `h = (q-1)/2`:
/// `sum_{i=h-F}^{h} floor(ip/q) = ((p-1)/2)(F+1)`.
pub fn byproduct_sum(pair: PrimePair) -> Result<IdentityReport> {
    let (p, q) = (pair.p, pair.q);
    if p >= q {
        return Err(Error::invalid(format!("need p < q, got p={p}, q={q}")));
    }
    let f = (q - p) / (2 * p);
    let h = half(q);
    let lower = h - f;
    let upper_sum = floor_sum_fast(&FloorSumQuery::new(h, p, q)?)?;
    let below = floor_sum_fast(&FloorSumQuery::new(lower - 1, p, q)?)?;
    Ok(IdentityReport::new("byproduct", upper_sum - below, ExactInt::from(half(p) * (f + 1)))
        .with("p", p)
        .with("q", q)
        .with("F", f)
        .with("from", lower)
        .with("to", h))
}

/// Parity statement for `px + qy + z = k` with
/// `k = (p-1)/2 + p((q-1)/2)·p⁻¹` (`p⁻¹` modulo `q`). `lhs` and `rhs` are
/// the parities of the count and of
/// `(k+1)(k+p+q)/2 + ((q²-1)/8)(1+p⁻¹) + (p-1)(q-1)/4`.
pub fn parity_theorem(pair: PrimePair) -> Result<IdentityReport> {
    let (p, q) = pair.big();
    let pinv = arith::mod_inverse(&p, &q)?;
    let k = ExactInt::from(half(pair.p)) + &p * ExactInt::from(half(pair.q)) * &pinv;
    let count = count3_closed(p.clone(), q.clone(), 1u32, k.clone())?.count;
    let two = ExactInt::from(2u32);
    let product = arith::exact_div(&((&k + 1u32) * (&k + &p + &q)), &two, "(k+1)(k+p+q)/2")?;
    let gauss_term = arith::exact_div(&(&q * &q - 1u32), &ExactInt::from(8u32), "(q^2-1)/8")?;
    let formula = product
        + gauss_term * (&pinv + 1u32)
        + ExactInt::from((pair.p - 1) * (pair.q - 1) / 4);
    Ok(IdentityReport::new("parity", count.mod_floor(&two), formula.mod_floor(&two))
        .with("p", pair.p)
        .with("q", pair.q)
        .with("k", k)
        .with("pinv", pinv)
        .with("count", count)
        .with("formula", formula))
}

/// Identities that can be swept over pairs below a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    Gauss,
    Sylvester,
    Equivalence,
    Legendre,
    NpqConstant,
    SplitCount,
    NpqClosed,
    Byproduct,
    Parity,
}

impl Identity {
    pub const ALL: [Identity; 9] = [
        Identity::Gauss,
        Identity::Sylvester,
        Identity::Equivalence,
        Identity::Legendre,
        Identity::NpqConstant,
        Identity::SplitCount,
        Identity::NpqClosed,
        Identity::Byproduct,
        Identity::Parity,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Identity::Gauss => "gauss",
            Identity::Sylvester => "sylvester",
            Identity::Equivalence => "equivalence",
            Identity::Legendre => "legendre",
            Identity::NpqConstant => "npq-constant",
            Identity::SplitCount => "split-count",
            Identity::NpqClosed => "npq-closed",
            Identity::Byproduct => "byproduct",
            Identity::Parity => "parity",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Identity::ALL.into_iter().find(|i| i.name() == name)
    }

    /// Parameter pairs covered by a sweep with bound `limit` (exclusive).
    pub fn pairs(&self, limit: u64) -> Vec<(u64, u64)> {
        if let Identity::Sylvester = self {
            let mut out = Vec::new();
            for p in 2..limit {
                for q in p + 1..limit {
                    if p.gcd(&q) == 1 {
                        out.push((p, q));
                    }
                }
            }
            return out;
        }
        let primes = odd_primes_below(limit);
        let mut out = Vec::new();
        for &p in &primes {
            for &q in &primes {
                let keep = match self {
                    Identity::Byproduct => p < q,
                    Identity::NpqClosed => q < p,
                    _ => p != q,
                };
                if keep {
                    out.push((p, q));
                }
            }
        }
        out
    }

    pub fn check(&self, p: u64, q: u64) -> Result<IdentityReport> {
        if let Identity::Sylvester = self {
            return sylvester_report(p, q);
        }
        let pair = PrimePair::new(p, q)?;
        match self {
            Identity::Gauss => gauss_identity(pair),
            Identity::Equivalence => sylvester_gauss_equivalence(pair),
            Identity::Legendre => legendre_report(pair),
            Identity::NpqConstant => npq_constant_report(pair),
            Identity::SplitCount => split_count_report(pair),
            Identity::NpqClosed => npq_closed_report(pair),
            Identity::Byproduct => byproduct_sum(pair),
            Identity::Parity => parity_theorem(pair),
            Identity::Sylvester => unreachable!(),
        }
    }
}

/// Result of checking one identity over every pair below a bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub pairs: Vec<IdentityReport>,
    #[serde(with = "decimal")]
    pub failures: ExactInt,
}

impl SweepReport {
    pub fn all_hold(&self) -> bool {
        self.failures.is_zero()
    }
}

pub fn sweep(identity: Identity, limit: u64) -> Result<SweepReport> {
    let pairs = identity
        .pairs(limit)
        .into_iter()
        .map(|(p, q)| identity.check(p, q))
        .collect::<Result<Vec<_>>>()?;
    let failures = pairs.iter().filter(|r| !r.holds).count();
    Ok(SweepReport {
        pairs,
        failures: ExactInt::from(failures),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    fn pair(p: u64, q: u64) -> PrimePair {
        PrimePair::new(p, q).unwrap()
    }

    fn enumerate(p: u64, q: u64, n: u64) -> u64 {
        let mut count = 0;
        for x in 0..=n / p {
            count += (n - p * x) / q + 1;
        }
        count
    }

    #[test]
    fn pair_validation() {
        assert!(PrimePair::new(3, 3).is_err());
        assert!(PrimePair::new(2, 3).is_err());
        assert!(PrimePair::new(9, 5).is_err());
        assert!(PrimePair::new(7, 1).is_err());
        assert_eq!(pair(3, 5).swapped(), pair(5, 3));
    }

    #[test]
    fn eisenstein_examples() {
        assert_eq!(eisenstein_t(3, 5).unwrap(), big(1));
        assert_eq!(eisenstein_t(7, 3).unwrap(), big(1));
        assert_eq!(eisenstein_t(11, 5).unwrap(), big(4));
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(3, 7).unwrap(), -1);
        assert_eq!(legendre(5, 11).unwrap(), 1);
        assert_eq!(legendre(5, 3).unwrap(), -1);
        assert_eq!(legendre(3, 5).unwrap(), -1);
        assert_eq!(legendre_euler(3, 7).unwrap(), -1);
        assert_eq!(legendre_euler(4, 7).unwrap(), 1);
        assert_eq!(legendre_euler(5, 11).unwrap(), 1);
        assert!(legendre(7, 7).is_err());
        assert!(legendre_euler(14, 7).is_err());
    }

    #[test]
    fn npq_closed_form_examples() {
        assert_eq!(npq_count(3, 5).unwrap(), big(3));
        assert_eq!(npq_count(5, 3).unwrap(), big(4));
        assert_eq!(lemma8_count(5, 3).unwrap(), big(4));
        assert_eq!(lemma8_count(7, 3).unwrap(), big(5));
        assert_eq!(npq_count(7, 3).unwrap(), big(5));
        assert_eq!(lemma8_count(7, 5).unwrap(), big(7));
        assert_eq!(npq_count(7, 5).unwrap(), big(enumerate(7, 5, 15) as i64));
        assert!(lemma8_count(3, 5).is_err());
    }

    #[test]
    fn gauss_and_equivalence_examples() {
        let r = gauss_identity(pair(3, 5)).unwrap();
        assert!(r.holds);
        assert_eq!(r.rhs, big(2));
        let r = gauss_identity(pair(3, 7)).unwrap();
        assert_eq!((r.context["t1"].clone(), r.context["t2"].clone(), r.rhs.clone()), (big(2), big(1), big(3)));
        let r = sylvester_gauss_equivalence(pair(3, 5)).unwrap();
        assert_eq!((r.context["N0"].clone(), r.lhs.clone(), r.rhs.clone()), (big(4), big(8), big(8)));
        let r = sylvester_gauss_equivalence(pair(3, 7)).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (big(12), big(12)));
        let r = sylvester_gauss_equivalence(pair(5, 7)).unwrap();
        assert_eq!(r.context["N0"], big(12));
        assert_eq!(&r.context["t1"] + &r.context["t2"], big(6));
        assert!(r.holds);
    }

    #[test]
    fn split_count_examples() {
        // 3x + 5y + z = 11
        assert_eq!(lemma6_count(pair(3, 5)).unwrap(), big(8));
        assert_eq!(enumerate(3, 5, 11), 8);
        assert_eq!(lemma7_count(pair(3, 5)).unwrap(), big(8));
        // 3x + 7y + z = 16
        assert_eq!(lemma6_count(pair(3, 7)).unwrap(), big(11));
        assert_eq!(lemma7_count(pair(3, 7)).unwrap(), big(11));
        assert_eq!(npq_count(3, 7).unwrap(), big(4));
        assert_eq!(lemma7_count(pair(7, 3)).unwrap(), lemma7_count(pair(3, 7)).unwrap());
    }

    #[test]
    fn byproduct_examples() {
        let r = byproduct_sum(pair(23, 739)).unwrap();
        assert_eq!(r.context["F"], big(15));
        assert_eq!(r.context["from"], big(354));
        assert_eq!(r.context["to"], big(369));
        assert_eq!(r.lhs, big(176));
        assert!(r.holds);
        let direct: u64 = (354..=369u64).map(|i| 23 * i / 739).sum();
        assert_eq!(direct, 176);
        assert_eq!(byproduct_sum(pair(3, 5)).unwrap().lhs, big(1));
        assert_eq!(byproduct_sum(pair(3, 7)).unwrap().lhs, big(1));
        assert!(byproduct_sum(pair(7, 3)).is_err());
    }

    #[test]
    fn parity_examples() {
        let r = parity_theorem(pair(3, 5)).unwrap();
        assert_eq!(r.context["k"], big(13));
        assert_eq!(r.context["count"], big(10));
        assert_eq!(r.context["formula"], big(158));
        assert!(r.holds);
        let r = parity_theorem(pair(5, 3)).unwrap();
        assert_eq!(r.context["k"], big(12));
        assert_eq!(r.context["count"], big(9));
        assert_eq!(r.context["formula"], big(135));
        assert!(r.holds);
        assert!(parity_theorem(pair(3, 7)).unwrap().holds);
    }

    #[test]
    fn parity_statement_has_counterexamples() {
        // 3x + 13y + z = 163 has 377 solutions; the formula gives 14894.
        let r = parity_theorem(pair(3, 13)).unwrap();
        assert_eq!(r.context["k"], big(163));
        assert_eq!(r.context["count"], big(enumerate(3, 13, 163) as i64));
        assert_eq!(r.context["count"], big(377));
        assert_eq!(r.context["formula"], big(14894));
        assert!(!r.holds);
    }

    #[test]
    fn multiplicativity_spot_check() {
        let primes = odd_primes_below(60);
        let mut checked = 0;
        for &p in &primes {
            for &q in &primes {
                for &q2 in &primes {
                    let prod = q * q2 % p;
                    if q == p || q2 == p || prod == p || prod == 2 || !arith::is_prime(prod) {
                        continue;
                    }
                    let lhs = legendre(q, p).unwrap() * legendre(q2, p).unwrap();
                    assert_eq!(lhs, legendre(prod, p).unwrap(), "({q}*{q2} / {p})");
                    checked += 1;
                }
            }
        }
        assert!(checked > 100);
    }

    #[test]
    fn small_sweeps_hold() {
        for identity in Identity::ALL {
            if identity == Identity::Parity {
                continue;
            }
            let report = sweep(identity, 30).unwrap();
            let bad: Vec<_> = report.pairs.iter().filter(|r| !r.holds).collect();
            assert!(report.all_hold(), "{}: {:?}", identity.name(), bad.first());
            assert!(!report.pairs.is_empty());
        }
        assert!(sweep(Identity::Gauss, 3).unwrap().pairs.is_empty());
    }
}
