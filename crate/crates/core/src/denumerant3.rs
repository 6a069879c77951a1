//! Closed-form count of non-negative solutions of `ax + by + cz = n`.
//!
//! For pairwise-coprime `a, b, c` the count is
//!
//! ```text
//! N1/(2abc) + S(b1'-1, c1', a) + S(c2'-1, a2', b) + S(a3'-1, b3', c) - 2
//! ```
//!
//! where `S(m, k, d) = sum_{i=1}^{m} floor(i*k/d)` and the primed symbols are
//! one-based residues (see [`TheoremSymbols`]). Arbitrary instances go through
//! [`crate::reduction`] first.
//!
//! Two oracles back the closed form: a double loop over `z` and `y`
//! ([`count3_oracle_enum`]) and the coefficient of `x^n` in
//! `1/((1-x^a)(1-x^b)(1-x^c))` ([`count3_oracle_dp`]).

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, ExactInt};
use crate::error::{Error, Result};
use crate::floor_sum::{self, FloorSumQuery};
use crate::reduction::{self, Instance3, ReductionWitness};
use crate::report::{decimal, decimal_vec};

/// Largest `n` the generating-function oracle will allocate for.
pub const DP_MAX_N: u64 = 100_000_000;

/// Default cap on oracle loop iterations.
pub const DEFAULT_ORACLE_BUDGET: u64 = 1_000_000_000;

/// The six one-based residues and `N1` for one pairwise-coprime instance.
///
/// * `b1p ≡ -n/b (mod a)`, `c1p ≡ b/c (mod a)`
/// * `c2p ≡ -n/c (mod b)`, `a2p ≡ c/a (mod b)`
/// * `a3p ≡ -n/a (mod c)`, `b3p ≡ a/b (mod c)`
///
/// each taken in `[1, modulus]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremSymbols {
    #[serde(with = "decimal")]
    pub b1p: ExactInt,
    #[serde(with = "decimal")]
    pub c1p: ExactInt,
    #[serde(with = "decimal")]
    pub c2p: ExactInt,
    #[serde(with = "decimal")]
    pub a2p: ExactInt,
    #[serde(with = "decimal")]
    pub a3p: ExactInt,
    #[serde(with = "decimal")]
    pub b3p: ExactInt,
    #[serde(rename = "N1", with = "decimal")]
    pub n1: ExactInt,
}

impl TheoremSymbols {
    /// The three floor-sum queries of the closed form, in order.
    pub fn queries(&self, a: &ExactInt, b: &ExactInt, c: &ExactInt) -> [FloorSumQuery; 3] {
        [
            FloorSumQuery {
                b: &self.b1p - 1u32,
                c: self.c1p.clone(),
                a: a.clone(),
            },
            FloorSumQuery {
                b: &self.c2p - 1u32,
                c: self.a2p.clone(),
                a: b.clone(),
            },
            FloorSumQuery {
                b: &self.a3p - 1u32,
                c: self.b3p.clone(),
                a: c.clone(),
            },
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountResult {
    #[serde(with = "decimal")]
    pub a: ExactInt,
    #[serde(with = "decimal")]
    pub b: ExactInt,
    #[serde(with = "decimal")]
    pub c: ExactInt,
    #[serde(with = "decimal")]
    pub n: ExactInt,
    #[serde(with = "decimal")]
    pub count: ExactInt,
    pub witness: Option<ReductionWitness>,
    pub symbols: Option<TheoremSymbols>,
    #[serde(with = "decimal_vec")]
    pub floor_sums: Vec<ExactInt>,
    /// Reciprocity rounds spent on each floor sum.
    pub floor_sum_steps: Vec<usize>,
}

impl CountResult {
    fn trivial(inst: &Instance3, count: ExactInt, witness: Option<ReductionWitness>) -> Self {
        CountResult {
            a: inst.a.clone(),
            b: inst.b.clone(),
            c: inst.c.clone(),
            n: inst.n.clone(),
            count,
            witness,
            symbols: None,
            floor_sums: Vec::new(),
            floor_sum_steps: Vec::new(),
        }
    }
}

pub fn theorem_symbols(
    a: impl Into<ExactInt>,
    b: impl Into<ExactInt>,
    c: impl Into<ExactInt>,
    n: impl Into<ExactInt>,
) -> Result<TheoremSymbols> {
    let inst = Instance3::new(a, b, c, n)?;
    symbols_for(&inst)
}

fn symbols_for(inst: &Instance3) -> Result<TheoremSymbols> {
    if !inst.is_pairwise_coprime() {
        return Err(Error::invalid(format!(
            "({}, {}, {}) are not pairwise coprime",
            inst.a, inst.b, inst.c
        )));
    }
    let Instance3 { a, b, c, n } = inst;
    let inv = |x: &ExactInt, m: &ExactInt| arith::mod_inverse(x, m);
    let res = |v: ExactInt, m: &ExactInt| arith::residue_one_based(&v, m);

    let b1p = res(-(n * inv(b, a)?), a)?;
    let c1p = res(b * inv(c, a)?, a)?;
    let c2p = res(-(n * inv(c, b)?), b)?;
    let a2p = res(c * inv(a, b)?, b)?;
    let a3p = res(-(n * inv(a, c)?), c)?;
    let b3p = res(a * inv(b, c)?, c)?;

    let n1 = n * (n + a + b + c)
        + c * b * &b1p * (a + 1u32 - &c1p * (&b1p - 1u32))
        + a * c * &c2p * (b + 1u32 - &a2p * (&c2p - 1u32))
        + b * a * &a3p * (c + 1u32 - &b3p * (&a3p - 1u32));

    Ok(TheoremSymbols {
        b1p,
        c1p,
        c2p,
        a2p,
        a3p,
        b3p,
        n1,
    })
}

/// Closed-form count for a pairwise-coprime instance.
pub fn count3_closed(
    a: impl Into<ExactInt>,
    b: impl Into<ExactInt>,
    c: impl Into<ExactInt>,
    n: impl Into<ExactInt>,
) -> Result<CountResult> {
    let inst = Instance3::new(a, b, c, n)?;
    closed_for(&inst)
}

fn closed_for(inst: &Instance3) -> Result<CountResult> {
    let symbols = symbols_for(inst)?;
    let mut floor_sums = Vec::with_capacity(3);
    let mut floor_sum_steps = Vec::with_capacity(3);
    for q in symbols.queries(&inst.a, &inst.b, &inst.c) {
        let (v, rounds) = floor_sum::floor_sum_fast_counted(&q)?;
        floor_sums.push(v);
        floor_sum_steps.push(rounds);
    }
    let denom = ExactInt::from(2u32) * &inst.a * &inst.b * &inst.c;
    let main = arith::exact_div(&symbols.n1, &denom, "N1 / (2abc)")?;
    let count = main + floor_sums.iter().sum::<ExactInt>() - 2u32;
    if count.is_negative() {
        return Err(Error::internal(format!(
            "closed form produced a negative count {count} for {inst:?}"
        )));
    }
    Ok(CountResult {
        a: inst.a.clone(),
        b: inst.b.clone(),
        c: inst.c.clone(),
        n: inst.n.clone(),
        count,
        witness: None,
        symbols: Some(symbols),
        floor_sums,
        floor_sum_steps,
    })
}

/// Count for any positive coefficients: gcd normalization, pairwise-coprime
/// reduction, then the closed form on the reduced instance.
pub fn count3(
    a: impl Into<ExactInt>,
    b: impl Into<ExactInt>,
    c: impl Into<ExactInt>,
    n: impl Into<ExactInt>,
) -> Result<CountResult> {
    let inst = Instance3::new(a, b, c, n)?;
    let Some(witness) = reduction::reduce(&inst)? else {
        return Ok(CountResult::trivial(&inst, ExactInt::zero(), None));
    };
    if !witness.n_nonneg {
        return Ok(CountResult::trivial(&inst, ExactInt::zero(), Some(witness)));
    }
    let reduced = closed_for(&witness.reduced)?;
    Ok(CountResult {
        a: inst.a,
        b: inst.b,
        c: inst.c,
        n: inst.n,
        witness: Some(witness),
        ..reduced
    })
}

fn sorted_desc(a: u64, b: u64, c: u64) -> [u64; 3] {
    let mut v = [a, b, c];
    v.sort_unstable_by(|x, y| y.cmp(x));
    v
}

/// Upper bound on the iterations [`count3_oracle_enum`] performs.
pub fn enum_iterations(a: u64, b: u64, c: u64, n: u64) -> u128 {
    let [hi, mid, _] = sorted_desc(a, b, c);
    (n / hi + 1) as u128 * (n / mid + 1) as u128
}

/// Brute-force count: loop over the two largest coefficients and test
/// whether the remainder is divisible by the smallest.
pub fn count3_oracle_enum(a: u64, b: u64, c: u64, n: u64) -> ExactInt {
    let [hi, mid, lo] = sorted_desc(a, b, c);
    let mut count = 0u64;
    let mut rest_z = n;
    loop {
        let mut rest = rest_z;
        loop {
            if rest.is_multiple_of(lo) {
                count += 1;
            }
            if rest < mid {
                break;
            }
            rest -= mid;
        }
        if rest_z < hi {
            break;
        }
        rest_z -= hi;
    }
    ExactInt::from(count)
}

/// [`count3_oracle_enum`] with an iteration cap.
pub fn count3_oracle_enum_budgeted(a: u64, b: u64, c: u64, n: u64, budget: u64) -> Result<ExactInt> {
    check_coefficients(a, b, c)?;
    let iters = enum_iterations(a, b, c, n);
    if iters > budget as u128 {
        return Err(Error::ResourceLimit(format!(
            "enumeration needs ~{iters} iterations, budget is {budget}"
        )));
    }
    Ok(count3_oracle_enum(a, b, c, n))
}

fn check_coefficients(a: u64, b: u64, c: u64) -> Result<()> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::invalid("coefficients must be >= 1"));
    }
    Ok(())
}

/// Coefficients of `1/((1-x^a)(1-x^b)(1-x^c))` up to `x^max_n`.
///
/// Counts are bounded by `(n+1)(n+2)/2`, which stays below `2^64` for every
/// `n <= DP_MAX_N`; additions are checked regardless.
pub fn count3_dp_table(a: u64, b: u64, c: u64, max_n: u64) -> Result<Vec<u64>> {
    check_coefficients(a, b, c)?;
    if max_n > DP_MAX_N {
        return Err(Error::ResourceLimit(format!(
            "generating-function table of length {} exceeds the limit {DP_MAX_N}",
            max_n + 1
        )));
    }
    let len = max_n as usize + 1;
    let mut table = vec![0u64; len];
    table[0] = 1;
    for step in [a, b, c] {
        let step = step as usize;
        for i in step..len {
            table[i] = table[i]
                .checked_add(table[i - step])
                .ok_or_else(|| Error::internal("generating-function coefficient overflowed u64"))?;
        }
    }
    Ok(table)
}

/// Coefficient of `x^n` in `1/((1-x^a)(1-x^b)(1-x^c))`, in time linear in `n`.
pub fn count3_oracle_dp(a: u64, b: u64, c: u64, n: u64) -> Result<ExactInt> {
    let table = count3_dp_table(a, b, c, n)?;
    Ok(ExactInt::from(table[n as usize]))
}

/// Checks the exact-division sentinel `N1 + 2abc(sums - 2 - count) = 0`.
pub fn sentinel_holds(result: &CountResult, a: &ExactInt, b: &ExactInt, c: &ExactInt) -> bool {
    let Some(sym) = &result.symbols else {
        return true;
    };
    let sums: ExactInt = result.floor_sums.iter().sum();
    let two_abc = ExactInt::from(2u32) * a * b * c;
    (&sym.n1 + two_abc * (sums - 2u32 - &result.count)).is_zero()
}
