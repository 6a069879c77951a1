//! Sums of the form `S(b, c, a) = sum_{i=1}^{b} floor(i*c / a)`.
//!
//! Three evaluators live here:
//!
//! * [`floor_sum_naive`] iterates term by term and is the ground-truth oracle.
//! * [`floor_sum_fast`] uses the reciprocity identity
//!   `S(b, c, a) + S(K, a, c) = b*K` with `K = floor(b*c / a)`, followed by a
//!   division step `a = q*c + r` that turns `S(K, a, c)` into
//!   `q*K*(K+1)/2 + S(K, r, c)`. Each reciprocity/division round is one
//!   Euclid step on `(a, c)`, so the recursion is logarithmic.
//! * [`floor_sum_euclid`] is an independent Euclid-like evaluator that needs
//!   no coprimality and shares no code with the reciprocity path.
//!
//! [`floor_sum_trace`] runs the reciprocity path and records every step.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, ExactInt};
use crate::error::{Error, Result};
use crate::report::{decimal, IdentityReport};

/// The sum `sum_{i=1}^{b} floor(i*c / a)` with `a >= 1` and `b, c >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FloorSumQuery {
    #[serde(with = "decimal")]
    pub b: ExactInt,
    #[serde(with = "decimal")]
    pub c: ExactInt,
    #[serde(with = "decimal")]
    pub a: ExactInt,
}

impl FloorSumQuery {
    pub fn new(b: impl Into<ExactInt>, c: impl Into<ExactInt>, a: impl Into<ExactInt>) -> Result<Self> {
        let (b, c, a) = (b.into(), c.into(), a.into());
        if a < ExactInt::one() {
            return Err(Error::invalid(format!("floor-sum denominator must be >= 1, got {a}")));
        }
        if b.is_negative() || c.is_negative() {
            return Err(Error::invalid(format!(
                "floor-sum limit and numerator must be >= 0, got b={b}, c={c}"
            )));
        }
        Ok(FloorSumQuery { b, c, a })
    }

    /// Whether the query satisfies the reciprocity hypotheses
    /// `b < a`, `c < a`, `gcd(a, c) = 1`.
    pub fn is_reduced(&self) -> bool {
        self.b < self.a && self.c < self.a && arith::is_coprime(&self.a, &self.c)
    }
}

impl fmt::Display for FloorSumQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sum_{{i=1}}^{{{}}} floor({}i/{})", self.b, self.c, self.a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    /// Reciprocity: `S(b, c, a) = b*K - S(K, a, c)`; `param` is `K`.
    Recip,
    /// Division: `S(K, q*c + r, c) = q*K*(K+1)/2 + S(K, r, c)`; `param` is `q`.
    Div,
    /// Whole periods split off when `b >= a`; `param` is the number of periods.
    Period,
}

/// One recorded rewrite. `sign` is the sign with which `constant` enters the
/// total, so replay is `sum(sign * constant) + terminal_sign * terminal_value`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub kind: StepKind,
    #[serde(with = "decimal")]
    pub param: ExactInt,
    #[serde(with = "decimal")]
    pub constant: ExactInt,
    pub sign: i8,
    /// The query left to evaluate after this step.
    pub next: FloorSumQuery,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            StepKind::Recip => write!(f, "RECIP K={} const={}", self.param, self.constant),
            StepKind::Div => write!(f, "DIV q={} const={}", self.param, self.constant),
            StepKind::Period => write!(f, "PERIOD m={} const={}", self.param, self.constant),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FloorSumTrace {
    pub query: FloorSumQuery,
    pub steps: Vec<TraceStep>,
    /// Query whose value is taken directly once the recursion stops.
    pub terminal: FloorSumQuery,
    pub terminal_sign: i8,
    #[serde(with = "decimal")]
    pub terminal_value: ExactInt,
    #[serde(with = "decimal")]
    pub value: ExactInt,
}

impl FloorSumTrace {
    /// Number of rounds: each reciprocity step together with the division
    /// that follows it counts once, as does each preliminary reduction of
    /// the numerator or the summation limit.
    pub fn step_count(&self) -> usize {
        count_rounds(&self.steps)
    }

    /// Recompute the total from the recorded constants and the terminal value.
    pub fn replay(&self) -> ExactInt {
        let mut total = signed(&self.terminal_value, self.terminal_sign);
        for s in &self.steps {
            total += signed(&s.constant, s.sign);
        }
        total
    }

    /// Plain-text rendering: one line per step, then `BASE value=<total>`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            out.push_str(&s.to_string());
            out.push('\n');
        }
        out.push_str(&format!("BASE value={}\n", self.value));
        out
    }
}

fn count_rounds(steps: &[TraceStep]) -> usize {
    let mut rounds = 0;
    let mut after_recip = false;
    for s in steps {
        match s.kind {
            StepKind::Recip => rounds += 1,
            StepKind::Div if after_recip => {}
            StepKind::Div | StepKind::Period => rounds += 1,
        }
        after_recip = s.kind == StepKind::Recip;
    }
    rounds
}

fn signed(v: &ExactInt, sign: i8) -> ExactInt {
    if sign < 0 {
        -v
    } else {
        v.clone()
    }
}

/// Upper bound on [`FloorSumTrace::step_count`]: `2*ceil(log2(max(a, c))) + 4`.
pub fn step_bound(a: &ExactInt, c: &ExactInt) -> u64 {
    let m = std::cmp::max(a, c);
    let ceil_log2 = if m <= &ExactInt::one() {
        0
    } else {
        (m - 1u32).bits()
    };
    2 * ceil_log2 + 4
}

/// Term-by-term evaluation.
pub fn floor_sum_naive(q: &FloorSumQuery) -> ExactInt {
    let mut total = ExactInt::zero();
    let mut num = ExactInt::zero();
    let mut i = ExactInt::zero();
    while i < q.b {
        i += 1u32;
        num += &q.c;
        total += num.div_floor(&q.a);
    }
    total
}

/// Reciprocity-based evaluation; exact for every valid query.
pub fn floor_sum_fast(q: &FloorSumQuery) -> Result<ExactInt> {
    Ok(evaluate(q, None)?.value)
}

/// Same as [`floor_sum_fast`] but also returns the number of rounds used.
pub fn floor_sum_fast_counted(q: &FloorSumQuery) -> Result<(ExactInt, usize)> {
    let out = evaluate(q, None)?;
    Ok((out.value, out.rounds))
}

pub fn floor_sum_trace(q: &FloorSumQuery) -> Result<FloorSumTrace> {
    let mut steps = Vec::new();
    let out = evaluate(q, Some(&mut steps))?;
    Ok(FloorSumTrace {
        query: q.clone(),
        steps,
        terminal: out.terminal,
        terminal_sign: out.terminal_sign,
        terminal_value: out.terminal_value,
        value: out.value,
    })
}

struct Outcome {
    value: ExactInt,
    rounds: usize,
    terminal: FloorSumQuery,
    terminal_sign: i8,
    terminal_value: ExactInt,
}

struct Recorder<'a> {
    steps: Option<&'a mut Vec<TraceStep>>,
    rounds: usize,
    last: Option<StepKind>,
    total: ExactInt,
}

impl Recorder<'_> {
    fn push(&mut self, kind: StepKind, param: ExactInt, constant: ExactInt, sign: i8, next: [&ExactInt; 3]) {
        if sign < 0 {
            self.total -= &constant;
        } else {
            self.total += &constant;
        }
        if kind != StepKind::Div || self.last != Some(StepKind::Recip) {
            self.rounds += 1;
        }
        self.last = Some(kind);
        if let Some(steps) = self.steps.as_deref_mut() {
            steps.push(TraceStep {
                kind,
                param,
                constant,
                sign,
                next: FloorSumQuery {
                    b: next[0].clone(),
                    c: next[1].clone(),
                    a: next[2].clone(),
                },
            });
        }
    }
}

fn triangular(k: &ExactInt) -> ExactInt {
    (k * (k + 1u32)) >> 1
}

fn evaluate(query: &FloorSumQuery, steps: Option<&mut Vec<TraceStep>>) -> Result<Outcome> {
    let mut rec = Recorder {
        steps,
        rounds: 0,
        last: None,
        total: ExactInt::zero(),
    };
    let (mut b, mut c, mut a) = (query.b.clone(), query.c.clone(), query.a.clone());
    if a.is_zero() {
        return Err(Error::invalid("floor-sum denominator is zero"));
    }
    let finish = |rec: Recorder<'_>, b: ExactInt, c: ExactInt, a: ExactInt, sign: i8, value: ExactInt| {
        let mut total = rec.total;
        if sign < 0 {
            total -= &value;
        } else {
            total += &value;
        }
        Outcome {
            value: total,
            rounds: rec.rounds,
            terminal: FloorSumQuery { b, c, a },
            terminal_sign: sign,
            terminal_value: value,
        }
    };
    if b.is_zero() || c.is_zero() {
        return Ok(finish(rec, b, c, a, 1, ExactInt::zero()));
    }

    // floor(i*c/a) is unchanged when c and a share a factor.
    let g = arith::gcd(&a, &c);
    if !g.is_one() {
        a /= &g;
        c /= &g;
    }

    if c >= a {
        let (q, r) = c.div_rem(&a);
        let constant = &q * triangular(&b);
        c = r;
        rec.push(StepKind::Div, q, constant, 1, [&b, &c, &a]);
        if c.is_zero() {
            return Ok(finish(rec, b, c, a, 1, ExactInt::zero()));
        }
    }

    if b >= a {
        // i = j*a + t: floor(i*c/a) = j*c + floor(t*c/a). A full period
        // t = 1..a contributes c + (a-1)(c-1)/2 since gcd(a, c) = 1.
        let (m, s) = b.div_rem(&a);
        let period = &c + (((&a - 1u32) * (&c - 1u32)) >> 1);
        let constant = &a * &c * ((&m * (&m - 1u32)) >> 1) + &m * period + &s * &m * &c;
        b = s;
        rec.push(StepKind::Period, m, constant, 1, [&b, &c, &a]);
    }

    if !arith::is_coprime(&a, &c) {
        return Err(Error::internal(format!(
            "reciprocity core reached with gcd({a}, {c}) != 1"
        )));
    }

    let mut sign: i8 = 1;
    loop {
        if b.is_zero() || c.is_zero() {
            return Ok(finish(rec, b, c, a, sign, ExactInt::zero()));
        }
        let k = (&b * &c) / &a;
        if k.is_zero() {
            return Ok(finish(rec, b, c, a, sign, ExactInt::zero()));
        }
        let constant = &b * &k;
        rec.push(StepKind::Recip, k.clone(), constant, sign, [&k, &a, &c]);
        sign = -sign;
        // Now evaluating S(k, a, c) with a > c.
        if k.is_one() {
            let value = &a / &c;
            return Ok(finish(rec, k, a, c, sign, value));
        }
        let (q, r) = a.div_rem(&c);
        let constant = &q * triangular(&k);
        rec.push(StepKind::Div, q, constant, sign, [&k, &r, &c]);
        b = k;
        a = std::mem::replace(&mut c, r);
    }
}

/// Independent Euclid-like evaluator of `sum_{i=0}^{n-1} floor((m_num*i + offset) / den)`.
fn euclid_sum(mut n: ExactInt, mut den: ExactInt, mut m_num: ExactInt, mut offset: ExactInt) -> ExactInt {
    let mut ans = ExactInt::zero();
    loop {
        if m_num >= den {
            let (q, r) = m_num.div_rem(&den);
            ans += ((&n * (&n - 1u32)) >> 1) * q;
            m_num = r;
        }
        if offset >= den {
            let (q, r) = offset.div_rem(&den);
            ans += &n * q;
            offset = r;
        }
        let y_max = &m_num * &n + &offset;
        if y_max < den {
            break;
        }
        let (nn, off) = y_max.div_rem(&den);
        n = nn;
        offset = off;
        std::mem::swap(&mut den, &mut m_num);
    }
    ans
}

/// Generic evaluator with no coprimality or size restrictions.
pub fn floor_sum_euclid(q: &FloorSumQuery) -> ExactInt {
    euclid_sum(&q.b + 1u32, q.a.clone(), q.c.clone(), ExactInt::zero())
}

/// Evaluates both sides of `S(b, c, a) + S(K, a, c) = b*K` term by term.
pub fn lemma4_check(
    a: impl Into<ExactInt>,
    b: impl Into<ExactInt>,
    c: impl Into<ExactInt>,
) -> Result<IdentityReport> {
    let (a, b, c) = (a.into(), b.into(), c.into());
    if a < ExactInt::one() || b.is_negative() || c.is_negative() {
        return Err(Error::invalid("need a >= 1 and b, c >= 0"));
    }
    if b >= a || c >= a {
        return Err(Error::invalid(format!("need b < a and c < a, got a={a}, b={b}, c={c}")));
    }
    if !arith::is_coprime(&a, &c) {
        return Err(Error::invalid(format!("gcd({a}, {c}) != 1")));
    }
    let k = (&b * &c) / &a;
    let first = floor_sum_naive(&FloorSumQuery { b: b.clone(), c: c.clone(), a: a.clone() });
    let second = if k.is_zero() {
        ExactInt::zero()
    } else {
        floor_sum_naive(&FloorSumQuery { b: k.clone(), c: a.clone(), a: c.clone() })
    };
    Ok(IdentityReport::new("reciprocity", &first + &second, &b * &k)
        .with("a", a)
        .with("b", b)
        .with("c", c)
        .with("K", k)
        .with("s1", first)
        .with("s2", second))
}
