//! Command-line front end for the `denum` binary.
//!
//! Exit codes: 0 on success, 1 for invalid input, 2 when an internal
//! cross-check fails (oracle mismatch, inexact division, a failing identity).

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::arith::{self, ExactInt};
use crate::denumerant3::{self, CountResult, DEFAULT_ORACLE_BUDGET, DP_MAX_N};
use crate::error::Error;
use crate::floor_sum::{self, FloorSumQuery, FloorSumTrace, StepKind};
use crate::linear2;
use crate::reduction::{self, Instance3};
use crate::report::decimal;
use crate::residues::{self, Identity};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

/// Environment variable capping oracle loop iterations.
pub const BUDGET_ENV: &str = "DENUM_ORACLE_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "denum", about = "Exact solution counts for ax+by+cz=n and related identities")]
pub struct Cli {
    #[command(flatten)]
    pub flags: Flags,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Flags {
    /// Machine-readable output; integers are emitted as decimal strings.
    #[arg(long, global = true)]
    pub json: bool,
    /// Also run the matching brute-force oracle; a mismatch exits with status 2.
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Exclusive bound for identity sweeps.
    #[arg(long, global = true, default_value_t = 50)]
    pub limit: u64,
    /// Seed for randomized benchmark instances.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of non-negative solutions of ax + by + cz = n.
    Count3 { a: BigInt, b: BigInt, c: BigInt, n: BigInt },
    /// Number of non-negative solutions of ax + by = n.
    Count2 { a: BigInt, b: BigInt, n: BigInt },
    /// sum_{i=1}^{b} floor(i*c/a).
    Floorsum { b: BigInt, c: BigInt, a: BigInt },
    /// Pairwise-coprime reduction witness of ax + by + cz = n.
    Reduce { a: BigInt, b: BigInt, c: BigInt, n: BigInt },
    /// Legendre symbol (q/p) from the floor-sum exponent.
    Legendre { q: u64, p: u64 },
    /// Largest integer not representable as ax + by.
    Frobenius { a: BigInt, b: BigInt },
    /// Number of positive integers not representable as px + qy.
    Sylvester { p: BigInt, q: BigInt },
    /// Check an identity for every pair below --limit.
    Verify { identity: String },
    /// Step-by-step reduction chain.
    #[command(subcommand)]
    Trace(TraceTarget),
    /// Timing table: logarithmic evaluation against the linear-time oracle.
    Bench,
}

#[derive(Debug, Subcommand)]
pub enum TraceTarget {
    Floorsum { b: BigInt, c: BigInt, a: BigInt },
    Count3 { a: BigInt, b: BigInt, c: BigInt, n: BigInt },
}

/// Rendered output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn from_error(err: &Error) -> Self {
        let code = if err.is_internal() { EXIT_INTERNAL } else { EXIT_INVALID };
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }

    fn mismatch(mut self, what: String) -> Self {
        self.code = EXIT_INTERNAL;
        self.stderr.push_str(&format!("oracle mismatch: {what}\n"));
        self
    }

    fn note(mut self, line: String) -> Self {
        self.stderr.push_str(&line);
        self.stderr.push('\n');
        self
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INVALID,
            };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let budget = match oracle_budget() {
        Ok(b) => b,
        Err(e) => return Outcome::from_error(&e),
    };
    let flags = &cli.flags;
    let result = match &cli.command {
        Command::Count3 { a, b, c, n } => cmd_count3(flags, budget, a, b, c, n),
        Command::Count2 { a, b, n } => cmd_count2(flags, budget, a, b, n),
        Command::Floorsum { b, c, a } => cmd_floorsum(flags, budget, b, c, a),
        Command::Reduce { a, b, c, n } => cmd_reduce(flags, a, b, c, n),
        Command::Legendre { q, p } => cmd_legendre(flags, *q, *p),
        Command::Frobenius { a, b } => cmd_frobenius(flags, budget, a, b),
        Command::Sylvester { p, q } => cmd_sylvester(flags, budget, p, q),
        Command::Verify { identity } => cmd_verify(flags, identity),
        Command::Trace(TraceTarget::Floorsum { b, c, a }) => cmd_trace_floorsum(flags, b, c, a),
        Command::Trace(TraceTarget::Count3 { a, b, c, n }) => cmd_trace_count3(flags, a, b, c, n),
        Command::Bench => cmd_bench(flags),
    };
    result.unwrap_or_else(|e| Outcome::from_error(&e))
}

fn oracle_budget() -> Result<u64, Error> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::invalid(format!("{BUDGET_ENV} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_ORACLE_BUDGET),
    }
}

/// Deterministic JSON text for any serializable result.
pub fn render_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("result types always serialize");
    s.push('\n');
    s
}

fn small(v: &ExactInt, what: &str) -> Result<u64, Error> {
    v.to_u64()
        .ok_or_else(|| Error::invalid(format!("{what} = {v} is outside the oracle's range")))
}

fn over_budget(needed: u128, budget: u64) -> Result<(), Error> {
    if needed > budget as u128 {
        return Err(Error::ResourceLimit(format!(
            "oracle needs ~{needed} iterations, budget is {budget} (set {BUDGET_ENV})"
        )));
    }
    Ok(())
}

fn count3_oracle(a: &ExactInt, b: &ExactInt, c: &ExactInt, n: &ExactInt, budget: u64) -> Result<(ExactInt, &'static str), Error> {
    let (a, b, c, n) = (small(a, "a")?, small(b, "b")?, small(c, "c")?, small(n, "n")?);
    let dp_cost = 3 * (n as u128 + 1);
    if n <= DP_MAX_N && dp_cost <= budget as u128 {
        return Ok((denumerant3::count3_oracle_dp(a, b, c, n)?, "dp"));
    }
    Ok((denumerant3::count3_oracle_enum_budgeted(a, b, c, n, budget)?, "enum"))
}

fn render_count_text(r: &CountResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "equation: {}x + {}y + {}z = {}", r.a, r.b, r.c, r.n);
    if let Some(w) = &r.witness {
        if (&w.reduced.a, &w.reduced.b, &w.reduced.c, &w.reduced.n) != (&r.a, &r.b, &r.c, &r.n) {
            let _ = writeln!(
                out,
                "reduced: {}x + {}y + {}z = {}",
                w.reduced.a, w.reduced.b, w.reduced.c, w.reduced.n
            );
        }
    }
    if let Some(s) = &r.symbols {
        let _ = writeln!(
            out,
            "symbols: b1'={} c1'={} c2'={} a2'={} a3'={} b3'={} N1={}",
            s.b1p, s.c1p, s.c2p, s.a2p, s.a3p, s.b3p, s.n1
        );
        let sums: Vec<String> = r.floor_sums.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "floor sums: {}", sums.join(" "));
    }
    let _ = writeln!(out, "count: {}", r.count);
    out
}

fn cmd_count3(flags: &Flags, budget: u64, a: &BigInt, b: &BigInt, c: &BigInt, n: &BigInt) -> Result<Outcome, Error> {
    let r = denumerant3::count3(a.clone(), b.clone(), c.clone(), n.clone())?;
    let text = if flags.json { render_json(&r) } else { render_count_text(&r) };
    let out = Outcome::ok(text);
    if !flags.oracle {
        return Ok(out);
    }
    let (oracle, which) = count3_oracle(a, b, c, n, budget)?;
    Ok(if oracle != r.count {
        out.mismatch(format!("count3 = {}, {which} oracle = {oracle}", r.count))
    } else {
        out.note(format!("oracle ({which}) agrees: {oracle}"))
    })
}

#[derive(Debug, Serialize, Deserialize)]
struct Count2Json {
    #[serde(with = "decimal")]
    a: ExactInt,
    #[serde(with = "decimal")]
    b: ExactInt,
    #[serde(with = "decimal")]
    n: ExactInt,
    #[serde(with = "decimal")]
    count: ExactInt,
}

fn cmd_count2(flags: &Flags, budget: u64, a: &BigInt, b: &BigInt, n: &BigInt) -> Result<Outcome, Error> {
    let count = linear2::count2(a.clone(), b.clone(), n.clone())?;
    let text = if flags.json {
        render_json(&Count2Json { a: a.clone(), b: b.clone(), n: n.clone(), count: count.clone() })
    } else {
        format!("equation: {a}x + {b}y = {n}\ncount: {count}\n")
    };
    let out = Outcome::ok(text);
    if !flags.oracle {
        return Ok(out);
    }
    let (sa, sb, sn) = (small(a, "a")?, small(b, "b")?, small(n, "n")?);
    over_budget(sn as u128 / sb as u128 + 1, budget)?;
    let oracle = ExactInt::from(linear2::count2_oracle_enum(sa, sb, sn));
    Ok(if oracle != count {
        out.mismatch(format!("count2 = {count}, enumeration = {oracle}"))
    } else {
        out.note(format!("oracle (enum) agrees: {oracle}"))
    })
}

#[derive(Debug, Serialize, Deserialize)]
struct FloorSumJson {
    #[serde(with = "decimal")]
    b: ExactInt,
    #[serde(with = "decimal")]
    c: ExactInt,
    #[serde(with = "decimal")]
    a: ExactInt,
    #[serde(with = "decimal")]
    value: ExactInt,
    steps: usize,
}

fn cmd_floorsum(flags: &Flags, budget: u64, b: &BigInt, c: &BigInt, a: &BigInt) -> Result<Outcome, Error> {
    let q = FloorSumQuery::new(b.clone(), c.clone(), a.clone())?;
    let (value, steps) = floor_sum::floor_sum_fast_counted(&q)?;
    let text = if flags.json {
        render_json(&FloorSumJson { b: q.b.clone(), c: q.c.clone(), a: q.a.clone(), value: value.clone(), steps })
    } else {
        format!("{q} = {value}\nsteps: {steps}\n")
    };
    let out = Outcome::ok(text);
    if !flags.oracle {
        return Ok(out);
    }
    over_budget(small(b, "b")? as u128, budget)?;
    let naive = floor_sum::floor_sum_naive(&q);
    let euclid = floor_sum::floor_sum_euclid(&q);
    Ok(if naive != value || euclid != value {
        out.mismatch(format!("fast = {value}, naive = {naive}, euclid = {euclid}"))
    } else {
        out.note(format!("oracle (naive, euclid) agrees: {naive}"))
    })
}

#[derive(Debug, Serialize, Deserialize)]
struct NoSolutionJson {
    original: Instance3,
    no_solution: bool,
}

fn cmd_reduce(flags: &Flags, a: &BigInt, b: &BigInt, c: &BigInt, n: &BigInt) -> Result<Outcome, Error> {
    let inst = Instance3::new(a.clone(), b.clone(), c.clone(), n.clone())?;
    let witness = reduction::reduce(&inst)?;
    let text = match (&witness, flags.json) {
        (Some(w), true) => render_json(w),
        (None, true) => render_json(&NoSolutionJson { original: inst, no_solution: true }),
        (None, false) => format!("gcd({a}, {b}, {c}) does not divide {n}: no solutions\n"),
        (Some(w), false) => {
            let mut s = String::new();
            let _ = writeln!(s, "g = {}", w.g);
            let _ = writeln!(s, "g1 g2 g3 = {} {} {}", w.g1, w.g2, w.g3);
            let _ = writeln!(s, "n1 n2 n3 = {} {} {}", w.n1, w.n2, w.n3);
            let _ = writeln!(s, "reduced: {}x + {}y + {}z = {}", w.reduced.a, w.reduced.b, w.reduced.c, w.reduced.n);
            if !w.n_nonneg {
                let _ = writeln!(s, "reduced right-hand side is negative: no solutions");
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

#[derive(Debug, Serialize, Deserialize)]
struct LegendreJson {
    #[serde(with = "decimal")]
    q: ExactInt,
    #[serde(with = "decimal")]
    p: ExactInt,
    #[serde(with = "decimal")]
    t: ExactInt,
    #[serde(with = "decimal")]
    symbol: ExactInt,
}

fn cmd_legendre(flags: &Flags, q: u64, p: u64) -> Result<Outcome, Error> {
    let t = residues::eisenstein_t(p, q)?;
    let symbol = residues::legendre(q, p)?;
    let text = if flags.json {
        render_json(&LegendreJson { q: q.into(), p: p.into(), t: t.clone(), symbol: symbol.into() })
    } else {
        format!("({q}/{p}) = {symbol}\nt = {t}\n")
    };
    let out = Outcome::ok(text);
    if !flags.oracle {
        return Ok(out);
    }
    let euler = residues::legendre_euler(q, p)?;
    Ok(if euler != symbol {
        out.mismatch(format!("floor-sum symbol {symbol}, Euler criterion {euler}"))
    } else {
        out.note(format!("oracle (euler) agrees: {euler}"))
    })
}

#[derive(Debug, Serialize, Deserialize)]
struct PairValueJson {
    #[serde(with = "decimal")]
    a: ExactInt,
    #[serde(with = "decimal")]
    b: ExactInt,
    #[serde(with = "decimal")]
    value: ExactInt,
}

fn nonrep_oracle(a: &BigInt, b: &BigInt, budget: u64) -> Result<std::collections::BTreeSet<u64>, Error> {
    let (sa, sb) = (small(a, "a")?, small(b, "b")?);
    over_budget(sa as u128 * sb as u128, budget)?;
    linear2::nonrepresentable_set(sa, sb)
}

fn cmd_frobenius(flags: &Flags, budget: u64, a: &BigInt, b: &BigInt) -> Result<Outcome, Error> {
    let value = linear2::frobenius2(a.clone(), b.clone())?;
    let text = if flags.json {
        render_json(&PairValueJson { a: a.clone(), b: b.clone(), value: value.clone() })
    } else {
        format!("frobenius({a}, {b}) = {value}\n")
    };
    let out = Outcome::ok(text);
    if !flags.oracle {
        return Ok(out);
    }
    let set = nonrep_oracle(a, b, budget)?;
    let largest = set.last().copied().map(ExactInt::from);
    Ok(if largest.as_ref() != Some(&value) {
        out.mismatch(format!("formula {value}, enumeration {largest:?}"))
    } else {
        out.note(format!("oracle (enum) agrees: {value}"))
    })
}

fn cmd_sylvester(flags: &Flags, budget: u64, p: &BigInt, q: &BigInt) -> Result<Outcome, Error> {
    let value = linear2::nonrepresentable_count(p.clone(), q.clone())?;
    let text = if flags.json {
        render_json(&PairValueJson { a: p.clone(), b: q.clone(), value: value.clone() })
    } else {
        format!("non-representable count({p}, {q}) = {value}\n")
    };
    let out = Outcome::ok(text);
    if !flags.oracle {
        return Ok(out);
    }
    let size = ExactInt::from(nonrep_oracle(p, q, budget)?.len());
    Ok(if size != value {
        out.mismatch(format!("formula {value}, enumeration {size}"))
    } else {
        out.note(format!("oracle (enum) agrees: {size}"))
    })
}

fn cmd_verify(flags: &Flags, name: &str) -> Result<Outcome, Error> {
    let identity = Identity::from_name(name).ok_or_else(|| {
        let names: Vec<&str> = Identity::ALL.iter().map(|i| i.name()).collect();
        Error::invalid(format!("unknown identity {name:?}; expected one of {}", names.join(", ")))
    })?;
    let report = residues::sweep(identity, flags.limit)?;
    let text = if flags.json {
        render_json(&report)
    } else {
        let mut s = String::new();
        for r in &report.pairs {
            let ctx: Vec<String> = r.context.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(
                s,
                "{} {} lhs={} rhs={} {}",
                r.name,
                ctx.join(" "),
                r.lhs,
                r.rhs,
                if r.holds { "ok" } else { "FAIL" }
            );
        }
        let _ = writeln!(s, "pairs: {} failures: {}", report.pairs.len(), report.failures);
        s
    };
    let mut out = Outcome::ok(text);
    if !report.all_hold() {
        out.code = EXIT_INTERNAL;
        out.stderr = format!("{} of {} pairs fail {}\n", report.failures, report.pairs.len(), identity.name());
    }
    Ok(out)
}

/// One line of a rendered trace: a recorded step or the closing total.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TraceLineJson {
    Step {
        op: String,
        #[serde(with = "decimal")]
        param: ExactInt,
        #[serde(rename = "const", with = "decimal")]
        constant: ExactInt,
        sign: String,
    },
    Base {
        #[serde(with = "decimal")]
        base: ExactInt,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    #[serde(with = "decimal")]
    pub b: ExactInt,
    #[serde(with = "decimal")]
    pub c: ExactInt,
    #[serde(with = "decimal")]
    pub a: ExactInt,
    pub steps: Vec<TraceLineJson>,
}

impl From<&FloorSumTrace> for TraceJson {
    fn from(t: &FloorSumTrace) -> Self {
        let mut steps: Vec<TraceLineJson> = t
            .steps
            .iter()
            .map(|s| TraceLineJson::Step {
                op: match s.kind {
                    StepKind::Recip => "RECIP",
                    StepKind::Div => "DIV",
                    StepKind::Period => "PERIOD",
                }
                .to_string(),
                param: s.param.clone(),
                constant: s.constant.clone(),
                sign: if s.sign < 0 { "-" } else { "+" }.to_string(),
            })
            .collect();
        steps.push(TraceLineJson::Base { base: t.value.clone() });
        TraceJson {
            b: t.query.b.clone(),
            c: t.query.c.clone(),
            a: t.query.a.clone(),
            steps,
        }
    }
}

fn cmd_trace_floorsum(flags: &Flags, b: &BigInt, c: &BigInt, a: &BigInt) -> Result<Outcome, Error> {
    let q = FloorSumQuery::new(b.clone(), c.clone(), a.clone())?;
    let t = floor_sum::floor_sum_trace(&q)?;
    let text = if flags.json { render_json(&TraceJson::from(&t)) } else { t.render() };
    Ok(Outcome::ok(text))
}

#[derive(Debug, Serialize, Deserialize)]
struct CountTraceJson {
    result: CountResult,
    traces: Vec<TraceJson>,
}

fn cmd_trace_count3(flags: &Flags, a: &BigInt, b: &BigInt, c: &BigInt, n: &BigInt) -> Result<Outcome, Error> {
    let r = denumerant3::count3(a.clone(), b.clone(), c.clone(), n.clone())?;
    let mut traces = Vec::new();
    let (ra, rb, rc) = match r.witness.as_ref() {
        Some(w) => (w.reduced.a.clone(), w.reduced.b.clone(), w.reduced.c.clone()),
        None => (a.clone(), b.clone(), c.clone()),
    };
    if let Some(sym) = &r.symbols {
        for q in sym.queries(&ra, &rb, &rc) {
            traces.push(floor_sum::floor_sum_trace(&q)?);
        }
    }
    if flags.json {
        let traces = traces.iter().map(TraceJson::from).collect();
        return Ok(Outcome::ok(render_json(&CountTraceJson { result: r, traces })));
    }
    let mut s = render_count_text(&r);
    if let Some(sym) = &r.symbols {
        let constant = arith::exact_div(&sym.n1, &(ExactInt::from(2u32) * &ra * &rb * &rc), "N1 / (2abc)")? - 2u32;
        let _ = writeln!(s, "count = S1 + S2 + S3 + ({constant})");
    }
    for (i, t) in traces.iter().enumerate() {
        let _ = writeln!(s, "S{} = {}", i + 1, t.query);
        s.push_str(&t.render());
    }
    Ok(Outcome::ok(s))
}

#[derive(Debug, Serialize, Deserialize)]
struct BenchRow {
    label: String,
    #[serde(with = "decimal")]
    n: ExactInt,
    closed_us: f64,
    oracle_us: Option<f64>,
    max_steps: usize,
    step_bound: u64,
}

fn micros(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e7).round() / 10.0
}

fn random_coprime_triple(rng: &mut StdRng, bits: u32) -> (u64, u64, u64) {
    let lo = 1u64 << (bits - 1);
    let hi = (1u64 << bits) - 1;
    loop {
        let (a, b, c) = (rng.gen_range(lo..=hi), rng.gen_range(lo..=hi), rng.gen_range(lo..=hi));
        let (ba, bb, bc) = (ExactInt::from(a), ExactInt::from(b), ExactInt::from(c));
        if arith::is_coprime(&ba, &bb) && arith::is_coprime(&bb, &bc) && arith::is_coprime(&bc, &ba) {
            return (a, b, c);
        }
    }
}

fn cmd_bench(flags: &Flags) -> Result<Outcome, Error> {
    let mut rng = StdRng::seed_from_u64(flags.seed);
    let mut rows = Vec::new();
    for &n in &[1_000u64, 10_000, 100_000, 1_000_000, 10_000_000] {
        let (a, b, c) = random_coprime_triple(&mut rng, 8);
        let start = Instant::now();
        let r = denumerant3::count3_closed(a, b, c, n)?;
        let closed = start.elapsed();
        let start = Instant::now();
        let oracle = denumerant3::count3_oracle_dp(a, b, c, n)?;
        let dp = start.elapsed();
        if oracle != r.count {
            return Err(Error::internal(format!("bench ({a},{b},{c};{n}): closed {} != dp {oracle}", r.count)));
        }
        rows.push(BenchRow {
            label: format!("{a},{b},{c}"),
            n: n.into(),
            closed_us: micros(closed),
            oracle_us: Some(micros(dp)),
            max_steps: r.floor_sum_steps.iter().copied().max().unwrap_or(0),
            step_bound: floor_sum::step_bound(&r.a.clone().max(r.b.clone()).max(r.c.clone()), &ExactInt::zero()),
        });
    }
    for _ in 0..5 {
        let (a, b, c) = random_coprime_triple(&mut rng, 60);
        let n = ExactInt::from(rng.gen::<u64>()) << 6u32;
        let start = Instant::now();
        let r = denumerant3::count3_closed(a, b, c, n.clone())?;
        let closed = start.elapsed();
        rows.push(BenchRow {
            label: "60-bit".to_string(),
            n,
            closed_us: micros(closed),
            oracle_us: None,
            max_steps: r.floor_sum_steps.iter().copied().max().unwrap_or(0),
            step_bound: floor_sum::step_bound(&ExactInt::from(a.max(b).max(c)), &ExactInt::zero()),
        });
    }
    if flags.json {
        return Ok(Outcome::ok(render_json(&rows)));
    }
    let mut s = String::new();
    let _ = writeln!(s, "{:<16} {:>22} {:>12} {:>12} {:>6} {:>6}", "coefficients", "n", "closed_us", "dp_us", "steps", "bound");
    for r in &rows {
        let dp = r.oracle_us.map(|v| format!("{v:.1}")).unwrap_or_else(|| "-".to_string());
        let _ = writeln!(
            s,
            "{:<16} {:>22} {:>12.1} {:>12} {:>6} {:>6}",
            r.label, r.n, r.closed_us, dp, r.max_steps, r.step_bound
        );
    }
    Ok(Outcome::ok(s))
}
