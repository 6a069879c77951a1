//! Acceptance suite: fifteen numbered criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test --test acceptance`. The process fails if any
//! criterion outside `KNOWN_UNATTAINABLE` fails, or if a known-unattainable
//! criterion unexpectedly passes (the README should then be updated).

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use denumerant::denumerant3::{self, count3, count3_closed, count3_dp_table, count3_oracle_dp, count3_oracle_enum};
use denumerant::floor_sum::{self, floor_sum_fast, floor_sum_naive, floor_sum_trace, FloorSumQuery};
use denumerant::linear2::{count2, frobenius2, nonrepresentable_set};
use denumerant::residues::{self, Identity, PrimePair};
use denumerant::ExactInt;

// Pinned limits.
const FAST_FLOOR_SUM_LIMIT: Duration = Duration::from_millis(1);
const NAIVE_FLOOR_SUM_LIMIT: Duration = Duration::from_secs(10);
const EXAMPLE_DP_LIMIT: Duration = Duration::from_secs(1);
const ADJUDICATION_DP_LIMIT: Duration = Duration::from_secs(30);
const MEDIAN_COUNT3_LIMIT: Duration = Duration::from_millis(1);
const PERF_TRIPLES: usize = 1000;
const PERF_SEED: u64 = 0x5eed_0015;

/// Criteria that fail on their own terms; see README "Findings".
const KNOWN_UNATTAINABLE: &[u32] = &[13];

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

fn big(v: i64) -> ExactInt {
    ExactInt::from(v)
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn c01_example_floor_sums() -> Outcome {
    let cases = [((129, 281, 742), 3111), ((539, 621, 803), 112277), ((335, 602, 663), 50934)];
    for ((b, c, a), want) in cases {
        let q = FloorSumQuery::new(b, c, a).map_err(|e| e.to_string())?;
        let (fast, t_fast) = timed(|| floor_sum_fast(&q));
        let fast = fast.map_err(|e| e.to_string())?;
        check(fast == big(want), || format!("fast S({b},{c},{a}) = {fast}, want {want}"))?;
        check(t_fast < FAST_FLOOR_SUM_LIMIT, || format!("fast S({b},{c},{a}) took {t_fast:?}"))?;
        let (naive, t_naive) = timed(|| floor_sum_naive(&q));
        check(naive == big(want), || format!("naive S({b},{c},{a}) = {naive}"))?;
        check(t_naive < NAIVE_FLOOR_SUM_LIMIT, || format!("naive S({b},{c},{a}) took {t_naive:?}"))?;
    }
    Ok("3111, 112277, 50934 by both evaluators".into())
}

fn c02_example_count() -> Outcome {
    let r = count3_closed(742, 803, 663, 128598).map_err(|e| e.to_string())?;
    check(r.count == big(22), || format!("closed form gave {}", r.count))?;
    let (dp, t) = timed(|| count3_oracle_dp(742, 803, 663, 128598));
    let dp = dp.map_err(|e| e.to_string())?;
    check(dp == big(22), || format!("dp oracle gave {dp}"))?;
    check(t < EXAMPLE_DP_LIMIT, || format!("dp took {t:?}"))?;
    Ok(format!("closed = dp = 22 (dp {t:.2?})"))
}

fn c03_reduction_adjudication() -> Outcome {
    let (truth, t) = timed(|| count3_oracle_dp(4452, 8030, 9945, 3857942));
    let truth = truth.map_err(|e| e.to_string())?;
    check(t < ADJUDICATION_DP_LIMIT, || format!("dp took {t:?}"))?;
    let r = count3(4452, 8030, 9945, 3857942).map_err(|e| e.to_string())?;
    check(r.count == truth, || format!("pipeline {} != dp {truth}", r.count))?;
    let w = r.witness.as_ref().ok_or("pipeline produced no witness")?;
    let quoted = count3_closed(742, 803, 663, 128598).map_err(|e| e.to_string())?.count;
    check(w.reduced.n != big(128598) || truth == quoted, || "quoted reduction disagrees with the oracle".into())?;
    Ok(format!(
        "original has {truth} solutions; reduced rhs {} agrees; the quoted rhs 128598 has {quoted} solutions and is {}",
        w.reduced.n,
        if w.reduced.n == big(128598) && truth == quoted { "confirmed" } else { "not a reduction of this equation" }
    ))
}

fn c04_trace_fidelity() -> Outcome {
    let main = floor_sum_trace(&FloorSumQuery::new(129, 281, 742).unwrap()).map_err(|e| e.to_string())?;
    let expected = "RECIP K=48 const=6192\n\
                    DIV q=2 const=2352\n\
                    RECIP K=30 const=1440\n\
                    DIV q=1 const=465\n\
                    RECIP K=16 const=480\n\
                    DIV q=1 const=136\n\
                    RECIP K=12 const=192\n\
                    DIV q=1 const=78\n\
                    RECIP K=3 const=36\n\
                    DIV q=3 const=18\n\
                    RECIP K=1 const=3\n\
                    BASE value=3111\n";
    check(main.render() == expected, || format!("render mismatch:\n{}", main.render()))?;
    check(main.replay() == big(3111), || "replay mismatch".into())?;

    let consts: Vec<i64> = main.steps.iter().map(|s| s.constant.to_i64().unwrap()).collect();
    let net: Vec<i64> = consts[2..10].chunks(2).map(|p| p[0] - p[1]).collect();
    check(net == [975, 344, 114, 18], || format!("net stage values {net:?}"))?;

    // Every DIV step hands a subchain to the next stage; each must trace
    // identically to the remainder of the main chain.
    let lines: Vec<&str> = expected.lines().collect();
    for (i, step) in main.steps.iter().enumerate() {
        if step.kind != floor_sum::StepKind::Div {
            continue;
        }
        let sub = floor_sum_trace(&step.next).map_err(|e| e.to_string())?;
        let naive = floor_sum_naive(&step.next);
        let want = format!("{}\nBASE value={naive}\n", lines[i + 1..lines.len() - 1].join("\n"));
        check(sub.render() == want, || format!("subchain {} renders\n{}", step.next, sub.render()))?;
    }
    let last = floor_sum_trace(&FloorSumQuery::new(3, 13, 22).unwrap()).map_err(|e| e.to_string())?;
    check(last.render() == "RECIP K=1 const=3\nBASE value=2\n", || last.render())?;
    Ok("full chain and five subchains byte-exact; base 3-1 = 2".into())
}

fn pairwise_coprime(a: u64, b: u64, c: u64) -> bool {
    a.gcd(&b) == 1 && b.gcd(&c) == 1 && a.gcd(&c) == 1
}

fn c05_oracle_sweep() -> Outcome {
    const MAX_COEFF: u64 = 25;
    const MAX_N: u64 = 400;
    let mut checks = 0u64;
    for a in 1..=MAX_COEFF {
        for b in 1..=MAX_COEFF {
            for c in 1..=MAX_COEFF {
                if !pairwise_coprime(a, b, c) {
                    continue;
                }
                let table = count3_dp_table(a, b, c, MAX_N).map_err(|e| e.to_string())?;
                for n in 0..=MAX_N {
                    let closed = count3_closed(a, b, c, n).map_err(|e| e.to_string())?.count;
                    let dp = ExactInt::from(table[n as usize]);
                    let en = count3_oracle_enum(a, b, c, n);
                    check(closed == dp && dp == en, || {
                        format!("({a},{b},{c};{n}): closed {closed}, enum {en}, dp {dp}")
                    })?;
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} ordered instances, zero mismatches"))
}

fn c06_reciprocity() -> Outcome {
    const MAX_A: u64 = 300;
    let mut checks = 0u64;
    for a in 1..=MAX_A {
        for c in 0..a {
            if a.gcd(&c) != 1 {
                continue;
            }
            // Prefix sums of floor(ic/a) and floor(ia/c) as the independent side.
            let left: Vec<u64> = prefix(a, c, a);
            let right: Vec<u64> = if c == 0 { vec![0] } else { prefix(c, a, c) };
            for b in 0..a {
                let k = b * c / a;
                let lhs = left[b as usize] + right[k as usize];
                check(lhs == b * k, || format!("S({b},{c},{a}) + S({k},{a},{c}) = {lhs} != {}", b * k))?;
                let fast = floor_sum_fast(&FloorSumQuery::new(b, c, a).unwrap()).map_err(|e| e.to_string())?;
                check(fast == ExactInt::from(left[b as usize]), || format!("fast S({b},{c},{a}) = {fast}"))?;
                checks += 1;
            }
        }
    }
    let report = floor_sum::lemma4_check(742u32, 129u32, 281u32).map_err(|e| e.to_string())?;
    check(report.holds, || format!("{report:?}"))?;
    Ok(format!("{checks} triples, zero failures"))
}

/// `out[i] = sum_{j=1}^{i} floor(j*num/den)` for `i < len`.
fn prefix(den: u64, num: u64, len: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(len as usize);
    let mut acc = 0u64;
    out.push(0);
    for j in 1..len {
        acc += j * num / den;
        out.push(acc);
    }
    out
}

fn sweep_holds(identity: Identity, limit: u64) -> Result<usize, String> {
    let report = residues::sweep(identity, limit).map_err(|e| e.to_string())?;
    if let Some(bad) = report.pairs.iter().find(|r| !r.holds) {
        return Err(format!(
            "{} of {} pairs fail; first {:?}: lhs {} rhs {}",
            report.failures,
            report.pairs.len(),
            bad.context,
            bad.lhs,
            bad.rhs
        ));
    }
    Ok(report.pairs.len())
}

fn report(identity: Identity, p: u64, q: u64) -> Result<denumerant::report::IdentityReport, String> {
    identity.check(p, q).map_err(|e| e.to_string())
}

fn c07_gauss() -> Outcome {
    let n = sweep_holds(Identity::Gauss, 200)?;
    for (p, q, want) in [(3, 5, 2), (3, 7, 3)] {
        let r = report(Identity::Gauss, p, q)?;
        check(r.lhs == big(want) && r.rhs == big(want), || format!("({p},{q}): {r:?}"))?;
    }
    Ok(format!("{n} pairs"))
}

fn c08_sylvester() -> Outcome {
    let n = sweep_holds(Identity::Sylvester, 61)?;
    for p in 2..=60u64 {
        for q in p + 1..=60 {
            if p.gcd(&q) == 1 {
                let size = nonrepresentable_set(p, q).map_err(|e| e.to_string())?.len() as u64;
                check(size == (p - 1) * (q - 1) / 2, || format!("({p},{q}): {size}"))?;
            }
        }
    }
    check(nonrepresentable_set(3, 5).unwrap() == BTreeSet::from([1, 2, 4, 7]), || "(3,5) set".into())?;
    check(nonrepresentable_set(3, 7).unwrap().len() == 6, || "(3,7) size".into())?;
    Ok(format!("{n} coprime pairs"))
}

fn c09_equivalence() -> Outcome {
    let n = sweep_holds(Identity::Equivalence, 200)?;
    let r = report(Identity::Equivalence, 3, 5)?;
    check(r.context["N0"] == big(4) && r.lhs == big(8) && r.rhs == big(8), || format!("{r:?}"))?;
    Ok(format!("{n} pairs"))
}

fn c10_legendre() -> Outcome {
    let n = sweep_holds(Identity::Legendre, 500)?;
    let anchors = [(3, 7, -1), (5, 11, 1)];
    for (q, p, want) in anchors {
        let got = residues::legendre(q, p).map_err(|e| e.to_string())?;
        check(got == want, || format!("({q}/{p}) = {got}"))?;
    }
    Ok(format!("{n} pairs"))
}

fn c11_npq_counts() -> Outcome {
    let n8 = sweep_holds(Identity::NpqClosed, 200)?;
    let n5 = sweep_holds(Identity::NpqConstant, 200)?;
    for (p, q, want) in [(3u64, 5u64, 3), (5, 3, 4)] {
        let n = q * (p - 1) / 2;
        let en = count3_oracle_enum(p, q, 1, n);
        let closed = residues::npq_count(p, q).map_err(|e| e.to_string())?;
        check(en == big(want) && closed == en, || format!("N({p},{q}): enum {en}, closed {closed}"))?;
    }
    Ok(format!("{n8} closed-form pairs, {n5} pairs with constant (p+1)/2"))
}

fn c12_byproduct() -> Outcome {
    let r = residues::byproduct_sum(PrimePair::new(23, 739).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    check(r.lhs == big(176) && r.holds, || format!("{r:?}"))?;
    let n = sweep_holds(Identity::Byproduct, 300)?;
    Ok(format!("(23,739) -> 176; {n} pairs"))
}

fn c13_parity() -> Outcome {
    for (p, q, count, formula) in [(3, 5, 10, 158), (5, 3, 9, 135)] {
        let r = report(Identity::Parity, p, q)?;
        check(r.context["count"] == big(count) && r.context["formula"] == big(formula) && r.holds, || {
            format!("anchor ({p},{q}): {r:?}")
        })?;
    }
    let n = sweep_holds(Identity::Parity, 100)?;
    Ok(format!("{n} pairs"))
}

fn c14_two_variable_window() -> Outcome {
    let mut checks = 0;
    for a in 2..=20u64 {
        for b in a + 1..=20 {
            if a.gcd(&b) != 1 {
                continue;
            }
            for n in (a - 1) * (b - 1)..a * b {
                let got = count2(a, b, n).map_err(|e| e.to_string())?;
                check(got == big(1), || format!("count2({a},{b};{n}) = {got}"))?;
                checks += 1;
            }
            let f = a * b - a - b;
            let got = count2(a, b, f).map_err(|e| e.to_string())?;
            check(got == big(0), || format!("count2({a},{b};{f}) = {got}"))?;
        }
    }
    let f = frobenius2(3u32, 5u32).map_err(|e| e.to_string())?;
    check(f == big(7), || format!("frobenius2(3,5) = {f}"))?;
    Ok(format!("{checks} window values"))
}

fn random_triple(rng: &mut StdRng) -> (u64, u64, u64) {
    let lo = 1u64 << 59;
    let hi = (1u64 << 60) - 1;
    loop {
        let (a, b, c) = (rng.gen_range(lo..=hi), rng.gen_range(lo..=hi), rng.gen_range(lo..=hi));
        if pairwise_coprime(a, b, c) {
            return (a, b, c);
        }
    }
}

fn c15_performance() -> Outcome {
    let mut rng = StdRng::seed_from_u64(PERF_SEED);
    let mut times = Vec::with_capacity(PERF_TRIPLES);
    let mut worst = (0usize, 0u64);
    for _ in 0..PERF_TRIPLES {
        let (a, b, c) = random_triple(&mut rng);
        let n = ExactInt::from(rng.gen_range(0..1u128 << 70));
        let (r, t) = timed(|| count3(a, b, c, n.clone()));
        let r = r.map_err(|e| e.to_string())?;
        times.push(t);
        let bound = floor_sum::step_bound(&ExactInt::from(a.max(b).max(c)), &ExactInt::from(0u32));
        let steps = r.floor_sum_steps.iter().copied().max().unwrap_or(0);
        check(steps as u64 <= bound, || format!("({a},{b},{c}): {steps} rounds > bound {bound}"))?;
        if steps > worst.0 {
            worst = (steps, bound);
        }
        check(denumerant3::sentinel_holds(&r, &r.a, &r.b, &r.c), || format!("sentinel fails at ({a},{b},{c};{n})"))?;
    }
    times.sort();
    let median = times[times.len() / 2];
    check(median < MEDIAN_COUNT3_LIMIT, || format!("median {median:?}"))?;

    println!("      {:>10} {:>14} {:>14}", "n", "closed", "dp oracle");
    for n in [10_000u64, 100_000, 1_000_000, 10_000_000] {
        let (closed, t_closed) = timed(|| count3_closed(97, 101, 103, n));
        let (dp, t_dp) = timed(|| count3_oracle_dp(97, 101, 103, n));
        let (closed, dp) = (closed.map_err(|e| e.to_string())?.count, dp.map_err(|e| e.to_string())?);
        check(closed == dp, || format!("bench n={n}: closed {closed} != dp {dp}"))?;
        println!("      {n:>10} {:>14.2?} {:>14.2?}", t_closed, t_dp);
    }
    Ok(format!(
        "median {median:.2?}, max {:.2?}, worst rounds {} (bound {})",
        times[times.len() - 1],
        worst.0,
        worst.1
    ))
}

fn main() {
    let criteria: [Criterion; 15] = [
        (1, "example floor sums", c01_example_floor_sums),
        (2, "example count", c02_example_count),
        (3, "reduction adjudication", c03_reduction_adjudication),
        (4, "trace fidelity", c04_trace_fidelity),
        (5, "closed = enum = dp sweep", c05_oracle_sweep),
        (6, "reciprocity exhaustive", c06_reciprocity),
        (7, "gauss identity", c07_gauss),
        (8, "sylvester count", c08_sylvester),
        (9, "equivalence identity", c09_equivalence),
        (10, "legendre agreement", c10_legendre),
        (11, "N(p,q) counts", c11_npq_counts),
        (12, "by-product sum", c12_byproduct),
        (13, "parity statement", c13_parity),
        (14, "two-variable window", c14_two_variable_window),
        (15, "performance", c15_performance),
    ];
    let only: Option<u32> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut unexpected = Vec::new();
    for (id, name, f) in criteria {
        if only.is_some_and(|o| o != id) {
            continue;
        }
        let (outcome, t) = timed(f);
        let known = KNOWN_UNATTAINABLE.contains(&id);
        match &outcome {
            Ok(detail) => println!("PASS {id:>2} {name}: {detail} [{t:.1?}]"),
            Err(detail) => println!("FAIL {id:>2} {name}: {detail} [{t:.1?}]{}", if known { " (known)" } else { "" }),
        }
        if outcome.is_ok() == known {
            unexpected.push(id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
