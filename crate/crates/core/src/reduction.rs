//! Reduction of `ax + by + cz = n` to an equivalent pairwise-coprime instance.
//!
//! After dividing out `gcd(a, b, c)`, let `g1 = gcd(b, c)`, `g2 = gcd(c, a)`,
//! `g3 = gcd(a, b)`. Any solution has `x ≡ n·a⁻¹ (mod g1)` and likewise for
//! `y`, `z`, so `x = n1 + g1·X`, `y = n2 + g2·Y`, `z = n3 + g3·Z` where
//! `(X, Y, Z)` solves `A·X + B·Y + C·Z = N` with `A = a/(g2·g3)`,
//! `B = b/(g3·g1)`, `C = c/(g1·g2)` and `N = (n − a·n1 − b·n2 − c·n3)/(g1·g2·g3)`.
//!
//! The offsets `n1, n2, n3` live in `[0, g)`. This differs from the one-based
//! residues used by the closed form in [`crate::denumerant3`].

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, ExactInt};
use crate::error::{Error, Result};
use crate::report::decimal;

/// An instance of `ax + by + cz = n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Instance3 {
    #[serde(with = "decimal")]
    pub a: ExactInt,
    #[serde(with = "decimal")]
    pub b: ExactInt,
    #[serde(with = "decimal")]
    pub c: ExactInt,
    #[serde(with = "decimal")]
    pub n: ExactInt,
}

impl Instance3 {
    /// Requires `a, b, c >= 1` and `n >= 0`.
    pub fn new(
        a: impl Into<ExactInt>,
        b: impl Into<ExactInt>,
        c: impl Into<ExactInt>,
        n: impl Into<ExactInt>,
    ) -> Result<Self> {
        let inst = Instance3 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            n: n.into(),
        };
        let one = ExactInt::one();
        if inst.a < one || inst.b < one || inst.c < one {
            return Err(Error::invalid(format!(
                "coefficients must be >= 1, got ({}, {}, {})",
                inst.a, inst.b, inst.c
            )));
        }
        if inst.n.is_negative() {
            return Err(Error::invalid(format!("right-hand side must be >= 0, got {}", inst.n)));
        }
        Ok(inst)
    }

    pub fn is_pairwise_coprime(&self) -> bool {
        arith::is_coprime(&self.a, &self.b)
            && arith::is_coprime(&self.b, &self.c)
            && arith::is_coprime(&self.c, &self.a)
    }

    pub fn evaluate(&self, x: &ExactInt, y: &ExactInt, z: &ExactInt) -> ExactInt {
        &self.a * x + &self.b * y + &self.c * z
    }
}

/// Replayable record of the reduction. `reduced.n` may be negative, in which
/// case `n_nonneg` is false and the original equation has no solutions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionWitness {
    pub original: Instance3,
    #[serde(with = "decimal")]
    pub g: ExactInt,
    #[serde(with = "decimal")]
    pub g1: ExactInt,
    #[serde(with = "decimal")]
    pub g2: ExactInt,
    #[serde(with = "decimal")]
    pub g3: ExactInt,
    #[serde(with = "decimal")]
    pub n1: ExactInt,
    #[serde(with = "decimal")]
    pub n2: ExactInt,
    #[serde(with = "decimal")]
    pub n3: ExactInt,
    pub reduced: Instance3,
    pub n_nonneg: bool,
}

impl ReductionWitness {
    /// Forward map `x -> (x - n1)/g1` (componentwise). `None` when the triple
    /// does not solve the original equation.
    pub fn project(
        &self,
        x: &ExactInt,
        y: &ExactInt,
        z: &ExactInt,
    ) -> Option<(ExactInt, ExactInt, ExactInt)> {
        if x.is_negative() || y.is_negative() || z.is_negative() {
            return None;
        }
        if self.original.evaluate(x, y, z) != self.original.n {
            return None;
        }
        let back = |v: &ExactInt, off: &ExactInt, g: &ExactInt| {
            let (q, r) = (v - off).div_rem(g);
            r.is_zero().then_some(q)
        };
        Some((
            back(x, &self.n1, &self.g1)?,
            back(y, &self.n2, &self.g2)?,
            back(z, &self.n3, &self.g3)?,
        ))
    }
}

/// Divides out `gcd(a, b, c)`. `None` means the gcd does not divide `n`, so
/// there are no solutions.
pub fn normalize_gcd(inst: &Instance3) -> Option<Instance3> {
    let g = inst.a.gcd(&inst.b).gcd(&inst.c);
    if !inst.n.is_multiple_of(&g) {
        return None;
    }
    Some(Instance3 {
        a: &inst.a / &g,
        b: &inst.b / &g,
        c: &inst.c / &g,
        n: &inst.n / &g,
    })
}

/// Pairwise-coprime reduction of an instance with `gcd(a, b, c) = 1`.
pub fn reduce_pairwise(inst: &Instance3) -> Result<ReductionWitness> {
    let g = inst.a.gcd(&inst.b).gcd(&inst.c);
    if !g.is_one() {
        return Err(Error::invalid(format!(
            "reduce_pairwise needs gcd(a, b, c) = 1, got {g}"
        )));
    }
    let Instance3 { a, b, c, n } = inst;
    let g1 = b.gcd(c);
    let g2 = c.gcd(a);
    let g3 = a.gcd(b);
    let offset = |coef: &ExactInt, m: &ExactInt| -> Result<ExactInt> {
        let inv = arith::mod_inverse(coef, m).map_err(|e| Error::internal(e.to_string()))?;
        Ok((n * inv).mod_floor(m))
    };
    let n1 = offset(a, &g1)?;
    let n2 = offset(b, &g2)?;
    let n3 = offset(c, &g3)?;

    let big_a = arith::exact_div(a, &(&g2 * &g3), "A = a/(g2*g3)")?;
    let big_b = arith::exact_div(b, &(&g3 * &g1), "B = b/(g3*g1)")?;
    let big_c = arith::exact_div(c, &(&g1 * &g2), "C = c/(g1*g2)")?;
    let residual = n - a * &n1 - b * &n2 - c * &n3;
    let big_n = arith::exact_div(&residual, &(&g1 * &g2 * &g3), "reduced right-hand side")?;

    let reduced = Instance3 {
        a: big_a,
        b: big_b,
        c: big_c,
        n: big_n,
    };
    if !reduced.is_pairwise_coprime() {
        return Err(Error::internal(format!(
            "reduced coefficients ({}, {}, {}) are not pairwise coprime",
            reduced.a, reduced.b, reduced.c
        )));
    }
    let n_nonneg = !reduced.n.is_negative();
    Ok(ReductionWitness {
        original: inst.clone(),
        g: ExactInt::one(),
        g1,
        g2,
        g3,
        n1,
        n2,
        n3,
        reduced,
        n_nonneg,
    })
}

/// Full reduction of an arbitrary instance: gcd normalization followed by
/// the pairwise-coprime step. The witness refers to the instance as given.
pub fn reduce(inst: &Instance3) -> Result<Option<ReductionWitness>> {
    let g = inst.a.gcd(&inst.b).gcd(&inst.c);
    let Some(normalized) = normalize_gcd(inst) else {
        return Ok(None);
    };
    let mut w = reduce_pairwise(&normalized)?;
    w.original = inst.clone();
    w.g = g;
    Ok(Some(w))
}

/// Maps a solution of the reduced instance back to the original one.
pub fn lift_solution(
    w: &ReductionWitness,
    x: &ExactInt,
    y: &ExactInt,
    z: &ExactInt,
) -> Result<(ExactInt, ExactInt, ExactInt)> {
    if x.is_negative() || y.is_negative() || z.is_negative() {
        return Err(Error::invalid("reduced solution must be non-negative"));
    }
    if w.reduced.evaluate(x, y, z) != w.reduced.n {
        return Err(Error::invalid(format!(
            "({x}, {y}, {z}) does not solve the reduced instance"
        )));
    }
    Ok((&w.n1 + &w.g1 * x, &w.n2 + &w.g2 * y, &w.n3 + &w.g3 * z))
}
