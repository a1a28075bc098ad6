//! Kloosterman sums K(α) = Σ_{x ≠ 0} (−1)^{Tr(αx + 1/x)} over GF(2^k).
//!
//! Two routes are provided. [`kloosterman_sum`] evaluates one sum term by
//! term. [`kloosterman_sums`] gets every sum at once from the Walsh spectrum
//! of g(x) = Tr(1/x) (with g(0) = 0): the x = 0 term contributes exactly 1,
//! so K(α) = ĝ(α) − 1.

use serde::Serialize;

use crate::boolfun::{is_bent, monomial, walsh, BoolFun};
use crate::error::{Error, Result};
use crate::gf2n::{gcd, Elem, FieldCtx, SubfieldEmbedding};

/// Largest k the trace scan accepts.
pub const MAX_SCAN_DEGREE: u32 = 20;
/// Largest k scanned by default; larger values are opt-in.
pub const DEFAULT_SCAN_DEGREE: u32 = 14;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KloostermanRow {
    pub k: u32,
    pub alpha: Elem,
    pub sum: i64,
    pub trace_bit: u8,
}

/// One Kloosterman sum by direct summation.
pub fn kloosterman_sum(ctx: &FieldCtx, alpha: Elem) -> i64 {
    (1..ctx.size() as Elem)
        .map(|x| {
            let inv = ctx.inv(x).expect("x is nonzero");
            let bit = ctx.trace(ctx.mul(alpha, x) ^ inv);
            1 - 2 * i64::from(bit)
        })
        .sum()
}

/// All Kloosterman sums, indexed by α, from a single Walsh transform.
pub fn kloosterman_sums(ctx: &FieldCtx) -> Vec<i64> {
    let g = BoolFun::from_fn(ctx.n(), |x| {
        x != 0 && ctx.trace(ctx.inv(x).expect("x is nonzero")) == 1
    });
    walsh(&g, ctx).values.into_iter().map(|v| v - 1).collect()
}

/// Outcome of checking "K(α) = −1 implies Tr(α) = 0" over one field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceScan {
    pub k: u32,
    pub modulus: u32,
    pub rows: Vec<KloostermanRow>,
    /// α with K(α) = −1, ascending.
    pub zero_set: Vec<Elem>,
    /// Members of `zero_set` with Tr(α) = 1.
    pub violations: Vec<Elem>,
}

pub fn scan_trace_theorem(k: u32) -> Result<TraceScan> {
    if !(1..=MAX_SCAN_DEGREE).contains(&k) {
        return Err(Error::InvalidParameter(format!(
            "Kloosterman scans need 1 <= k <= {MAX_SCAN_DEGREE}, got {k}"
        )));
    }
    let ctx = FieldCtx::new(k)?;
    Ok(scan_field(&ctx))
}

/// Trace scan over a caller-supplied field.
pub fn scan_field(ctx: &FieldCtx) -> TraceScan {
    let rows: Vec<KloostermanRow> = kloosterman_sums(ctx)
        .into_iter()
        .enumerate()
        .map(|(a, sum)| KloostermanRow {
            k: ctx.n(),
            alpha: a as Elem,
            sum,
            trace_bit: ctx.trace(a as Elem),
        })
        .collect();
    let zero_set: Vec<Elem> = rows.iter().filter(|r| r.sum == -1).map(|r| r.alpha).collect();
    let violations = zero_set
        .iter()
        .copied()
        .filter(|&a| ctx.trace(a) == 1)
        .collect();
    TraceScan {
        k: ctx.n(),
        modulus: ctx.modulus(),
        rows,
        zero_set,
        violations,
    }
}

/// Checks that Tr_1^{2k}(α x^{2^k − 1}) is bent exactly for the α in
/// GF(2^k)* with K(α) = −1.
pub fn dillon_cross_check(k: u32) -> Result<bool> {
    dillon_cross_check_r(k, 1)
}

/// As [`dillon_cross_check`] for the exponent r(2^k − 1), gcd(r, 2^k + 1) = 1.
pub fn dillon_cross_check_r(k: u32, r: u64) -> Result<bool> {
    if !(2..=6).contains(&k) {
        return Err(Error::InvalidParameter(format!(
            "the Dillon cross-check needs 2 <= k <= 6, got {k}"
        )));
    }
    let q = (1u64 << k) + 1;
    if r == 0 || r >= q || gcd(r, q) != 1 {
        return Err(Error::InvalidParameter(format!(
            "r = {r} must satisfy 0 < r < {q} and gcd(r, {q}) = 1"
        )));
    }
    let small = FieldCtx::new(k)?;
    let big = FieldCtx::new(2 * k)?;
    let emb = SubfieldEmbedding::new(&small, &big)?;
    let sums = kloosterman_sums(&small);
    let d = r * ((1u64 << k) - 1);
    for a in 1..small.size() as Elem {
        let bent = is_bent(&monomial(&big, emb.map(a), d)?);
        if bent != (sums[a as usize] == -1) {
            return Ok(false);
        }
    }
    Ok(true)
}
