//! Gauss sums G(χ^j) = Σ_{x ≠ 0} (−1)^{Tr(x)} χ^j(x) over GF(2^n), where χ is
//! the discrete-log character χ(g^i) = e^{2πi·i/N}, N = 2^n − 1.
//!
//! Floating point throughout; the sums are accumulated with compensated
//! summation.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2n::{Elem, FieldCtx};

/// Largest degree for which a Gauss table is built (the cost is N^2).
pub const MAX_GAUSS_DEGREE: u32 = 14;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GaussTable {
    pub n: u32,
    pub generator: Elem,
    /// values[j] = G(χ^j), 0 ≤ j < N.
    pub values: Vec<Complex64>,
}

impl GaussTable {
    pub fn order(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn get(&self, j: i64) -> Complex64 {
        self.values[j.rem_euclid(self.values.len() as i64) as usize]
    }
}

#[derive(Default, Clone, Copy)]
struct Kahan {
    sum: Complex64,
    carry: Complex64,
}

impl Kahan {
    fn add(&mut self, v: Complex64) {
        let y = v - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }
}

/// e^{2πi m / N} for m in 0..N.
fn roots(order: u64) -> Vec<Complex64> {
    (0..order)
        .map(|m| Complex64::from_polar(1.0, TAU * m as f64 / order as f64))
        .collect()
}

pub fn gauss_table(ctx: &FieldCtx) -> Result<GaussTable> {
    if ctx.n() > MAX_GAUSS_DEGREE {
        return Err(Error::SweepTooLarge {
            n: ctx.n(),
            limit: MAX_GAUSS_DEGREE,
        });
    }
    let order = ctx.group_order();
    let w = roots(order);
    // sign[i] = (−1)^{Tr(g^i)}
    let sign: Vec<f64> = (0..order)
        .map(|i| if ctx.trace(ctx.exp(i)) == 0 { 1.0 } else { -1.0 })
        .collect();
    let values = (0..order)
        .into_par_iter()
        .map(|j| {
            let mut acc = Kahan::default();
            let mut idx = 0u64;
            for &s in &sign {
                acc.add(w[idx as usize] * s);
                idx += j;
                if idx >= order {
                    idx -= order;
                }
            }
            acc.sum
        })
        .collect();
    Ok(GaussTable {
        n: ctx.n(),
        generator: ctx.generator(),
        values,
    })
}

fn check_table(ctx: &FieldCtx, table: &GaussTable) -> Result<()> {
    if table.n != ctx.n() || table.generator != ctx.generator() {
        return Err(Error::InvalidParameter(
            "Gauss table was built over a different field".into(),
        ));
    }
    Ok(())
}

/// (−1)^{Tr(x)} = (1/N) Σ_j G(χ^j) χ^{−j}(x). The imaginary part cancels and
/// is dropped.
pub fn trace_from_gauss(ctx: &FieldCtx, table: &GaussTable, x: Elem) -> Result<f64> {
    check_table(ctx, table)?;
    let l = ctx
        .log(x)
        .ok_or_else(|| Error::Domain("trace_from_gauss needs x != 0".into()))?;
    let order = table.order();
    let mut acc = Kahan::default();
    for j in 0..order {
        let m = (order - (j * u64::from(l)) % order) % order;
        acc.add(table.values[j as usize] * root(m, order));
    }
    Ok(acc.sum.re / order as f64)
}

fn root(m: u64, order: u64) -> Complex64 {
    Complex64::from_polar(1.0, TAU * m as f64 / order as f64)
}

/// Walsh value of Tr(α x^d) at λ from Gauss sums:
///
/// f̂(λ) = 2^n/N + (1/N) Σ_{j=1}^{N−1} G(χ^{−j}) G(χ^{jd}) χ^j(α) χ^{−jd}(λ).
pub fn walsh_via_gauss(
    ctx: &FieldCtx,
    table: &GaussTable,
    alpha: Elem,
    d: u64,
    lambda: Elem,
) -> Result<f64> {
    check_table(ctx, table)?;
    if d == 0 || d >= ctx.group_order() {
        return Err(Error::InvalidParameter(format!(
            "exponent {d} outside 0 < d < {}",
            ctx.group_order()
        )));
    }
    let la = ctx
        .log(alpha)
        .ok_or_else(|| Error::Domain("walsh_via_gauss needs alpha != 0".into()))?;
    let ll = ctx
        .log(lambda)
        .ok_or_else(|| Error::Domain("walsh_via_gauss needs lambda != 0".into()))?;
    let order = table.order();
    let (la, ll, d) = (u64::from(la), u64::from(ll), d % order);
    let mut acc = Kahan::default();
    for j in 1..order {
        let jd = (j * d) % order;
        let g = table.values[(order - j) as usize] * table.values[jd as usize];
        let m = ((j * la) % order + order - (jd * ll) % order) % order;
        acc.add(g * root(m, order));
    }
    Ok((acc.sum.re + ctx.size() as f64) / order as f64)
}
