//! Boolean functions on GF(2^n) as packed truth tables.
//!
//! Truth tables are indexed by the integer encoding of field elements. The
//! Walsh spectrum is computed by the usual dyadic butterfly over coordinate
//! vectors and then relabelled by field elements through
//! [`FieldCtx::trace_relabel`], so `values[λ]` is Σ_x (−1)^{f(x) + Tr(λx)}.

use std::ops::{Add, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2n::{Elem, FieldCtx};
use crate::weights::cyclotomic_cosets;

/// A Boolean function on GF(2^n), stored as 2^n bits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoolFun {
    n: u32,
    words: Vec<u64>,
}

impl BoolFun {
    pub fn zero(n: u32) -> Self {
        let len = 1usize << n;
        BoolFun {
            n,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_fn(n: u32, mut f: impl FnMut(Elem) -> bool) -> Self {
        let mut out = Self::zero(n);
        for x in 0..out.len() as Elem {
            if f(x) {
                out.set(x, true);
            }
        }
        out
    }

    /// Builds a function from a slice of 0/1 values of length 2^n.
    pub fn from_bits(n: u32, bits: &[u8]) -> Result<Self> {
        if bits.len() != 1 << n {
            return Err(Error::InvalidParameter(format!(
                "truth table of length {} for n = {n}",
                bits.len()
            )));
        }
        Ok(Self::from_fn(n, |x| bits[x as usize] & 1 == 1))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, x: Elem) -> u8 {
        ((self.words[(x >> 6) as usize] >> (x & 63)) & 1) as u8
    }

    #[inline]
    pub fn set(&mut self, x: Elem, value: bool) {
        let w = &mut self.words[(x >> 6) as usize];
        if value {
            *w |= 1 << (x & 63);
        } else {
            *w &= !(1 << (x & 63));
        }
    }

    /// Number of inputs mapped to 1.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn bits(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len() as Elem).map(|x| self.get(x))
    }

    /// Hex encoding: character `c` holds the values at elements `4c..4c+4`,
    /// element `4c` in the least significant bit of the nibble.
    pub fn to_hex(&self) -> String {
        let chars = (self.len() / 4).max(1);
        (0..chars)
            .map(|c| {
                let nibble = (0..4)
                    .map(|b| 4 * c + b)
                    .filter(|&x| x < self.len())
                    .fold(0u32, |acc, x| acc | u32::from(self.get(x as Elem)) << (x % 4));
                char::from_digit(nibble, 16).expect("nibble < 16")
            })
            .collect()
    }

    pub fn from_hex(n: u32, hex: &str) -> Result<Self> {
        let hex = hex.trim();
        let hex = hex.strip_prefix("0x").unwrap_or(hex);
        let len = 1usize << n;
        let chars = (len / 4).max(1);
        if hex.len() != chars {
            return Err(Error::InvalidHex(format!(
                "expected {chars} hex digits for n = {n}, got {}",
                hex.len()
            )));
        }
        let mut out = Self::zero(n);
        for (c, ch) in hex.chars().enumerate() {
            let nibble = ch
                .to_digit(16)
                .ok_or_else(|| Error::InvalidHex(format!("bad digit {ch:?}")))?;
            for b in 0..4 {
                if (nibble >> b) & 1 == 1 {
                    let x = 4 * c + b as usize;
                    if x >= len {
                        return Err(Error::InvalidHex("bits set beyond 2^n".into()));
                    }
                    out.set(x as Elem, true);
                }
            }
        }
        Ok(out)
    }
}

/// f(x) = Tr(α x^d), with f(0) = 0.
///
/// `d = 2^n - 1` is accepted: x^(2^n - 1) is the indicator of the nonzero
/// elements, and over GF(4) it is also the exponent 2^1 + 1.
pub fn monomial(ctx: &FieldCtx, alpha: Elem, d: u64) -> Result<BoolFun> {
    let g = ctx.group_order();
    if d == 0 || d > g {
        return Err(Error::InvalidParameter(format!(
            "exponent {d} outside 0 < d <= {g}"
        )));
    }
    Ok(component(ctx, alpha, &power_table(ctx, d)))
}

/// Table of x ↦ x^d for d > 0.
pub fn power_table(ctx: &FieldCtx, d: u64) -> Vec<Elem> {
    (0..ctx.size() as Elem).map(|x| ctx.pow_u(x, d)).collect()
}

/// The component Tr(α F(x)) of a vectorial function given by its table.
pub fn component(ctx: &FieldCtx, alpha: Elem, table: &[Elem]) -> BoolFun {
    BoolFun::from_fn(ctx.n(), |x| ctx.trace(ctx.mul(alpha, table[x as usize])) == 1)
}

/// Table of x ↦ x^(2^i) (x + x^(2^k)) on GF(2^(2k)).
pub fn pott_binomial(ctx: &FieldCtx, i: u32) -> Result<Vec<Elem>> {
    let n = ctx.n();
    if n % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "the binomial needs an even degree, got {n}"
        )));
    }
    let k = n / 2;
    Ok((0..ctx.size() as Elem)
        .map(|x| ctx.mul(ctx.frobenius(x, i), x ^ ctx.frobenius(x, k)))
        .collect())
}

/// Exact Walsh spectrum indexed by field elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WalshSpectrum {
    pub n: u32,
    pub values: Vec<i64>,
}

impl WalshSpectrum {
    pub fn is_bent(&self) -> bool {
        self.n % 2 == 0 && {
            let h = 1i64 << (self.n / 2);
            self.values.iter().all(|v| v.abs() == h)
        }
    }

    /// Σ values² = 2^(2n).
    pub fn parseval_holds(&self) -> bool {
        let sum: i128 = self.values.iter().map(|&v| i128::from(v) * i128::from(v)).sum();
        sum == 1i128 << (2 * self.n)
    }

    pub fn max_abs(&self) -> i64 {
        self.values.iter().map(|v| v.abs()).max().unwrap_or(0)
    }
}

/// In-place unnormalised Walsh–Hadamard butterfly over bit-vector indices.
pub fn fwht<T>(data: &mut [T])
where
    T: Copy + Add<Output = T> + Sub<Output = T>,
{
    let len = data.len();
    debug_assert!(len.is_power_of_two());
    let mut h = 1;
    while h < len {
        for block in data.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
}

/// Spectrum over coordinate vectors: entry u is Σ_x (−1)^{f(x) + u·x}.
pub fn walsh_coordinates(f: &BoolFun) -> Vec<i64> {
    let mut data: Vec<i64> = f.bits().map(|b| 1 - 2 * i64::from(b)).collect();
    fwht(&mut data);
    data
}

pub fn walsh(f: &BoolFun, ctx: &FieldCtx) -> WalshSpectrum {
    assert_eq!(f.n(), ctx.n(), "function and field degrees differ");
    let raw = walsh_coordinates(f);
    let relabel = ctx.trace_relabel();
    WalshSpectrum {
        n: f.n(),
        values: relabel.iter().map(|&u| raw[u as usize]).collect(),
    }
}

/// Bentness does not depend on the labelling of the spectrum, so this skips
/// the relabelling step.
pub fn is_bent(f: &BoolFun) -> bool {
    let n = f.n();
    n % 2 == 0 && {
        let h = 1i64 << (n / 2);
        walsh_coordinates(f).iter().all(|v| v.abs() == h)
    }
}

/// The dual f̃ with f̂(λ) = 2^(n/2) (−1)^{f̃(λ)}.
pub fn dual(f: &BoolFun, ctx: &FieldCtx) -> Result<BoolFun> {
    let spec = walsh(f, ctx);
    if !spec.is_bent() {
        return Err(Error::NotBent);
    }
    Ok(BoolFun::from_fn(f.n(), |l| spec.values[l as usize] < 0))
}

/// One term Tr_1^{size}(coefficient · x^leader) of a trace representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceTerm {
    pub leader: u64,
    pub size: u32,
    pub coefficient: Elem,
}

/// f(x) = Σ_j Tr_1^{n_j}(F_j x^j) + F_top · x^(2^n − 1), over coset leaders j.
///
/// The leader-0 term is the constant f(0) (with x^0 = 1 everywhere); `top`
/// is the coefficient of x^(2^n − 1), which vanishes only at x = 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceRepr {
    pub n: u32,
    /// Nonzero terms, ascending by leader.
    pub terms: Vec<TraceTerm>,
    pub top: u8,
}

impl TraceRepr {
    /// Rebuilds the truth table.
    pub fn evaluate(&self, ctx: &FieldCtx) -> BoolFun {
        BoolFun::from_fn(self.n, |x| {
            let mut bit = if x != 0 { self.top } else { 0 };
            for t in &self.terms {
                let mono = if t.leader == 0 { 1 } else { ctx.pow_u(x, t.leader) };
                let y = ctx.mul(t.coefficient, mono);
                let tr = ctx
                    .subfield_trace(t.size, 1, y)
                    .expect("coefficients lie in GF(2^size)");
                bit ^= tr as u8;
            }
            bit == 1
        })
    }
}

/// Coefficients by inversion over the multiplicative group:
/// A_j = Σ_{x≠0} f(x) x^(−j), grouped by cyclotomic cosets.
pub fn trace_repr(f: &BoolFun, ctx: &FieldCtx) -> TraceRepr {
    assert_eq!(f.n(), ctx.n(), "function and field degrees differ");
    let g = ctx.group_order();
    let support: Vec<u64> = (1..ctx.size() as Elem)
        .filter(|&x| f.get(x) == 1)
        .map(|x| u64::from(ctx.log(x).expect("nonzero")))
        .collect();
    let coefficient = |j: u64| {
        support
            .iter()
            .fold(0, |acc, &l| acc ^ ctx.exp((g - (l * j) % g) % g))
    };

    let f0 = f.get(0);
    let a0 = (support.len() & 1) as u8;
    let mut terms = Vec::new();
    if f0 == 1 {
        terms.push(TraceTerm {
            leader: 0,
            size: 1,
            coefficient: 1,
        });
    }
    for coset in cyclotomic_cosets(ctx.n()).into_iter().skip(1) {
        let c = coefficient(coset.leader);
        if c != 0 {
            terms.push(TraceTerm {
                leader: coset.leader,
                size: coset.size(),
                coefficient: c,
            });
        }
    }
    TraceRepr {
        n: ctx.n(),
        terms,
        top: a0 ^ f0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_over_gf4() {
        let ctx = FieldCtx::new(2).unwrap();
        let w = ctx.generator();
        let f = monomial(&ctx, w, 3).unwrap();
        // indexed 0, 1, ω = 0b10, ω² = 0b11
        assert_eq!(f.bits().collect::<Vec<_>>(), vec![0, 1, 1, 1]);
        let spec = walsh(&f, &ctx);
        assert!(spec.values.iter().all(|v| v.abs() == 2));
        assert!(spec.is_bent());
        assert!(is_bent(&f));
    }

    #[test]
    fn zero_function_spectrum() {
        let ctx = FieldCtx::new(4).unwrap();
        let f = monomial(&ctx, 0, 3).unwrap();
        assert_eq!(f.weight(), 0);
        let spec = walsh(&f, &ctx);
        assert_eq!(spec.values[0], 16);
        assert!(spec.values[1..].iter().all(|&v| v == 0));
        assert!(!spec.is_bent());
        assert_eq!(dual(&f, &ctx), Err(Error::NotBent));
    }

    #[test]
    fn rejects_out_of_range_exponent() {
        let ctx = FieldCtx::new(4).unwrap();
        assert!(monomial(&ctx, 1, 0).is_err());
        assert!(monomial(&ctx, 1, 16).is_err());
        assert_eq!(monomial(&ctx, 1, 15).unwrap().weight(), 0, "Tr(1) = 0 in GF(16)");
        assert!(pott_binomial(&FieldCtx::new(5).unwrap(), 0).is_err());
    }

    #[test]
    fn pott_binomial_expansion() {
        let ctx = FieldCtx::new(4).unwrap();
        let t = pott_binomial(&ctx, 0).unwrap();
        for x in 0..16 {
            assert_eq!(t[x as usize], ctx.pow_u(x, 2) ^ ctx.pow_u(x, 5));
        }
        for x in ctx.subfield_elements(2).unwrap() {
            assert_eq!(t[x as usize], 0);
        }
    }

    #[test]
    fn hex_layout() {
        let ctx = FieldCtx::new(2).unwrap();
        let f = monomial(&ctx, ctx.generator(), 3).unwrap();
        assert_eq!(f.to_hex(), "e");
        assert_eq!(BoolFun::from_hex(2, "e").unwrap(), f);
        assert_eq!(BoolFun::from_hex(3, "0x1f").unwrap().bits().collect::<Vec<_>>(), vec![1, 0, 0, 0, 1, 1, 1, 1]);
        assert!(BoolFun::from_hex(3, "1").is_err());
        assert!(BoolFun::from_hex(1, "4").is_err());
        assert!(BoolFun::from_hex(2, "g").is_err());
    }

    #[test]
    fn trace_repr_of_a_monomial() {
        let ctx = FieldCtx::new(6).unwrap();
        let f = monomial(&ctx, 1, 3).unwrap();
        let r = trace_repr(&f, &ctx);
        assert_eq!(
            r.terms,
            vec![TraceTerm {
                leader: 3,
                size: 6,
                coefficient: 1
            }]
        );
        assert_eq!(r.top, 0);
        assert_eq!(r.evaluate(&ctx), f);
    }

    #[test]
    fn trace_repr_of_constant_one() {
        let ctx = FieldCtx::new(4).unwrap();
        let f = BoolFun::from_fn(4, |_| true);
        let r = trace_repr(&f, &ctx);
        assert_eq!(r.terms.len(), 1);
        assert_eq!(r.terms[0].leader, 0);
        assert_eq!(r.top, 0);
        assert_eq!(r.evaluate(&ctx), f);
    }

    #[test]
    fn indicator_of_zero_uses_top_term() {
        let ctx = FieldCtx::new(4).unwrap();
        let f = BoolFun::from_fn(4, |x| x == 0);
        let r = trace_repr(&f, &ctx);
        assert_eq!(r.top, 1);
        assert_eq!(r.evaluate(&ctx), f);
    }
}
