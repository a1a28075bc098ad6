//! Table-driven arithmetic in the binary field GF(2^n), 1 <= n <= 24.
//!
//! Elements are `n`-bit integers in the polynomial basis: bit `i` is the
//! coefficient of `x^i`. Multiplication goes through discrete-log tables
//! built from a primitive element, so every operation after construction is
//! a handful of table lookups.
//!
//! Default moduli are the lexicographically smallest primitive polynomials
//! (so `x` itself generates the multiplicative group):
//!
//! | n  | modulus     | n  | modulus     | n  | modulus      |
//! |----|-------------|----|-------------|----|--------------|
//! | 1  | `0x3`       | 9  | `0x211`     | 17 | `0x20009`    |
//! | 2  | `0x7`       | 10 | `0x409`     | 18 | `0x40027`    |
//! | 3  | `0xb`       | 11 | `0x805`     | 19 | `0x80027`    |
//! | 4  | `0x13`      | 12 | `0x1053`    | 20 | `0x100009`   |
//! | 5  | `0x25`      | 13 | `0x201b`    | 21 | `0x200005`   |
//! | 6  | `0x43`      | 14 | `0x402b`    | 22 | `0x400003`   |
//! | 7  | `0x83`      | 15 | `0x8003`    | 23 | `0x800021`   |
//! | 8  | `0x11d`     | 16 | `0x1002d`   | 24 | `0x100001b`  |
//!
//! The table is checked against the search in the test suite; reports embed
//! the modulus so that results stay reproducible if it ever changes.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// A field element in polynomial-basis integer encoding.
pub type Elem = u32;

pub const MAX_DEGREE: u32 = 24;

/// A concrete GF(2^n) together with its log/exp tables.
#[derive(Clone)]
pub struct FieldCtx {
    n: u32,
    modulus: u32,
    generator: Elem,
    exp: Vec<Elem>,
    log: Vec<u32>,
    trace_mask: u32,
    relabel: OnceLock<Vec<u32>>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("n", &self.n)
            .field("modulus", &format_args!("{:#x}", self.modulus))
            .field("generator", &format_args!("{:#x}", self.generator))
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.modulus == other.modulus && self.generator == other.generator
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    /// Builds GF(2^n) over the default (smallest primitive) modulus.
    pub fn new(n: u32) -> Result<Self> {
        check_degree(n)?;
        let modulus = default_modulus(n);
        Self::build(n, modulus)
    }

    /// Builds GF(2^n) over a caller-supplied irreducible modulus.
    ///
    /// The modulus need not be primitive: when `x` does not generate the
    /// multiplicative group the smallest element that does is used instead.
    pub fn with_modulus(n: u32, modulus: u64) -> Result<Self> {
        check_degree(n)?;
        if modulus >> n != 1 || modulus & 1 == 0 || !poly::is_irreducible(modulus, n) {
            return Err(Error::InvalidModulus { n, modulus });
        }
        Self::build(n, modulus as u32)
    }

    /// `build_field`: optional modulus, default when absent.
    pub fn build_field(n: u32, modulus: Option<u64>) -> Result<Self> {
        match modulus {
            Some(m) => Self::with_modulus(n, m),
            None => Self::new(n),
        }
    }

    fn build(n: u32, modulus: u32) -> Result<Self> {
        let m = u64::from(modulus);
        let group = (1u64 << n) - 1;
        let primes = prime_factors(group);
        let generator = (1..1u64 << n)
            .find(|&c| poly::has_order(c, group, &primes, m, n))
            .ok_or(Error::InvalidModulus { n, modulus: m })? as Elem;

        let size = 1usize << n;
        let mut exp = vec![0; group as usize];
        let mut log = vec![u32::MAX; size];
        let mut acc: u64 = 1;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = acc as Elem;
            log[acc as usize] = i as u32;
            acc = poly::mulmod(acc, u64::from(generator), m, n);
        }
        debug_assert_eq!(acc, 1);

        let mut ctx = FieldCtx {
            n,
            modulus,
            generator,
            exp,
            log,
            trace_mask: 0,
            relabel: OnceLock::new(),
        };
        let mut mask = 0;
        for i in 0..n {
            let bit = ctx.frobenius_sum(1 << i, 1, n);
            debug_assert!(bit <= 1);
            mask |= bit << i;
        }
        ctx.trace_mask = mask;
        Ok(ctx)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of field elements, 2^n.
    pub fn size(&self) -> usize {
        1 << self.n
    }

    /// Order of the multiplicative group, 2^n - 1.
    pub fn group_order(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn modulus_hex(&self) -> String {
        format!("{:#x}", self.modulus)
    }

    pub fn generator_hex(&self) -> String {
        format!("{:#x}", self.generator)
    }

    /// `generator^i`, with `i` taken modulo 2^n - 1.
    #[inline]
    pub fn exp(&self, i: u64) -> Elem {
        self.exp[(i % self.group_order()) as usize]
    }

    /// Discrete logarithm to the base of the generator; `None` for zero.
    #[inline]
    pub fn log(&self, a: Elem) -> Option<u32> {
        match a {
            0 => None,
            _ => Some(self.log[a as usize]),
        }
    }

    #[inline]
    fn log_nz(&self, a: Elem) -> u64 {
        u64::from(self.log[a as usize])
    }

    #[inline]
    fn exp_reduced(&self, i: u64) -> Elem {
        let g = self.group_order();
        self.exp[if i >= g { i - g } else { i } as usize]
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        a ^ b
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp_reduced(self.log_nz(a) + self.log_nz(b))
    }

    #[inline]
    pub fn square(&self, a: Elem) -> Elem {
        self.mul(a, a)
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let g = self.group_order();
        Ok(self.exp[((g - self.log_nz(a)) % g) as usize])
    }

    /// `a^e` for any signed exponent. Nonzero bases reduce `e` modulo
    /// 2^n - 1; a zero base requires `e > 0`.
    pub fn pow(&self, a: Elem, e: i64) -> Result<Elem> {
        if a == 0 {
            return if e > 0 { Ok(0) } else { Err(Error::DivisionByZero) };
        }
        let g = self.group_order() as i128;
        let r = (i128::from(self.log_nz(a) as i64) * i128::from(e)).rem_euclid(g);
        Ok(self.exp[r as usize])
    }

    /// `a^e` for a positive exponent; `0^e = 0`.
    #[inline]
    pub fn pow_u(&self, a: Elem, e: u64) -> Elem {
        if a == 0 {
            return 0;
        }
        let g = self.group_order();
        self.exp[((self.log_nz(a) * (e % g)) % g) as usize]
    }

    /// `a^(2^t)`.
    #[inline]
    pub fn frobenius(&self, a: Elem, t: u32) -> Elem {
        if a == 0 {
            return 0;
        }
        let g = self.group_order();
        let shift = pow2_mod(t, g);
        self.exp[((self.log_nz(a) * shift) % g) as usize]
    }

    /// Absolute trace Tr_1^n(a) as a bit.
    #[inline]
    pub fn trace(&self, a: Elem) -> u8 {
        ((a & self.trace_mask).count_ones() & 1) as u8
    }

    /// Relative trace Tr_m^n(a) = sum of a^(2^(m i)) for i < n/m.
    pub fn rel_trace(&self, m: u32, a: Elem) -> Result<Elem> {
        if m == 0 || self.n % m != 0 {
            return Err(Error::InvalidSubfield { n: self.n, m });
        }
        Ok(self.frobenius_sum(a, m, self.n / m))
    }

    /// Trace from the subfield GF(2^outer) down to GF(2^inner), for an element
    /// of GF(2^outer) embedded in this field.
    pub fn subfield_trace(&self, outer: u32, inner: u32, a: Elem) -> Result<Elem> {
        if outer == 0 || self.n % outer != 0 {
            return Err(Error::InvalidSubfield { n: self.n, m: outer });
        }
        if inner == 0 || outer % inner != 0 {
            return Err(Error::InvalidSubfield { n: outer, m: inner });
        }
        if !self.in_subfield(outer, a) {
            return Err(Error::InvalidParameter(format!(
                "{a:#x} does not lie in GF(2^{outer})"
            )));
        }
        Ok(self.frobenius_sum(a, inner, outer / inner))
    }

    fn frobenius_sum(&self, a: Elem, step: u32, terms: u32) -> Elem {
        let mut acc = 0;
        let mut y = a;
        for _ in 0..terms {
            acc ^= y;
            y = self.frobenius(y, step);
        }
        acc
    }

    /// Smallest t > 0 with a^(2^t) = a.
    pub fn frobenius_order(&self, a: Elem) -> u32 {
        if a == 0 {
            return 1;
        }
        let g = self.group_order();
        let l = self.log_nz(a);
        (1..=self.n)
            .find(|&t| (l * pow2_mod(t, g)) % g == l)
            .expect("a^(2^n) = a for every element")
    }

    /// Whether `a` lies in the subfield GF(2^m); false when m does not divide n.
    pub fn in_subfield(&self, m: u32, a: Elem) -> bool {
        m != 0 && self.n % m == 0 && m % self.frobenius_order(a) == 0
    }

    /// The elements of GF(2^m) inside this field, in increasing encoding order.
    pub fn subfield_elements(&self, m: u32) -> Result<Vec<Elem>> {
        if m == 0 || self.n % m != 0 {
            return Err(Error::InvalidSubfield { n: self.n, m });
        }
        let g = self.group_order();
        let step = g / ((1u64 << m) - 1);
        let mut out: Vec<Elem> = std::iter::once(0)
            .chain((0..(1u64 << m) - 1).map(|i| self.exp[(i * step) as usize]))
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Whether `a` is a d-th power of some field element. Zero counts as one.
    pub fn is_dth_power(&self, a: Elem, d: u64) -> bool {
        match self.log(a) {
            None => true,
            Some(l) => u64::from(l) % gcd(d, self.group_order()) == 0,
        }
    }

    /// Map λ ↦ u(λ) with bit i of u(λ) equal to Tr(λ x^i).
    ///
    /// Under this map Tr(λ y) is the GF(2) inner product of u(λ) with the
    /// coordinate vector of y, which lets a Walsh spectrum computed over bit
    /// vectors be relabelled by field elements. Built on first use.
    pub fn trace_relabel(&self) -> &[u32] {
        self.relabel.get_or_init(|| {
            let cols: Vec<u32> = (0..self.n)
                .map(|j| {
                    (0..self.n).fold(0u32, |acc, i| {
                        acc | u32::from(self.trace(self.mul(1 << j, 1 << i))) << i
                    })
                })
                .collect();
            let mut map = vec![0u32; self.size()];
            for lambda in 1..self.size() {
                let low = lambda.trailing_zeros() as usize;
                map[lambda] = map[lambda & (lambda - 1)] ^ cols[low];
            }
            map
        })
    }
}

/// Field homomorphism GF(2^m) → GF(2^n) for m | n, sending the small
/// field's `x` to a root of its modulus in the big field.
#[derive(Debug, Clone)]
pub struct SubfieldEmbedding {
    small_n: u32,
    big_n: u32,
    image: Vec<Elem>,
    preimage: HashMap<Elem, Elem>,
}

impl SubfieldEmbedding {
    pub fn new(small: &FieldCtx, big: &FieldCtx) -> Result<Self> {
        let (m, n) = (small.n(), big.n());
        if n % m != 0 {
            return Err(Error::InvalidSubfield { n, m });
        }
        let eval = |y: Elem| {
            (0..=m).rev().fold(0, |acc, i| {
                big.mul(acc, y) ^ ((small.modulus() >> i) & 1)
            })
        };
        let root = big
            .subfield_elements(m)?
            .into_iter()
            .find(|&y| eval(y) == 0)
            .expect("an irreducible polynomial of degree m splits in GF(2^m)");

        let powers: Vec<Elem> = (0..m).map(|i| big.pow(root, i64::from(i)).expect("root is nonzero")).collect();
        let mut image = vec![0; small.size()];
        let mut preimage = HashMap::with_capacity(small.size());
        for a in 0..small.size() as Elem {
            let b = (0..m)
                .filter(|i| (a >> i) & 1 == 1)
                .fold(0, |acc, i| acc ^ powers[i as usize]);
            image[a as usize] = b;
            preimage.insert(b, a);
        }
        Ok(SubfieldEmbedding {
            small_n: m,
            big_n: n,
            image,
            preimage,
        })
    }

    pub fn small_degree(&self) -> u32 {
        self.small_n
    }

    pub fn big_degree(&self) -> u32 {
        self.big_n
    }

    #[inline]
    pub fn map(&self, a: Elem) -> Elem {
        self.image[a as usize]
    }

    /// Inverse image of `b`, when `b` lies in the embedded subfield.
    pub fn preimage(&self, b: Elem) -> Option<Elem> {
        self.preimage.get(&b).copied()
    }
}

fn check_degree(n: u32) -> Result<()> {
    if (1..=MAX_DEGREE).contains(&n) {
        Ok(())
    } else {
        Err(Error::DegreeOutOfRange(n))
    }
}

/// Smallest primitive polynomial of degree n, as an (n+1)-bit integer.
pub fn default_modulus(n: u32) -> u32 {
    let group = (1u64 << n) - 1;
    let primes = prime_factors(group);
    ((1u64 << n) | 1..1u64 << (n + 1))
        .step_by(2)
        .find(|&m| poly::is_irreducible(m, n) && poly::has_order(2, group, &primes, m, n))
        .expect("primitive polynomials exist in every degree") as u32
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn prime_factors(mut v: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= v {
        if v % p == 0 {
            out.push(p);
            while v % p == 0 {
                v /= p;
            }
        }
        p += 1;
    }
    if v > 1 {
        out.push(v);
    }
    out
}

/// 2^t mod g.
#[inline]
fn pow2_mod(t: u32, g: u64) -> u64 {
    if g == 1 {
        return 0;
    }
    // 2^n = 1 mod 2^n - 1
    let n = 64 - g.leading_zeros();
    (1u64 << (t % n)) % g
}

/// Polynomials over GF(2) packed into `u64`, used only while building tables.
mod poly {
    pub(super) fn mulmod(mut a: u64, mut b: u64, m: u64, n: u32) -> u64 {
        let mut r = 0;
        while b != 0 {
            if b & 1 == 1 {
                r ^= a;
            }
            b >>= 1;
            a <<= 1;
            if (a >> n) & 1 == 1 {
                a ^= m;
            }
        }
        r
    }

    pub(super) fn powmod(mut a: u64, mut e: u64, m: u64, n: u32) -> u64 {
        let mut r = 1;
        while e != 0 {
            if e & 1 == 1 {
                r = mulmod(r, a, m, n);
            }
            a = mulmod(a, a, m, n);
            e >>= 1;
        }
        r
    }

    fn degree(p: u64) -> i32 {
        63 - p.leading_zeros() as i32
    }

    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let mut r = a;
            while r != 0 && degree(r) >= degree(b) {
                r ^= b << (degree(r) - degree(b));
            }
            (a, b) = (b, r);
        }
        a
    }

    /// x^(2^t) mod m.
    fn x_pow2(t: u32, m: u64, n: u32) -> u64 {
        let mut y = mulmod(1, 2, m, n);
        for _ in 0..t {
            y = mulmod(y, y, m, n);
        }
        y
    }

    /// Rabin's test: m is irreducible of degree n iff x^(2^n) = x mod m and
    /// gcd(x^(2^(n/p)) - x, m) = 1 for every prime p | n.
    pub(super) fn is_irreducible(m: u64, n: u32) -> bool {
        if degree(m) != n as i32 {
            return false;
        }
        let x = mulmod(1, 2, m, n);
        if x_pow2(n, m, n) != x {
            return false;
        }
        super::prime_factors(u64::from(n))
            .into_iter()
            .all(|p| gcd(m, x_pow2(n / p as u32, m, n) ^ x) == 1)
    }

    /// Whether `c` has multiplicative order exactly `group` modulo m.
    pub(super) fn has_order(c: u64, group: u64, primes: &[u64], m: u64, n: u32) -> bool {
        let c = mulmod(c, 1, m, n);
        c != 0
            && powmod(c, group, m, n) == 1
            && primes.iter().all(|&p| powmod(c, group / p, m, n) != 1)
    }
}
