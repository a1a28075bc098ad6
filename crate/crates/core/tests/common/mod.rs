//! Slow reference implementations shared by the integration tests. None of
//! them touch the log/exp tables or the butterfly.
#![allow(dead_code)]

use monobent::gf2n::{default_modulus, Elem};

/// Shift-and-add multiplication reduced by `modulus`.
pub fn mul(a: u32, b: u32, modulus: u32, n: u32) -> u32 {
    let (mut a, mut b, mut acc) = (a, b, 0u32);
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a >> n & 1 == 1 {
            a ^= modulus;
        }
    }
    acc
}

pub fn pow(a: u32, mut e: u64, modulus: u32, n: u32) -> u32 {
    let (mut base, mut acc) = (a, 1u32);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, base, modulus, n);
        }
        base = mul(base, base, modulus, n);
        e >>= 1;
    }
    acc
}

/// a + a^2 + ... + a^(2^(n-1)), which lands in {0, 1}.
pub fn trace(a: u32, modulus: u32, n: u32) -> u8 {
    let (mut t, mut x) = (0u32, a);
    for _ in 0..n {
        t ^= x;
        x = mul(x, x, modulus, n);
    }
    assert!(t <= 1, "absolute trace left GF(2)");
    t as u8
}

/// Σ_{i<n/m} a^(2^(m i)).
pub fn rel_trace(a: u32, m: u32, modulus: u32, n: u32) -> u32 {
    let (mut t, mut x) = (0u32, a);
    for _ in 0..n / m {
        t ^= x;
        for _ in 0..m {
            x = mul(x, x, modulus, n);
        }
    }
    t
}

pub fn inv(a: u32, modulus: u32, n: u32) -> u32 {
    pow(a, (1u64 << n) - 2, modulus, n)
}

/// Field-labelled Walsh value by the double sum
/// Σ_x (−1)^{f(x) + Tr(λ x)}.
pub fn walsh_direct(table: &[u8], lambda: u32, modulus: u32, n: u32) -> i64 {
    (0..1u32 << n)
        .map(|x| {
            let e = table[x as usize] ^ trace(mul(lambda, x, modulus, n), modulus, n);
            1 - 2 * i64::from(e)
        })
        .sum()
}

pub fn spectrum_direct(table: &[u8], modulus: u32, n: u32) -> Vec<i64> {
    (0..1u32 << n)
        .map(|l| walsh_direct(table, l, modulus, n))
        .collect()
}

pub fn bent_direct(table: &[u8], modulus: u32, n: u32) -> bool {
    let h = 1i64 << (n / 2);
    n % 2 == 0 && (0..1u32 << n).all(|l| walsh_direct(table, l, modulus, n).abs() == h)
}

/// Truth table of Tr(α x^d).
pub fn monomial_table(alpha: u32, d: u64, modulus: u32, n: u32) -> Vec<u8> {
    (0..1u32 << n)
        .map(|x| {
            let y = if x == 0 { 0 } else { pow(x, d, modulus, n) };
            trace(mul(alpha, y, modulus, n), modulus, n)
        })
        .collect()
}

/// The set {y^d : y ∈ GF(2^n)*}.
pub fn dth_powers(d: u64, modulus: u32, n: u32) -> Vec<bool> {
    let mut hit = vec![false; 1 << n];
    for y in 1..1u32 << n {
        hit[pow(y, d, modulus, n) as usize] = true;
    }
    hit
}

/// Hamming weight of the representative of j in [0, 2^n − 1).
pub fn wt_mod(j: i128, n: u32) -> u32 {
    let m = (1i128 << n) - 1;
    j.rem_euclid(m).count_ones()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Σ_{x ≠ 0} (−1)^{Tr(αx + 1/x)} over GF(2^k) with the default modulus.
pub fn kloosterman(alpha: u32, k: u32) -> i64 {
    let m = default_modulus(k);
    (1..1u32 << k)
        .map(|x| {
            let e = trace(mul(alpha, x, m, k) ^ inv(x, m, k), m, k);
            1 - 2 * i64::from(e)
        })
        .sum()
}

/// Non-bent component set of the vectorial function given by `table`.
pub fn s_f_direct(table: &[Elem], modulus: u32, n: u32) -> Vec<u32> {
    (0..1u32 << n)
        .filter(|&a| {
            let f: Vec<u8> = table
                .iter()
                .map(|&y| trace(mul(a, y, modulus, n), modulus, n))
                .collect();
            !bent_direct(&f, modulus, n)
        })
        .collect()
}

/// The 2-cyclotomic coset of j modulo 2^n − 1, ascending.
pub fn coset(j: u64, n: u32) -> Vec<u64> {
    let m = (1u64 << n) - 1;
    let mut out: Vec<u64> = (0..n).map(|i| (j << i) % m).collect();
    out.sort_unstable();
    out.dedup();
    out
}
