//! Binary weights of integers modulo 2^n - 1.
//!
//! All modular integers live on representatives in `[0, 2^n - 1)`; in
//! particular `2^n - 1` itself reduces to 0 and has weight 0.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2n::{gcd, Elem, FieldCtx, MAX_DEGREE};

fn modulus(n: u32) -> u64 {
    (1u64 << n) - 1
}

/// Representative of `j` in `[0, 2^n - 1)`.
pub fn reduce(j: i64, n: u32) -> u64 {
    j.rem_euclid(modulus(n) as i64) as u64
}

/// Binary weight of the representative of `j` modulo 2^n - 1.
pub fn wt_mod(j: i64, n: u32) -> u32 {
    reduce(j, n).count_ones()
}

/// V_d(j) = wt(j) + wt(-j d), weights taken modulo 2^n - 1.
pub fn v_d(d: u64, j: u64, n: u32) -> u32 {
    let m = modulus(n);
    let jr = j % m;
    let jd = ((u128::from(jr) * u128::from(d % m)) % u128::from(m)) as u64;
    jr.count_ones() + ((m - jd) % m).count_ones()
}

/// Weight profile of an exponent `d` over GF(2^n), n even.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExponentProfile {
    pub n: u32,
    pub d: u64,
    /// Minimum of V_d(j) over 0 < j < 2^n - 1.
    pub min_v: u32,
    /// Every j attaining `min_v`, ascending.
    pub j_set: Vec<u64>,
    /// Whether j d ≡ 0 mod 2^n - 1 for every j in `j_set`.
    pub all_jd_zero: bool,
    /// Whether 2^k + 1 divides d.
    pub divisible_2k1: bool,
    /// d / (2^k + 1) when divisible.
    pub s_value: Option<u64>,
    /// gcd(s, 2^k - 1) = 1 when divisible.
    pub s_coprime: Option<bool>,
}

impl ExponentProfile {
    pub fn k(&self) -> u32 {
        self.n / 2
    }

    /// Both halves of the weight condition: the minimum equals k and every
    /// minimiser annihilates d.
    pub fn meets_weight_condition(&self) -> bool {
        self.min_v == self.k() && self.all_jd_zero
    }
}

/// Scans every 0 < j < 2^n - 1 for the minimum of V_d and its minimisers.
pub fn exponent_profile(d: u64, n: u32) -> Result<ExponentProfile> {
    if n == 0 || n % 2 != 0 || n > MAX_DEGREE {
        return Err(Error::InvalidParameter(format!(
            "exponent profiles need an even degree in 2..={MAX_DEGREE}, got {n}"
        )));
    }
    let m = modulus(n);
    if d == 0 || d >= m {
        return Err(Error::InvalidParameter(format!(
            "exponent {d} outside 0 < d < {m}"
        )));
    }

    let min_v = (1..m)
        .into_par_iter()
        .map(|j| v_d(d, j, n))
        .min()
        .expect("range is nonempty for n >= 2");
    let j_set: Vec<u64> = (1..m)
        .into_par_iter()
        .filter(|&j| v_d(d, j, n) == min_v)
        .collect();
    let all_jd_zero = j_set
        .iter()
        .all(|&j| (u128::from(j) * u128::from(d)) % u128::from(m) == 0);

    let k = n / 2;
    let q = (1u64 << k) + 1;
    let divisible_2k1 = d % q == 0;
    let s_value = divisible_2k1.then_some(d / q);
    let s_coprime = s_value.map(|s| gcd(s, (1u64 << k) - 1) == 1);

    Ok(ExponentProfile {
        n,
        d,
        min_v,
        j_set,
        all_jd_zero,
        divisible_2k1,
        s_value,
        s_coprime,
    })
}

/// Π_d(α) = Σ_{j ∈ J_d} α^j evaluated in the field.
pub fn pi_d(ctx: &FieldCtx, profile: &ExponentProfile, alpha: Elem) -> Result<Elem> {
    if ctx.n() != profile.n {
        return Err(Error::InvalidParameter(format!(
            "profile is for n = {} but the field has n = {}",
            profile.n,
            ctx.n()
        )));
    }
    Ok(profile
        .j_set
        .iter()
        .fold(0, |acc, &j| acc ^ ctx.pow_u(alpha, j)))
}

/// A 2-cyclotomic coset modulo 2^n - 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coset {
    pub leader: u64,
    /// Orbit in generation order: leader, 2·leader, 4·leader, ...
    pub members: Vec<u64>,
}

impl Coset {
    pub fn size(&self) -> u32 {
        self.members.len() as u32
    }
}

/// Orbit of `j` under doubling modulo 2^n - 1, starting from `j` itself.
pub fn coset_of(j: u64, n: u32) -> Vec<u64> {
    let m = modulus(n);
    let start = j % m;
    let mut out = vec![start];
    let mut cur = (2 * start) % m;
    while cur != start {
        out.push(cur);
        cur = (2 * cur) % m;
    }
    out
}

/// Smallest member of the coset containing `j`.
pub fn coset_leader(j: u64, n: u32) -> u64 {
    coset_of(j, n).into_iter().min().expect("orbits are nonempty")
}

/// Partition of `{0, ..., 2^n - 2}` into cosets, ordered by leader.
pub fn cyclotomic_cosets(n: u32) -> Vec<Coset> {
    let m = modulus(n);
    let mut seen = vec![false; m as usize];
    let mut out = Vec::new();
    for t in 0..m {
        if seen[t as usize] {
            continue;
        }
        let members = coset_of(t, n);
        for &x in &members {
            seen[x as usize] = true;
        }
        out.push(Coset { leader: t, members });
    }
    out
}

/// The cyclic carry sequence of h ≡ f + g mod 2^n - 1.
///
/// Bit `i` satisfies `h_i + 2 c_i = f_i + g_i + c_{i-1}`, indices cyclic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CarryTrace {
    pub n: u32,
    pub f: u64,
    pub g: u64,
    pub h: u64,
    /// c_0, ..., c_{n-1}.
    pub carries: Vec<u8>,
}

impl CarryTrace {
    /// Runs the recurrence with `c_{-1} = seed` and keeps the result only if
    /// the final carry closes the cycle. `h` may come out as 2^n - 1 here.
    pub fn from_seed(f: u64, g: u64, n: u32, seed: u8) -> Option<CarryTrace> {
        let mut prev = seed;
        let mut h = 0;
        let mut carries = Vec::with_capacity(n as usize);
        for i in 0..n {
            let s = ((f >> i) & 1) as u8 + ((g >> i) & 1) as u8 + prev;
            h |= u64::from(s & 1) << i;
            prev = s >> 1;
            carries.push(prev);
        }
        (prev == seed).then_some(CarryTrace { n, f, g, h, carries })
    }

    pub fn carry_weight(&self) -> u32 {
        self.carries.iter().map(|&c| u32::from(c)).sum()
    }

    /// Whether the recurrence holds at every bit, cyclically.
    pub fn recurrence_holds(&self) -> bool {
        let n = self.n as usize;
        (0..n).all(|i| {
            let prev = self.carries[(i + n - 1) % n];
            let lhs = ((self.h >> i) & 1) as u8 + 2 * self.carries[i];
            let rhs = ((self.f >> i) & 1) as u8 + ((self.g >> i) & 1) as u8 + prev;
            lhs == rhs
        })
    }

    /// wt(f) + wt(g) = wt(h) + wt(c).
    pub fn weight_identity_holds(&self) -> bool {
        self.f.count_ones() + self.g.count_ones() == self.h.count_ones() + self.carry_weight()
    }
}

/// Modular addition with its carry sequence, `0 <= f, g < 2^n - 1`.
///
/// Both carry seeds are tried; exactly one yields a consistent cycle with
/// `h` in the representative range. When f + g = 2^n - 1 the zero seed
/// produces h = 2^n - 1, which is rejected in favour of h = 0 with all
/// carries set.
pub fn add_with_carry(f: u64, g: u64, n: u32) -> Result<CarryTrace> {
    if n == 0 || n > 63 {
        return Err(Error::InvalidParameter(format!("degree {n} out of range")));
    }
    let m = modulus(n);
    if f >= m || g >= m {
        return Err(Error::InvalidParameter(format!(
            "operands must lie in [0, {m}), got f = {f}, g = {g}"
        )));
    }
    let mut found = [0u8, 1]
        .into_iter()
        .filter_map(|seed| CarryTrace::from_seed(f, g, n, seed))
        .filter(|t| t.h < m);
    let trace = found.next().expect("some carry seed is consistent");
    debug_assert!(found.next().is_none());
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_modulo() {
        assert_eq!(wt_mod(0, 4), 0);
        assert_eq!(wt_mod(-3, 4), 2);
        assert_eq!(wt_mod(15, 4), 0);
        assert_eq!(wt_mod(16, 4), 1);
        for j in 1..=8 {
            assert_eq!(wt_mod(7 * j, 6), 3);
        }
    }

    #[test]
    fn v_d_examples() {
        assert_eq!(v_d(3, 5, 4), 2);
        assert_eq!(v_d(7, 9, 6), 2);
        for j in 1..15 {
            assert!(v_d(6, j, 4) >= 1);
        }
    }

    #[test]
    fn gold_profile_at_n4() {
        let p = exponent_profile(3, 4).unwrap();
        assert_eq!(p.min_v, 2);
        assert_eq!(p.j_set, vec![5, 10]);
        assert!(p.all_jd_zero);
        assert!(!p.divisible_2k1);
        assert!(p.meets_weight_condition());
    }

    #[test]
    fn dillon_profile_at_n6() {
        let p = exponent_profile(7, 6).unwrap();
        assert_eq!(p.min_v, 2);
        assert_eq!(p.j_set, vec![9, 18, 36]);
        assert!(p.all_jd_zero);
    }

    #[test]
    fn divisibility_fields() {
        let p = exponent_profile(45, 6).unwrap();
        assert!(p.divisible_2k1);
        assert_eq!(p.s_value, Some(5));
        assert_eq!(p.s_coprime, Some(true));
        let p = exponent_profile(27, 6).unwrap();
        assert_eq!(p.s_value, Some(3));
        assert_eq!(p.s_coprime, Some(true));
        let p = exponent_profile(51, 8).unwrap();
        assert_eq!(p.s_value, Some(3));
        assert_eq!(p.s_coprime, Some(false));
        let p = exponent_profile(45, 8).unwrap();
        assert!(!p.divisible_2k1);
        assert_eq!(p.s_value, None);
    }

    #[test]
    fn profile_rejects_bad_input() {
        assert!(exponent_profile(3, 5).is_err());
        assert!(exponent_profile(0, 4).is_err());
        assert!(exponent_profile(15, 4).is_err());
    }

    #[test]
    fn pi_d_at_zero_vanishes() {
        let ctx = FieldCtx::new(4).unwrap();
        let p = exponent_profile(3, 4).unwrap();
        assert_eq!(pi_d(&ctx, &p, 0), Ok(0));
        assert!(pi_d(&FieldCtx::new(6).unwrap(), &p, 1).is_err());
    }

    #[test]
    fn cosets_small() {
        let c2 = cyclotomic_cosets(2);
        assert_eq!(c2.len(), 2);
        assert_eq!(c2[0].members, vec![0]);
        assert_eq!(c2[1].members, vec![1, 2]);

        let c4 = cyclotomic_cosets(4);
        let leaders: Vec<u64> = c4.iter().map(|c| c.leader).collect();
        assert_eq!(leaders, vec![0, 1, 3, 5, 7]);
        assert_eq!(c4[3].members, vec![5, 10]);
        assert_eq!(c4.iter().map(|c| c.size()).sum::<u32>(), 15);
        for c in &c4 {
            assert_eq!(4 % c.size(), 0);
        }
    }

    #[test]
    fn carry_examples() {
        let t = add_with_carry(9, 3, 4).unwrap();
        assert_eq!(t.h, 12);
        assert_eq!(t.carries, vec![1, 1, 0, 0]);
        assert!(t.weight_identity_holds());

        let t = add_with_carry(5, 10, 4).unwrap();
        assert_eq!(t.h, 0);
        assert_eq!(t.carries, vec![1, 1, 1, 1]);
        assert_eq!(t.carry_weight(), 4);

        let t = add_with_carry(0, 0, 7).unwrap();
        assert_eq!(t.h, 0);
        assert_eq!(t.carry_weight(), 0);

        assert!(add_with_carry(15, 0, 4).is_err());
    }
}
