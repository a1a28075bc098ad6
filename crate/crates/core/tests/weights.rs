mod common;

use monobent::gf2n::FieldCtx;
use monobent::weights::{
    add_with_carry, coset_leader, coset_of, cyclotomic_cosets, exponent_profile, pi_d, v_d,
    wt_mod, CarryTrace,
};
use proptest::prelude::*;

#[test]
fn dillon_exponent_profile() {
    for k in 3..=7u32 {
        let n = 2 * k;
        let p = exponent_profile((1 << k) - 1, n).unwrap();
        assert_eq!(p.min_v, 2, "k = {k}");
        let q = (1u64 << k) + 1;
        let mut want: Vec<u64> = (0..k).map(|i| q << i).collect();
        want.sort_unstable();
        assert_eq!(p.j_set, want);
        assert!(p.all_jd_zero);
    }
}

#[test]
fn gold_profile_meets_the_condition() {
    for n in [4u32, 6, 8, 10] {
        let p = exponent_profile(3, n).unwrap();
        assert!(p.meets_weight_condition(), "n = {n}: {p:?}");
    }
}

#[test]
fn pi_d_over_the_dillon_profile_is_the_small_trace() {
    let big = FieldCtx::new(6).unwrap();
    let small = FieldCtx::new(3).unwrap();
    let emb = monobent::gf2n::SubfieldEmbedding::new(&small, &big).unwrap();
    let p = exponent_profile(7, 6).unwrap();
    for a in 0..8 {
        let got = pi_d(&big, &p, emb.map(a)).unwrap();
        assert_eq!(got, u32::from(small.trace(a)), "a = {a}");
    }
}

#[test]
fn pi_d_over_gold_profile_at_non_cubes() {
    let ctx = FieldCtx::new(4).unwrap();
    let p = exponent_profile(3, 4).unwrap();
    let cubes = common::dth_powers(3, ctx.modulus(), 4);
    let non_cubes: Vec<u32> = (1..16).filter(|&a| !cubes[a as usize]).collect();
    assert_eq!(non_cubes.len(), 10);
    for a in non_cubes {
        assert_eq!(pi_d(&ctx, &p, a).unwrap(), 1);
    }
    assert_eq!(pi_d(&ctx, &p, 0).unwrap(), 0);
    assert!(pi_d(&FieldCtx::new(6).unwrap(), &p, 1).is_err());
}

#[test]
fn multiples_of_2k_minus_1_have_weight_k() {
    for k in 2..=12u32 {
        let n = 2 * k;
        for j in 1..=(1u64 << k) {
            let v = j * ((1 << k) - 1);
            assert_eq!(wt_mod(v as i64, n), k, "k = {k}, j = {j}");
        }
    }
}

#[test]
fn cosets_partition_the_residues() {
    for n in 1..=12u32 {
        let m = (1u64 << n) - 1;
        let cosets = cyclotomic_cosets(n);
        let mut all: Vec<u64> = cosets.iter().flat_map(|c| c.members.clone()).collect();
        all.sort_unstable();
        assert_eq!(all, (0..m.max(1)).collect::<Vec<_>>(), "n = {n}");
        for c in &cosets {
            assert_eq!(n % c.size(), 0);
            let mut sorted = c.members.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, common::coset(c.leader, n));
            assert_eq!(c.members[0], c.leader);
            assert_eq!(coset_leader(c.members[c.members.len() - 1], n), c.leader);
        }
    }
    assert_eq!(cyclotomic_cosets(4).len(), 5);
}

#[test]
fn carry_examples() {
    let t = add_with_carry(9, 3, 4).unwrap();
    assert_eq!((t.h, t.carries.clone()), (12, vec![1, 1, 0, 0]));
    let t = add_with_carry(5, 10, 4).unwrap();
    assert_eq!((t.h, t.carries.clone()), (0, vec![1, 1, 1, 1]));
    let t = add_with_carry(0, 0, 7).unwrap();
    assert_eq!(t.h, 0);
    assert!(t.carries.iter().all(|&c| c == 0));
    assert!(add_with_carry(15, 0, 4).is_err());
}

proptest! {
    #[test]
    fn wt_mod_matches_oracle(n in 1u32..=24, j in -(1i64 << 40)..(1i64 << 40)) {
        prop_assert_eq!(wt_mod(j, n), common::wt_mod(i128::from(j), n));
    }

    #[test]
    fn v_d_is_doubling_invariant(n in 2u32..=16, d in 1u64..1 << 16, j in 1u64..1 << 16) {
        let m = (1u64 << n) - 1;
        let (d, j) = (d % m, j % m);
        prop_assume!(d > 0 && j > 0);
        prop_assert_eq!(v_d(d, 2 * j % m, n), v_d(d, j, n));
        let want = common::wt_mod(i128::from(j), n) + common::wt_mod(-(i128::from(j) * i128::from(d)), n);
        prop_assert_eq!(v_d(d, j, n), want);
    }

    #[test]
    fn profile_minimisers_are_closed_under_doubling(n in (1u32..=5).prop_map(|k| 2 * k), d in 1u64..1023) {
        let m = (1u64 << n) - 1;
        prop_assume!(d < m);
        let p = exponent_profile(d, n).unwrap();
        for &j in &p.j_set {
            prop_assert!(p.j_set.binary_search(&(2 * j % m)).is_ok());
            prop_assert_eq!(v_d(d, j, n), p.min_v);
        }
    }

    #[test]
    fn carry_is_unique_and_balances(n in 2u32..=20, f in any::<u64>(), g in any::<u64>()) {
        let m = (1u64 << n) - 1;
        let (f, g) = (f % m, g % m);
        let t = add_with_carry(f, g, n).unwrap();
        prop_assert_eq!(t.h, (f + g) % m);
        prop_assert!(t.recurrence_holds());
        prop_assert!(t.weight_identity_holds());
        let consistent = [0u8, 1]
            .into_iter()
            .filter_map(|s| CarryTrace::from_seed(f, g, n, s))
            .filter(|c| c.h < m)
            .count();
        prop_assert_eq!(consistent, 1);
        prop_assert!(f.count_ones() + g.count_ones() >= wt_mod(((f + g) % m) as i64, n));
    }

    #[test]
    fn cosets_are_orbits(n in 1u32..=16, j in any::<u64>()) {
        let m = (1u64 << n) - 1;
        let j = j % m.max(1);
        let mut orbit = coset_of(j, n);
        prop_assert_eq!(orbit[0], j);
        orbit.sort_unstable();
        prop_assert_eq!(orbit, common::coset(j, n));
    }
}
