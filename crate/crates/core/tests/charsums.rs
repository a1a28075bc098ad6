use monobent::bentcomp::{Family, FamilyContext};
use monobent::boolfun::{monomial, walsh};
use monobent::charsums::{gauss_table, trace_from_gauss, walsh_via_gauss};
use monobent::gf2n::FieldCtx;
use proptest::prelude::*;

#[test]
fn gf4_trace_values() {
    let ctx = FieldCtx::new(2).unwrap();
    let t = gauss_table(&ctx).unwrap();
    assert_eq!(t.values[0].re, -1.0);
    assert!((trace_from_gauss(&ctx, &t, 1).unwrap() - 1.0).abs() < 1e-12);
    assert!((trace_from_gauss(&ctx, &t, ctx.generator()).unwrap() + 1.0).abs() < 1e-12);
}

#[test]
fn gold_walsh_values_from_gauss_sums() {
    let ctx = FieldCtx::new(4).unwrap();
    let t = gauss_table(&ctx).unwrap();
    let a = (1..16).find(|&a| !ctx.is_dth_power(a, 3)).unwrap();
    let spec = walsh(&monomial(&ctx, a, 3).unwrap(), &ctx);
    for l in 1..16u32 {
        let v = walsh_via_gauss(&ctx, &t, a, 3, l).unwrap();
        assert!((v.abs() - 4.0).abs() < 1e-9);
        assert!((v - spec.values[l as usize] as f64).abs() < 1e-4);
    }
}

#[test]
fn dillon_walsh_values_from_gauss_sums() {
    let ctx = FieldCtx::new(6).unwrap();
    let t = gauss_table(&ctx).unwrap();
    let fc = FamilyContext::new(&ctx).unwrap();
    let members = fc.enumerate(Family::Dillon);
    let m = members.iter().find(|m| m.d == 7).unwrap();
    let spec = walsh(&monomial(&ctx, m.alpha, 7).unwrap(), &ctx);
    for l in 1..64u32 {
        let v = walsh_via_gauss(&ctx, &t, m.alpha, 7, l).unwrap();
        assert!((v.abs() - 8.0).abs() < 1e-6);
        assert!((v - spec.values[l as usize] as f64).abs() < 1e-4);
    }
}

#[test]
fn compensated_sums_stay_accurate_at_n12() {
    let ctx = FieldCtx::new(12).unwrap();
    let t = gauss_table(&ctx).unwrap();
    for j in (1..4095i64).step_by(17) {
        assert!((t.get(j).norm_sqr() - 4096.0).abs() / 4096.0 < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn walsh_expansion(n in (1u32..=4).prop_map(|k| 2 * k), a in 1u32.., d in 1u64.., l in 1u32..) {
        let ctx = FieldCtx::new(n).unwrap();
        let t = gauss_table(&ctx).unwrap();
        let (a, l) = (1 + a % (ctx.size() as u32 - 1), 1 + l % (ctx.size() as u32 - 1));
        let d = 1 + d % (ctx.group_order() - 1).max(1);
        prop_assume!(d < ctx.group_order());
        let exact = walsh(&monomial(&ctx, a, d).unwrap(), &ctx).values[l as usize] as f64;
        prop_assert!((walsh_via_gauss(&ctx, &t, a, d, l).unwrap() - exact).abs() < 1e-4);
    }
}
