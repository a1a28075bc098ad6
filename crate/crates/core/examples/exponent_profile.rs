//! 2-adic weights, cyclotomic cosets and the V_d(j) profile of an exponent.
//!
//! ```bash
//! cargo run --example exponent_profile -- 8 17
//! ```

use monobent::weights::{coset_of, cyclotomic_cosets, exponent_profile, v_d, wt_mod};

fn main() -> monobent::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u64>().expect("integer"));
    let n = args.next().unwrap_or(8) as u32;
    let d = args.next().unwrap_or((1 << (n / 2)) + 1);

    println!("{} cyclotomic cosets mod 2^{n} - 1", cyclotomic_cosets(n).len());
    println!("coset of {d}: {:?}", coset_of(d, n));
    println!("wt(d) = {}, wt(-d) = {}", wt_mod(d as i64, n), wt_mod(-(d as i64), n));

    let p = exponent_profile(d, n)?;
    println!("min V_d = {} (k = {})", p.min_v, p.k());
    println!("minimising j: {:?}", p.j_set);
    println!("j*d = 0 for all of them: {}", p.all_jd_zero);
    println!("weight condition min V_d = k: {}", p.meets_weight_condition());

    for j in p.j_set.iter().take(3) {
        println!("  V_d({j}) = {}", v_d(d, *j, n));
    }
    Ok(())
}
