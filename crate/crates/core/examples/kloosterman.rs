//! Kloosterman sums over GF(2^k) and the trace of their zeros.

use monobent::gf2n::FieldCtx;
use monobent::kloosterman::{dillon_cross_check, kloosterman_sums, scan_trace_theorem};

fn main() -> monobent::Result<()> {
    let ctx = FieldCtx::new(6)?;
    let sums = kloosterman_sums(&ctx);
    println!("K(a) over GF(64): {:?}", &sums[..16]);

    for k in 2..=12 {
        let s = scan_trace_theorem(k)?;
        println!(
            "k = {k:>2}: {:>3} zeros of K + 1, trace-one zeros {:?}",
            s.zero_set.len(),
            s.violations
        );
    }

    println!("Dillon components agree with K = -1 at k = 4: {}", dillon_cross_check(4)?);
    Ok(())
}
