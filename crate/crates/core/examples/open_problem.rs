//! Which power maps x^d have the maximal number of bent components?
//!
//! Sweeps every exponent and prints those reaching 2^n - 2^(n/2), then the
//! multiples of 2^k + 1 that fall short.
//!
//! ```bash
//! cargo run --release --example open_problem -- 10
//! ```

use monobent::bentcomp::{divisor_cases, open_problem_scan_with, SweepMode};
use monobent::gf2n::FieldCtx;

fn main() -> monobent::Result<()> {
    let n: u32 = std::env::args().nth(1).map_or(8, |s| s.parse().expect("n"));
    let ctx = FieldCtx::new(n)?;
    let maximal = open_problem_scan_with(&ctx, SweepMode::default_for(n))?;
    println!("n = {n}: maximal exponents {maximal:?}");

    for c in divisor_cases(&ctx)? {
        println!(
            "d = {:>5} = {} (2^k + 1)  coprime {:<5}  bent {:>6}  {}",
            c.d,
            c.s,
            c.coprime,
            c.bent_count,
            if c.holds { "ok" } else { "UNEXPECTED" }
        );
    }
    Ok(())
}
