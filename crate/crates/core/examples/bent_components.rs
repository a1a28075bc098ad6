//! Count bent components Tr(a F) of a vectorial function and inspect the
//! set S_F of non-bent directions.
//!
//! ```bash
//! cargo run --release --example bent_components -- 8
//! ```

use monobent::bentcomp::{bent_components, max_bent_components, verify_structure, Vectorial};
use monobent::gf2n::FieldCtx;

fn main() -> monobent::Result<()> {
    let n: u32 = std::env::args().nth(1).map_or(8, |s| s.parse().expect("n"));
    let ctx = FieldCtx::new(n)?;
    let k = n / 2;
    println!("n = {n}: at most {} bent components", max_bent_components(n));

    let candidates = [
        Vectorial::Monomial { d: (1 << k) + 1 },
        Vectorial::Monomial { d: 3 },
        Vectorial::Monomial { d: (1 << k) - 1 },
        Vectorial::PottBinomial { i: 0 },
        Vectorial::PottBinomial { i: 1 },
    ];
    for f in candidates {
        let r = bent_components(&ctx, f)?;
        println!(
            "{:<24} bent {:>6}  |S_F| {:>6}  linear {:<5}  GF(2^k) {:<5}  maximal {}",
            f.to_string(),
            r.bent_count,
            r.s_f_size(),
            r.is_linear,
            r.is_subfield_k,
            r.is_maximal
        );
        assert!(verify_structure(&ctx, &r).is_empty());
    }
    Ok(())
}
