//! Log/antilog arithmetic in GF(2^n), traces and subfields.
//!
//! ```bash
//! cargo run --example field_arithmetic -- 8
//! ```

use monobent::gf2n::{FieldCtx, SubfieldEmbedding};

fn main() -> monobent::Result<()> {
    let n: u32 = std::env::args().nth(1).map_or(8, |s| s.parse().expect("n"));
    let ctx = FieldCtx::new(n)?;
    println!(
        "GF(2^{n}): modulus {}, generator {}",
        ctx.modulus_hex(),
        ctx.generator_hex()
    );

    let a = ctx.exp(5);
    let b = ctx.exp(11);
    println!("w^5 * w^11 = {:#x} (= w^16 = {:#x})", ctx.mul(a, b), ctx.exp(16));
    println!("inverse of w^5 = {:#x}", ctx.inv(a)?);
    println!("Tr(w^5) = {}, Tr(w^10) = {}", ctx.trace(a), ctx.trace(ctx.square(a)));

    for m in (1..=n).filter(|m| n % m == 0) {
        let sub = ctx.subfield_elements(m)?;
        println!("GF(2^{m}) has {} elements inside GF(2^{n})", sub.len());
    }

    if n % 2 == 0 {
        let small = FieldCtx::new(n / 2)?;
        let e = SubfieldEmbedding::new(&small, &ctx)?;
        let g = small.generator();
        println!(
            "embedding GF(2^{}) -> GF(2^{n}) sends {:#x} to {:#x}",
            n / 2,
            g,
            e.map(g)
        );
    }

    // x^4 + x^3 + x^2 + x + 1 is irreducible, but x is not primitive.
    let odd = FieldCtx::with_modulus(4, 0x1f)?;
    println!("with modulus 0x1f the searched generator is {}", odd.generator_hex());
    Ok(())
}
