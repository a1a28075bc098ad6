//! Gauss sums G(chi^j) and two ways of rebuilding things from them.

use monobent::boolfun::{monomial, walsh};
use monobent::charsums::{gauss_table, trace_from_gauss, walsh_via_gauss};
use monobent::gf2n::FieldCtx;

fn main() -> monobent::Result<()> {
    let ctx = FieldCtx::new(6)?;
    let t = gauss_table(&ctx)?;
    for j in 0..4 {
        let g = t.get(j);
        println!("G({j}) = {:+.4} {:+.4}i   |G|^2 = {:.4}", g.re, g.im, g.norm_sqr());
    }

    let x = ctx.exp(7);
    println!(
        "(-1)^Tr(x) = {} from the field, {:.6} from Gauss sums",
        1 - 2 * i32::from(ctx.trace(x)),
        trace_from_gauss(&ctx, &t, x)?
    );

    let (alpha, d, lambda) = (ctx.exp(1), 9, ctx.exp(3));
    let exact = walsh(&monomial(&ctx, alpha, d)?, &ctx).values[lambda as usize];
    println!(
        "W(lambda) = {exact} by transform, {:.6} by Gauss sums",
        walsh_via_gauss(&ctx, &t, alpha, d, lambda)?
    );
    Ok(())
}
