//! Truth tables, the Walsh spectrum, duals of bent functions and the trace
//! representation.

use monobent::boolfun::{dual, monomial, trace_repr, walsh, BoolFun};
use monobent::gf2n::FieldCtx;

fn main() -> monobent::Result<()> {
    let ctx = FieldCtx::new(6)?;
    let w = ctx.generator();

    // Tr(w x^3) is a Gold function; w is not a cube, so it is bent.
    let f = monomial(&ctx, w, 3)?;
    let spec = walsh(&f, &ctx);
    println!("f = {} (weight {})", f.to_hex(), f.weight());
    println!("max |W_f| = {}, bent: {}", spec.max_abs(), spec.is_bent());
    println!("Parseval: {}", spec.parseval_holds());

    let g = dual(&f, &ctx)?;
    println!("dual = {}, dual of dual = f: {}", g.to_hex(), dual(&g, &ctx)? == f);

    for t in trace_repr(&g, &ctx).terms {
        println!(
            "  dual term: Tr_{}({:#x} x^{})",
            t.size, t.coefficient, t.leader
        );
    }

    let h = BoolFun::from_hex(6, &f.to_hex())?;
    assert_eq!(h, f);
    let r = trace_repr(&BoolFun::from_fn(6, |x| x.count_ones() % 2 == 1), &ctx);
    println!("a linear function has {} trace term(s)", r.terms.len());
    Ok(())
}
