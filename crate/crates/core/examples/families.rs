//! Enumerate the Gold, Dillon, Kasami, Leander and Canteaut-Charpin-Kyureghyan
//! bent monomials and confirm each one with a Walsh transform.

use monobent::bentcomp::{verify_families, Family};
use monobent::gf2n::FieldCtx;

fn main() -> monobent::Result<()> {
    for n in [4u32, 6, 8, 12] {
        let ctx = FieldCtx::new(n)?;
        let checks = verify_families(&ctx, &Family::ALL)?;
        print!("n = {n:>2}:");
        for family in Family::ALL {
            let members: Vec<_> = checks.iter().filter(|c| c.member.family == family).collect();
            let bent = members.iter().filter(|c| c.bent).count();
            print!("  {} {bent}/{}", family.name(), members.len());
        }
        println!();
    }
    Ok(())
}
