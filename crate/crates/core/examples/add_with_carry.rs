//! Binary addition modulo 2^n - 1 with its carry sequence, and the weight
//! identity wt(f + g) = wt(f) + wt(g) - wt(c).

use monobent::weights::{add_with_carry, wt_mod};

fn main() -> monobent::Result<()> {
    let n = 8;
    for (f, g) in [(0b0001_0110u64, 0b0000_1011), (0b1100_0011, 0b0100_0001), (85, 170)] {
        let t = add_with_carry(f, g, n)?;
        println!(
            "{f:08b} + {g:08b} = {:08b}  carries {:?}  wt: {} + {} - {} = {}",
            t.h,
            t.carries,
            wt_mod(f as i64, n),
            wt_mod(g as i64, n),
            t.carry_weight(),
            wt_mod(t.h as i64, n)
        );
        assert!(t.recurrence_holds() && t.weight_identity_holds());
    }
    Ok(())
}
