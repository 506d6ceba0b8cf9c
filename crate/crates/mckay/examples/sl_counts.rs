//! Count the characters of `SL_n(εq)` two ways: from the `Z^`-orbits on
//! `Irr(GL)`, and by counting Jordan parameters of `PGL` classes.

use mckay::charparams::{count_irr_sl, count_jordan_params, Setting};
use mckay::exactfield::SignedPrimePower;

fn main() -> mckay::Result<()> {
    for n in 2..=4 {
        for q in [2u64, 3, 4, 5] {
            for eps in [1i8, -1] {
                let st = Setting::new(n, SignedPrimePower::new(eps, q)?)?;
                let a = count_irr_sl(&st)?;
                let b = count_jordan_params(&st)?;
                let kind = if eps == 1 { "SL" } else { "SU" };
                println!("{kind}_{n}({q}): {a:>4} {b:>4} {}", if a == b { "ok" } else { "MISMATCH" });
            }
        }
    }
    Ok(())
}
