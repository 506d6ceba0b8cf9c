//! List the irreducible characters of `GL_n(εq)` by Jordan decomposition,
//! with degrees, `ℓ′` status and their `(s, λ, η)` parameters.

use mckay::charparams::{
    count_irr_sl, count_jordan_params, degree, enumerate_irr, is_ellprime, to_params, two_part_criterion, Setting,
};
use mckay::exactfield::SignedPrimePower;

fn main() -> mckay::Result<()> {
    let (n, eps, q, ell) = (3, 1, 2, 3);
    let st = Setting::new(n, SignedPrimePower::new(eps, q)?)?;
    let chars = enumerate_irr(&st)?;
    println!("GL_{n}({q}): {} irreducible characters, ℓ = {ell}", chars.len());
    for chi in &chars {
        let d = degree(&st, chi);
        let lp = is_ellprime(&st, chi, ell)?;
        assert_eq!(lp, two_part_criterion(&st, chi, ell));
        let t = to_params(&st, chi, ell)?;
        let lambda: Vec<String> = t.lambda.iter().map(|l| l.to_string()).collect();
        println!(
            "  {chi:<32} degree {d:>3} {} cores {lambda:?} weights {:?}",
            if lp { "ℓ′" } else { "  " },
            t.weights()
        );
    }
    println!("SL_{n}({q}): {} classes, {} Jordan parameters", count_irr_sl(&st)?, count_jordan_params(&st)?);
    Ok(())
}
