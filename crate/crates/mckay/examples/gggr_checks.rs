//! Generalized Gelfand–Graev data: weighted Dynkin diagrams, the character
//! `ψ_u` on `U_2`, γ-conjugacy witnesses and multiplicity-one tables.

use mckay::gggr::{
    check_equivariance, check_gamma_conjugacy, check_multiplicity_one, check_psi_homomorphism, level_sets,
    sweep_parity_symmetry, weighted_dynkin, Sigma, SplitCase,
};
use mckay::matrixoracle::GroupKind;
use mckay::partitions::partitions_of;

fn main() -> mckay::Result<()> {
    let (checked, bad) = sweep_parity_symmetry(20);
    println!("parity/symmetry up to n = 20: {checked} partitions, {} violations", bad.len());

    let q = 3;
    for l in partitions_of(4) {
        let wd = weighted_dynkin(&l);
        let lv = level_sets(&wd)?;
        let case = SplitCase::new(q, &l, 200_000)?;
        println!(
            "{l}: h = {:?}, |Σ1| = {}, |Σ2| = {}, ψ hom {}, F_p {}, γ {}",
            wd.h,
            lv.level1.len(),
            lv.sigma2.len(),
            check_psi_homomorphism(&case),
            check_equivariance(&case, Sigma::Fp),
            check_equivariance(&case, Sigma::Gamma)
        );
    }
    for l in partitions_of(3) {
        let w = check_gamma_conjugacy(3, 2, &l, 200_000)?;
        println!("{l}: γ-witness {}", if w.is_some() { "found" } else { "missing" });
    }
    let r = check_multiplicity_one(GroupKind::GL, 2, 3, 25_000)?;
    println!("{}: multiplicity one {}", r.group, r.pass());
    for (l, m) in &r.rows {
        println!("  {l}: {m:?}");
    }
    Ok(())
}
