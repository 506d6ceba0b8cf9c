//! Describe the normalizer of a Sylow `Φ_d`-torus and enumerate its
//! irreducible characters through Clifford theory.

use mckay::charparams::Setting;
use mckay::exactfield::SignedPrimePower;
use mckay::localside::{enumerate_local_irr, local_central_char, local_ellprime, torus_data};

fn main() -> mckay::Result<()> {
    let (n, eps, q, ell) = (3, -1, 2, 3);
    let sp = SignedPrimePower::new(eps, q)?;
    let td = torus_data(n, sp, ell)?;
    let st = Setting::new(n, sp)?;
    println!(
        "GU_{n}({q}), ℓ={ell}: d = {}, d0 = {}, a = {}, m = {}, Q = {}, |Ñ| = {}",
        td.d,
        td.d0,
        td.a,
        td.m,
        td.q_order,
        td.n_order()
    );
    println!("C_d0 orbits on residues: {:?}", td.orbits());
    let local = enumerate_local_irr(&td, &st.eig)?;
    println!("{} irreducible characters:", local.len());
    for chi in &local {
        println!(
            "  GL_m {:<14} residues {:?} degree {:>3} {} ν = {}",
            chi.gl_part.to_string(),
            chi.residues(),
            chi.degree,
            if local_ellprime(chi, ell) { "ℓ′" } else { "  " },
            local_central_char(&td, &st.eig, chi)
        );
    }
    Ok(())
}
