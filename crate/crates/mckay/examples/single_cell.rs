//! Verify one cell and print every matched pair with its constituent
//! degrees compared mod ℓ.

use mckay::bijection::{verify_cell, Cell, VerifyOptions};

fn main() {
    let cell = Cell { n: 2, eps: 1, q: 3, ell: 2 };
    let r = verify_cell(cell, VerifyOptions { oracle_limit: Some(25_000), witnesses: true });
    println!("{cell}: pass {}", r.pass());
    println!("counts {:?}", r.counts);
    println!("checks {:?}", r.checks);
    for w in &r.witnesses {
        println!(
            "  {} ↦ {}  degrees {} / {}  ℓ′ parts {} ≡ ±{}  ν = {}",
            w.global, w.local, w.global_degree, w.local_degree, w.r, w.r_prime, w.nu
        );
    }
    if let Some(o) = &r.oracle {
        println!("oracle {o:?}");
    }
}
