//! Run the label-level verification over the default grid and print one line
//! per cell.

use mckay::bijection::{default_grid, run_grid, VerifyOptions};

fn main() {
    let opts = VerifyOptions { oracle_limit: Some(2_000), witnesses: false };
    let reports = run_grid(&default_grid(), opts);
    let mut failed = 0;
    for r in &reports {
        let status = if !r.applicable { "n/a " } else if r.pass() { "ok  " } else { "FAIL" };
        if !r.pass() {
            failed += 1;
        }
        println!(
            "{status} {:<16} domain {:>4} = {:<4} ℓ′ {:>4}/{:<4} {:>6} ms {}",
            r.cell.to_string(),
            r.counts.global,
            r.counts.local,
            r.counts.global_ellprime,
            r.counts.local_ellprime,
            r.ms,
            r.error.clone().unwrap_or_default()
        );
        for f in r.failures.iter().take(3) {
            println!("      {f}");
        }
    }
    println!("{} cells, {failed} failing", reports.len());
}
