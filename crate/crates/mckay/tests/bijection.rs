use mckay::bijection::*;
use std::collections::BTreeMap;

fn cell(n: usize, eps: i8, q: u64, ell: u64) -> Cell {
    Cell { n, eps, q, ell }
}

#[test]
fn small_cells_pass_with_oracle() {
    let opts = VerifyOptions { oracle_limit: Some(25_000), witnesses: true };
    for c in [cell(2, 1, 3, 2), cell(3, 1, 2, 7), cell(2, -1, 2, 3), cell(2, 1, 5, 3), cell(3, -1, 2, 3)] {
        let r = verify_cell(c, opts);
        assert!(r.pass(), "{c}: {:?} {:?}", r.failures, r.error);
        assert_eq!(r.checks.oracle, Some(true), "{c}");
        assert_eq!(r.witnesses.len(), r.counts.global);
    }
}

#[test]
fn oracle_counts_for_reference_cells() {
    for (c, want) in [(cell(2, 1, 3, 2), 4), (cell(3, 1, 2, 7), 5), (cell(2, -1, 2, 3), 9), (cell(2, 1, 5, 3), 18)] {
        let data = CellData::new(c).unwrap();
        let o = verify_vs_oracle(c, &data, 25_000).unwrap();
        assert_eq!(o.global_ellprime, (want, want), "{c}");
        assert_eq!(o.sylow_normalizer_ellprime, (want, want), "{c}");
    }
}

#[test]
fn pairs_respect_central_labels() {
    let data = CellData::new(cell(2, 1, 5, 3)).unwrap();
    let pairs = omega_tilde(&data).unwrap();
    assert!(check_bijective(&data, &pairs).0);
    assert!(check_central_blocks(&data, &pairs).0);
    assert!(check_zhat_equivariance(&data, &pairs).0);
    let (ok, rows) = check_in(&data, &pairs);
    assert!(ok);
    let mut per_nu: BTreeMap<u64, usize> = BTreeMap::new();
    for r in &rows {
        *per_nu.entry(r.nu).or_default() += 1;
    }
    assert!(per_nu.len() > 1);
}

#[test]
fn not_applicable_when_ell_misses_the_order() {
    let r = verify_cell(cell(2, 1, 2, 7), VerifyOptions { oracle_limit: None, witnesses: false });
    assert!(!r.applicable);
    assert!(r.pass());
}

#[test]
fn grid_shape_and_order() {
    let grid = default_grid();
    assert_eq!(grid.len(), 90);
    assert!(grid.iter().all(|c| c.q % c.ell != 0));
    let sub: Vec<Cell> = grid.iter().copied().filter(|c| c.n == 2).collect();
    let reports = run_grid(&sub, VerifyOptions { oracle_limit: None, witnesses: false });
    assert_eq!(reports.iter().map(|r| r.cell).collect::<Vec<_>>(), sub);
    assert!(reports.iter().all(|r| r.pass()));
}

#[test]
fn report_serializes() {
    let r = verify_cell(cell(2, -1, 3, 2), VerifyOptions { oracle_limit: None, witnesses: false });
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["cell"]["eps"], -1);
    let back: VerificationReport = serde_json::from_value(v).unwrap();
    assert_eq!(back, r);
}
