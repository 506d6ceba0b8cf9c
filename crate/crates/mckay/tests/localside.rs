use mckay::charparams::{degree, from_params, Setting};
use mckay::error::Error;
use mckay::exactfield::SignedPrimePower;
use mckay::localside::*;
use num_bigint::BigUint;
use proptest::prelude::*;
use std::collections::HashSet;

const CELLS: &[(usize, i8, u64, u64)] = &[
    (2, 1, 3, 2),
    (2, 1, 5, 3),
    (2, -1, 2, 3),
    (2, -1, 3, 2),
    (3, 1, 2, 7),
    (3, 1, 2, 3),
    (3, -1, 2, 3),
    (3, 1, 3, 2),
    (3, 1, 4, 3),
    (4, 1, 2, 3),
    (4, -1, 2, 5),
    (4, 1, 3, 5),
];

fn data(i: usize) -> (Setting, LocalTorusData) {
    let (n, eps, q, ell) = CELLS[i];
    let sp = SignedPrimePower::new(eps, q).unwrap();
    (Setting::new(n, sp).unwrap(), torus_data(n, sp, ell).unwrap())
}

#[test]
fn torus_parameters() {
    let (_, td) = data(0);
    assert_eq!((td.d0, td.a, td.m, td.q_order), (2, 1, 0, 8));
    let (_, td) = data(4);
    assert_eq!((td.d0, td.a, td.m, td.q_order), (3, 1, 0, 7));
    assert_eq!(td.n_order(), BigUint::from(21u32));
    let (_, td) = data(9);
    assert_eq!((td.d0, td.a, td.m), (2, 2, 0));
}

#[test]
fn rejects_bad_primes() {
    let sp = SignedPrimePower::new(1, 2).unwrap();
    assert!(matches!(torus_data(2, sp, 7), Err(Error::EllDoesNotDivide { .. })));
    assert!(torus_data(2, sp, 2).is_err());
    assert!(torus_data(2, sp, 9).is_err());
}

#[test]
fn orbits_partition_residues() {
    for i in 0..CELLS.len() {
        let (_, td) = data(i);
        let mut seen = HashSet::new();
        for (rep, len) in td.orbits() {
            let o = td.orbit(rep);
            assert_eq!(o.len(), len);
            assert_eq!(td.d0 % len, 0);
            for x in o {
                assert!(seen.insert(x));
            }
        }
        assert_eq!(seen.len() as u64, td.q_order);
    }
}

#[test]
fn local_sum_of_squares() {
    for i in 0..CELLS.len() {
        let (st, td) = data(i);
        let local = enumerate_local_irr(&td, &st.eig).unwrap();
        let total: BigUint = local.iter().map(|c| &c.degree * &c.degree).sum();
        assert_eq!(total, td.n_order(), "{:?}", CELLS[i]);
        for c in &local {
            assert_eq!(c.degree, local_degree(&td, &st.eig, &c.gl_part, &c.blocks));
        }
    }
}

#[test]
fn psi_is_injective_and_preserves_ellprime() {
    for i in 0..CELLS.len() {
        let (st, td) = data(i);
        let triples = enumerate_triples(&st, &td).unwrap();
        let mut images = HashSet::new();
        for t in &triples {
            let psi = psi_n(&st, &td, t).unwrap();
            let chi = from_params(&st, t, td.ell).unwrap();
            let global_lp = mckay::charparams::is_ell_free(&degree(&st, &chi), td.ell);
            assert_eq!(global_lp, local_ellprime(&psi, td.ell), "{:?} {chi}", CELLS[i]);
            assert!(images.insert(psi));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn local_twist_is_an_action(i in 0..CELLS.len(), j in any::<prop::sample::Index>(), a in 0u64..40, b in 0u64..40) {
        let (st, td) = data(i);
        let local = enumerate_local_irr(&td, &st.eig).unwrap();
        let chi = j.get(&local);
        let z = st.z_order();
        let ab = local_zhat_act(&td, &st.eig, a, &local_zhat_act(&td, &st.eig, b, chi));
        prop_assert_eq!(&ab, &local_zhat_act(&td, &st.eig, (a + b) % z, chi));
        prop_assert_eq!(&local_zhat_act(&td, &st.eig, z, chi), chi);
        prop_assert_eq!(&ab.degree, &chi.degree);
        prop_assert!(local.contains(&ab));
        // twisting by a character of GL/SL moves the central label by n per step
        let shift = (st.n as u64 * (a + b)) % z;
        prop_assert_eq!(
            local_central_char(&td, &st.eig, &ab),
            (local_central_char(&td, &st.eig, chi) + shift) % z
        );
    }

    #[test]
    fn two_index_matches_degree(i in 0..CELLS.len(), j in any::<prop::sample::Index>()) {
        let (st, td) = data(i);
        let local = enumerate_local_irr(&td, &st.eig).unwrap();
        let chi = j.get(&local);
        prop_assert_eq!(local_ellprime(chi, td.ell), two_index_criterion(&td, &st.eig, chi, td.ell));
    }
}
