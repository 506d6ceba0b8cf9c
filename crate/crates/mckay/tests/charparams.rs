use mckay::charparams::*;
use mckay::dixon::character_table;
use mckay::exactfield::{group_order, SignedPrimePower};
use mckay::matrixoracle::{build_group, GroupKind, DEFAULT_GROUP_LIMIT};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use proptest::prelude::*;

const SETTINGS: &[(usize, i8, u64)] = &[
    (2, 1, 2),
    (2, 1, 3),
    (2, -1, 3),
    (2, 1, 4),
    (3, 1, 2),
    (3, -1, 2),
    (3, 1, 3),
    (3, -1, 3),
    (4, 1, 2),
    (4, -1, 2),
];
const ELLS: &[u64] = &[2, 3, 5, 7];

fn setting(i: usize) -> Setting {
    let (n, eps, q) = SETTINGS[i];
    Setting::new(n, SignedPrimePower::new(eps, q).unwrap()).unwrap()
}

#[test]
fn degrees_match_oracle_tables() {
    for (kind, n, q) in [
        (GroupKind::GL, 2, 2),
        (GroupKind::GL, 2, 3),
        (GroupKind::GL, 2, 4),
        (GroupKind::GL, 2, 5),
        (GroupKind::GL, 3, 2),
        (GroupKind::GU, 2, 2),
        (GroupKind::GU, 2, 3),
        (GroupKind::GU, 3, 2),
    ] {
        let eps = if kind.is_unitary() { -1 } else { 1 };
        let st = Setting::new(n, SignedPrimePower::new(eps, q).unwrap()).unwrap();
        let mut ours: Vec<u64> =
            enumerate_irr(&st).unwrap().iter().map(|c| degree(&st, c).to_u64().unwrap()).collect();
        ours.sort();
        let g = build_group(kind, n, q, DEFAULT_GROUP_LIMIT).unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(ours, t.sorted_degrees(), "{}", g.label);
    }
}

#[test]
fn sl_counts_match_oracle() {
    for (kind, n, q) in [
        (GroupKind::SL, 2, 3),
        (GroupKind::SL, 2, 5),
        (GroupKind::SL, 3, 2),
        (GroupKind::SU, 2, 3),
        (GroupKind::SU, 3, 2),
    ] {
        let eps = if kind.is_unitary() { -1 } else { 1 };
        let st = Setting::new(n, SignedPrimePower::new(eps, q).unwrap()).unwrap();
        let g = build_group(kind, n, q, DEFAULT_GROUP_LIMIT).unwrap();
        let classes = g.conjugacy_classes().len() as u64;
        assert_eq!(count_irr_sl(&st).unwrap(), classes, "{}", g.label);
        assert_eq!(count_jordan_params(&st).unwrap(), classes, "{}", g.label);
    }
}

#[test]
fn ellprime_needs_valid_prime() {
    let st = setting(1);
    let chi = &enumerate_irr(&st).unwrap()[0];
    assert!(is_ellprime(&st, chi, 4).is_err());
    assert!(is_ellprime(&st, chi, 3).is_err());
}

#[test]
fn sum_of_squares_is_group_order() {
    for i in 0..SETTINGS.len() {
        let st = setting(i);
        let total: BigUint = enumerate_irr(&st).unwrap().iter().map(|c| degree(&st, c).pow(2)).sum();
        assert_eq!(total, group_order(st.n as u32, st.sp));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn params_round_trip(i in 0..SETTINGS.len(), j in any::<prop::sample::Index>(), e in 0..ELLS.len()) {
        let st = setting(i);
        let ell = ELLS[e];
        prop_assume!(st.sp.pp.p != ell);
        let chars = enumerate_irr(&st).unwrap();
        let chi = j.get(&chars);
        let t = to_params(&st, chi, ell).unwrap();
        prop_assert_eq!(&from_params(&st, &t, ell).unwrap(), chi);
        let lp = is_ellprime(&st, chi, ell).unwrap();
        prop_assert_eq!(lp, two_part_criterion(&st, chi, ell));
        prop_assert_eq!(lp, three_part_criterion(&st, &t, ell));
    }

    #[test]
    fn twisting_is_an_action(i in 0..SETTINGS.len(), j in any::<prop::sample::Index>(), a in 0u64..64, b in 0u64..64) {
        let st = setting(i);
        let chars = enumerate_irr(&st).unwrap();
        let chi = j.get(&chars);
        let ab = zhat_act(&st, a, &zhat_act(&st, b, chi));
        prop_assert_eq!(&ab, &zhat_act(&st, a + b, chi));
        prop_assert_eq!(&zhat_act(&st, st.z_order(), chi), chi);
        prop_assert_eq!(degree(&st, &ab), degree(&st, chi));
        prop_assert!(chars.contains(&ab));
    }

    #[test]
    fn stabilizer_divides_degree(i in 0..SETTINGS.len(), j in any::<prop::sample::Index>()) {
        let st = setting(i);
        let chars = enumerate_irr(&st).unwrap();
        let chi = j.get(&chars);
        let stab = zhat_stabilizer(&st, chi).len() as u64;
        prop_assert_eq!(st.z_order() % stab, 0);
        prop_assert_eq!(constituent_degree(&st, chi) * BigUint::from(stab), degree(&st, chi));
    }
}
