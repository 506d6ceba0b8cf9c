use mckay::exactfield::build_field;
use mckay::gggr::*;
use mckay::matrixoracle::GroupKind;
use mckay::partitions::{partitions_of, Partition};
use proptest::prelude::*;

#[test]
fn regular_and_trivial_classes() {
    let wd = weighted_dynkin(&Partition::new(vec![3]));
    assert_eq!(wd.h, vec![2, 0, -2]);
    assert!(wd.labels.iter().all(|&v| v == 2));
    let lv = level_sets(&wd).unwrap();
    assert!(lv.level1.is_empty());
    let wd = weighted_dynkin(&Partition::new(vec![1, 1, 1]));
    assert!(wd.labels.iter().all(|&v| v == 0));
}

#[test]
fn jordan_matrix_has_its_type() {
    let f = build_field(3, 1).unwrap();
    for l in partitions_of(5) {
        let m = jordan_matrix(&f, &l);
        assert_eq!(jordan_type(&f, 5, &m), l);
    }
}

#[test]
fn psi_checks_small() {
    for (n, q) in [(3, 2), (3, 3), (4, 2), (3, 4)] {
        for l in partitions_of(n) {
            let case = SplitCase::new(q, &l, 200_000).unwrap();
            assert!(check_psi_homomorphism(&case), "{l} q={q}");
            assert!(check_equivariance(&case, Sigma::Fp), "{l} q={q}");
            assert!(check_equivariance(&case, Sigma::Gamma), "{l} q={q}");
        }
    }
}

#[test]
fn gamma_witnesses() {
    for (n, q) in [(2, 2), (2, 3), (3, 2)] {
        for l in partitions_of(n) {
            assert!(check_gamma_conjugacy(n, q, &l, 200_000).unwrap().is_some(), "{l} q={q}");
        }
    }
}

#[test]
fn multiplicity_one_small() {
    for (kind, n, q) in [(GroupKind::GL, 2, 2), (GroupKind::GL, 2, 3), (GroupKind::GL, 3, 2), (GroupKind::GU, 2, 2)] {
        let r = check_multiplicity_one(kind, n, q, 25_000).unwrap();
        assert!(r.pass(), "{}", r.group);
        assert!(r.degree_formula);
        assert!(r.covered.iter().all(|&c| c));
    }
    assert!(check_multiplicity_one(GroupKind::SL, 2, 3, 25_000).is_err());
}

fn partition_strategy() -> impl Strategy<Value = Partition> {
    (1usize..=24, any::<prop::sample::Index>()).prop_map(|(n, i)| {
        let all = partitions_of(n);
        i.get(&all).clone()
    })
}

proptest! {
    #[test]
    fn diagram_parity_and_symmetry(l in partition_strategy()) {
        let wd = weighted_dynkin(&l);
        let n = l.size();
        prop_assert_eq!(wd.h.len(), n);
        prop_assert_eq!(wd.h.iter().sum::<i64>(), 0);
        prop_assert!(wd.h.windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(wd.is_symmetric());
        prop_assert!(wd.labels.iter().all(|&v| v <= 2));
        prop_assert_eq!(wd.root_values().len(), n * (n - 1) / 2);
        let lv = level_sets(&wd).unwrap();
        prop_assert_eq!(lv.level1.len() % 2, 0);
    }
}
