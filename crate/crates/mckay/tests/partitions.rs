use mckay::exactfield::{group_order, SignedPrimePower};
use mckay::partitions::*;
use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;
use std::collections::BTreeSet;

/// Remove the rim hook attached to cell `(i, j)` directly on the diagram.
fn remove_rim_hook(lambda: &[usize], i: usize, j: usize) -> Vec<usize> {
    let conj = Partition::new(lambda.to_vec()).conjugate();
    let leg = conj.parts[j] - i - 1;
    let mut out = lambda.to_vec();
    for r in i..i + leg {
        out[r] = lambda[r + 1] - 1;
    }
    out[i + leg] = j;
    out.retain(|&x| x > 0);
    out
}

/// Every core reachable by removing rim `e`-hooks in any order, with the
/// number of removals.
fn all_cores(lambda: &[usize], e: usize) -> BTreeSet<(Vec<usize>, usize)> {
    let conj = Partition::new(lambda.to_vec()).conjugate();
    let mut out = BTreeSet::new();
    let mut any = false;
    for (i, &row) in lambda.iter().enumerate() {
        for j in 0..row {
            let hook = row - j + conj.parts[j] - i - 1;
            if hook == e {
                any = true;
                for (c, w) in all_cores(&remove_rim_hook(lambda, i, j), e) {
                    out.insert((c, w + 1));
                }
            }
        }
    }
    if !any {
        out.insert((lambda.to_vec(), 0));
    }
    out
}

#[test]
fn brute_force_cores_agree() {
    for n in 0..=9 {
        for lambda in partitions_of(n) {
            for e in 1..=5 {
                let brute = all_cores(&lambda.parts, e);
                assert_eq!(brute.len(), 1, "removal order matters for {lambda} e={e}");
                let (core, w) = brute.into_iter().next().unwrap();
                let cq = e_core_quotient(&lambda, e);
                assert_eq!(cq.core.parts, core, "{lambda} e={e}");
                assert_eq!(cq.weight, w);
            }
        }
    }
}

#[test]
fn two_one_is_a_two_core() {
    let set = all_cores(&[2, 1], 2);
    assert_eq!(set.into_iter().collect::<Vec<_>>(), vec![(vec![2, 1], 0)]);
}

#[test]
fn round_trip_and_fibre_counts() {
    for n in 0..=12 {
        let all = partitions_of(n);
        for e in 1..=6 {
            let mut fibres: std::collections::BTreeMap<Partition, usize> = Default::default();
            for lambda in &all {
                let cq = e_core_quotient(lambda, e);
                assert_eq!(cq.core.size() + e * cq.weight, n);
                assert!(cq.core.is_core(e));
                assert_eq!(from_core_quotient(&cq.core, &cq.quotient, e).as_ref(), Some(lambda));
                *fibres.entry(cq.core).or_default() += 1;
            }
            for (core, count) in fibres {
                let w = (n - core.size()) / e;
                assert_eq!(count, wreath_irr(e, w).len(), "core {core} e={e}");
            }
        }
    }
}

#[test]
fn symmetric_group_sum_of_squares() {
    for n in 0..=10 {
        let s: BigUint = partitions_of(n).iter().map(|l| l.symmetric_dim().pow(2)).sum();
        assert_eq!(s, factorial(n));
    }
}

#[test]
fn wreath_sum_of_squares() {
    for e in 1..=4 {
        for w in 0..=4 {
            let s: BigUint = wreath_irr(e, w).iter().map(|l| l.degree().pow(2)).sum();
            assert_eq!(s, wreath_order(e, w), "e={e} w={w}");
        }
    }
}

#[test]
fn unipotent_degrees_divide_group_order() {
    for (eps, q) in [(1, 2), (1, 3), (-1, 2), (-1, 3), (1, 4)] {
        let sp = SignedPrimePower::new(eps, q).unwrap();
        for n in 1..=6 {
            let order = group_order(n as u32, sp);
            for lambda in partitions_of(n) {
                let d = generic_degree(&lambda, eps, q);
                assert!((&order % &d).is_zero());
            }
            // trivial and Steinberg
            assert_eq!(generic_degree(&Partition::new(vec![n]), eps, q), BigUint::from(1u32));
            assert_eq!(
                generic_degree(&Partition::new(vec![1; n]), eps, q),
                BigUint::from(q).pow((n * (n - 1) / 2) as u32)
            );
        }
    }
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..6, 0..6).prop_map(Partition::new)
}

proptest! {
    #[test]
    fn core_quotient_inverts(lambda in arb_partition(), e in 1usize..7) {
        let cq = e_core_quotient(&lambda, e);
        prop_assert_eq!(from_core_quotient(&cq.core, &cq.quotient, e), Some(lambda.clone()));
    }

    #[test]
    fn conjugate_is_involution(lambda in arb_partition()) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        let mut a = lambda.hook_lengths();
        let mut b = lambda.conjugate().hook_lengths();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn generic_degree_at_one_dimensional_limit(lambda in arb_partition()) {
        // Deg_λ(q) ≡ f^λ (mod q-1) since Deg_λ(1) = f^λ
        let q = 3u64;
        let d = generic_degree(&lambda, 1, q);
        let f = lambda.symmetric_dim();
        prop_assert_eq!(d % BigUint::from(q - 1), f % BigUint::from(q - 1));
    }
}
