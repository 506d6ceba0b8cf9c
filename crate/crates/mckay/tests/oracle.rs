use mckay::dixon::*;
use mckay::exactfield::{group_order, sl_order, SignedPrimePower};
use mckay::matrixoracle::*;
use num_bigint::BigUint;

fn build(kind: GroupKind, n: usize, q: u64) -> MatrixGroup {
    build_group(kind, n, q, DEFAULT_GROUP_LIMIT).unwrap()
}

#[test]
fn orders_match_formula() {
    for (kind, n, q) in [
        (GroupKind::GL, 2, 2),
        (GroupKind::GL, 2, 3),
        (GroupKind::GL, 2, 4),
        (GroupKind::GL, 2, 5),
        (GroupKind::SL, 2, 3),
        (GroupKind::SL, 3, 2),
        (GroupKind::GU, 2, 2),
        (GroupKind::GU, 2, 3),
        (GroupKind::SU, 2, 3),
        (GroupKind::GU, 3, 2),
        (GroupKind::SU, 3, 2),
    ] {
        let g = build(kind, n, q);
        let sp = SignedPrimePower::new(if kind.is_unitary() { -1 } else { 1 }, q).unwrap();
        let want = if kind.is_special() { sl_order(n as u32, sp) } else { group_order(n as u32, sp) };
        assert_eq!(BigUint::from(g.order()), want, "{}", g.label);
    }
}

#[test]
fn unitary_elements_satisfy_the_twisted_relation() {
    let g = build(GroupKind::GU, 2, 3);
    let f = &g.field;
    for m in g.elements() {
        let back = gamma(f, 2, &mat_frobenius(f, m, 3));
        assert_eq!(&back, m);
    }
}

#[test]
fn class_counts() {
    let cases = [
        (GroupKind::GL, 2, 2, 3),
        (GroupKind::SL, 2, 3, 7),
        (GroupKind::GL, 2, 3, 8),
        (GroupKind::GL, 3, 2, 6),
        (GroupKind::GU, 2, 2, 9),
    ];
    for (kind, n, q, want) in cases {
        let g = build(kind, n, q);
        let cl = g.conjugacy_classes();
        assert_eq!(cl.len(), want, "{}", g.label);
        assert_eq!(cl.sizes.iter().sum::<usize>(), g.order());
        assert!(cl.sizes.iter().all(|s| g.order() % s == 0));
        assert_eq!(cl.reps[0], g.identity());
    }
}

#[test]
fn sylow_and_normalizers() {
    let gl = build(GroupKind::GL, 2, 3);
    let p = gl.sylow_subgroup(2, 7).unwrap();
    assert_eq!(p.order(), 16);
    assert_eq!(gl.normalizer(&p).order(), 16);
    let n_syl = gl.conjugates(&p).len();
    assert_eq!(n_syl % 2, 1);
    assert_eq!(gl.order() % n_syl, 0);

    let sl = build(GroupKind::SL, 2, 3);
    let p = sl.sylow_subgroup(2, 1).unwrap();
    assert_eq!(p.order(), 8);
    assert_eq!(sl.normalizer(&p).order(), 24);
    assert_eq!(sl.conjugates(&p).len(), 1);

    let s3 = build(GroupKind::GL, 2, 2);
    assert_eq!(s3.sylow_subgroup(3, 0).unwrap().order(), 3);
    assert!(s3.sylow_subgroup(5, 0).is_err());
    let whole = s3.whole();
    assert_eq!(s3.normalizer(&whole).order(), 6);

    let gl32 = build(GroupKind::GL, 3, 2);
    let p7 = gl32.sylow_subgroup(7, 3).unwrap();
    assert_eq!(gl32.normalizer(&p7).order(), 21);
    assert_eq!(gl32.conjugates(&p7).len() % 7, 1);
}

#[test]
fn automorphisms() {
    for (kind, n, q) in [(GroupKind::SL, 2, 3), (GroupKind::GL, 3, 2), (GroupKind::GU, 2, 2), (GroupKind::GL, 2, 4)] {
        let g = build(kind, n, q);
        let cl = g.conjugacy_classes();
        for which in [Automorphism::Fp, Automorphism::Gamma] {
            let img: Vec<u32> = (0..g.order() as u32).map(|x| g.apply_automorphism(which, x).unwrap()).collect();
            let mut sorted = img.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), g.order(), "bijective");
            for &a in &g.generators {
                for b in [0u32, 1, (g.order() / 2) as u32] {
                    assert_eq!(img[g.mul(a, b) as usize], g.mul(img[a as usize], img[b as usize]));
                }
            }
        }
        // γ² preserves every class
        for x in 0..g.order() as u32 {
            let y = g.apply_automorphism(Automorphism::Gamma, g.apply_automorphism(Automorphism::Gamma, x).unwrap()).unwrap();
            assert_eq!(cl.class_of[x as usize], cl.class_of[y as usize]);
        }
    }
    let g = build(GroupKind::SL, 2, 3);
    for x in 0..g.order() as u32 {
        assert_eq!(g.apply_automorphism(Automorphism::Fp, x).unwrap(), x);
    }
}

#[test]
fn degree_multisets() {
    let cases: [(GroupKind, usize, u64, &[u64]); 4] = [
        (GroupKind::GL, 2, 2, &[1, 1, 2]),
        (GroupKind::SL, 2, 3, &[1, 1, 1, 2, 2, 2, 3]),
        (GroupKind::GL, 2, 3, &[1, 1, 2, 2, 2, 3, 3, 4]),
        (GroupKind::GL, 3, 2, &[1, 3, 3, 6, 7, 8]),
    ];
    for (kind, n, q, want) in cases {
        let g = build(kind, n, q);
        let t = character_table(&g).unwrap();
        assert_eq!(t.sorted_degrees(), want, "{}", g.label);
        assert!(t.check_row_orthogonality());
        assert!(t.check_column_orthogonality());
        let s: u64 = t.degrees.iter().map(|d| d * d).sum();
        assert_eq!(s, g.order() as u64);
    }
}

#[test]
fn ell_prime_counts() {
    let t = character_table(&build(GroupKind::GL, 2, 3)).unwrap();
    assert_eq!(irr_ellprime(&t, 2), (4, vec![1, 1, 3, 3]));
    let t = character_table(&build(GroupKind::SL, 2, 3)).unwrap();
    assert_eq!(irr_ellprime(&t, 2), (4, vec![1, 1, 1, 3]));
}

#[test]
fn unitary_tables() {
    for (kind, n, q) in [(GroupKind::GU, 2, 2), (GroupKind::SU, 2, 3), (GroupKind::GU, 3, 2)] {
        let g = build(kind, n, q);
        let t = character_table(&g).unwrap();
        assert_eq!(t.len(), t.classes.len());
        assert!(t.check_row_orthogonality(), "{}", g.label);
        assert!(t.check_column_orthogonality(), "{}", g.label);
    }
}

#[test]
fn induction_and_reciprocity() {
    let g = build(GroupKind::GL, 2, 3);
    let t = character_table(&g).unwrap();
    let fld = t.field.clone();
    let h = g.sylow_subgroup(3, 0).unwrap();
    let one = |_: u32| fld.from_int(1);
    let perm = induce(&g, &t, &h, one);
    assert_eq!(perm.values[0], fld.from_int((g.order() / h.order()) as i64));
    for chi in 0..t.len() {
        let lhs = t.multiplicity(chi, &perm).unwrap();
        let rhs = fld.as_integer(&scaled_inner_on_subgroup(&t, &h, |_| fld.from_int(1), chi)).unwrap();
        assert_eq!(lhs * h.order() as i64, rhs);
    }
    // regular character of H induces to the regular character of G
    let reg = induce(&g, &t, &h, |y| fld.from_int(if y == 0 { h.order() as i64 } else { 0 }));
    assert_eq!(reg, t.regular());
    for chi in 0..t.len() {
        assert_eq!(t.multiplicity(chi, &reg).unwrap(), t.degrees[chi] as i64);
        assert_eq!(t.inner(&t.chars[chi], &t.chars[chi]).unwrap(), 1);
    }
    // a nontrivial linear character of a cyclic 3-subgroup, induced
    let gen = h.gens[0];
    let z = fld.n / 3;
    let psi = |y: u32| {
        let k = (0..3u64).find(|&k| g.pow(gen, k) == y).unwrap();
        fld.zeta(k * z)
    };
    let ind = induce(&g, &t, &h, psi);
    for chi in 0..t.len() {
        let lhs = t.multiplicity(chi, &ind).unwrap();
        let rhs = fld.as_integer(&scaled_inner_on_subgroup(&t, &h, psi, chi)).unwrap();
        assert_eq!(lhs * 3, rhs);
    }
}
