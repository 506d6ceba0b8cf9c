//! Build a few small matrix groups, compute their character tables by the
//! Dixon–Schneider method and print degrees and Sylow-normalizer data.

use mckay::dixon::{character_table, irr_ellprime};
use mckay::matrixoracle::{build_group, GroupKind, DEFAULT_GROUP_LIMIT};

fn main() -> mckay::Result<()> {
    for (kind, n, q, ell) in [
        (GroupKind::GL, 2, 3, 2),
        (GroupKind::SL, 2, 3, 2),
        (GroupKind::GL, 3, 2, 7),
        (GroupKind::GU, 2, 2, 3),
        (GroupKind::SU, 3, 2, 3),
    ] {
        let g = build_group(kind, n, q, DEFAULT_GROUP_LIMIT)?;
        let t = character_table(&g)?;
        let ortho = t.check_row_orthogonality() && t.check_column_orthogonality();
        println!("{}: order {}, {} classes, orthogonal {ortho}", g.label, g.order(), t.len());
        println!("  degrees {:?}", t.sorted_degrees());

        let p = g.sylow_subgroup(ell, 1)?;
        let np = g.normalizer(&p);
        let tn = character_table(&g.subgroup_group(&np, "N(P)"))?;
        let (a, _) = irr_ellprime(&t, ell);
        let (b, _) = irr_ellprime(&tn, ell);
        println!("  ℓ={ell}: |P| = {}, |N(P)| = {}, ℓ′ characters {a} vs {b}", p.order(), np.order());
    }
    Ok(())
}
