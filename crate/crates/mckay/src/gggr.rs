//! Generalized Gelfand–Graev characters at desk scale: weighted Dynkin
//! diagrams of unipotent classes, the level subgroups `U_1 ⊇ U_2`, the
//! linear character `ψ_u` of `U_2`, its equivariance, `γ`-conjugacy
//! witnesses, and multiplicity one through the matrix oracle.
//!
//! Positive roots are the positions `(i, j)` with `i < j`; the value of
//! `h` on such a root is `h_i − h_j` for the sorted `h`-sequence.

use crate::dixon::{character_table, induce, CharacterTable};
use crate::error::{Error, Result};
use crate::exactfield::{build_field, FiniteField, PrimePower};
use crate::matrixoracle::{build_group, gamma, mat_frobenius, mat_identity, mat_mul, GroupKind, Mat, MatrixGroup};
use crate::partitions::{partitions_of, Partition};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedDynkin {
    pub lambda: Partition,
    /// Non-increasing `h`-sequence of length `n`.
    pub h: Vec<i64>,
    /// Value on each simple root, in `{0, 1, 2}`.
    pub labels: Vec<u8>,
}

impl WeightedDynkin {
    pub fn n(&self) -> usize {
        self.h.len()
    }

    /// `h_C(e_i − e_j)` for the root at position `(i, j)`, `i < j`.
    pub fn level(&self, i: usize, j: usize) -> i64 {
        self.h[i] - self.h[j]
    }

    /// Invariance under the graph automorphism of `Δ`.
    pub fn is_symmetric(&self) -> bool {
        self.labels.iter().eq(self.labels.iter().rev())
    }

    /// Positive-root values in the order `(0,1), (0,2), …, (1,2), …`.
    pub fn root_values(&self) -> Vec<i64> {
        let n = self.n();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| self.level(i, j)).collect()
    }
}

pub fn weighted_dynkin(lambda: &Partition) -> WeightedDynkin {
    let mut h: Vec<i64> = Vec::new();
    for &l in &lambda.parts {
        let l = l as i64;
        h.extend((0..l).map(|k| l - 1 - 2 * k));
    }
    h.sort_unstable_by(|a, b| b.cmp(a));
    let labels = h.windows(2).map(|w| (w[0] - w[1]) as u8).collect();
    WeightedDynkin { lambda: lambda.clone(), h, labels }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelData {
    /// `Σ_{2,C}` as positions.
    pub sigma2: Vec<(usize, usize)>,
    /// Positions at level exactly 1.
    pub level1: Vec<(usize, usize)>,
    /// Positions at level at least 2.
    pub at_least2: Vec<(usize, usize)>,
    /// `|U_1^F| = q^{u1_exp}`.
    pub u1_exp: usize,
    /// `|U_2^F| = q^{u2_exp}`.
    pub u2_exp: usize,
}

impl LevelData {
    /// Exponent of `q` in `|U_1 : U_2|^{1/2}`.
    pub fn half_index_exp(&self) -> usize {
        self.level1.len() / 2
    }
}

pub fn level_sets(wd: &WeightedDynkin) -> Result<LevelData> {
    let n = wd.n();
    let mut sigma2 = Vec::new();
    let mut level1 = Vec::new();
    let mut at_least2 = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            match wd.level(i, j) {
                1 => level1.push((i, j)),
                2 => {
                    sigma2.push((i, j));
                    at_least2.push((i, j));
                }
                v if v > 2 => at_least2.push((i, j)),
                _ => {}
            }
        }
    }
    if level1.len() % 2 != 0 {
        return Err(Error::Consistency(format!("odd number of level-one roots for {}", wd.lambda)));
    }
    Ok(LevelData { u1_exp: level1.len() + at_least2.len(), u2_exp: at_least2.len(), sigma2, level1, at_least2 })
}

/// Upper unitriangular with zero entries at positive roots of level below
/// `min_level`.
pub fn in_level_group(f: &FiniteField, wd: &WeightedDynkin, g: &[u32], min_level: i64) -> bool {
    let n = wd.n();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let x = g[i * n + j];
            if i == j {
                x == f.one()
            } else if i > j {
                x == f.zero()
            } else {
                x == f.zero() || wd.level(i, j) >= min_level
            }
        })
    })
}

/// `Σ_α Tr(−g_α u_α)` modulo `p`, the exponent of `ψ_u(g)` as a power of a
/// fixed primitive `p`-th root of unity. Coordinates at level two are matrix
/// entries, and `Tr` is the absolute trace of the matrix field.
pub fn psi_u(f: &FiniteField, lv: &LevelData, n: usize, u: &[u32], g: &[u32]) -> u64 {
    lv.sigma2.iter().fold(0, |acc, &(i, j)| {
        let t = f.neg(f.mul(g[i * n + j], u[i * n + j]));
        (acc + f.trace(t)) % f.p
    })
}

pub fn rank(f: &FiniteField, n: usize, m: &[u32]) -> usize {
    let mut a = m.to_vec();
    let mut r = 0;
    for c in 0..n {
        let Some(piv) = (r..n).find(|&i| a[i * n + c] != f.zero()) else { continue };
        for k in 0..n {
            a.swap(r * n + k, piv * n + k);
        }
        let inv = f.inv(a[r * n + c]);
        for i in 0..n {
            if i != r && a[i * n + c] != f.zero() {
                let factor = f.mul(a[i * n + c], inv);
                for k in 0..n {
                    a[i * n + k] = f.sub(a[i * n + k], f.mul(factor, a[r * n + k]));
                }
            }
        }
        r += 1;
    }
    r
}

/// Jordan type of a unipotent matrix, from the ranks of `(g − 1)^k`.
pub fn jordan_type(f: &FiniteField, n: usize, g: &[u32]) -> Partition {
    let mut x = g.to_vec();
    for i in 0..n {
        x[i * n + i] = f.sub(x[i * n + i], f.one());
    }
    let mut kers = vec![0usize];
    let mut pw = mat_identity(n);
    for _ in 0..n {
        pw = mat_mul(f, n, &pw, &x);
        kers.push(n - rank(f, n, &pw));
    }
    // number of blocks of size ≥ k is dim ker^k − dim ker^{k−1}
    let ge: Vec<usize> = kers.windows(2).map(|w| w[1] - w[0]).collect();
    let parts: Vec<usize> = (0..n).map(|k| ge[k] - ge.get(k + 1).copied().unwrap_or(0)).collect();
    let mut out = Vec::new();
    for (k, &c) in parts.iter().enumerate() {
        out.extend(std::iter::repeat_n(k + 1, c));
    }
    Partition::new(out)
}

/// Upper Jordan normal form for `λ`.
pub fn jordan_matrix(f: &FiniteField, lambda: &Partition) -> Mat {
    let n = lambda.size();
    let mut m = mat_identity(n);
    let mut start = 0;
    for &b in &lambda.parts {
        for k in start..start + b - 1 {
            m[k * n + k + 1] = f.one();
        }
        start += b;
    }
    m
}

fn unit_matrix(n: usize, entries: &[((usize, usize), u32)]) -> Mat {
    let mut m = mat_identity(n);
    for &((i, j), x) in entries {
        m[i * n + j] = x;
    }
    m
}

/// All matrices of `U_2(F_q)` when there are at most `limit` of them.
pub fn level2_group(f: &FiniteField, wd: &WeightedDynkin, lv: &LevelData, limit: u64) -> Result<Vec<Mat>> {
    let q = f.size as u64;
    let size = (q as u128).checked_pow(lv.at_least2.len() as u32).unwrap_or(u128::MAX);
    if size > limit as u128 {
        return Err(Error::LimitExceeded { what: format!("U_2 for {}", wd.lambda), size, limit: limit as u128 });
    }
    Ok(all_with_support(f, wd.n(), &lv.at_least2))
}

fn all_with_support(f: &FiniteField, n: usize, support: &[(usize, usize)]) -> Vec<Mat> {
    let q = f.size;
    let mut out = Vec::new();
    let mut digits = vec![0u32; support.len()];
    loop {
        let entries: Vec<_> = support.iter().copied().zip(digits.iter().copied()).collect();
        out.push(unit_matrix(n, &entries));
        let mut k = 0;
        loop {
            if k == digits.len() {
                return out;
            }
            digits[k] += 1;
            if digits[k] < q {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
    }
}

/// A representative of `C ∩ U_2^F`: the first element of `candidates` whose
/// Jordan type is `λ`.
pub fn find_u<'a>(f: &FiniteField, wd: &WeightedDynkin, candidates: impl IntoIterator<Item = &'a Mat>) -> Option<Mat> {
    candidates.into_iter().find(|g| jordan_type(f, wd.n(), g) == wd.lambda).cloned()
}

/// Elementary generators `x_α(t)` of `U_2(F_q)`, `t` running through an
/// `F_p`-basis of `F_q`.
fn level2_generators(f: &FiniteField, wd: &WeightedDynkin, lv: &LevelData) -> Vec<Mat> {
    let basis: Vec<u32> = (0..f.k).map(|i| f.p.pow(i) as u32).collect();
    let mut out = Vec::new();
    for &pos in &lv.at_least2 {
        for &t in &basis {
            out.push(unit_matrix(wd.n(), &[(pos, t)]));
        }
    }
    out
}

/// Data for one `(n, q, λ)` over the split group. When `U_2(F_q)` is too
/// large, `u2` holds only the coset representatives of `U_2/U_3` supported on
/// `Σ_{2,C}`; `ψ_u` factors through that quotient.
pub struct SplitCase {
    pub field: Arc<FiniteField>,
    pub wd: WeightedDynkin,
    pub lv: LevelData,
    pub u2: Vec<Mat>,
    pub full: bool,
    pub u: Mat,
}

impl SplitCase {
    pub fn new(q: u64, lambda: &Partition, limit: u64) -> Result<Self> {
        let pp = PrimePower::new(q)?;
        let field = Arc::new(build_field(pp.p, pp.m)?);
        let wd = weighted_dynkin(lambda);
        let lv = level_sets(&wd)?;
        let (u2, full) = match level2_group(&field, &wd, &lv, limit) {
            Ok(all) => (all, true),
            Err(Error::LimitExceeded { .. }) => {
                let size = (q as u128).checked_pow(lv.sigma2.len() as u32).unwrap_or(u128::MAX);
                if size > limit as u128 {
                    return Err(Error::LimitExceeded {
                        what: format!("U_2/U_3 for {lambda}"),
                        size,
                        limit: limit as u128,
                    });
                }
                (all_with_support(&field, wd.n(), &lv.sigma2), false)
            }
            Err(e) => return Err(e),
        };
        let u = find_u(&field, &wd, &u2)
            .ok_or_else(|| Error::Consistency(format!("no element of type {lambda} in U_2")))?;
        Ok(SplitCase { field, wd, lv, u2, full, u })
    }

    pub fn psi(&self, u: &[u32], g: &[u32]) -> u64 {
        psi_u(&self.field, &self.lv, self.wd.n(), u, g)
    }
}

/// `ψ_u(g x) = ψ_u(g) + ψ_u(x)` for every `g ∈ U_2^F` and every elementary
/// generator `x`, which makes `ψ_u` a homomorphism.
pub fn check_psi_homomorphism(case: &SplitCase) -> bool {
    let (f, n) = (&case.field, case.wd.n());
    let gens = level2_generators(f, &case.wd, &case.lv);
    let p = f.p;
    case.u2.iter().all(|g| {
        in_level_group(f, &case.wd, g, 2)
            && gens.iter().all(|x| {
                let gx = mat_mul(f, n, g, x);
                case.psi(&case.u, &gx) == (case.psi(&case.u, g) + case.psi(&case.u, x)) % p
            })
    })
}

/// Full pair table, for small `U_2`.
pub fn check_psi_homomorphism_pairs(case: &SplitCase) -> bool {
    let (f, n) = (&case.field, case.wd.n());
    case.u2.iter().all(|g| {
        case.u2.iter().all(|h| {
            let gh = mat_mul(f, n, g, h);
            case.psi(&case.u, &gh) == (case.psi(&case.u, g) + case.psi(&case.u, h)) % f.p
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sigma {
    Fp,
    Gamma,
}

/// `ψ_{σ(u)}(σ(g)) = ψ_u(g)` on all of `U_2^F`.
pub fn check_equivariance(case: &SplitCase, sigma: Sigma) -> bool {
    let (f, n) = (&case.field, case.wd.n());
    let apply = |g: &[u32]| match sigma {
        Sigma::Fp => mat_frobenius(f, g, f.p),
        Sigma::Gamma => gamma(f, n, g),
    };
    let su = apply(&case.u);
    if !in_level_group(f, &case.wd, &su, 2) {
        return false;
    }
    case.u2.iter().all(|g| {
        let sg = apply(g);
        in_level_group(f, &case.wd, &sg, 2) && case.psi(&su, &sg) == case.psi(&case.u, g)
    })
}

/// `u` of type `λ` in `SL_n(p)` together with `g ∈ SL_n(p)` such that
/// `g u g⁻¹ = γ(u)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaWitness {
    pub lambda: Partition,
    pub u: Vec<Vec<u32>>,
    pub g: Vec<Vec<u32>>,
}

pub fn check_gamma_conjugacy(n: usize, q: u64, lambda: &Partition, limit: u64) -> Result<Option<GammaWitness>> {
    if lambda.size() != n {
        return Err(Error::Invalid(format!("{lambda} is not a partition of {n}")));
    }
    let p = PrimePower::new(q)?.p;
    let g = build_group(GroupKind::SL, n, p, limit)?;
    gamma_witness_in(&g, lambda)
}

pub fn gamma_witness_in(g: &MatrixGroup, lambda: &Partition) -> Result<Option<GammaWitness>> {
    let f = &g.field;
    let n = g.n;
    let jm = jordan_matrix(f, lambda);
    let u = g.index_of(&jm).ok_or_else(|| Error::Consistency("Jordan form not in the group".into()))?;
    let gu = g.index_of(&gamma(f, n, &jm)).ok_or_else(|| Error::Consistency("γ(u) not in the group".into()))?;
    let rows = |m: &Mat| crate::matrixoracle::mat_to_rows(n, m);
    Ok((0..g.order() as u32).find(|&x| g.conj(x, u) == gu).map(|x| GammaWitness {
        lambda: lambda.clone(),
        u: rows(&jm),
        g: rows(g.element(x)),
    }))
}

/// `⟨Γ̃_C, χ⟩` for every class `C` and every `χ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityReport {
    pub group: String,
    pub degrees: Vec<u64>,
    /// One row per partition: multiplicities indexed like `degrees`.
    pub rows: Vec<(Partition, Vec<i64>)>,
    /// `Γ̃_C(1) = |U_1:U_2|^{-1/2} |G:U_2|` on every row.
    pub degree_formula: bool,
    pub covered: Vec<bool>,
}

impl MultiplicityReport {
    pub fn pass(&self) -> bool {
        self.degree_formula && self.covered.iter().all(|&c| c)
    }
}

pub fn check_multiplicity_one(kind: GroupKind, n: usize, q: u64, limit: u64) -> Result<MultiplicityReport> {
    if kind.is_special() {
        return Err(Error::Invalid("multiplicity one is stated for GL and GU".into()));
    }
    let g = build_group(kind, n, q, limit)?;
    let t = character_table(&g)?;
    multiplicity_one_in(&g, &t, q)
}

pub fn multiplicity_one_in(g: &MatrixGroup, t: &CharacterTable, q: u64) -> Result<MultiplicityReport> {
    let f = &g.field;
    let n = g.n;
    let fld = &t.field;
    if fld.n % f.p != 0 {
        return Err(Error::Consistency("exponent not divisible by p".into()));
    }
    let step = fld.n / f.p;
    let mut rows = Vec::new();
    let mut degree_formula = true;
    for lambda in partitions_of(n) {
        let wd = weighted_dynkin(&lambda);
        let lv = level_sets(&wd)?;
        let u2: Vec<u32> =
            (0..g.order() as u32).filter(|&x| in_level_group(f, &wd, g.element(x), 2)).collect();
        if u2.len() as u128 != (q as u128).pow(lv.u2_exp as u32) {
            return Err(Error::Consistency(format!("|U_2^F| wrong for {lambda}")));
        }
        let u = find_u(f, &wd, u2.iter().map(|&x| g.element(x)))
            .ok_or_else(|| Error::Consistency(format!("no element of type {lambda} in U_2^F")))?;
        let h = g.subgroup(&u2);
        let ind = induce(g, t, &h, |y| fld.zeta(psi_u(f, &lv, n, &u, g.element(y)) * step));
        let root = (q as i64).pow(lv.half_index_exp() as u32);
        let mut mult = Vec::new();
        for chi in 0..t.len() {
            let m = t.multiplicity(chi, &ind)?;
            if m % root != 0 {
                return Err(Error::Consistency(format!("multiplicity {m} not divisible by {root}")));
            }
            mult.push(m / root);
        }
        let gamma_deg: i64 = mult.iter().zip(&t.degrees).map(|(m, &d)| m * d as i64).sum();
        degree_formula &= gamma_deg * root == (g.order() / u2.len()) as i64;
        rows.push((lambda, mult));
    }
    let covered = (0..t.len()).map(|chi| rows.iter().any(|(_, m)| m[chi] == 1)).collect();
    Ok(MultiplicityReport { group: g.label.clone(), degrees: t.degrees.clone(), rows, degree_formula, covered })
}

/// Parity and graph symmetry for every `λ ⊢ n`, `n ≤ max_n`.
pub fn sweep_parity_symmetry(max_n: usize) -> (usize, Vec<Partition>) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=max_n {
        for lambda in partitions_of(n) {
            let wd = weighted_dynkin(&lambda);
            checked += 1;
            let ok = wd.labels.iter().all(|&l| l <= 2) && wd.is_symmetric() && level_sets(&wd).is_ok();
            if !ok {
                bad.push(lambda);
            }
        }
    }
    (checked, bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagrams() {
        let wd = weighted_dynkin(&Partition::new(vec![2, 1]));
        assert_eq!(wd.labels, vec![1, 1]);
        assert_eq!(wd.root_values(), vec![1, 2, 1]);
        assert!(weighted_dynkin(&Partition::new(vec![4])).labels.iter().all(|&l| l == 2));
        assert!(weighted_dynkin(&Partition::new(vec![1, 1, 1])).labels.iter().all(|&l| l == 0));
        let lv = level_sets(&wd).unwrap();
        assert_eq!(lv.sigma2, vec![(0, 2)]);
        assert_eq!((lv.u1_exp, lv.u2_exp), (3, 1));
    }

    #[test]
    fn jordan_types() {
        let f = build_field(3, 1).unwrap();
        for lambda in partitions_of(4) {
            assert_eq!(jordan_type(&f, 4, &jordan_matrix(&f, &lambda)), lambda);
        }
    }
}
