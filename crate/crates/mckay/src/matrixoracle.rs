//! Brute-force matrix groups: element enumeration by closure, conjugacy
//! classes, subgroups, normalizers, Sylow subgroups, and the automorphisms
//! `F_p` (entrywise `p`-th power) and `γ(g) = v_0 (gᵀ)⁻¹ v_0⁻¹`.
//!
//! Elements are stored once as row-major matrices over a [`FiniteField`] and
//! referred to by index everywhere else.

use crate::error::{Error, Result};
use crate::exactfield::{build_field, ell_part, group_order, sl_order, to_u64, FiniteField, SignedPrimePower};
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

pub const DEFAULT_GROUP_LIMIT: u64 = 25_000;

/// A square matrix, row-major, entries are field element codes.
pub type Mat = Vec<u32>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupKind {
    GL,
    SL,
    GU,
    SU,
}

impl GroupKind {
    pub fn is_unitary(self) -> bool {
        matches!(self, GroupKind::GU | GroupKind::SU)
    }

    pub fn is_special(self) -> bool {
        matches!(self, GroupKind::SL | GroupKind::SU)
    }

    /// The kind matching a sign: `GL`/`GU` and `SL`/`SU` are swapped by `ε`.
    pub fn with_eps(self, eps: i8) -> GroupKind {
        match (self.is_special(), eps < 0) {
            (false, false) => GroupKind::GL,
            (false, true) => GroupKind::GU,
            (true, false) => GroupKind::SL,
            (true, true) => GroupKind::SU,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl std::str::FromStr for GroupKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "GL" => Ok(GroupKind::GL),
            "SL" => Ok(GroupKind::SL),
            "GU" => Ok(GroupKind::GU),
            "SU" => Ok(GroupKind::SU),
            _ => Err(Error::Invalid(format!("unknown group kind {s}"))),
        }
    }
}

pub fn mat_identity(n: usize) -> Mat {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

pub fn mat_mul(f: &FiniteField, n: usize, a: &[u32], b: &[u32]) -> Mat {
    let mut c = vec![0u32; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                let y = b[k * n + j];
                if y != 0 {
                    c[i * n + j] = f.add(c[i * n + j], f.mul(x, y));
                }
            }
        }
    }
    c
}

pub fn mat_transpose(n: usize, a: &[u32]) -> Mat {
    let mut t = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            t[j * n + i] = a[i * n + j];
        }
    }
    t
}

/// Gauss–Jordan inverse; `None` if singular.
pub fn mat_inv(f: &FiniteField, n: usize, a: &[u32]) -> Option<Mat> {
    let mut m = a.to_vec();
    let mut inv = mat_identity(n);
    for col in 0..n {
        let piv = (col..n).find(|&r| m[r * n + col] != 0)?;
        if piv != col {
            for j in 0..n {
                m.swap(piv * n + j, col * n + j);
                inv.swap(piv * n + j, col * n + j);
            }
        }
        let s = f.inv(m[col * n + col]);
        for j in 0..n {
            m[col * n + j] = f.mul(m[col * n + j], s);
            inv[col * n + j] = f.mul(inv[col * n + j], s);
        }
        for r in 0..n {
            let c = m[r * n + col];
            if r != col && c != 0 {
                let c = f.neg(c);
                for j in 0..n {
                    m[r * n + j] = f.add(m[r * n + j], f.mul(c, m[col * n + j]));
                    inv[r * n + j] = f.add(inv[r * n + j], f.mul(c, inv[col * n + j]));
                }
            }
        }
    }
    Some(inv)
}

pub fn mat_det(f: &FiniteField, n: usize, a: &[u32]) -> u32 {
    let mut m = a.to_vec();
    let mut det = 1u32;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| m[r * n + col] != 0) else {
            return 0;
        };
        if piv != col {
            for j in 0..n {
                m.swap(piv * n + j, col * n + j);
            }
            det = f.neg(det);
        }
        let d = m[col * n + col];
        det = f.mul(det, d);
        let s = f.inv(d);
        for r in col + 1..n {
            let c = m[r * n + col];
            if c != 0 {
                let c = f.neg(f.mul(c, s));
                for j in col..n {
                    m[r * n + j] = f.add(m[r * n + j], f.mul(c, m[col * n + j]));
                }
            }
        }
    }
    det
}

/// Entrywise `x ↦ x^e`.
pub fn mat_frobenius(f: &FiniteField, a: &[u32], e: u64) -> Mat {
    a.iter().map(|&x| f.pow(x, e)).collect()
}

/// The antidiagonal matrix with `(−1)^{k+1}` in row `k` (1-based).
pub fn v0_matrix(f: &FiniteField, n: usize) -> Mat {
    let mut m = vec![0; n * n];
    for r in 0..n {
        m[r * n + (n - 1 - r)] = if r % 2 == 0 { 1 } else { f.neg(1) };
    }
    m
}

/// `γ(g) = v_0 (gᵀ)⁻¹ v_0⁻¹`.
pub fn gamma(f: &FiniteField, n: usize, g: &[u32]) -> Mat {
    let v0 = v0_matrix(f, n);
    let v0i = mat_inv(f, n, &v0).expect("v_0 is invertible");
    let ti = mat_inv(f, n, &mat_transpose(n, g)).expect("group elements are invertible");
    mat_mul(f, n, &mat_mul(f, n, &v0, &ti), &v0i)
}

/// Render a matrix using integer codes of the field elements.
pub fn mat_to_rows(n: usize, a: &[u32]) -> Vec<Vec<u32>> {
    a.chunks(n).map(|r| r.to_vec()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Automorphism {
    /// Entrywise `p`-th power.
    Fp,
    Gamma,
}

/// A finite group of invertible matrices, fully enumerated.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    pub label: String,
    pub kind: Option<GroupKind>,
    pub n: usize,
    pub sp: Option<SignedPrimePower>,
    pub field: Arc<FiniteField>,
    elements: Vec<Mat>,
    index: HashMap<Mat, u32>,
    inverse: Vec<u32>,
    pub generators: Vec<u32>,
}

/// Orbits of `G` acting on itself by conjugation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyPartition {
    pub reps: Vec<u32>,
    pub sizes: Vec<usize>,
    pub class_of: Vec<u32>,
    /// Order of the elements in each class.
    pub orders: Vec<u64>,
}

impl ConjugacyPartition {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn centralizer_order(&self, group_order: usize, c: usize) -> usize {
        group_order / self.sizes[c]
    }
}

/// A subgroup given by its sorted element indices and a generating list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupHandle {
    pub elements: Vec<u32>,
    pub gens: Vec<u32>,
}

impl SubgroupHandle {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// BFS closure of `gens` inside `GL_n` over `f`.
fn closure_mats(f: &FiniteField, n: usize, gens: &[Mat], limit: u64) -> Result<(Vec<Mat>, HashMap<Mat, u32>)> {
    let id = mat_identity(n);
    let mut elems = vec![id.clone()];
    let mut index = HashMap::new();
    index.insert(id, 0u32);
    let mut head = 0;
    while head < elems.len() {
        for g in gens {
            let x = mat_mul(f, n, &elems[head], g);
            if !index.contains_key(&x) {
                if elems.len() as u64 >= limit {
                    return Err(Error::LimitExceeded {
                        what: "subgroup closure".into(),
                        size: elems.len() as u128 + 1,
                        limit: limit as u128,
                    });
                }
                index.insert(x.clone(), elems.len() as u32);
                elems.push(x);
            }
        }
        head += 1;
    }
    Ok((elems, index))
}

/// Order of the finite group the arguments name.
pub fn expected_order(kind: GroupKind, n: usize, q: u64) -> Result<BigUint> {
    let eps = if kind.is_unitary() { -1 } else { 1 };
    let sp = SignedPrimePower::new(eps, q)?;
    Ok(if kind.is_special() { sl_order(n as u32, sp) } else { group_order(n as u32, sp) })
}

/// Enumerate `GL_n(q)`, `SL_n(q)`, `GU_n(q)` or `SU_n(q)`.
///
/// Unitary groups are the fixed points of `g ↦ γ(F_q(g))` inside
/// `GL_n(q²)`. Generators are chosen greedily from the diagonal elements and
/// the upper and lower unitriangular elements of the group.
pub fn build_group(kind: GroupKind, n: usize, q: u64, limit: u64) -> Result<MatrixGroup> {
    if n == 0 {
        return Err(Error::Invalid("rank must be positive".into()));
    }
    let eps: i8 = if kind.is_unitary() { -1 } else { 1 };
    let sp = SignedPrimePower::new(eps, q)?;
    let target = expected_order(kind, n, q)?;
    if target > BigUint::from(limit) {
        return Err(Error::LimitExceeded { what: format!("{kind}_{n}({q})"), size: to_u128(&target), limit: limit as u128 });
    }
    let target = to_u64(&target) as usize;
    let p = sp.pp.p;
    let k = sp.pp.m * if kind.is_unitary() { 2 } else { 1 };
    let f = build_field(p, k)?;
    let qs = f.size as u64;
    let member = |g: &Mat| -> bool {
        if kind.is_special() && mat_det(&f, n, g) != 1 {
            return false;
        }
        if kind.is_unitary() {
            // γ(F_q(g)) = g  ⟺  g v_0 F_q(g)ᵀ = v_0
            let v0 = v0_matrix(&f, n);
            let h = mat_transpose(n, &mat_frobenius(&f, g, q));
            return mat_mul(&f, n, &mat_mul(&f, n, g, &v0), &h) == v0;
        }
        true
    };
    let cap = 4_000_000u128;
    let mut candidates: Vec<Mat> = Vec::new();
    let diag_count = ((qs - 1) as u128).pow(n as u32);
    let tri = n * (n - 1) / 2;
    let tri_count = (qs as u128).pow(tri as u32);
    if diag_count > cap || tri_count > cap {
        return Err(Error::LimitExceeded { what: "generator candidates".into(), size: diag_count.max(tri_count), limit: cap });
    }
    for code in 0..diag_count as u64 {
        let mut m = vec![0; n * n];
        let mut c = code;
        for i in 0..n {
            m[i * n + i] = f.exp(c % (qs - 1));
            c /= qs - 1;
        }
        if member(&m) {
            candidates.push(m);
        }
    }
    let positions: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    for lower in [false, true] {
        for code in 0..tri_count as u64 {
            let mut m = mat_identity(n);
            let mut c = code;
            for &(i, j) in &positions {
                let (r, s) = if lower { (j, i) } else { (i, j) };
                m[r * n + s] = (c % qs) as u32;
                c /= qs;
            }
            if member(&m) {
                candidates.push(m);
            }
        }
    }
    let mut gens: Vec<Mat> = Vec::new();
    let (mut elems, mut index) = closure_mats(&f, n, &gens, limit)?;
    for c in candidates {
        if elems.len() == target {
            break;
        }
        if !index.contains_key(&c) {
            gens.push(c);
            (elems, index) = closure_mats(&f, n, &gens, limit)?;
        }
    }
    if elems.len() != target {
        return Err(Error::Consistency(format!("{kind}_{n}({q}) closed at {} elements, expected {target}", elems.len())));
    }
    let gen_idx = gens.iter().map(|g| index[g]).collect();
    let mut g = MatrixGroup::from_parts(format!("{kind}_{n}({q})"), Some(kind), n, Some(sp), Arc::new(f), elems, index);
    g.generators = gen_idx;
    Ok(g)
}

fn to_u128(x: &BigUint) -> u128 {
    let d = x.to_u64_digits();
    match d.len() {
        0 => 0,
        1 => d[0] as u128,
        2 => d[0] as u128 | ((d[1] as u128) << 64),
        _ => u128::MAX,
    }
}

impl MatrixGroup {
    fn from_parts(
        label: String,
        kind: Option<GroupKind>,
        n: usize,
        sp: Option<SignedPrimePower>,
        field: Arc<FiniteField>,
        elements: Vec<Mat>,
        index: HashMap<Mat, u32>,
    ) -> Self {
        let inverse = elements
            .iter()
            .map(|m| index[&mat_inv(&field, n, m).expect("invertible")])
            .collect();
        MatrixGroup { label, kind, n, sp, field, elements, index, inverse, generators: Vec::new() }
    }

    /// The group generated by explicit matrices over `field`.
    pub fn generated_by(label: &str, field: Arc<FiniteField>, n: usize, gens: &[Mat], limit: u64) -> Result<Self> {
        let (elems, index) = closure_mats(&field, n, gens, limit)?;
        let gi = gens.iter().map(|g| index[g]).collect();
        let mut g = MatrixGroup::from_parts(label.into(), None, n, None, field, elems, index);
        g.generators = gi;
        Ok(g)
    }

    /// A subgroup promoted to a group in its own right.
    pub fn subgroup_group(&self, h: &SubgroupHandle, label: &str) -> MatrixGroup {
        let gens: Vec<Mat> = h.gens.iter().map(|&i| self.elements[i as usize].clone()).collect();
        let (elems, index) = closure_mats(&self.field, self.n, &gens, u64::MAX).expect("no limit");
        debug_assert_eq!(elems.len(), h.order());
        let gi = gens.iter().map(|g| index[g]).collect();
        let mut g = MatrixGroup::from_parts(label.into(), None, self.n, self.sp, self.field.clone(), elems, index);
        g.generators = gi;
        g
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn element(&self, i: u32) -> &Mat {
        &self.elements[i as usize]
    }

    pub fn elements(&self) -> &[Mat] {
        &self.elements
    }

    pub fn index_of(&self, m: &Mat) -> Option<u32> {
        self.index.get(m).copied()
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let m = mat_mul(&self.field, self.n, &self.elements[a as usize], &self.elements[b as usize]);
        self.index[&m]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    /// `g x g⁻¹`.
    pub fn conj(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut r = 0;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    pub fn element_order(&self, a: u32) -> u64 {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Conjugacy classes, ordered by element order, then class size, then
    /// smallest element index. The identity class comes first.
    pub fn conjugacy_classes(&self) -> ConjugacyPartition {
        let n = self.order();
        let mut class_of = vec![u32::MAX; n];
        let mut raw: Vec<Vec<u32>> = Vec::new();
        for x in 0..n as u32 {
            if class_of[x as usize] != u32::MAX {
                continue;
            }
            let c = raw.len() as u32;
            let mut orbit = vec![x];
            class_of[x as usize] = c;
            let mut head = 0;
            while head < orbit.len() {
                let y = orbit[head];
                for &g in &self.generators {
                    let z = self.conj(g, y);
                    if class_of[z as usize] == u32::MAX {
                        class_of[z as usize] = c;
                        orbit.push(z);
                    }
                }
                head += 1;
            }
            raw.push(orbit);
        }
        let mut keyed: Vec<(u64, usize, u32, usize)> = raw
            .iter()
            .enumerate()
            .map(|(i, o)| (self.element_order(o[0]), o.len(), *o.iter().min().unwrap(), i))
            .collect();
        keyed.sort();
        let mut relabel = vec![0u32; raw.len()];
        for (new, &(_, _, _, old)) in keyed.iter().enumerate() {
            relabel[old] = new as u32;
        }
        for c in class_of.iter_mut() {
            *c = relabel[*c as usize];
        }
        ConjugacyPartition {
            reps: keyed.iter().map(|k| k.2).collect(),
            sizes: keyed.iter().map(|k| k.1).collect(),
            orders: keyed.iter().map(|k| k.0).collect(),
            class_of,
        }
    }

    /// Exponent: lcm of element orders.
    pub fn exponent(&self, classes: &ConjugacyPartition) -> u64 {
        classes.orders.iter().fold(1, |acc, &o| num_integer::lcm(acc, o))
    }

    pub fn whole(&self) -> SubgroupHandle {
        SubgroupHandle { elements: (0..self.order() as u32).collect(), gens: self.generators.clone() }
    }

    pub fn subgroup(&self, gens: &[u32]) -> SubgroupHandle {
        let mut seen = vec![false; self.order()];
        let mut out = vec![0u32];
        seen[0] = true;
        let mut head = 0;
        while head < out.len() {
            for &g in gens {
                let z = self.mul(out[head], g);
                if !seen[z as usize] {
                    seen[z as usize] = true;
                    out.push(z);
                }
            }
            head += 1;
        }
        out.sort_unstable();
        SubgroupHandle { elements: out, gens: gens.to_vec() }
    }

    /// Subgroup generated by explicit matrices, which must lie in the group.
    pub fn subgroup_from_matrices(&self, mats: &[Mat]) -> Result<SubgroupHandle> {
        let gens = mats
            .iter()
            .map(|m| self.index_of(m).ok_or_else(|| Error::Invalid("matrix not in group".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.subgroup(&gens))
    }

    fn membership(&self, h: &SubgroupHandle) -> Vec<bool> {
        let mut m = vec![false; self.order()];
        for &x in &h.elements {
            m[x as usize] = true;
        }
        m
    }

    /// `N_G(H)` by testing every element against the generators of `H`.
    pub fn normalizer(&self, h: &SubgroupHandle) -> SubgroupHandle {
        let inh = self.membership(h);
        let elems: Vec<u32> = (0..self.order() as u32)
            .filter(|&g| h.gens.iter().all(|&x| inh[self.conj(g, x) as usize]))
            .collect();
        let gens = self.small_generating_set(&elems);
        SubgroupHandle { elements: elems, gens }
    }

    /// `C_G(H)` for the subgroup generated by `xs`.
    pub fn centralizer(&self, xs: &[u32]) -> SubgroupHandle {
        let elems: Vec<u32> = (0..self.order() as u32)
            .filter(|&g| xs.iter().all(|&x| self.mul(g, x) == self.mul(x, g)))
            .collect();
        let gens = self.small_generating_set(&elems);
        SubgroupHandle { elements: elems, gens }
    }

    /// Greedy generating set for a known subset closed under products.
    fn small_generating_set(&self, elems: &[u32]) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut cur = self.subgroup(&[]);
        for &x in elems {
            if cur.order() == elems.len() {
                break;
            }
            if !cur.contains(x) {
                gens.push(x);
                cur = self.subgroup(&gens);
            }
        }
        gens
    }

    /// A Sylow `ℓ`-subgroup by normalizer climbing with a seeded element order.
    pub fn sylow_subgroup(&self, ell: u64, seed: u64) -> Result<SubgroupHandle> {
        let (target, _) = ell_part(&BigUint::from(self.order()), ell);
        let target = to_u64(&target) as usize;
        if target == 1 {
            return Err(Error::EllDoesNotDivide { ell });
        }
        let mut order: Vec<u32> = (0..self.order() as u32).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let mut p = self.subgroup(&[]);
        while p.order() < target {
            let norm = self.normalizer(&p);
            let inn = self.membership(&norm);
            let y = order
                .iter()
                .copied()
                .filter(|&y| inn[y as usize] && !p.contains(y))
                .find(|&y| {
                    let (lp, _) = crate::exactfield::ell_part_u64(self.element_order(y), ell);
                    p.contains(self.pow(y, lp))
                })
                .ok_or_else(|| Error::Consistency("normalizer climbing stalled".into()))?;
            let mut gens = p.gens.clone();
            gens.push(y);
            p = self.subgroup(&gens);
        }
        Ok(p)
    }

    /// Distinct conjugates of `h`.
    pub fn conjugates(&self, h: &SubgroupHandle) -> Vec<Vec<u32>> {
        let mut seen: std::collections::BTreeSet<Vec<u32>> = Default::default();
        let mut queue = VecDeque::from([h.elements.clone()]);
        seen.insert(h.elements.clone());
        while let Some(s) = queue.pop_front() {
            for &g in &self.generators {
                let mut t: Vec<u32> = s.iter().map(|&x| self.conj(g, x)).collect();
                t.sort_unstable();
                if seen.insert(t.clone()) {
                    queue.push_back(t);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Image of an element under `F_p` or `γ`; an error if the image leaves
    /// the group.
    pub fn apply_automorphism(&self, which: Automorphism, g: u32) -> Result<u32> {
        let m = &self.elements[g as usize];
        let img = match which {
            Automorphism::Fp => mat_frobenius(&self.field, m, self.field.p),
            Automorphism::Gamma => gamma(&self.field, self.n, m),
        };
        self.index_of(&img).ok_or_else(|| Error::Consistency(format!("{which:?} image leaves {}", self.label)))
    }

    /// Matrix with entries given as integers mod `p`.
    pub fn mat_from_ints(&self, rows: &[&[i64]]) -> Mat {
        rows.iter().flat_map(|r| r.iter().map(|&x| self.field.from_int(x))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        assert_eq!(build_group(GroupKind::GL, 2, 2, DEFAULT_GROUP_LIMIT).unwrap().order(), 6);
        assert_eq!(build_group(GroupKind::SL, 2, 3, DEFAULT_GROUP_LIMIT).unwrap().order(), 24);
        assert_eq!(build_group(GroupKind::GU, 2, 2, DEFAULT_GROUP_LIMIT).unwrap().order(), 18);
        assert!(matches!(
            build_group(GroupKind::GL, 4, 3, DEFAULT_GROUP_LIMIT),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn gamma_fixes_unipotent() {
        let g = build_group(GroupKind::SL, 2, 3, DEFAULT_GROUP_LIMIT).unwrap();
        let u = g.index_of(&g.mat_from_ints(&[&[1, 1], &[0, 1]])).unwrap();
        assert_eq!(g.apply_automorphism(Automorphism::Gamma, u).unwrap(), u);
        assert_eq!(g.apply_automorphism(Automorphism::Gamma, 0).unwrap(), 0);
    }

    #[test]
    fn determinant_and_inverse() {
        let f = build_field(5, 1).unwrap();
        let a = vec![2, 3, 1, 4];
        assert_eq!(mat_det(&f, 2, &a), f.from_int(5));
        let b = vec![2, 3, 1, 1];
        let bi = mat_inv(&f, 2, &b).unwrap();
        assert_eq!(mat_mul(&f, 2, &b, &bi), mat_identity(2));
    }
}
