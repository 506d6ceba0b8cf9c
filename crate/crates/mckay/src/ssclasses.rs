//! Semisimple classes of `GL_n(εq)` as multisets of Frobenius orbits of
//! eigenvalues, their centralizers, and the action of central scalars.
//!
//! Eigenvalues live in one cyclic group `μ_M`, `M = q^K − 1`, written
//! additively through discrete logarithms. `K` is chosen so that every orbit
//! of size at most `n` fits. The Frobenius `ζ ↦ ζ^{εq}` becomes
//! multiplication by `εq` modulo `M`.

use crate::error::{Error, Result};
use crate::exactfield::{group_order, mulmod, SignedPrimePower};
use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// The ambient cyclic group of eigenvalue labels.
#[derive(Debug, Clone)]
pub struct Eigen {
    pub sp: SignedPrimePower,
    /// Largest orbit size supported.
    pub k_max: u32,
    /// `M = q^K − 1`.
    pub modulus: u128,
    /// `εq mod M`.
    pub y: u128,
}

fn lcm_upto(n: u32) -> u64 {
    (1..=n as u64).fold(1, num_integer::lcm)
}

impl Eigen {
    pub fn new(k_max: u32, sp: SignedPrimePower) -> Result<Self> {
        let k = lcm_upto(k_max.max(1)) * if sp.eps == -1 { 2 } else { 1 };
        let modulus = (sp.q() as u128)
            .checked_pow(k as u32)
            .filter(|&x| x < (1u128 << 120))
            .ok_or_else(|| Error::LimitExceeded {
                what: format!("eigenvalue tower q^{k}"),
                size: u128::MAX,
                limit: 1u128 << 120,
            })?
            - 1;
        let y = if sp.eps == 1 { sp.q() as u128 % modulus } else { modulus - sp.q() as u128 };
        Ok(Eigen { sp, k_max, modulus, y })
    }

    pub fn phi(&self, x: u128) -> u128 {
        let t = mulmod(x, self.sp.q() as u128, self.modulus);
        if self.sp.eps == 1 || t == 0 {
            t
        } else {
            self.modulus - t
        }
    }

    /// `|(εq)^k − 1| = q^k − ε^k`.
    pub fn level_order(&self, k: u32) -> u128 {
        let (e, qk) = self.sp.power(k);
        (qk as i128 - e as i128) as u128
    }

    /// Generator (as a log) of the subgroup of order `q^k − ε^k`, which is the
    /// set of labels fixed by `φ^k`.
    pub fn level_generator(&self, k: u32) -> u128 {
        assert!(k <= self.k_max);
        self.modulus / self.level_order(k)
    }

    /// Log of the generator of the scalar group `μ_{q−ε}`.
    pub fn scalar_generator(&self) -> u128 {
        self.level_generator(1)
    }

    pub fn scalar(&self, j: u64) -> u128 {
        mulmod(self.scalar_generator(), j as u128, self.modulus)
    }

    pub fn add(&self, a: u128, b: u128) -> u128 {
        let s = a + b;
        if s >= self.modulus {
            s - self.modulus
        } else {
            s
        }
    }

    pub fn orbit(&self, x: u128) -> Vec<u128> {
        let mut out = vec![x];
        let mut cur = self.phi(x);
        while cur != x {
            out.push(cur);
            cur = self.phi(cur);
        }
        out
    }

    pub fn canonical(&self, x: u128) -> OrbitLabel {
        let o = self.orbit(x);
        OrbitLabel { rep: *o.iter().min().unwrap(), size: o.len() as u32 }
    }

    /// All orbits of exact size `k`, sorted by representative.
    pub fn orbits_of_size(&self, k: u32) -> Vec<OrbitLabel> {
        let g = self.level_generator(k);
        let mut out = Vec::new();
        for j in 0..self.level_order(k) {
            let x = g * j;
            let o = self.orbit(x);
            if o.len() as u32 == k && o.iter().all(|&z| z >= x) {
                out.push(OrbitLabel { rep: x, size: k });
            }
        }
        out
    }
}

/// A Frobenius orbit of eigenvalue labels: least log in the orbit, and size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitLabel {
    pub size: u32,
    pub rep: u128,
}

/// A semisimple class: distinct orbits with multiplicities, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SemisimpleClass {
    pub parts: Vec<(OrbitLabel, usize)>,
}

impl SemisimpleClass {
    pub fn new(mut parts: Vec<(OrbitLabel, usize)>) -> Self {
        parts.retain(|p| p.1 > 0);
        parts.sort();
        SemisimpleClass { parts }
    }

    pub fn dim(&self) -> usize {
        self.parts.iter().map(|(o, m)| o.size as usize * m).sum()
    }

    /// The multiset of eigenvalue logs, sorted.
    pub fn eigenvalues(&self, eig: &Eigen) -> Vec<u128> {
        let mut v = Vec::new();
        for (o, m) in &self.parts {
            for x in eig.orbit(o.rep) {
                v.extend(std::iter::repeat_n(x, *m));
            }
        }
        v.sort();
        v
    }

    /// Block sum of two classes.
    pub fn join(&self, other: &SemisimpleClass) -> SemisimpleClass {
        let mut map: BTreeMap<OrbitLabel, usize> = BTreeMap::new();
        for (o, m) in self.parts.iter().chain(&other.parts) {
            *map.entry(*o).or_default() += m;
        }
        SemisimpleClass::new(map.into_iter().collect())
    }
}

/// One factor `GL_m(ε^k q^k)` of a centralizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factor {
    pub m: usize,
    pub k: u32,
    pub eps: i8,
    pub q: u64,
}

impl Factor {
    pub fn sp(&self) -> SignedPrimePower {
        SignedPrimePower::new(self.eps, self.q).expect("valid prime power")
    }

    pub fn order(&self) -> BigUint {
        group_order(self.m as u32, self.sp())
    }

    /// `ε_k q^k` as a signed integer.
    pub fn eps_q(&self) -> i64 {
        self.eps as i64 * self.q as i64
    }
}

pub fn centralizer_type(s: &SemisimpleClass, sp: SignedPrimePower) -> Vec<Factor> {
    s.parts
        .iter()
        .map(|(o, m)| {
            let (eps, q) = sp.power(o.size);
            Factor { m: *m, k: o.size, eps, q }
        })
        .collect()
}

pub fn centralizer_order(s: &SemisimpleClass, sp: SignedPrimePower) -> BigUint {
    centralizer_type(s, sp).iter().map(Factor::order).fold(BigUint::one(), |a, b| a * b)
}

/// All semisimple classes of `GL_n(εq)`.
pub fn enumerate_ss_classes(eig: &Eigen, n: usize) -> Result<Vec<SemisimpleClass>> {
    if n as u32 > eig.k_max {
        return Err(Error::Invalid(format!("n = {n} exceeds the eigenvalue tower ({})", eig.k_max)));
    }
    let mut orbits = Vec::new();
    for k in 1..=n as u32 {
        orbits.extend(eig.orbits_of_size(k));
    }
    fn rec(
        orbits: &[OrbitLabel],
        start: usize,
        rest: usize,
        cur: &mut Vec<(OrbitLabel, usize)>,
        out: &mut Vec<SemisimpleClass>,
    ) {
        if rest == 0 {
            out.push(SemisimpleClass::new(cur.clone()));
            return;
        }
        for i in start..orbits.len() {
            let k = orbits[i].size as usize;
            if k > rest {
                break;
            }
            for m in 1..=rest / k {
                cur.push((orbits[i], m));
                rec(orbits, i + 1, rest - k * m, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&orbits, 0, n, &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

/// Multiplication by the scalar `z_j`, together with the induced map on
/// factor positions: `perm[i]` is the position in the result of factor `i`.
pub fn zhat_translate_with_perm(eig: &Eigen, j: u64, s: &SemisimpleClass) -> (SemisimpleClass, Vec<usize>) {
    let z = eig.scalar(j);
    let moved: Vec<(OrbitLabel, usize)> =
        s.parts.iter().map(|(o, m)| (eig.canonical(eig.add(o.rep, z)), *m)).collect();
    let t = SemisimpleClass::new(moved.clone());
    let perm = moved
        .iter()
        .map(|(o, _)| t.parts.iter().position(|(p, _)| p == o).expect("present"))
        .collect();
    (t, perm)
}

pub fn zhat_translate(eig: &Eigen, j: u64, s: &SemisimpleClass) -> SemisimpleClass {
    zhat_translate_with_perm(eig, j, s).0
}

/// Index in `ZZ/(q−ε)` of `det(s)`.
pub fn det_index(eig: &Eigen, s: &SemisimpleClass) -> u64 {
    let mut acc = 0u128;
    for (o, m) in &s.parts {
        for x in eig.orbit(o.rep) {
            acc = eig.add(acc, mulmod(x, *m as u128, eig.modulus));
        }
    }
    let g = eig.scalar_generator();
    assert_eq!(acc % g, 0, "determinant lies in the scalar group");
    (acc / g) as u64
}

/// `A(s)`: scalars `z ∈ μ_{q−ε}` with `z·s = s`, and the permutation each
/// induces on the factors of the centralizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentGroup {
    pub elements: Vec<u64>,
    pub perms: Vec<Vec<usize>>,
}

impl ComponentGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

pub fn component_group(eig: &Eigen, s: &SemisimpleClass) -> ComponentGroup {
    let mut elements = Vec::new();
    let mut perms = Vec::new();
    for j in 0..eig.sp.q_minus_eps() {
        let (t, perm) = zhat_translate_with_perm(eig, j, s);
        if &t == s {
            elements.push(j);
            perms.push(perm);
        }
    }
    ComponentGroup { elements, perms }
}

/// A semisimple class of `PGL_n(εq)`: an orbit of `μ_{q−ε}` on semisimple
/// classes of `GL_n(εq)`, with its component group.
#[derive(Debug, Clone)]
pub struct PglClass {
    pub rep: SemisimpleClass,
    pub orbit_size: usize,
    pub component: ComponentGroup,
}

/// Semisimple classes of `PGL_n(εq)`, represented by the least element of
/// each scalar orbit.
pub fn pgl_ss_classes(eig: &Eigen, n: usize) -> Result<Vec<PglClass>> {
    let all = enumerate_ss_classes(eig, n)?;
    let mut out = Vec::new();
    for s in &all {
        let orbit: Vec<SemisimpleClass> =
            (0..eig.sp.q_minus_eps()).map(|j| zhat_translate(eig, j, s)).collect();
        if orbit.iter().min().unwrap() != s {
            continue;
        }
        let mut distinct = orbit.clone();
        distinct.sort();
        distinct.dedup();
        out.push(PglClass { rep: s.clone(), orbit_size: distinct.len(), component: component_group(eig, s) });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eig(n: u32, eps: i8, q: u64) -> Eigen {
        Eigen::new(n, SignedPrimePower::new(eps, q).unwrap()).unwrap()
    }

    #[test]
    fn counts() {
        let e = eig(2, 1, 3);
        assert_eq!(enumerate_ss_classes(&e, 2).unwrap().len(), 6);
        for q in [2, 3, 4, 5, 7] {
            let e = eig(1, 1, q);
            assert_eq!(enumerate_ss_classes(&e, 1).unwrap().len() as u64, q - 1);
        }
        let e = eig(1, -1, 2);
        assert_eq!(enumerate_ss_classes(&e, 1).unwrap().len(), 3);
    }

    #[test]
    fn centralizers_and_components() {
        let e = eig(2, 1, 3);
        let classes = enumerate_ss_classes(&e, 2).unwrap();
        let sp = e.sp;
        let coxeter: Vec<_> = classes.iter().filter(|s| s.parts[0].0.size == 2).collect();
        assert_eq!(coxeter.len(), 3);
        let t = centralizer_type(coxeter[0], sp);
        assert_eq!((t[0].m, t[0].eps, t[0].q), (1, 1, 9));
        let one = SemisimpleClass::new(vec![(e.canonical(0), 2)]);
        // -1 moves {1,1} to {-1,-1}, so the identity has trivial component group
        assert_eq!(component_group(&e, &one).order(), 1);
        let split = SemisimpleClass::new(vec![(e.canonical(0), 1), (e.canonical(e.scalar(1)), 1)]);
        let a = component_group(&e, &split);
        assert_eq!(a.order(), 2);
        assert_eq!(a.perms[1], vec![1, 0]);
        assert_eq!(zhat_translate(&e, 1, &one), SemisimpleClass::new(vec![(e.canonical(e.scalar(1)), 2)]));
        assert_eq!(det_index(&e, &zhat_translate(&e, 1, &one)), 0);
    }

    #[test]
    fn pgl_counts() {
        let e = eig(2, 1, 2);
        assert_eq!(pgl_ss_classes(&e, 2).unwrap().len(), 2);
        let e = eig(1, 1, 5);
        assert_eq!(pgl_ss_classes(&e, 1).unwrap().len(), 1);
    }
}
