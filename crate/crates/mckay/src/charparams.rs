//! Global side: `Irr(GL_n(εq))` through Jordan decomposition, degrees,
//! `ℓ′`-predicates, `d`-Harish-Chandra parameters, the action of linear
//! characters (central translation of `s`), and counts for `SL_n(εq)`.

use crate::error::{Error, Result};
use crate::exactfield::{ell_order, ell_part, group_order, group_order_pprime, SignedPrimePower};
use crate::partitions::{e_core_quotient, from_core_quotient, generic_degree, partitions_of, Partition, WreathLabel};
use crate::ssclasses::{
    centralizer_order, centralizer_type, component_group, det_index, enumerate_ss_classes, pgl_ss_classes,
    zhat_translate_with_perm, Eigen, Factor, SemisimpleClass,
};
use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::fmt;

/// `GL_n(εq)` together with its eigenvalue arithmetic.
#[derive(Debug, Clone)]
pub struct Setting {
    pub n: usize,
    pub sp: SignedPrimePower,
    pub eig: Eigen,
}

impl Setting {
    pub fn new(n: usize, sp: SignedPrimePower) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("rank must be positive".into()));
        }
        Ok(Setting { n, sp, eig: Eigen::new(n as u32, sp)? })
    }

    /// `q − ε`, the order of the centre and of `GL/SL`.
    pub fn z_order(&self) -> u64 {
        self.sp.q_minus_eps()
    }

    pub fn group_order(&self) -> BigUint {
        group_order(self.n as u32, self.sp)
    }
}

/// `χ_{s,ζ}`: a semisimple class and one partition per centralizer factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GlobalChar {
    pub s: SemisimpleClass,
    pub zeta: Vec<Partition>,
}

impl fmt::Display for GlobalChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, ((o, m), z)) in self.s.parts.iter().zip(&self.zeta).enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "[{}:{}]^{m} {z}", o.size, o.rep)?;
        }
        write!(f, "}}")
    }
}

/// `(s, λ, η)`: per factor an `e_i`-core and a label of `C_{e_i} ≀ S_{w_i}`.
/// The Sylow `Φ_d`-torus coordinate is fixed and left implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParamTriple {
    pub s: SemisimpleClass,
    pub lambda: Vec<Partition>,
    pub eta: Vec<WreathLabel>,
}

impl ParamTriple {
    pub fn weights(&self) -> Vec<usize> {
        self.eta.iter().map(WreathLabel::weight).collect()
    }
}

/// The same data with the torus coordinate made explicit in name only.
pub type ParamQuadruple = ParamTriple;

/// Label in `ℤ/(q−ε)` of a character of the centre.
pub type CentralCharLabel = u64;

/// All irreducible characters, ordered by semisimple class then labels.
pub fn enumerate_irr(st: &Setting) -> Result<Vec<GlobalChar>> {
    let mut out = Vec::new();
    for s in enumerate_ss_classes(&st.eig, st.n)? {
        let shapes: Vec<Vec<Partition>> = s.parts.iter().map(|(_, m)| partitions_of(*m)).collect();
        for zeta in cartesian(&shapes) {
            out.push(GlobalChar { s: s.clone(), zeta });
        }
    }
    Ok(out)
}

pub(crate) fn cartesian<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for l in lists {
        let mut next = Vec::with_capacity(out.len() * l.len());
        for prefix in &out {
            for x in l {
                let mut p = prefix.clone();
                p.push(x.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// `|GL_n(εq) : C(s)|_{p′}`.
pub fn index_pprime(st: &Setting, s: &SemisimpleClass) -> BigUint {
    let c: BigUint = centralizer_type(s, st.sp)
        .iter()
        .map(|f| group_order_pprime(f.m as u32, f.sp()))
        .fold(BigUint::one(), |a, b| a * b);
    group_order_pprime(st.n as u32, st.sp) / c
}

/// `∏ |Deg_{ζ_i}(ε_i q^{k_i})|`.
pub fn unipotent_degree(factors: &[Factor], zeta: &[Partition]) -> BigUint {
    factors
        .iter()
        .zip(zeta)
        .map(|(f, z)| generic_degree(z, f.eps, f.q))
        .fold(BigUint::one(), |a, b| a * b)
}

pub fn degree(st: &Setting, chi: &GlobalChar) -> BigUint {
    index_pprime(st, &chi.s) * unipotent_degree(&centralizer_type(&chi.s, st.sp), &chi.zeta)
}

fn check_ell(st: &Setting, ell: u64) -> Result<()> {
    if !crate::exactfield::is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    if st.sp.pp.p == ell {
        return Err(Error::EllDividesQ { ell, q: st.sp.q() });
    }
    Ok(())
}

pub fn is_ell_free(x: &BigUint, ell: u64) -> bool {
    ell_part(x, ell).0.is_one()
}

pub fn is_ellprime(st: &Setting, chi: &GlobalChar, ell: u64) -> Result<bool> {
    check_ell(st, ell)?;
    Ok(is_ell_free(&degree(st, chi), ell))
}

/// Index and unipotent factor separately prime to `ℓ`.
pub fn two_part_criterion(st: &Setting, chi: &GlobalChar, ell: u64) -> bool {
    let index = st.group_order() / centralizer_order(&chi.s, st.sp);
    is_ell_free(&index, ell) && is_ell_free(&unipotent_degree(&centralizer_type(&chi.s, st.sp), &chi.zeta), ell)
}

/// `e_i`: the order of `ε_i q^{k_i}` modulo `ℓ` (modulo 4 when `ℓ = 2`).
pub fn e_values(st: &Setting, s: &SemisimpleClass, ell: u64) -> Result<Vec<usize>> {
    centralizer_type(s, st.sp).iter().map(|f| Ok(ell_order(f.eps_q(), ell)? as usize)).collect()
}

pub fn to_params(st: &Setting, chi: &GlobalChar, ell: u64) -> Result<ParamTriple> {
    check_ell(st, ell)?;
    let e = e_values(st, &chi.s, ell)?;
    let mut lambda = Vec::new();
    let mut eta = Vec::new();
    for (z, &ei) in chi.zeta.iter().zip(&e) {
        let cq = e_core_quotient(z, ei);
        lambda.push(cq.core);
        eta.push(WreathLabel::from_quotient(&cq.quotient));
    }
    Ok(ParamTriple { s: chi.s.clone(), lambda, eta })
}

pub fn from_params(st: &Setting, t: &ParamTriple, ell: u64) -> Result<GlobalChar> {
    let e = e_values(st, &t.s, ell)?;
    let zeta = t
        .lambda
        .iter()
        .zip(&t.eta)
        .zip(&e)
        .map(|((l, h), &ei)| {
            from_core_quotient(l, &h.parts, ei).ok_or_else(|| Error::Invalid(format!("{l} is not a {ei}-core")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GlobalChar { s: t.s.clone(), zeta })
}

/// Cores of `ℓ′`-degree, `ℓ′` wreath labels and an `ℓ′` index `|GL : C(s)|`.
pub fn three_part_criterion(st: &Setting, t: &ParamTriple, ell: u64) -> bool {
    let factors = centralizer_type(&t.s, st.sp);
    let index = st.group_order() / centralizer_order(&t.s, st.sp);
    is_ell_free(&index, ell)
        && factors.iter().zip(&t.lambda).all(|(f, l)| is_ell_free(&generic_degree(l, f.eps, f.q), ell))
        && t.eta.iter().all(|h| is_ell_free(&h.degree(), ell))
}

/// `χ_{s,ζ} ⊗ δ_j = χ_{z_j s, ζ}`, with `ζ` carried along by the induced
/// permutation of centralizer factors.
pub fn zhat_act(st: &Setting, j: u64, chi: &GlobalChar) -> GlobalChar {
    let (s, perm) = zhat_translate_with_perm(&st.eig, j, &chi.s);
    let mut zeta = vec![Partition::empty(); chi.zeta.len()];
    for (i, z) in chi.zeta.iter().enumerate() {
        zeta[perm[i]] = z.clone();
    }
    GlobalChar { s, zeta }
}

/// `j ∈ ℤ/(q−ε)` with `χ ⊗ δ_j = χ`.
pub fn zhat_stabilizer(st: &Setting, chi: &GlobalChar) -> Vec<u64> {
    component_group(&st.eig, &chi.s)
        .elements
        .into_iter()
        .filter(|&j| zhat_act(st, j, chi) == *chi)
        .collect()
}

pub fn central_char(st: &Setting, chi: &GlobalChar) -> CentralCharLabel {
    det_index(&st.eig, &chi.s)
}

/// Degree of each constituent of the restriction to `SL_n(εq)`.
pub fn constituent_degree(st: &Setting, chi: &GlobalChar) -> BigUint {
    degree(st, chi) / BigUint::from(zhat_stabilizer(st, chi).len())
}

/// Membership in `Irr(GL | Irr_ℓ′(SL))`.
pub fn covers_ellprime(st: &Setting, chi: &GlobalChar, ell: u64) -> bool {
    is_ell_free(&constituent_degree(st, chi), ell)
}

/// `|Irr(SL_n(εq))|` as a sum over twist orbits of stabilizer orders.
pub fn count_irr_sl(st: &Setting) -> Result<u64> {
    let z = st.z_order();
    let total: u64 = enumerate_irr(st)?
        .iter()
        .map(|chi| {
            let t = zhat_stabilizer(st, chi).len() as u64;
            t * t
        })
        .sum();
    debug_assert_eq!(total % z, 0);
    Ok(total / z)
}

/// `|Jor(SL_n(εq))|`: over `PGL` semisimple classes, over `A(s)`-orbits of
/// unipotent labels, the stabilizer order.
pub fn count_jordan_params(st: &Setting) -> Result<u64> {
    let mut total = 0u64;
    for c in pgl_ss_classes(&st.eig, st.n)? {
        let shapes: Vec<Vec<Partition>> = c.rep.parts.iter().map(|(_, m)| partitions_of(*m)).collect();
        let a = c.component.order() as u64;
        let mut sum = 0u64;
        for zeta in cartesian(&shapes) {
            let stab = c
                .component
                .perms
                .iter()
                .filter(|perm| perm.iter().enumerate().all(|(i, &pi)| zeta[pi] == zeta[i]))
                .count() as u64;
            sum += stab * stab;
        }
        debug_assert_eq!(sum % a, 0);
        total += sum / a;
    }
    Ok(total)
}

/// `|PGL_n(εq) : C_{PGL}(π(s))| = |GL : C(s)| / |A(s)|`.
pub fn pgl_index(st: &Setting, s: &SemisimpleClass) -> BigUint {
    let a = component_group(&st.eig, s).order();
    st.group_order() / centralizer_order(s, st.sp) / BigUint::from(a)
}

/// The index condition and the requirement that `ℓ`-elements of `A(s)` fix
/// `(λ, η)` through their factor permutation.
pub fn sl_relevant(st: &Setting, t: &ParamTriple, ell: u64) -> bool {
    if !is_ell_free(&pgl_index(st, &t.s), ell) {
        return false;
    }
    let a = component_group(&st.eig, &t.s);
    let z = st.z_order();
    a.elements.iter().zip(&a.perms).all(|(&j, perm)| {
        let ord = z / num_integer::gcd(j, z);
        let is_ell_elt = crate::exactfield::ell_part_u64(ord, ell).1 == 1;
        !is_ell_elt
            || perm.iter().enumerate().all(|(i, &pi)| t.lambda[pi] == t.lambda[i] && t.eta[pi] == t.eta[i])
    })
}

/// Unipotent part of the parameters prime to `ℓ`.
pub fn params_unipotent_ellprime(st: &Setting, t: &ParamTriple, ell: u64) -> bool {
    let factors = centralizer_type(&t.s, st.sp);
    factors.iter().zip(&t.lambda).all(|(f, l)| is_ell_free(&generic_degree(l, f.eps, f.q), ell))
        && t.eta.iter().all(|h| is_ell_free(&h.degree(), ell))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(n: usize, eps: i8, q: u64) -> Setting {
        Setting::new(n, SignedPrimePower::new(eps, q).unwrap()).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_irr(&st(2, 1, 2)).unwrap().len(), 3);
        assert_eq!(enumerate_irr(&st(2, 1, 3)).unwrap().len(), 8);
        assert_eq!(enumerate_irr(&st(2, -1, 2)).unwrap().len(), 9);
        assert_eq!(count_irr_sl(&st(2, 1, 3)).unwrap(), 7);
        assert_eq!(count_irr_sl(&st(2, 1, 2)).unwrap(), 3);
        assert_eq!(count_irr_sl(&st(3, 1, 2)).unwrap(), 6);
        assert_eq!(count_jordan_params(&st(2, 1, 3)).unwrap(), 7);
        assert_eq!(count_irr_sl(&st(1, 1, 5)).unwrap(), 1);
        assert_eq!(count_jordan_params(&st(1, 1, 5)).unwrap(), 1);
    }

    #[test]
    fn gl23_degrees() {
        let s = st(2, 1, 3);
        let mut d: Vec<BigUint> = enumerate_irr(&s).unwrap().iter().map(|c| degree(&s, c)).collect();
        d.sort();
        let want: Vec<BigUint> = [1u32, 1, 2, 2, 2, 3, 3, 4].iter().map(|&x| BigUint::from(x)).collect();
        assert_eq!(d, want);
    }
}
