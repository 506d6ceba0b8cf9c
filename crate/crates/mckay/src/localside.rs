//! Local side: the normalizer `Ñ` of a Sylow `Φ_d`-torus in `GL_n(εq)`.
//!
//! `C̃ = GL_m(εq) × (C_Q)^a` with `Q = q^{d_0} − ε^{d_0}`, and
//! `Ñ/C̃ ≅ C_{d_0} ≀ S_a`. Characters of `C_Q` are residues mod `Q`; the
//! cyclic factor acts on them by multiplication by `εq`.

use crate::charparams::{
    cartesian, degree as global_degree, enumerate_irr, is_ell_free, zhat_act, GlobalChar, ParamTriple, Setting,
};
use crate::error::{Error, Result};
use crate::exactfield::{ell_order, group_order, is_prime, SignedPrimePower};
use crate::partitions::{factorial, generic_degree, partitions_of, wreath_irr, WreathLabel};
use crate::ssclasses::{centralizer_type, det_index, enumerate_ss_classes, Eigen, OrbitLabel, SemisimpleClass};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Largest number of local characters enumerated before giving up.
pub const LOCAL_LIMIT: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalTorusData {
    pub n: usize,
    pub sp: SignedPrimePower,
    pub ell: u64,
    pub d: usize,
    pub d0: usize,
    pub a: usize,
    pub m: usize,
    /// `Q = q^{d_0} − ε^{d_0}`.
    pub q_order: u64,
    /// `εq mod Q`.
    pub eps_q_mod: u64,
}

impl LocalTorusData {
    /// `|C_{d_0} ≀ S_a|`.
    pub fn w_order(&self) -> BigUint {
        BigUint::from(self.d0).pow(self.a as u32) * factorial(self.a)
    }

    /// `|Ñ| = |GL_m(εq)| · Q^a · |W_d|`.
    pub fn n_order(&self) -> BigUint {
        group_order(self.m as u32, self.sp) * BigUint::from(self.q_order).pow(self.a as u32) * self.w_order()
    }

    /// `(εq)^c · θ mod Q`.
    pub fn base_action(&self, theta: u64, c: usize) -> u64 {
        let mut x = theta % self.q_order;
        for _ in 0..c {
            x = ((x as u128 * self.eps_q_mod as u128) % self.q_order as u128) as u64;
        }
        x
    }

    /// The `C_{d_0}`-orbit of a residue.
    pub fn orbit(&self, theta: u64) -> Vec<u64> {
        let mut out = vec![theta];
        let mut cur = self.base_action(theta, 1);
        while cur != theta {
            out.push(cur);
            cur = self.base_action(cur, 1);
        }
        out
    }

    /// Orbit representatives (least element) with orbit lengths.
    pub fn orbits(&self) -> Vec<(u64, usize)> {
        (0..self.q_order)
            .filter_map(|x| {
                let o = self.orbit(x);
                (o.iter().all(|&y| y >= x)).then_some((x, o.len()))
            })
            .collect()
    }

    /// Residue of the order-`(q−ε)` subgroup generator: `Q/(q−ε)`.
    pub fn scalar_step(&self) -> u64 {
        self.q_order / self.sp.q_minus_eps()
    }

    fn gl_setting(&self, eig: &Eigen) -> Setting {
        Setting { n: self.m, sp: self.sp, eig: eig.clone() }
    }
}

pub fn torus_data(n: usize, sp: SignedPrimePower, ell: u64) -> Result<LocalTorusData> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    if sp.pp.p == ell {
        return Err(Error::EllDividesQ { ell, q: sp.q() });
    }
    if !(group_order(n as u32, sp) % ell == BigUint::from(0u32)) {
        return Err(Error::EllDoesNotDivide { ell });
    }
    let d = ell_order(sp.q() as i64, ell)? as usize;
    let d0 = ell_order(sp.eps_q(), ell)? as usize;
    let a = n / d0;
    let m = n - a * d0;
    let (e, qd) = sp.power(d0 as u32);
    let q_order = (qd as i128 - e as i128) as u64;
    let eps_q_mod = sp.eps_q().rem_euclid(q_order as i64) as u64;
    let td = LocalTorusData { n, sp, ell, d, d0, a, m, q_order, eps_q_mod };
    if q_order % ell != 0 {
        return Err(Error::Consistency(format!("ℓ = {ell} does not divide Q = {q_order}")));
    }
    if td.base_action(1, d0) != 1 % q_order {
        return Err(Error::Consistency(format!("(εq)^{d0} ≠ 1 mod {q_order}")));
    }
    Ok(td)
}

/// `size` equal torus slots carrying one `C_{d_0}`-orbit of residues, with a
/// character of the stabilizer `C_t ≀ S_size`, `t = d_0 / orbit_len`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TorusBlock {
    pub rep: u64,
    pub orbit_len: usize,
    pub size: usize,
    pub eta: WreathLabel,
}

impl TorusBlock {
    pub fn t(&self, d0: usize) -> usize {
        d0 / self.orbit_len
    }
}

/// An irreducible character of `Ñ`: a character `ξ` of `C̃` (GL_m part and
/// torus residues grouped into blocks) and a character of `(W_d)_ξ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LocalChar {
    pub gl_part: GlobalChar,
    pub blocks: Vec<TorusBlock>,
    pub degree: BigUint,
}

impl LocalChar {
    /// The residue tuple of `ξ` (one representative per slot).
    pub fn residues(&self) -> Vec<u64> {
        self.blocks.iter().flat_map(|b| std::iter::repeat_n(b.rep, b.size)).collect()
    }
}

impl fmt::Display for LocalChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.gl_part)?;
        for b in &self.blocks {
            write!(f, " ⊗ [{}·{}]^{} {}", b.orbit_len, b.rep, b.size, b.eta)?;
        }
        Ok(())
    }
}

/// `|W_d : (W_d)_ξ|`.
pub fn stabilizer_index(td: &LocalTorusData, blocks: &[TorusBlock]) -> BigUint {
    let stab: BigUint = blocks
        .iter()
        .map(|b| BigUint::from(b.t(td.d0)).pow(b.size as u32) * factorial(b.size))
        .fold(BigUint::one(), |x, y| x * y);
    td.w_order() / stab
}

pub fn local_degree(td: &LocalTorusData, eig: &Eigen, gl_part: &GlobalChar, blocks: &[TorusBlock]) -> BigUint {
    let eta: BigUint = blocks.iter().map(|b| b.eta.degree()).fold(BigUint::one(), |x, y| x * y);
    stabilizer_index(td, blocks) * global_degree(&td.gl_setting(eig), gl_part) * eta
}

fn multisets(items: usize, total: usize) -> Vec<Vec<usize>> {
    fn rec(items: usize, start: usize, rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..items {
            for k in 1..=rest {
                cur.extend(std::iter::repeat_n(i, k));
                rec(items, i + 1, rest - k, cur, out);
                cur.truncate(cur.len() - k);
            }
        }
    }
    let mut out = Vec::new();
    rec(items, 0, total, &mut Vec::new(), &mut out);
    out
}

/// All of `Irr(Ñ)` by Clifford theory over `C̃`.
pub fn enumerate_local_irr(td: &LocalTorusData, eig: &Eigen) -> Result<Vec<LocalChar>> {
    let orbits = td.orbits();
    let gl_chars = enumerate_irr(&td.gl_setting(eig))?;
    let mut out = Vec::new();
    for ms in multisets(orbits.len(), td.a) {
        let mut grouped: BTreeMap<usize, usize> = BTreeMap::new();
        for i in ms {
            *grouped.entry(i).or_default() += 1;
        }
        let shapes: Vec<(u64, usize, usize)> = grouped.iter().map(|(&i, &s)| (orbits[i].0, orbits[i].1, s)).collect();
        let labels: Vec<Vec<WreathLabel>> = shapes.iter().map(|&(_, len, s)| wreath_irr(td.d0 / len, s)).collect();
        for etas in cartesian(&labels) {
            let blocks: Vec<TorusBlock> = shapes
                .iter()
                .zip(etas)
                .map(|(&(rep, orbit_len, size), eta)| TorusBlock { rep, orbit_len, size, eta })
                .collect();
            for g in &gl_chars {
                let degree = local_degree(td, eig, g, &blocks);
                out.push(LocalChar { gl_part: g.clone(), blocks: blocks.clone(), degree });
                if out.len() > LOCAL_LIMIT {
                    return Err(Error::LimitExceeded {
                        what: "local characters".into(),
                        size: out.len() as u128,
                        limit: LOCAL_LIMIT as u128,
                    });
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

pub fn local_ellprime(chi: &LocalChar, ell: u64) -> bool {
    is_ell_free(&chi.degree, ell)
}

/// `|Ñ : Ñ_ξ|_ℓ = 1` together with `ℓ ∤ ξ(1)·η(1)`, evaluated from the parts.
pub fn two_index_criterion(td: &LocalTorusData, eig: &Eigen, chi: &LocalChar, ell: u64) -> bool {
    let eta: BigUint = chi.blocks.iter().map(|b| b.eta.degree()).fold(BigUint::one(), |x, y| x * y);
    is_ell_free(&stabilizer_index(td, &chi.blocks), ell)
        && is_ell_free(&global_degree(&td.gl_setting(eig), &chi.gl_part), ell)
        && is_ell_free(&eta, ell)
}

/// Tensoring with the restriction of the `j`-th linear character of
/// `GL_n(εq)`: translate residues by `j·Q/(q−ε)` and twist the GL_m part.
pub fn local_zhat_act(td: &LocalTorusData, eig: &Eigen, j: u64, chi: &LocalChar) -> LocalChar {
    let shift = (j % td.sp.q_minus_eps()) * td.scalar_step();
    let mut blocks: Vec<TorusBlock> = chi
        .blocks
        .iter()
        .map(|b| {
            let moved = (b.rep + shift) % td.q_order;
            let rep = *td.orbit(moved).iter().min().unwrap();
            TorusBlock { rep, ..b.clone() }
        })
        .collect();
    blocks.sort();
    let gl_part = zhat_act(&td.gl_setting(eig), j, &chi.gl_part);
    LocalChar { gl_part, blocks, degree: chi.degree.clone() }
}

pub fn local_stabilizer(td: &LocalTorusData, eig: &Eigen, chi: &LocalChar) -> Vec<u64> {
    (0..td.sp.q_minus_eps()).filter(|&j| local_zhat_act(td, eig, j, chi) == *chi).collect()
}

/// Label in `ℤ/(q−ε)` of the character of the scalars below `chi`.
pub fn local_central_char(td: &LocalTorusData, eig: &Eigen, chi: &LocalChar) -> u64 {
    let z = td.sp.q_minus_eps();
    let unit = eig.modulus / td.q_order as u128;
    // Σ_{i<d_0} (εq)^i mod M
    let mut s = 0u128;
    let mut pw = 1u128;
    for _ in 0..td.d0 {
        s = eig.add(s, pw);
        pw = crate::exactfield::mulmod(pw, eig.y, eig.modulus);
    }
    let mut acc = det_index(eig, &chi.gl_part.s) % z;
    for r in chi.residues() {
        let x = crate::exactfield::mulmod(crate::exactfield::mulmod(r as u128, unit, eig.modulus), s, eig.modulus);
        let g = eig.scalar_generator();
        debug_assert_eq!(x % g, 0);
        acc = (acc + (x / g) as u64) % z;
    }
    acc
}

/// Degree of each constituent of the restriction to `N = Ñ ∩ SL`.
pub fn local_constituent_degree(td: &LocalTorusData, eig: &Eigen, chi: &LocalChar) -> BigUint {
    &chi.degree / BigUint::from(local_stabilizer(td, eig, chi).len())
}

/// Membership in `Irr(Ñ | Irr_ℓ′(N))`.
pub fn local_covers_ellprime(td: &LocalTorusData, eig: &Eigen, chi: &LocalChar) -> bool {
    is_ell_free(&local_constituent_degree(td, eig, chi), td.ell)
}

/// `e_i` per factor, with weights `w_i = ⌊m_i/e_i⌋` and remainders `r_i`.
pub fn factor_weights(st: &Setting, s: &SemisimpleClass, ell: u64) -> Result<Vec<(usize, usize, usize)>> {
    centralizer_type(s, st.sp)
        .iter()
        .map(|f| {
            let e = ell_order(f.eps_q(), ell)? as usize;
            Ok((e, f.m / e, f.m % e))
        })
        .collect()
}

/// `s` centralizes the Sylow `Φ_d`-torus: the weights fill all `a` slots.
pub fn is_admissible(st: &Setting, td: &LocalTorusData, s: &SemisimpleClass) -> Result<bool> {
    Ok(factor_weights(st, s, td.ell)?.iter().map(|w| w.1).sum::<usize>() == td.a)
}

/// `(s, λ, η)` with `s` admissible, `λ_i ⊢ r_i` of `ℓ′` generic degree and
/// `η_i ∈ Irr_ℓ′(C_{e_i} ≀ S_{w_i})`, one per `GL_n`-class of `s`.
pub fn enumerate_triples(st: &Setting, td: &LocalTorusData) -> Result<Vec<ParamTriple>> {
    let ell = td.ell;
    let mut out = Vec::new();
    for s in enumerate_ss_classes(&st.eig, st.n)? {
        let ws = factor_weights(st, &s, ell)?;
        if ws.iter().map(|w| w.1).sum::<usize>() != td.a {
            continue;
        }
        let factors = centralizer_type(&s, st.sp);
        let lambdas: Vec<_> = factors
            .iter()
            .zip(&ws)
            .map(|(f, &(_, _, r))| {
                partitions_of(r).into_iter().filter(|l| is_ell_free(&generic_degree(l, f.eps, f.q), ell)).collect()
            })
            .collect();
        let etas: Vec<_> = ws
            .iter()
            .map(|&(e, w, _)| wreath_irr(e, w).into_iter().filter(|h| is_ell_free(&h.degree(), ell)).collect())
            .collect();
        for lambda in cartesian(&lambdas) {
            for eta in cartesian(&etas) {
                out.push(ParamTriple { s: s.clone(), lambda: lambda.clone(), eta });
            }
        }
    }
    Ok(out)
}

/// The local character attached to a triple: torus blocks from factors of
/// positive weight, the GL_m part from the remainders.
pub fn psi_n(st: &Setting, td: &LocalTorusData, t: &ParamTriple) -> Result<LocalChar> {
    let eig = &st.eig;
    let ws = factor_weights(st, &t.s, td.ell)?;
    let unit = eig.modulus / td.q_order as u128;
    let mut blocks = Vec::new();
    let mut gl_parts = Vec::new();
    for (((o, _), &(e, w, r)), (lam, eta)) in t.s.parts.iter().zip(&ws).zip(t.lambda.iter().zip(&t.eta)) {
        if lam.size() != r || eta.weight() != w || (w > 0 && eta.e() != e) {
            return Err(Error::Invalid(format!("triple does not match the weights of {}", o.rep)));
        }
        if w > 0 {
            if o.rep % unit != 0 || o.size as usize * e != td.d0 {
                return Err(Error::Invalid("factor does not lie in the Sylow torus".into()));
            }
            let theta = (o.rep / unit) as u64;
            let orbit = td.orbit(theta);
            let rep = *orbit.iter().min().unwrap();
            blocks.push(TorusBlock { rep, orbit_len: orbit.len(), size: w, eta: eta.clone() });
        }
        if r > 0 {
            gl_parts.push(((*o, r), lam.clone()));
        }
    }
    blocks.sort();
    if blocks.iter().map(|b| b.size).sum::<usize>() != td.a {
        return Err(Error::Invalid("s is not admissible".into()));
    }
    gl_parts.sort_by(|x, y| x.0.cmp(&y.0));
    let s_m = SemisimpleClass::new(gl_parts.iter().map(|x| x.0).collect::<Vec<(OrbitLabel, usize)>>());
    let gl_part = GlobalChar { s: s_m, zeta: gl_parts.into_iter().map(|x| x.1).collect() };
    let degree = local_degree(td, eig, &gl_part, &blocks);
    Ok(LocalChar { gl_part, blocks, degree })
}

/// Number of local characters as `u64`, for reports.
pub fn degree_u64(chi: &LocalChar) -> Option<u64> {
    chi.degree.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(eps: i8, q: u64) -> SignedPrimePower {
        SignedPrimePower::new(eps, q).unwrap()
    }

    #[test]
    fn torus_examples() {
        let t = torus_data(2, sp(1, 3), 2).unwrap();
        assert_eq!((t.d, t.d0, t.a, t.m, t.q_order), (2, 2, 1, 0, 8));
        assert_eq!(t.w_order(), BigUint::from(2u32));
        let t = torus_data(3, sp(-1, 2), 3).unwrap();
        assert_eq!((t.d, t.d0, t.a, t.m, t.q_order), (2, 1, 3, 0, 3));
        assert_eq!(t.w_order(), BigUint::from(6u32));
        let t = torus_data(2, sp(1, 5), 3).unwrap();
        assert_eq!((t.d, t.d0, t.a, t.m, t.q_order), (2, 2, 1, 0, 24));
        assert!(torus_data(2, sp(1, 3), 3).is_err());
        assert!(torus_data(2, sp(1, 2), 5).is_err());
    }

    #[test]
    fn orbits_mod_8() {
        let t = torus_data(2, sp(1, 3), 2).unwrap();
        let orbits: Vec<Vec<u64>> = t.orbits().iter().map(|&(x, _)| t.orbit(x)).collect();
        assert_eq!(orbits, vec![vec![0], vec![1, 3], vec![2, 6], vec![4], vec![5, 7]]);
        let t = torus_data(3, sp(-1, 2), 3).unwrap();
        assert!((0..3).all(|x| t.base_action(x, 1) == x));
    }

    #[test]
    fn gl23_local() {
        let t = torus_data(2, sp(1, 3), 2).unwrap();
        let eig = Eigen::new(2, sp(1, 3)).unwrap();
        let chars = enumerate_local_irr(&t, &eig).unwrap();
        let mut d: Vec<u64> = chars.iter().map(|c| degree_u64(c).unwrap()).collect();
        d.sort();
        assert_eq!(d, vec![1, 1, 1, 1, 2, 2, 2]);
        assert_eq!(chars.iter().filter(|c| local_ellprime(c, 2)).count(), 4);
    }
}
