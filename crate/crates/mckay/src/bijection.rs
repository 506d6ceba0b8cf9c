//! The label-level bijection `Irr(GL | Irr_ℓ′(SL)) → Irr(Ñ | Irr_ℓ′(N))`,
//! its checks, and cross-validation against the matrix oracle.

use crate::charparams::{
    central_char, constituent_degree, count_irr_sl, count_jordan_params, covers_ellprime, degree, enumerate_irr,
    is_ell_free, is_ellprime, params_unipotent_ellprime, sl_relevant, three_part_criterion, to_params,
    two_part_criterion, zhat_act, zhat_stabilizer, GlobalChar, Setting,
};
use crate::dixon::{character_table, irr_ellprime};
use crate::error::{Error, Result};
use crate::exactfield::SignedPrimePower;
use crate::localside::{
    enumerate_local_irr, enumerate_triples, is_admissible, local_central_char, local_constituent_degree,
    local_covers_ellprime, local_ellprime, local_zhat_act, psi_n, torus_data, two_index_criterion, LocalChar,
    LocalTorusData,
};
use crate::matrixoracle::{build_group, GroupKind, MatrixGroup};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::time::Instant;

/// One grid point `(n, ε, q, ℓ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub n: usize,
    pub eps: i8,
    pub q: u64,
    pub ell: u64,
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.eps == 1 { "GL" } else { "GU" };
        write!(f, "{kind}_{}({}) ℓ={}", self.n, self.q, self.ell)
    }
}

impl Cell {
    pub fn sp(&self) -> Result<SignedPrimePower> {
        SignedPrimePower::new(self.eps, self.q)
    }
}

/// `n ∈ {2,3,4}`, `q ∈ {2,3,4,5,7}`, `ε = ±1`, `ℓ ∈ {2,3,5,7}` with `ℓ ∤ q`.
pub fn default_grid() -> Vec<Cell> {
    let mut out = Vec::new();
    for n in [2, 3, 4] {
        for q in [2u64, 3, 4, 5, 7] {
            for eps in [1i8, -1] {
                for ell in [2u64, 3, 5, 7] {
                    if q % ell != 0 {
                        out.push(Cell { n, eps, q, ell });
                    }
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    /// `|Irr(GL | Irr_ℓ′(SL))|`.
    pub global: usize,
    /// `|Irr(Ñ | Irr_ℓ′(N))|`.
    pub local: usize,
    /// Per central character label: `(ν, global, local)`.
    pub per_nu: Vec<(u64, usize, usize)>,
    pub global_ellprime: usize,
    pub local_ellprime: usize,
    pub irr_global: usize,
    pub irr_local: usize,
    pub triples: usize,
    pub ellprime_triples: usize,
    pub irr_sl: u64,
    pub jordan: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub bijective: bool,
    pub central: bool,
    pub zhat: bool,
    pub in_congruence: bool,
    pub sum_of_squares: bool,
    pub criteria: bool,
    pub jordan: bool,
    /// `None` when the oracle was not run.
    pub oracle: Option<bool>,
}

impl Checks {
    fn vacuous() -> Self {
        Checks {
            bijective: true,
            central: true,
            zhat: true,
            in_congruence: true,
            sum_of_squares: true,
            criteria: true,
            jordan: true,
            oracle: None,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.bijective
            && self.central
            && self.zhat
            && self.in_congruence
            && self.sum_of_squares
            && self.criteria
            && self.jordan
            && self.oracle != Some(false)
    }
}

/// One matched pair, with the constituent degrees compared mod `ℓ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairWitness {
    pub global: String,
    pub local: String,
    pub global_degree: String,
    pub local_degree: String,
    pub r: String,
    pub r_prime: String,
    pub nu: u64,
    pub in_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    /// `(oracle, combinatorial)` for `|Irr_ℓ′(GL)|`.
    pub global_ellprime: (usize, usize),
    /// `(oracle, combinatorial)`: `|Irr_ℓ′(N_GL(P))|` against `|Irr_ℓ′(Ñ)|`.
    pub sylow_normalizer_ellprime: (usize, usize),
    /// `(oracle, combinatorial)`: class count of the explicit torus
    /// normalizer against the number of local characters.
    pub torus_normalizer_irr: Option<(usize, usize)>,
    /// `(oracle, combinatorial)` for the class count of `SL`/`SU`.
    pub sl_classes: Option<(usize, u64)>,
    pub sylow_normalizer_order: usize,
    pub notes: Vec<String>,
}

impl OracleReport {
    pub fn pass(&self) -> bool {
        self.global_ellprime.0 == self.global_ellprime.1
            && self.sylow_normalizer_ellprime.0 == self.sylow_normalizer_ellprime.1
            && self.torus_normalizer_irr.is_none_or(|(a, b)| a == b)
            && self.sl_classes.is_none_or(|(a, b)| a as u64 == b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub cell: Cell,
    pub applicable: bool,
    pub counts: Counts,
    pub checks: Checks,
    pub witnesses: Vec<PairWitness>,
    pub failures: Vec<String>,
    pub oracle: Option<OracleReport>,
    pub error: Option<String>,
    pub ms: u128,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.error.is_none() && self.checks.all_pass()
    }
}

/// Everything computed for one cell.
pub struct CellData {
    pub st: Setting,
    pub td: LocalTorusData,
    pub global: Vec<GlobalChar>,
    pub local: Vec<LocalChar>,
}

impl CellData {
    pub fn new(cell: Cell) -> Result<Self> {
        let sp = cell.sp()?;
        let td = torus_data(cell.n, sp, cell.ell)?;
        let st = Setting::new(cell.n, sp)?;
        let global = enumerate_irr(&st)?;
        let local = enumerate_local_irr(&td, &st.eig)?;
        Ok(CellData { st, td, global, local })
    }
}

/// `Ω̃`: each `χ ∈ Irr(GL | Irr_ℓ′(SL))` paired with `ψ^{(Ñ)}` of its
/// parameters.
pub fn omega_tilde(data: &CellData) -> Result<Vec<(GlobalChar, LocalChar)>> {
    let (st, td) = (&data.st, &data.td);
    data.global
        .iter()
        .filter(|chi| covers_ellprime(st, chi, td.ell))
        .map(|chi| {
            let t = to_params(st, chi, td.ell)?;
            let psi = psi_n(st, td, &t).map_err(|e| Error::Consistency(format!("{chi}: {e}")))?;
            Ok((chi.clone(), psi))
        })
        .collect()
}

/// Equal counts, injectivity, and image equal to `Irr(Ñ | Irr_ℓ′(N))`.
pub fn check_bijective(data: &CellData, pairs: &[(GlobalChar, LocalChar)]) -> (bool, Vec<String>) {
    let mut fails = Vec::new();
    let image: HashSet<&LocalChar> = pairs.iter().map(|p| &p.1).collect();
    if image.len() != pairs.len() {
        fails.push(format!("not injective: {} pairs, {} images", pairs.len(), image.len()));
    }
    let target: HashSet<&LocalChar> =
        data.local.iter().filter(|c| local_covers_ellprime(&data.td, &data.st.eig, c)).collect();
    if target != image {
        fails.push(format!("image has {} elements, local side has {}", image.len(), target.len()));
        for c in target.difference(&image).take(5) {
            fails.push(format!("missed local character {c:?}"));
        }
    }
    (fails.is_empty(), fails)
}

pub fn check_central_blocks(data: &CellData, pairs: &[(GlobalChar, LocalChar)]) -> (bool, Vec<String>) {
    let mut fails = Vec::new();
    for (chi, psi) in pairs {
        let a = central_char(&data.st, chi);
        let b = local_central_char(&data.td, &data.st.eig, psi);
        if a != b {
            fails.push(format!("central label {a} ≠ {b} at {chi}"));
        }
    }
    (fails.is_empty(), fails)
}

pub fn check_zhat_equivariance(data: &CellData, pairs: &[(GlobalChar, LocalChar)]) -> (bool, Vec<String>) {
    let map: HashMap<&GlobalChar, &LocalChar> = pairs.iter().map(|(a, b)| (a, b)).collect();
    let mut fails = Vec::new();
    for (chi, psi) in pairs {
        for j in 0..data.st.z_order() {
            let moved = zhat_act(&data.st, j, chi);
            let want = local_zhat_act(&data.td, &data.st.eig, j, psi);
            match map.get(&moved) {
                Some(&got) if *got == want => {}
                Some(_) => fails.push(format!("twist {j} of {chi} not matched")),
                None => fails.push(format!("twist {j} of {chi} leaves the domain")),
            }
        }
    }
    (fails.is_empty(), fails)
}

/// Constituent degrees over `SL` and `N` agree up to sign mod `ℓ`.
pub fn check_in(data: &CellData, pairs: &[(GlobalChar, LocalChar)]) -> (bool, Vec<PairWitness>) {
    let ell = BigUint::from(data.td.ell);
    let mut ok = true;
    let mut rows = Vec::new();
    for (chi, psi) in pairs {
        let r = crate::exactfield::ell_part(&constituent_degree(&data.st, chi), data.td.ell).1;
        let r2 = crate::exactfield::ell_part(&local_constituent_degree(&data.td, &data.st.eig, psi), data.td.ell).1;
        let (a, b) = (&r % &ell, &r2 % &ell);
        let in_ok = a == b || (&a + &b) % &ell == BigUint::from(0u32);
        ok &= in_ok;
        rows.push(PairWitness {
            global: chi.to_string(),
            local: format!("{psi}"),
            global_degree: degree(&data.st, chi).to_string(),
            local_degree: psi.degree.to_string(),
            r: r.to_string(),
            r_prime: r2.to_string(),
            nu: central_char(&data.st, chi),
            in_ok,
        });
    }
    (ok, rows)
}

/// The `ℓ′` criteria on every character of both sides, and the parameter
/// criterion for membership in the domain.
pub fn check_criteria(data: &CellData) -> Result<(bool, Vec<String>)> {
    let (st, td) = (&data.st, &data.td);
    let ell = td.ell;
    let mut fails = Vec::new();
    for chi in &data.global {
        let a = is_ellprime(st, chi, ell)?;
        let b = two_part_criterion(st, chi, ell);
        let t = to_params(st, chi, ell)?;
        let c = three_part_criterion(st, &t, ell);
        if a != b || a != c {
            fails.push(format!("ℓ′ criteria disagree at {chi}: {a} {b} {c}"));
        }
        let in_family = is_admissible(st, td, &t.s)? && params_unipotent_ellprime(st, &t, ell);
        let rel = covers_ellprime(st, chi, ell);
        if rel && !in_family {
            fails.push(format!("{chi} covers an ℓ′ character but its parameters are not local"));
        }
        if in_family && rel != sl_relevant(st, &t, ell) {
            fails.push(format!("parameter criterion disagrees at {chi}"));
        }
    }
    for psi in &data.local {
        if local_ellprime(psi, ell) != two_index_criterion(td, &st.eig, psi, ell) {
            fails.push(format!("local ℓ′ criteria disagree at {psi:?}"));
        }
    }
    Ok((fails.is_empty(), fails))
}

pub fn check_sum_of_squares(data: &CellData) -> bool {
    let g: BigUint = data.global.iter().map(|c| degree(&data.st, c).pow(2)).sum();
    let l: BigUint = data.local.iter().map(|c| c.degree.pow(2)).sum();
    g == data.st.group_order() && l == data.td.n_order()
}

/// Oracle group for a cell, if it fits in `limit` elements.
pub fn oracle_group(cell: Cell, limit: u64) -> Result<MatrixGroup> {
    let kind = GroupKind::GL.with_eps(cell.eps);
    build_group(kind, cell.n, cell.q, limit)
}

/// Explicit torus normalizer: the centralizer `C` of an element of order
/// dividing `Q` with `|C| = |GL_m|·Q^a`, then `N(C)`, accepted when its order
/// is `|Ñ|`.
pub fn explicit_torus_normalizer(g: &MatrixGroup, td: &LocalTorusData) -> Option<MatrixGroup> {
    let want_c = crate::exactfield::group_order(td.m as u32, td.sp) * BigUint::from(td.q_order).pow(td.a as u32);
    let want_c = want_c.to_usize()?;
    let want_n = td.n_order().to_usize()?;
    let cl = g.conjugacy_classes();
    for (i, &x) in cl.reps.iter().enumerate() {
        if td.q_order % g.element_order(x) != 0 || cl.centralizer_order(g.order(), i) != want_c {
            continue;
        }
        let c = g.centralizer(&[x]);
        let nc = g.normalizer(&c);
        if nc.order() == want_n {
            return Some(g.subgroup_group(&nc, "torus normalizer"));
        }
    }
    None
}

pub fn verify_vs_oracle(cell: Cell, data: &CellData, limit: u64) -> Result<OracleReport> {
    let g = oracle_group(cell, limit)?;
    let ell = cell.ell;
    let mut notes = Vec::new();
    let t = character_table(&g)?;
    let global_ellprime = (
        irr_ellprime(&t, ell).0,
        data.global.iter().filter(|c| is_ell_free(&degree(&data.st, c), ell)).count(),
    );
    let p = g.sylow_subgroup(ell, 1)?;
    let np = g.normalizer(&p);
    let npg = g.subgroup_group(&np, "Sylow normalizer");
    let tn = character_table(&npg)?;
    let local_ellprime = data.local.iter().filter(|c| local_ellprime(c, ell)).count();
    let sylow_normalizer_ellprime = (irr_ellprime(&tn, ell).0, local_ellprime);
    let torus_normalizer_irr = match explicit_torus_normalizer(&g, &data.td) {
        Some(nt) => Some((nt.conjugacy_classes().len(), data.local.len())),
        None => {
            notes.push("no explicit torus normalizer of the expected order found".into());
            None
        }
    };
    let sl_classes = match build_group(GroupKind::SL.with_eps(cell.eps), cell.n, cell.q, limit) {
        Ok(sl) => Some((sl.conjugacy_classes().len(), count_irr_sl(&data.st)?)),
        Err(e) => {
            notes.push(format!("special group not built: {e}"));
            None
        }
    };
    Ok(OracleReport {
        global_ellprime,
        sylow_normalizer_ellprime,
        torus_normalizer_irr,
        sl_classes,
        sylow_normalizer_order: np.order(),
        notes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOptions {
    /// Run the oracle when the group has at most this many elements.
    pub oracle_limit: Option<u64>,
    /// Keep per-pair witness rows.
    pub witnesses: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { oracle_limit: None, witnesses: true }
    }
}

fn verify_inner(cell: Cell, opts: VerifyOptions, rep: &mut VerificationReport) -> Result<()> {
    let data = CellData::new(cell)?;
    let (st, td) = (&data.st, &data.td);
    let pairs = omega_tilde(&data)?;
    let local_rel: Vec<&LocalChar> = data.local.iter().filter(|c| local_covers_ellprime(td, &st.eig, c)).collect();

    let mut per_nu: BTreeMap<u64, (usize, usize)> = BTreeMap::new();
    for (chi, _) in &pairs {
        per_nu.entry(central_char(st, chi)).or_default().0 += 1;
    }
    for psi in &local_rel {
        per_nu.entry(local_central_char(td, &st.eig, psi)).or_default().1 += 1;
    }
    let triples = enumerate_triples(st, td)?;
    let irr_sl = {
        let z = st.z_order();
        let t: u64 = data.global.iter().map(|c| (zhat_stabilizer(st, c).len() as u64).pow(2)).sum();
        t / z
    };
    rep.counts = Counts {
        global: pairs.len(),
        local: local_rel.len(),
        per_nu: per_nu.into_iter().map(|(k, (a, b))| (k, a, b)).collect(),
        global_ellprime: data.global.iter().filter(|c| is_ell_free(&degree(st, c), td.ell)).count(),
        local_ellprime: data.local.iter().filter(|c| local_ellprime(c, td.ell)).count(),
        irr_global: data.global.len(),
        irr_local: data.local.len(),
        triples: triples.len(),
        ellprime_triples: triples.iter().filter(|t| three_part_criterion(st, t, td.ell)).count(),
        irr_sl,
        jordan: count_jordan_params(st)?,
    };
    let c = &rep.counts;

    let (bij, f1) = check_bijective(&data, &pairs);
    let (central, f2) = check_central_blocks(&data, &pairs);
    let (zhat, f3) = check_zhat_equivariance(&data, &pairs);
    let (in_ok, rows) = check_in(&data, &pairs);
    let (criteria, f4) = check_criteria(&data)?;
    // ψ^{(Ñ)} is injective on all triples, and ℓ′ counts agree
    let images: HashSet<LocalChar> = triples.iter().map(|t| psi_n(st, td, t)).collect::<Result<_>>()?;
    let mut f5 = Vec::new();
    if images.len() != triples.len() {
        f5.push(format!("ψ_N not injective: {} triples, {} images", triples.len(), images.len()));
    }
    if c.global_ellprime != c.local_ellprime || c.ellprime_triples != c.global_ellprime {
        f5.push(format!(
            "ℓ′ counts: global {}, local {}, triples {}",
            c.global_ellprime, c.local_ellprime, c.ellprime_triples
        ));
    }
    rep.checks = Checks {
        bijective: bij && f5.is_empty(),
        central,
        zhat,
        in_congruence: in_ok,
        sum_of_squares: check_sum_of_squares(&data),
        criteria,
        jordan: c.jordan == c.irr_sl,
        oracle: None,
    };
    rep.failures.extend(f1.into_iter().chain(f2).chain(f3).chain(f4).chain(f5).take(50));
    for r in rows.iter().filter(|r| !r.in_ok).take(10) {
        rep.failures.push(format!("congruence fails: r = {}, r' = {} at {}", r.r, r.r_prime, r.global));
    }
    if opts.witnesses {
        rep.witnesses = rows;
    }
    if let Some(limit) = opts.oracle_limit {
        let size = crate::exactfield::group_order(cell.n as u32, st.sp);
        if size <= BigUint::from(limit) {
            let o = verify_vs_oracle(cell, &data, limit)?;
            rep.checks.oracle = Some(o.pass());
            rep.oracle = Some(o);
        }
    }
    Ok(())
}

/// The checks that make sense without a local side: SL counting and the
/// global sum of squares.
fn global_counts_only(cell: Cell, rep: &mut VerificationReport) -> Result<()> {
    let st = Setting::new(cell.n, cell.sp()?)?;
    let global = enumerate_irr(&st)?;
    rep.counts.irr_global = global.len();
    rep.counts.irr_sl = count_irr_sl(&st)?;
    rep.counts.jordan = count_jordan_params(&st)?;
    rep.checks.jordan = rep.counts.irr_sl == rep.counts.jordan;
    let g: BigUint = global.iter().map(|c| degree(&st, c).pow(2)).sum();
    rep.checks.sum_of_squares = g == crate::exactfield::group_order(cell.n as u32, st.sp);
    Ok(())
}

pub fn verify_cell(cell: Cell, opts: VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    let mut rep = VerificationReport {
        cell,
        applicable: true,
        counts: Counts::default(),
        checks: Checks::vacuous(),
        witnesses: Vec::new(),
        failures: Vec::new(),
        oracle: None,
        error: None,
        ms: 0,
    };
    match verify_inner(cell, opts, &mut rep) {
        Ok(()) => {}
        Err(Error::EllDoesNotDivide { .. }) => {
            rep.applicable = false;
            if let Err(e) = global_counts_only(cell, &mut rep) {
                rep.error = Some(e.to_string());
            }
        }
        Err(e) => rep.error = Some(e.to_string()),
    }
    rep.ms = start.elapsed().as_millis();
    rep
}

/// Verify every cell, in parallel, reports in input order.
pub fn run_grid(cells: &[Cell], opts: VerifyOptions) -> Vec<VerificationReport> {
    cells.par_iter().map(|&c| verify_cell(c, opts)).collect()
}
