//! Exact character tables of small groups by the Dixon–Schneider method.
//!
//! Class matrices are diagonalized simultaneously over `F_r` for a prime
//! `r ≡ 1 (mod exp G)`, and the values are lifted to `ℤ[ζ_N]` through
//! eigenvalue multiplicities. All arithmetic is exact.

use crate::error::{Error, Result};
use crate::exactfield::{ell_part_u64, is_prime, modpow_u128, prime_factors};
use crate::matrixoracle::{ConjugacyPartition, MatrixGroup, SubgroupHandle};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// `ℚ(ζ_N)` with elements stored in the power basis of `ℤ[x]/Φ_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicField {
    pub n: u64,
    /// `Φ_N`, monic, coefficients low to high.
    pub phi: Vec<i64>,
}

/// An element of `ℤ[ζ_N]`, coefficients of `1, ζ, …, ζ^{φ(N)−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic {
    pub coeffs: Vec<i64>,
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let lead = *den.last().unwrap();
    let mut q = vec![0i64; r.len() - dd];
    for i in (0..q.len()).rev() {
        let c = r[i + dd] / lead;
        q[i] = c;
        for (j, &d) in den.iter().enumerate() {
            r[i + j] -= c * d;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

/// Integer coefficients of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    let mut memo: HashMap<u64, Vec<i64>> = HashMap::new();
    fn rec(n: u64, memo: &mut HashMap<u64, Vec<i64>>) -> Vec<i64> {
        if let Some(v) = memo.get(&n) {
            return v.clone();
        }
        let mut num = vec![0i64; n as usize + 1];
        num[0] = -1;
        num[n as usize] = 1;
        for d in 1..n {
            if n % d == 0 {
                num = poly_div_exact(&num, &rec(d, memo));
            }
        }
        memo.insert(n, num.clone());
        num
    }
    rec(n, &mut memo)
}

impl CyclotomicField {
    pub fn new(n: u64) -> Self {
        assert!(n >= 1);
        CyclotomicField { n, phi: cyclotomic_polynomial(n) }
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    /// Reduce an arbitrary integer polynomial in `ζ` modulo `Φ_N`.
    pub fn reduce(&self, mut full: Vec<i64>) -> Cyclotomic {
        let d = self.degree();
        for i in (d..full.len()).rev() {
            let c = full[i];
            if c != 0 {
                for (j, &p) in self.phi.iter().enumerate() {
                    full[i - d + j] -= c * p;
                }
            }
        }
        full.resize(d, 0);
        Cyclotomic { coeffs: full }
    }

    pub fn zero(&self) -> Cyclotomic {
        Cyclotomic { coeffs: vec![0; self.degree()] }
    }

    pub fn from_int(&self, x: i64) -> Cyclotomic {
        let mut c = self.zero();
        c.coeffs[0] = x;
        c
    }

    /// `ζ_N^j`.
    pub fn zeta(&self, j: u64) -> Cyclotomic {
        let j = (j % self.n) as usize;
        let mut v = vec![0; j + 1];
        v[j] = 1;
        self.reduce(v)
    }

    /// `Σ_j counts[j] ζ^j` for `counts` indexed by exponent mod `N`.
    pub fn from_exponents(&self, counts: &[i64]) -> Cyclotomic {
        self.reduce(counts.to_vec())
    }

    pub fn add(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        Cyclotomic { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect() }
    }

    pub fn sub(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        Cyclotomic { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect() }
    }

    pub fn scale(&self, a: &Cyclotomic, k: i64) -> Cyclotomic {
        Cyclotomic { coeffs: a.coeffs.iter().map(|x| x * k).collect() }
    }

    pub fn mul(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        let d = self.degree();
        let mut full = vec![0i64; 2 * d];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                full[i + j] += x * y;
            }
        }
        self.reduce(full)
    }

    /// Complex conjugation `ζ ↦ ζ⁻¹`.
    pub fn conj(&self, a: &Cyclotomic) -> Cyclotomic {
        let n = self.n as usize;
        let mut full = vec![0i64; n];
        for (j, &c) in a.coeffs.iter().enumerate() {
            full[(n - j) % n] += c;
        }
        self.reduce(full)
    }

    /// The Galois automorphism `ζ ↦ ζ^k`, `gcd(k, N) = 1`.
    pub fn galois(&self, a: &Cyclotomic, k: u64) -> Cyclotomic {
        let n = self.n as usize;
        let mut full = vec![0i64; n];
        for (j, &c) in a.coeffs.iter().enumerate() {
            full[(j * k as usize) % n] += c;
        }
        self.reduce(full)
    }

    pub fn as_integer(&self, a: &Cyclotomic) -> Option<i64> {
        a.coeffs[1..].iter().all(|&c| c == 0).then_some(a.coeffs[0])
    }

    /// Image in `F_r` under `ζ ↦ z`.
    pub fn to_mod(&self, a: &Cyclotomic, z: u64, r: u64) -> u64 {
        let mut acc = 0u64;
        for &c in a.coeffs.iter().rev() {
            acc = (acc * z + c.rem_euclid(r as i64) as u64) % r;
        }
        acc
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let a = c.abs();
            match (j, a) {
                (0, _) => write!(f, "{sign}{a}")?,
                (_, 1) => write!(f, "{sign}z^{j}")?,
                _ => write!(f, "{sign}{a}z^{j}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A class function: one value per conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<Cyclotomic>,
}

/// The irreducible characters of a group, rows indexed by character and
/// columns by conjugacy class.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub classes: ConjugacyPartition,
    pub field: Arc<CyclotomicField>,
    pub group_order: u64,
    pub chars: Vec<ClassFunction>,
    pub degrees: Vec<u64>,
    /// Index of the class of `g⁻¹` for each class.
    pub inverse_class: Vec<usize>,
    /// The prime used for the modular computation.
    pub prime: u64,
}

fn inv_mod(a: u64, r: u64) -> u64 {
    modpow_u128(a as u128, (r - 2) as u128, r as u128) as u64
}

fn primitive_root(r: u64) -> u64 {
    let f = prime_factors(r - 1);
    (2..r)
        .find(|&g| f.iter().all(|&q| modpow_u128(g as u128, ((r - 1) / q) as u128, r as u128) != 1))
        .expect("prime fields have primitive roots")
}

/// Basis of the null space of `m` (`rows × cols`) over `F_r`, as columns.
fn null_space(m: &[Vec<u64>], cols: usize, r: u64) -> Vec<Vec<u64>> {
    let mut a: Vec<Vec<u64>> = m.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(p) = (row..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(row, p);
        let s = inv_mod(a[row][c], r);
        for x in a[row].iter_mut() {
            *x = *x * s % r;
        }
        for i in 0..a.len() {
            if i != row && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..cols {
                    a[i][j] = (a[i][j] + r - f * a[row][j] % r) % r;
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; cols];
            v[fc] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = (r - a[i][fc]) % r;
            }
            v
        })
        .collect()
}

/// Characteristic polynomial over `F_r` via Hessenberg reduction, low to high.
fn char_poly(mut h: Vec<Vec<u64>>, r: u64) -> Vec<u64> {
    let n = h.len();
    for m in 0..n.saturating_sub(2) {
        if let Some(i) = (m + 1..n).find(|&i| h[i][m] != 0) {
            if i != m + 1 {
                h.swap(i, m + 1);
                for row in h.iter_mut() {
                    row.swap(i, m + 1);
                }
            }
            let inv = inv_mod(h[m + 1][m], r);
            for i in m + 2..n {
                let u = h[i][m] * inv % r;
                if u == 0 {
                    continue;
                }
                for j in 0..n {
                    h[i][j] = (h[i][j] + r - u * h[m + 1][j] % r) % r;
                }
                for row in h.iter_mut() {
                    row[m + 1] = (row[m + 1] + u * row[i]) % r;
                }
            }
        }
    }
    let mut p: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        // (x − h_mm) p_m
        let prev = &p[m];
        let mut next = vec![0u64; m + 2];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = (next[k + 1] + c) % r;
            next[k] = (next[k] + r - c * h[m][m] % r) % r;
        }
        let mut t = 1u64;
        for i in (0..m).rev() {
            t = t * h[i + 1][i] % r;
            let coef = h[i][m] * t % r;
            for (k, &c) in p[i].iter().enumerate() {
                next[k] = (next[k] + r - coef * c % r) % r;
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

/// Smallest prime `r ≡ 1 (mod n)` with `r > bound`.
fn dixon_prime(n: u64, bound: u64) -> u64 {
    let mut r = (bound / n + 1) * n + 1;
    while !is_prime(r) {
        r += n;
    }
    r
}

/// Class structure constants: `a[j][i][k] = #{x ∈ C_j : x⁻¹ g_k ∈ C_i}`.
fn structure_constants(g: &MatrixGroup, cl: &ConjugacyPartition) -> Vec<Vec<Vec<u64>>> {
    let k = cl.len();
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for (kk, &rep) in cl.reps.iter().enumerate() {
        for x in 0..g.order() as u32 {
            let j = cl.class_of[x as usize] as usize;
            let i = cl.class_of[g.mul(g.inv(x), rep) as usize] as usize;
            a[j][i][kk] += 1;
        }
    }
    a
}

/// Compute the full character table.
pub fn character_table(g: &MatrixGroup) -> Result<CharacterTable> {
    let cl = g.conjugacy_classes();
    character_table_with_classes(g, cl)
}

pub fn character_table_with_classes(g: &MatrixGroup, cl: ConjugacyPartition) -> Result<CharacterTable> {
    let k = cl.len();
    let order = g.order() as u64;
    let n_exp = g.exponent(&cl);
    let bound = 2 * ((order as f64).sqrt().ceil() as u64) + 1;
    let r = dixon_prime(n_exp, bound);
    let inverse_class: Vec<usize> = cl.reps.iter().map(|&x| cl.class_of[g.inv(x) as usize] as usize).collect();
    let a = structure_constants(g, &cl);

    // joint eigenspaces, each stored as a list of column vectors
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut v = vec![0; k];
            v[i] = 1;
            v
        })
        .collect()];
    for aj in a.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for basis in spaces {
            let d = basis.len();
            if d == 1 {
                next.push(basis);
                continue;
            }
            // A_j acts on column vectors: (A_j v)_i = Σ_k a[j][i][k] v_k
            let image: Vec<Vec<u64>> = basis
                .iter()
                .map(|v| (0..k).map(|i| (0..k).map(|kk| aj[i][kk] % r * v[kk]).sum::<u64>() % r).collect())
                .collect();
            // express images in the basis: solve B c = A v via pivot rows
            let mut rows: Vec<Vec<u64>> = (0..k).map(|i| basis.iter().map(|v| v[i]).collect()).collect();
            let mut rhs: Vec<Vec<u64>> = (0..k).map(|i| image.iter().map(|v| v[i]).collect()).collect();
            let mut piv_row = 0;
            for c in 0..d {
                let p = (piv_row..k).find(|&i| rows[i][c] != 0).expect("basis has full rank");
                rows.swap(piv_row, p);
                rhs.swap(piv_row, p);
                let s = inv_mod(rows[piv_row][c], r);
                for x in rows[piv_row].iter_mut() {
                    *x = *x * s % r;
                }
                for x in rhs[piv_row].iter_mut() {
                    *x = *x * s % r;
                }
                for i in 0..k {
                    if i != piv_row && rows[i][c] != 0 {
                        let f = rows[i][c];
                        for j in 0..d {
                            rows[i][j] = (rows[i][j] + r - f * rows[piv_row][j] % r) % r;
                            rhs[i][j] = (rhs[i][j] + r - f * rhs[piv_row][j] % r) % r;
                        }
                    }
                }
                piv_row += 1;
            }
            // R[c][t] = coefficient of basis c in A v_t
            let rmat: Vec<Vec<u64>> = (0..d).map(|c| rhs[c].clone()).collect();
            let cp = char_poly(rmat.clone(), r);
            let roots: Vec<u64> = (0..r)
                .filter(|&x| cp.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % r) == 0)
                .collect();
            for lam in roots {
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|i| (0..d).map(|j| (rmat[i][j] + if i == j { r - lam } else { 0 }) % r).collect())
                    .collect();
                let ns = null_space(&shifted, d, r);
                let sub: Vec<Vec<u64>> = ns
                    .iter()
                    .map(|c| (0..k).map(|i| (0..d).map(|t| c[t] * basis[t][i] % r).sum::<u64>() % r).collect())
                    .collect();
                next.push(sub);
            }
        }
        spaces = next;
    }
    if spaces.len() != k || spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::Consistency(format!("class matrices did not split {}", g.label)));
    }

    let field = Arc::new(CyclotomicField::new(n_exp));
    let z = modpow_u128(primitive_root(r) as u128, ((r - 1) / n_exp) as u128, r as u128) as u64;
    let zpow: Vec<u64> = (0..n_exp).map(|j| modpow_u128(z as u128, j as u128, r as u128) as u64).collect();
    // power maps: class of g_i^l
    let powmap: Vec<Vec<usize>> = cl
        .reps
        .iter()
        .map(|&x| {
            let mut out = Vec::with_capacity(n_exp as usize);
            let mut y = g.identity();
            for _ in 0..n_exp {
                out.push(cl.class_of[y as usize] as usize);
                y = g.mul(y, x);
            }
            out
        })
        .collect();
    let inv_n = inv_mod(n_exp % r, r);
    let mut chars = Vec::with_capacity(k);
    let mut degrees = Vec::with_capacity(k);
    for s in &spaces {
        let v = &s[0];
        let s0 = inv_mod(v[0], r);
        let omega: Vec<u64> = v.iter().map(|x| x * s0 % r).collect();
        let mut sum = 0u64;
        for i in 0..k {
            sum = (sum + omega[i] * omega[inverse_class[i]] % r * inv_mod(cl.sizes[i] as u64 % r, r)) % r;
        }
        let d2 = (order % r) * inv_mod(sum, r) % r;
        let deg = (1..=((order as f64).sqrt() as u64 + 1))
            .find(|&d| d * d % r == d2)
            .ok_or_else(|| Error::Consistency("no square root for a degree".into()))?;
        let vals_mod: Vec<u64> =
            (0..k).map(|i| deg % r * omega[i] % r * inv_mod(cl.sizes[i] as u64 % r, r) % r).collect();
        let mut values = Vec::with_capacity(k);
        for i in 0..k {
            let mut counts = vec![0i64; n_exp as usize];
            for j in 0..n_exp {
                let mut acc = 0u64;
                for l in 0..n_exp {
                    let e = ((n_exp - (j * l) % n_exp) % n_exp) as usize;
                    acc = (acc + vals_mod[powmap[i][l as usize]] * zpow[e]) % r;
                }
                let m = acc * inv_n % r;
                if m > deg {
                    return Err(Error::Consistency(format!("eigenvalue multiplicity {m} exceeds degree {deg}")));
                }
                counts[j as usize] = m as i64;
            }
            values.push(field.from_exponents(&counts));
        }
        chars.push(ClassFunction { values });
        degrees.push(deg);
    }
    let mut order_idx: Vec<usize> = (0..k).collect();
    order_idx.sort_by(|&x, &y| (degrees[x], &chars[x].values).cmp(&(degrees[y], &chars[y].values)));
    // trivial character first among the linear ones
    let one = field.from_int(1);
    order_idx.sort_by_key(|&x| (degrees[x], !chars[x].values.iter().all(|v| *v == one)));
    let chars = order_idx.iter().map(|&x| chars[x].clone()).collect();
    let degrees = order_idx.iter().map(|&x| degrees[x]).collect();
    Ok(CharacterTable { classes: cl, field, group_order: order, chars, degrees, inverse_class, prime: r })
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn sorted_degrees(&self) -> Vec<u64> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d
    }

    /// `|G| ⟨f, h⟩ = Σ_i |C_i| f(g_i) conj(h(g_i))`.
    pub fn scaled_inner(&self, f: &ClassFunction, h: &ClassFunction) -> Cyclotomic {
        let fld = &self.field;
        let mut acc = fld.zero();
        for i in 0..self.classes.len() {
            let t = fld.mul(&f.values[i], &fld.conj(&h.values[i]));
            acc = fld.add(&acc, &fld.scale(&t, self.classes.sizes[i] as i64));
        }
        acc
    }

    /// `⟨f, h⟩`, which must be a rational integer.
    pub fn inner(&self, f: &ClassFunction, h: &ClassFunction) -> Result<i64> {
        let s = self.scaled_inner(f, h);
        let v = self.field.as_integer(&s).ok_or_else(|| Error::Consistency("inner product is not rational".into()))?;
        if v % self.group_order as i64 != 0 {
            return Err(Error::Consistency(format!("inner product {v}/{} is not integral", self.group_order)));
        }
        Ok(v / self.group_order as i64)
    }

    /// Multiplicity of the irreducible `chi` in `f`.
    pub fn multiplicity(&self, chi: usize, f: &ClassFunction) -> Result<i64> {
        self.inner(f, &self.chars[chi])
    }

    pub fn check_row_orthogonality(&self) -> bool {
        (0..self.len()).all(|a| {
            (0..self.len()).all(|b| {
                let want = if a == b { self.group_order as i64 } else { 0 };
                self.scaled_inner(&self.chars[a], &self.chars[b]) == self.field.from_int(want)
            })
        })
    }

    pub fn check_column_orthogonality(&self) -> bool {
        let fld = &self.field;
        let k = self.classes.len();
        (0..k).all(|i| {
            (0..k).all(|j| {
                let mut acc = fld.zero();
                for c in &self.chars {
                    acc = fld.add(&acc, &fld.mul(&c.values[i], &fld.conj(&c.values[j])));
                }
                let want = if i == j { (self.group_order / self.classes.sizes[i] as u64) as i64 } else { 0 };
                acc == fld.from_int(want)
            })
        })
    }

    /// The regular character.
    pub fn regular(&self) -> ClassFunction {
        let mut values = vec![self.field.zero(); self.classes.len()];
        values[0] = self.field.from_int(self.group_order as i64);
        ClassFunction { values }
    }

    pub fn trivial(&self) -> ClassFunction {
        ClassFunction { values: vec![self.field.from_int(1); self.classes.len()] }
    }

    /// Value of character `chi` at an element of the group.
    pub fn value_at(&self, chi: usize, x: u32) -> &Cyclotomic {
        &self.chars[chi].values[self.classes.class_of[x as usize] as usize]
    }
}

/// Number and sorted degrees of the irreducible characters of degree prime
/// to `ell`.
pub fn irr_ellprime(t: &CharacterTable, ell: u64) -> (usize, Vec<u64>) {
    let d: Vec<u64> = t.sorted_degrees().into_iter().filter(|&d| ell_part_u64(d, ell).0 == 1).collect();
    (d.len(), d)
}

/// `Ind_H^G f` for a function `f` on the elements of `H`, constant on
/// `H`-classes. Values are taken in the field of the table of `G`.
pub fn induce(
    g: &MatrixGroup,
    t: &CharacterTable,
    h: &SubgroupHandle,
    f: impl Fn(u32) -> Cyclotomic,
) -> ClassFunction {
    let fld = &t.field;
    let mut sums = vec![fld.zero(); t.classes.len()];
    for &y in &h.elements {
        let c = t.classes.class_of[y as usize] as usize;
        sums[c] = fld.add(&sums[c], &f(y));
    }
    // Ind f(g_i) = |C_G(g_i)| / |H| · Σ_{y ∈ C_i ∩ H} f(y)
    let values = sums
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let cent = g.order() / t.classes.sizes[i];
            let scaled = fld.scale(s, cent as i64);
            Cyclotomic { coeffs: scaled.coeffs.iter().map(|&c| exact_div(c, h.order() as i64)).collect() }
        })
        .collect();
    ClassFunction { values }
}

fn exact_div(a: i64, b: i64) -> i64 {
    debug_assert_eq!(a % b, 0, "induced values must be algebraic integers");
    a / b
}

/// `|H| ⟨f, Res χ⟩_H` for a function on the elements of `H`.
pub fn scaled_inner_on_subgroup(
    t: &CharacterTable,
    h: &SubgroupHandle,
    f: impl Fn(u32) -> Cyclotomic,
    chi: usize,
) -> Cyclotomic {
    let fld = &t.field;
    let mut acc = fld.zero();
    for &y in &h.elements {
        acc = fld.add(&acc, &fld.mul(&f(y), &fld.conj(t.value_at(chi, y))));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrixoracle::{build_group, GroupKind, DEFAULT_GROUP_LIMIT};

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn zeta_arithmetic() {
        let f = CyclotomicField::new(3);
        // 1 + ζ + ζ² = 0
        let s = f.add(&f.add(&f.from_int(1), &f.zeta(1)), &f.zeta(2));
        assert_eq!(s, f.zero());
        assert_eq!(f.mul(&f.zeta(1), &f.conj(&f.zeta(1))), f.from_int(1));
    }

    #[test]
    fn s3_table() {
        let g = build_group(GroupKind::GL, 2, 2, DEFAULT_GROUP_LIMIT).unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(t.sorted_degrees(), vec![1, 1, 2]);
        assert!(t.check_row_orthogonality());
        assert!(t.check_column_orthogonality());
        assert_eq!(irr_ellprime(&t, 2), (2, vec![1, 1]));
        assert_eq!(irr_ellprime(&t, 3), (3, vec![1, 1, 2]));
    }
}
