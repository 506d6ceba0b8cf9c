//! Small finite fields, integer valuations and group-order formulas.
//!
//! Field elements are encoded as integers `c = Σ a_i p^i` for the residue
//! class of `Σ a_i x^i` modulo the defining polynomial, so `0` and `1` are
//! the usual constants and the prime field sits inside as `0..p`.

use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Default bound on `p^k` for [`build_field`].
pub const DEFAULT_FIELD_LIMIT: u64 = 1 << 20;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `q = p^m` with `p` prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct PrimePower {
    pub p: u64,
    pub m: u32,
    pub q: u64,
}

impl PrimePower {
    pub fn new(q: u64) -> Result<Self> {
        let ps = prime_factors(q);
        if q < 2 || ps.len() != 1 {
            return Err(Error::NotPrimePower(q));
        }
        let p = ps[0];
        let mut m = 0;
        let mut r = q;
        while r > 1 {
            r /= p;
            m += 1;
        }
        Ok(PrimePower { p, m, q })
    }
}

/// A sign together with a prime power; `eps = -1` selects the unitary group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct SignedPrimePower {
    pub eps: i8,
    pub pp: PrimePower,
}

impl SignedPrimePower {
    pub fn new(eps: i8, q: u64) -> Result<Self> {
        if eps != 1 && eps != -1 {
            return Err(Error::Invalid(format!("eps must be +1 or -1, got {eps}")));
        }
        Ok(SignedPrimePower { eps, pp: PrimePower::new(q)? })
    }

    pub fn q(&self) -> u64 {
        self.pp.q
    }

    /// The signed value `εq`.
    pub fn eps_q(&self) -> i64 {
        self.eps as i64 * self.pp.q as i64
    }

    /// `q − ε`, the order of the centre of `GL_n(εq)`.
    pub fn q_minus_eps(&self) -> u64 {
        (self.pp.q as i64 - self.eps as i64) as u64
    }

    /// The data `(ε^k, q^k)` of the field scale attached to an orbit of size `k`.
    pub fn power(&self, k: u32) -> (i8, u64) {
        let e = if self.eps == -1 && k % 2 == 1 { -1 } else { 1 };
        (e, self.pp.q.pow(k))
    }
}

/// Least `k ≥ 1` with `a^k ≡ 1 (mod m)`.
pub fn mult_order(a: i64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::Invalid(format!("modulus {m} < 2")));
    }
    let r = a.rem_euclid(m as i64) as u64;
    if num_integer::gcd(r, m) != 1 {
        return Err(Error::NotCoprime { a, m });
    }
    let mut x = r % m;
    let mut k = 1;
    while x != 1 % m {
        x = ((x as u128 * r as u128) % m as u128) as u64;
        k += 1;
    }
    Ok(k)
}

/// Order of `a` modulo `ℓ`, or modulo 4 when `ℓ = 2`.
pub fn ell_order(a: i64, ell: u64) -> Result<u64> {
    mult_order(a, if ell == 2 { 4 } else { ell })
}

/// Split `x` into its `ℓ`-part and `ℓ′`-part.
pub fn ell_part(x: &BigUint, ell: u64) -> (BigUint, BigUint) {
    assert!(!x.is_zero(), "ell_part of zero");
    let l = BigUint::from(ell);
    let mut rest = x.clone();
    let mut part = BigUint::one();
    while (&rest % &l).is_zero() {
        rest /= &l;
        part *= &l;
    }
    (part, rest)
}

pub fn ell_part_u64(x: u64, ell: u64) -> (u64, u64) {
    assert!(x > 0, "ell_part of zero");
    let mut rest = x;
    let mut part = 1;
    while rest % ell == 0 {
        rest /= ell;
        part *= ell;
    }
    (part, rest)
}

/// `ℓ`-adic valuation.
pub fn valuation(x: &BigUint, ell: u64) -> u32 {
    let (part, _) = ell_part(x, ell);
    let mut v = 0;
    let mut p = part;
    let l = BigUint::from(ell);
    while p > BigUint::one() {
        p /= &l;
        v += 1;
    }
    v
}

/// `|GL_n(εq)| = q^{n(n−1)/2} ∏_{i=1}^n (q^i − ε^i)`.
pub fn group_order(n: u32, sp: SignedPrimePower) -> BigUint {
    let q = BigInt::from(sp.q());
    let mut out = q.pow(n * n.saturating_sub(1) / 2);
    for i in 1..=n {
        let e = if sp.eps == -1 && i % 2 == 1 { -1 } else { 1 };
        out *= q.pow(i) - BigInt::from(e);
    }
    out.abs().to_biguint().expect("positive")
}

/// `|SL_n(εq)| = |GL_n(εq)| / (q − ε)`.
pub fn sl_order(n: u32, sp: SignedPrimePower) -> BigUint {
    group_order(n, sp) / BigUint::from(sp.q_minus_eps())
}

/// The `p′`-part of `|GL_n(εq)|`, i.e. the product `∏ |q^i − ε^i|`.
pub fn group_order_pprime(n: u32, sp: SignedPrimePower) -> BigUint {
    let (_, rest) = ell_part(&group_order(n, sp), sp.pp.p);
    rest
}

/// A permutation of `0..n` with a sign attached to each point, read as the
/// monomial matrix sending `e_i` to `signs[i] e_{perm[i]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermutation {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation { perm: (0..n).collect(), signs: vec![1; n] }
    }

    /// The cycle `0 → 1 → … → k−1 → 0` with all signs `+1`.
    pub fn cycle(k: usize) -> Self {
        SignedPermutation { perm: (0..k).map(|i| (i + 1) % k).collect(), signs: vec![1; k] }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let n = self.len();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            let j = other.perm[i];
            perm[i] = self.perm[j];
            signs[i] = other.signs[i] * self.signs[j];
        }
        SignedPermutation { perm, signs }
    }

    pub fn block_sum(&self, other: &SignedPermutation) -> SignedPermutation {
        let n = self.len();
        let mut perm = self.perm.clone();
        perm.extend(other.perm.iter().map(|&j| j + n));
        let mut signs = self.signs.clone();
        signs.extend(other.signs.iter().copied());
        SignedPermutation { perm, signs }
    }

    /// Cycles as `(length, product of signs)`.
    pub fn cycle_type(&self) -> Vec<(usize, i8)> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut sign = 1i8;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                sign *= self.signs[i];
                len += 1;
                i = self.perm[i];
            }
            out.push((len, sign));
        }
        out
    }

    pub fn to_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            m[self.perm[i]][i] = self.signs[i] as i64;
        }
        m
    }
}

/// `|det(εq·w − 1)|`, the order of the `F`-fixed points of a maximal torus
/// twisted by `w`.
pub fn torus_order(w: &SignedPermutation, sp: SignedPrimePower) -> BigUint {
    let x = BigInt::from(sp.eps_q());
    let mut out = BigInt::one();
    for (len, sign) in w.cycle_type() {
        out *= BigInt::from(sign) * x.pow(len as u32) - BigInt::one();
    }
    out.abs().to_biguint().expect("positive")
}

/// Integer determinant by fraction-free elimination; used to cross-check
/// [`torus_order`].
pub fn int_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

// Polynomials over GF(p), coefficient vectors low to high, no trailing zeros.

fn ptrim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    ptrim(&mut out);
    out
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn prem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    ptrim(&mut r);
    let df = f.len() - 1;
    let lead_inv = inv_mod(f[df], p);
    while r.len() > df {
        let shift = r.len() - 1 - df;
        let c = r[r.len() - 1] * lead_inv % p;
        for (i, &fi) in f.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * fi % p) % p;
        }
        ptrim(&mut r);
    }
    r
}

fn pgcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    ptrim(&mut x);
    ptrim(&mut y);
    while !y.is_empty() {
        let r = prem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// `x^{p^i} mod f`.
fn x_pow_p_pow(f: &[u64], p: u64, i: u32) -> Vec<u64> {
    let mut cur = vec![0, 1];
    cur = prem(&cur, f, p);
    for _ in 0..i {
        // raise to the p-th power by repeated squaring
        let mut acc = vec![1u64];
        let mut base = cur.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = prem(&pmul(&acc, &base, p), f, p);
            }
            base = prem(&pmul(&base, &base, p), f, p);
            e >>= 1;
        }
        cur = acc;
    }
    cur
}

/// Rabin's irreducibility test for a monic polynomial over GF(p).
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = (f.len() - 1) as u32;
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let sub = |g: &[u64]| {
        let mut d = g.to_vec();
        if d.len() < 2 {
            d.resize(2, 0);
        }
        d[1] = (d[1] + p - 1) % p;
        ptrim(&mut d);
        d
    };
    let full = sub(&x_pow_p_pow(f, p, k));
    if !prem(&full, f, p).is_empty() {
        return false;
    }
    for r in prime_factors(k as u64) {
        let h = sub(&x_pow_p_pow(f, p, k / r as u32));
        if pgcd(f, &h, p).len() != 1 {
            return false;
        }
    }
    true
}

/// The finite field `GF(p^k)`.
#[derive(Debug, Clone)]
pub struct FiniteField {
    pub p: u64,
    pub k: u32,
    /// Defining polynomial, coefficients low to high, monic of degree `k`.
    pub modulus: Vec<u64>,
    pub size: u32,
    /// Primitive element used for the log tables.
    pub generator: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_tab: Option<Vec<u32>>,
    neg: Vec<u32>,
}

/// Build `GF(p^k)` with the least irreducible monic modulus, comparing
/// coefficients from the top degree down.
pub fn build_field(p: u64, k: u32) -> Result<FiniteField> {
    build_field_limited(p, k, DEFAULT_FIELD_LIMIT)
}

pub fn build_field_limited(p: u64, k: u32, limit: u64) -> Result<FiniteField> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::Invalid("extension degree must be positive".into()));
    }
    let size = (p as u128).pow(k);
    if size > limit as u128 {
        return Err(Error::LimitExceeded { what: format!("GF({p}^{k})"), size, limit: limit as u128 });
    }
    let size = size as u64;
    let modulus = if k == 1 {
        vec![0, 1]
    } else {
        let mut found = None;
        for low in 0..size {
            let mut f: Vec<u64> = (0..k).map(|i| (low / p.pow(i)) % p).collect();
            f.push(1);
            if f[0] != 0 && is_irreducible(&f, p) {
                found = Some(f);
                break;
            }
        }
        found.expect("irreducible polynomials exist in every degree")
    };
    Ok(FiniteField::from_modulus(p, k, modulus))
}

impl FiniteField {
    fn from_modulus(p: u64, k: u32, modulus: Vec<u64>) -> Self {
        let size = p.pow(k) as u32;
        let mut f = FiniteField {
            p,
            k,
            modulus,
            size,
            generator: 0,
            exp: Vec::new(),
            log: Vec::new(),
            add_tab: None,
            neg: Vec::new(),
        };
        f.neg = (0..size).map(|a| f.digit_neg(a)).collect();
        if size <= 256 {
            let mut t = vec![0u32; (size * size) as usize];
            for a in 0..size {
                for b in 0..size {
                    t[(a * size + b) as usize] = f.digit_add(a, b);
                }
            }
            f.add_tab = Some(t);
        }
        let order = (size - 1) as u64;
        let factors = prime_factors(order);
        let g = if order == 1 {
            1
        } else {
            (2..size)
                .find(|&g| factors.iter().all(|&r| f.slow_pow(g, order / r) != 1))
                .expect("multiplicative group is cyclic")
        };
        f.generator = g;
        let mut exp = vec![0u32; order as usize];
        let mut log = vec![u32::MAX; size as usize];
        let mut x = 1u32;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = x;
            log[x as usize] = i as u32;
            x = f.slow_mul(x, g);
        }
        f.exp = exp;
        f.log = log;
        f
    }

    fn digits(&self, a: u32) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.k as usize);
        let mut a = a as u64;
        for _ in 0..self.k {
            v.push(a % self.p);
            a /= self.p;
        }
        v
    }

    fn undigits(&self, d: &[u64]) -> u32 {
        let mut a = 0u64;
        for &x in d.iter().rev() {
            a = a * self.p + x;
        }
        a as u32
    }

    fn digit_add(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.digits(a), self.digits(b));
        let s: Vec<u64> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.undigits(&s)
    }

    fn digit_neg(&self, a: u32) -> u32 {
        let s: Vec<u64> = self.digits(a).iter().map(|u| (self.p - u) % self.p).collect();
        self.undigits(&s)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let mut x = self.digits(a);
        let mut y = self.digits(b);
        ptrim(&mut x);
        ptrim(&mut y);
        let mut r = prem(&pmul(&x, &y, self.p), &self.modulus, self.p);
        r.resize(self.k as usize, 0);
        self.undigits(&r)
    }

    fn slow_pow(&self, a: u32, mut e: u64) -> u32 {
        let mut r = 1u32;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.slow_mul(r, b);
            }
            b = self.slow_mul(b, b);
            e >>= 1;
        }
        r
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.add_tab {
            Some(t) => t[(a * self.size + b) as usize],
            None => self.digit_add(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.size - 1;
        let s = self.log[a as usize] + self.log[b as usize];
        self.exp[(if s >= n { s - n } else { s }) as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        let n = self.size - 1;
        let l = self.log[a as usize];
        self.exp[((n - l) % n) as usize]
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let n = (self.size - 1) as u64;
        let l = self.log[a as usize] as u64;
        self.exp[((l * (e % n)) % n) as usize]
    }

    /// Discrete log with respect to [`FiniteField::generator`].
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn exp(&self, i: u64) -> u32 {
        self.exp[(i % (self.size as u64 - 1)) as usize]
    }

    /// The Frobenius `a ↦ a^p`.
    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.p)
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u32) -> u64 {
        let n = (self.size - 1) as u64;
        n / num_integer::gcd(n, self.log[a as usize] as u64)
    }

    /// Absolute trace to the prime field, returned as an integer in `0..p`.
    pub fn trace(&self, a: u32) -> u64 {
        let mut s = 0u32;
        let mut x = a;
        for _ in 0..self.k {
            s = self.add(s, x);
            x = self.frobenius(x);
        }
        debug_assert!((s as u64) < self.p);
        s as u64
    }

    /// Trace down to the subfield of order `p^sub` (`sub | k`).
    pub fn relative_trace(&self, a: u32, sub: u32) -> u32 {
        assert!(self.k % sub == 0);
        let qs = self.p.pow(sub);
        let mut s = 0u32;
        let mut x = a;
        for _ in 0..self.k / sub {
            s = self.add(s, x);
            x = self.pow(x, qs);
        }
        s
    }

    /// Elements of the subfield of order `p^sub`, in increasing code order.
    pub fn subfield(&self, sub: u32) -> Vec<u32> {
        let qs = self.p.pow(sub);
        (0..self.size).filter(|&a| self.pow(a, qs) == a).collect()
    }

    pub fn from_int(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    /// Embedding `GF(p^k) ↪ big` as a lookup table, sending `x` to the least
    /// root of the modulus in `big`.
    pub fn embedding_into(&self, big: &FiniteField) -> Result<Vec<u32>> {
        if big.p != self.p || big.k % self.k != 0 {
            return Err(Error::Invalid(format!(
                "GF({}^{}) does not embed in GF({}^{})",
                self.p, self.k, big.p, big.k
            )));
        }
        let root = (0..big.size)
            .find(|&r| {
                let mut acc = 0u32;
                for &c in self.modulus.iter().rev() {
                    acc = big.add(big.mul(acc, r), big.from_int(c as i64));
                }
                acc == 0
            })
            .ok_or_else(|| Error::Consistency("no root of the modulus".into()))?;
        Ok((0..self.size)
            .map(|a| {
                let mut acc = 0u32;
                for &c in self.digits(a).iter().rev() {
                    acc = big.add(big.mul(acc, root), big.from_int(c as i64));
                }
                acc
            })
            .collect())
    }

    /// Product of all nonzero elements (Wilson: equals `−1`).
    pub fn product_of_units(&self) -> u32 {
        (1..self.size).fold(1, |acc, a| self.mul(acc, a))
    }
}

/// `base^e mod m`.
pub fn modpow_u128(base: u128, mut e: u128, m: u128) -> u128 {
    let mut r = 1 % m;
    let mut b = base % m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    r
}

/// `a·b mod m` without overflow for `m < 2^127`.
pub fn mulmod(a: u128, b: u128, m: u128) -> u128 {
    if let Some(x) = a.checked_mul(b) {
        return x % m;
    }
    let mut r = 0u128;
    let mut a = a % m;
    let mut b = b;
    while b > 0 {
        if b & 1 == 1 {
            r = (r + a) % m;
        }
        a = (a << 1) % m;
        b >>= 1;
    }
    r
}

/// Convert a small `BigUint` to `u64`, panicking on overflow.
pub fn to_u64(x: &BigUint) -> u64 {
    x.to_u64().expect("value fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(eps: i8, q: u64) -> SignedPrimePower {
        SignedPrimePower::new(eps, q).unwrap()
    }

    #[test]
    fn moduli() {
        assert_eq!(build_field(2, 2).unwrap().modulus, vec![1, 1, 1]);
        assert_eq!(build_field(3, 1).unwrap().modulus, vec![0, 1]);
        let f8 = build_field(2, 3).unwrap();
        assert_eq!(f8.modulus, vec![1, 1, 0, 1]);
        // x has code p = 2 and generates the 7 units
        assert_eq!(f8.element_order(2), 7);
    }

    #[test]
    fn limits_and_primes() {
        assert!(matches!(build_field(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(build_field(2, 21), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn orders() {
        assert_eq!(mult_order(3, 4).unwrap(), 2);
        assert_eq!(mult_order(1, 9).unwrap(), 1);
        assert_eq!(mult_order(2, 7).unwrap(), 3);
        assert_eq!(mult_order(-2, 3).unwrap(), 1);
        assert!(mult_order(2, 4).is_err());
    }

    #[test]
    fn ell_parts() {
        assert_eq!(ell_part_u64(48, 2), (16, 3));
        assert_eq!(ell_part_u64(7, 2), (1, 7));
        assert_eq!(ell_part(&BigUint::from(54u32), 3), (BigUint::from(27u32), BigUint::from(2u32)));
    }

    #[test]
    fn group_orders() {
        assert_eq!(group_order(2, sp(1, 2)), BigUint::from(6u32));
        assert_eq!(group_order(2, sp(1, 3)), BigUint::from(48u32));
        assert_eq!(group_order(2, sp(-1, 2)), BigUint::from(18u32));
        assert_eq!(sl_order(2, sp(1, 3)), BigUint::from(24u32));
        assert_eq!(group_order(3, sp(-1, 2)), BigUint::from(648u32));
    }

    #[test]
    fn tori() {
        assert_eq!(torus_order(&SignedPermutation::identity(3), sp(1, 5)), BigUint::from(64u32));
        assert_eq!(torus_order(&SignedPermutation::cycle(2), sp(1, 3)), BigUint::from(8u32));
        assert_eq!(torus_order(&SignedPermutation::cycle(3), sp(-1, 2)), BigUint::from(9u32));
        assert_eq!(torus_order(&SignedPermutation::identity(1), sp(-1, 2)), BigUint::from(3u32));
    }

    #[test]
    fn torus_order_matches_determinant() {
        let w = SignedPermutation::cycle(3).block_sum(&SignedPermutation {
            perm: vec![1, 0],
            signs: vec![-1, 1],
        });
        for s in [sp(1, 3), sp(-1, 2)] {
            let m = w.to_matrix();
            let n = m.len();
            let det = int_det(
                &(0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                BigInt::from(s.eps_q() * m[i][j] - if i == j { 1 } else { 0 })
                            })
                            .collect()
                    })
                    .collect::<Vec<_>>(),
            );
            assert_eq!(det.abs().to_biguint().unwrap(), torus_order(&w, s));
        }
    }

    #[test]
    fn embedding_is_a_ring_map() {
        let small = build_field(2, 2).unwrap();
        let big = build_field(2, 4).unwrap();
        let e = small.embedding_into(&big).unwrap();
        for a in 0..small.size {
            for b in 0..small.size {
                assert_eq!(e[small.mul(a, b) as usize], big.mul(e[a as usize], e[b as usize]));
                assert_eq!(e[small.add(a, b) as usize], big.add(e[a as usize], e[b as usize]));
            }
        }
    }
}
