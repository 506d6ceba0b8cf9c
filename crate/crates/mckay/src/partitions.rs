//! Partition combinatorics: hooks, `e`-cores and `e`-quotients, the q-analogue
//! of the hook formula, and irreducible labels of wreath products `C_e ≀ S_w`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A partition, parts weakly decreasing and positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
pub struct Partition {
    pub parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (0..first).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect(),
        }
    }

    /// Hook lengths listed row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                out.push(row - j + conj.parts[j] - i - 1);
            }
        }
        out
    }

    /// `n(λ) = Σ (i−1) λ_i`.
    pub fn n_value(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Number of standard tableaux, i.e. the degree of the Specht module.
    pub fn symmetric_dim(&self) -> BigUint {
        let mut num = factorial(self.size());
        for h in self.hook_lengths() {
            num /= BigUint::from(h);
        }
        num
    }

    /// A `β`-set of length `len` (which must be at least the number of parts).
    pub fn beta_set(&self, len: usize) -> Vec<usize> {
        assert!(len >= self.len());
        (0..len)
            .map(|i| self.parts.get(i).copied().unwrap_or(0) + len - 1 - i)
            .collect()
    }

    pub fn from_beta_set(beta: &[usize]) -> Partition {
        let mut b = beta.to_vec();
        b.sort_unstable_by(|a, b| b.cmp(a));
        let len = b.len();
        Partition::new(b.iter().enumerate().map(|(i, &x)| x + i + 1 - len).collect())
    }

    pub fn is_core(&self, e: usize) -> bool {
        !self.hook_lengths().iter().any(|h| h % e == 0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// `e`-core, `e`-quotient and weight of a partition.
///
/// The quotient is read off a `β`-set whose length is a multiple of `e`, so
/// component `j` is the partition recorded on runner `j` of the abacus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoreQuotient {
    pub e: usize,
    pub core: Partition,
    pub quotient: Vec<Partition>,
    pub weight: usize,
}

pub fn e_core_quotient(lambda: &Partition, e: usize) -> CoreQuotient {
    assert!(e >= 1);
    let len = lambda.len().div_ceil(e) * e;
    let beta = lambda.beta_set(len);
    let mut runners: Vec<Vec<usize>> = vec![Vec::new(); e];
    for &b in &beta {
        runners[b % e].push(b / e);
    }
    let mut quotient = Vec::with_capacity(e);
    let mut core_beta = Vec::with_capacity(len);
    for (j, r) in runners.iter_mut().enumerate() {
        r.sort_unstable_by(|a, b| b.cmp(a));
        let k = r.len();
        quotient.push(Partition::new(r.iter().enumerate().map(|(i, &pos)| pos + i + 1 - k).collect()));
        core_beta.extend((0..k).map(|t| j + e * t));
    }
    let weight = quotient.iter().map(Partition::size).sum();
    CoreQuotient { e, core: Partition::from_beta_set(&core_beta), quotient, weight }
}

/// Inverse of [`e_core_quotient`]. Returns `None` if `core` is not an `e`-core
/// or the quotient has the wrong number of components.
pub fn from_core_quotient(core: &Partition, quotient: &[Partition], e: usize) -> Option<Partition> {
    if quotient.len() != e || !core.is_core(e) {
        return None;
    }
    let extra: usize = quotient.iter().map(Partition::len).sum();
    let len = (core.len() + extra + 1).div_ceil(e) * e + e * extra;
    let beta = core.beta_set(len);
    let mut counts = vec![0usize; e];
    for &b in &beta {
        counts[b % e] += 1;
    }
    let mut out = Vec::with_capacity(len);
    for (j, mu) in quotient.iter().enumerate() {
        let k = counts[j];
        if mu.len() > k {
            return None;
        }
        for i in 0..k {
            let pos = mu.parts.get(i).copied().unwrap_or(0) + k - 1 - i;
            out.push(j + e * pos);
        }
    }
    Some(Partition::from_beta_set(&out))
}

/// `|Deg_λ(εq)|`, the degree of the unipotent character of `GL_{|λ|}(εq)`
/// labelled by `λ`. The sign from evaluating at `−q` is dropped.
pub fn generic_degree(lambda: &Partition, eps: i8, q: u64) -> BigUint {
    let x = BigInt::from(eps as i64 * q as i64);
    let mut num = x.pow(lambda.n_value() as u32);
    for k in 1..=lambda.size() {
        num *= x.pow(k as u32) - BigInt::one();
    }
    let mut den = BigInt::one();
    for h in lambda.hook_lengths() {
        den *= x.pow(h as u32) - BigInt::one();
    }
    assert!((&num % &den).is_zero(), "hook formula must divide");
    (num / den).abs().to_biguint().expect("positive")
}

/// An irreducible label of `C_e ≀ S_w`: one partition per character of `C_e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WreathLabel {
    pub parts: Vec<Partition>,
}

impl WreathLabel {
    pub fn e(&self) -> usize {
        self.parts.len()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(Partition::size).sum()
    }

    /// `w! / ∏ |μ_j|! · ∏ f^{μ_j}`.
    pub fn degree(&self) -> BigUint {
        let mut d = factorial(self.weight());
        for mu in &self.parts {
            d /= factorial(mu.size());
            d *= mu.symmetric_dim();
        }
        d
    }

    /// The label attached to an `e`-quotient.
    pub fn from_quotient(quotient: &[Partition]) -> Self {
        WreathLabel { parts: quotient.to_vec() }
    }
}

impl fmt::Display for WreathLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All tuples of `k` partitions with total size `n`.
pub fn multipartitions(k: usize, n: usize) -> Vec<Vec<Partition>> {
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for head in partitions_of(first) {
            for mut tail in multipartitions(k - 1, n - first) {
                tail.insert(0, head.clone());
                out.push(tail);
            }
        }
    }
    out
}

/// Irreducible labels of `C_e ≀ S_w`.
pub fn wreath_irr(e: usize, w: usize) -> Vec<WreathLabel> {
    multipartitions(e, w).into_iter().map(|parts| WreathLabel { parts }).collect()
}

/// `|C_e ≀ S_w| = e^w · w!`.
pub fn wreath_order(e: usize, w: usize) -> BigUint {
    BigUint::from(e).pow(w as u32) * factorial(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn hooks() {
        let mut h = p(&[2, 1]).hook_lengths();
        h.sort();
        assert_eq!(h, vec![1, 1, 3]);
        let mut h = p(&[2, 2]).hook_lengths();
        h.sort();
        assert_eq!(h, vec![1, 2, 2, 3]);
        let mut h = p(&[4]).hook_lengths();
        h.sort();
        assert_eq!(h, vec![1, 2, 3, 4]);
    }

    #[test]
    fn cores() {
        // (2,1) has no hook of length 2, so it is its own 2-core
        let cq = e_core_quotient(&p(&[2, 1]), 2);
        assert_eq!(cq.core, p(&[2, 1]));
        assert_eq!(cq.weight, 0);
        let cq = e_core_quotient(&p(&[2, 1]), 3);
        assert_eq!(cq.core, Partition::empty());
        assert_eq!(cq.weight, 1);
        let cq = e_core_quotient(&p(&[1, 1]), 2);
        assert_eq!(cq.core, Partition::empty());
        assert_eq!(cq.weight, 1);
        assert!(p(&[3, 1]).is_core(3));
        let cq = e_core_quotient(&p(&[3, 1]), 2);
        assert_eq!(cq.core, Partition::empty());
        assert_eq!(cq.weight, 2);
    }

    #[test]
    fn degrees() {
        assert_eq!(generic_degree(&p(&[2, 1]), 1, 2), BigUint::from(6u32));
        assert_eq!(generic_degree(&p(&[1, 1]), -1, 2), BigUint::from(2u32));
        assert_eq!(generic_degree(&p(&[1, 1]), 1, 3), BigUint::from(3u32));
        assert_eq!(generic_degree(&p(&[3]), -1, 5), BigUint::one());
        assert_eq!(p(&[2, 1]).symmetric_dim(), BigUint::from(2u32));
    }

    #[test]
    fn wreath() {
        let labels = wreath_irr(2, 2);
        let mut d: Vec<BigUint> = labels.iter().map(WreathLabel::degree).collect();
        d.sort();
        let expect: Vec<BigUint> = [1u32, 1, 1, 1, 2].iter().map(|&x| BigUint::from(x)).collect();
        assert_eq!(d, expect);
    }

    #[test]
    fn counts() {
        assert_eq!(partitions_of(10).len(), 42);
        assert_eq!(partitions_of(0).len(), 1);
    }
}
