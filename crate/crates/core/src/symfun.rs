//! Exact symmetric functions in the power-sum basis, the monomial basis and
//! the transition between them.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num::bigint::BigInt;
use num::{One, Signed, Zero};
use once_cell::sync::Lazy;
use parking_lot::RwLock;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{partitions, Alpha, Partition};
use crate::rational::{fmt_q, q, qpow, Q};

fn serialize_map<S: Serializer>(coeffs: &BTreeMap<Partition, Q>, s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut m = s.serialize_map(Some(coeffs.len()))?;
    for (k, v) in coeffs {
        m.serialize_entry(&serde_json::to_string(k).unwrap(), &fmt_q(v))?;
    }
    m.end()
}

/// A symmetric function Σ c_λ p_λ with an optional degree cap.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct PowerSumElement {
    coeffs: BTreeMap<Partition, Q>,
    cap: Option<usize>,
    truncated: bool,
}

impl Serialize for PowerSumElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_map(&self.coeffs, s)
    }
}

impl PowerSumElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Partition::empty(), q(1))
    }

    pub fn term(lam: Partition, c: Q) -> Self {
        let mut e = Self::zero();
        e.add_term(lam, c);
        e
    }

    /// p_r.
    pub fn p(r: usize) -> Self {
        Self::term(Partition::row(r), q(1))
    }

    pub fn from_map(coeffs: BTreeMap<Partition, Q>) -> Self {
        let mut e = Self::zero();
        for (k, v) in coeffs {
            e.add_term(k, v);
        }
        e
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        let before = self.coeffs.len();
        self.coeffs.retain(|k, _| k.size() <= cap);
        self.truncated |= self.coeffs.len() != before;
        self.cap = Some(self.cap.map_or(cap, |c| c.min(cap)));
        self
    }

    pub fn cap(&self) -> Option<usize> {
        self.cap
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Q> {
        &self.coeffs
    }

    pub fn coeff(&self, lam: &Partition) -> Q {
        self.coeffs.get(lam).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, lam: Partition, c: Q) {
        if c.is_zero() {
            return;
        }
        if let Some(cap) = self.cap {
            if lam.size() > cap {
                self.truncated = true;
                return;
            }
        }
        let e = self.coeffs.entry(lam.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&lam);
        }
    }

    fn merged_cap(&self, other: &Self) -> Option<usize> {
        match (self.cap, other.cap) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.cap = self.merged_cap(other);
        r.truncated |= other.truncated;
        for (k, v) in &other.coeffs {
            r.add_term(k.clone(), v.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&q(-1)))
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut r = Self { coeffs: BTreeMap::new(), cap: self.cap, truncated: self.truncated };
        if !c.is_zero() {
            for (k, v) in &self.coeffs {
                r.coeffs.insert(k.clone(), v * c);
            }
        }
        r
    }

    /// Product, dropping (and flagging) terms above the merged degree cap.
    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self { coeffs: BTreeMap::new(), cap: self.merged_cap(other), truncated: self.truncated || other.truncated };
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                r.add_term(a.add_rows_merge(b), ca * cb);
            }
        }
        r
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut r = Self::one();
        r.cap = self.cap;
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// exp(f) for f without constant term, through degree `cap`.
    pub fn exp(&self, cap: usize) -> Self {
        debug_assert!(self.coeff(&Partition::empty()).is_zero());
        let f = self.clone().with_cap(cap);
        let mut term = Self::one().with_cap(cap);
        let mut total = term.clone();
        for j in 1..=cap {
            term = term.mul(&f).scale(&Q::new(BigInt::one(), BigInt::from(j)));
            if term.is_zero() {
                break;
            }
            total = total.add(&term);
        }
        total.truncated = true;
        total
    }

    /// Homogeneous component of degree d.
    pub fn layer(&self, d: usize) -> Self {
        Self::from_map(self.coeffs.iter().filter(|(k, _)| k.size() == d).map(|(k, v)| (k.clone(), v.clone())).collect())
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.keys().map(|k| k.size()).max().unwrap_or(0)
    }

    /// The ring homomorphism determined by p_r ↦ image(r).
    pub fn substitute(&self, image: impl Fn(usize) -> PowerSumElement, cap: Option<usize>) -> Self {
        let mut cache: HashMap<usize, PowerSumElement> = HashMap::new();
        let mut r = Self::zero();
        if let Some(c) = cap {
            r = r.with_cap(c);
        }
        for (lam, c) in &self.coeffs {
            let mut t = Self::term(Partition::empty(), c.clone());
            if let Some(cp) = cap {
                t = t.with_cap(cp);
            }
            for &part in lam.parts() {
                let img = cache.entry(part).or_insert_with(|| image(part)).clone();
                t = t.mul(&img);
            }
            r = r.add(&t);
        }
        r
    }

    /// ∂/∂p₁.
    pub fn d_p1(&self) -> Self {
        let mut r = Self::zero();
        for (lam, c) in &self.coeffs {
            let m1 = lam.parts().iter().filter(|&&x| x == 1).count();
            if m1 > 0 {
                let mut v = lam.parts().to_vec();
                v.pop();
                r.add_term(Partition::from_unsorted(v), c * q(m1 as i64));
            }
        }
        r
    }

    /// ε_X: every p_r ↦ X.
    pub fn eps_x(&self, x: &Q) -> Q {
        self.coeffs.iter().map(|(lam, c)| c * qpow(x, lam.len() as i64)).sum()
    }

    /// ε: p₁ ↦ 1, p_r ↦ 0 for r > 1.
    pub fn eps_delta(&self) -> Q {
        self.coeffs.iter().filter(|(lam, _)| lam.parts().iter().all(|&r| r == 1)).map(|(_, c)| c.clone()).sum()
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        let deg = self.max_degree();
        let pr: Vec<f64> = (0..=deg).map(|r| x.iter().map(|xi| xi.powi(r as i32)).sum()).collect();
        let mut s = crate::rational::KahanSum::default();
        for (lam, c) in &self.coeffs {
            s.add(crate::rational::to_f64(c) * lam.parts().iter().map(|&r| pr[r]).product::<f64>());
        }
        s.value()
    }

    pub fn eval_q(&self, x: &[Q]) -> Q {
        let deg = self.max_degree();
        let pr: Vec<Q> = (0..=deg).map(|r| x.iter().map(|xi| qpow(xi, r as i64)).sum()).collect();
        self.coeffs.iter().map(|(lam, c)| c * lam.parts().iter().map(|&r| pr[r].clone()).product::<Q>()).sum()
    }
}

impl Partition {
    /// Union of parts (the partition of p_λ p_μ).
    pub fn add_rows_merge(&self, other: &Partition) -> Partition {
        let mut v = self.parts().to_vec();
        v.extend_from_slice(other.parts());
        Partition::from_unsorted(v)
    }
}

/// ⟨p_λ, p_μ⟩_α = δ_{λμ} z_λ α^{ℓ(λ)}.
pub fn inner_product(f: &PowerSumElement, g: &PowerSumElement, alpha: &Alpha) -> Result<Q> {
    if f.is_truncated() || g.is_truncated() {
        return Err(Error::Truncated);
    }
    let a = alpha.value()?;
    let mut s = Q::zero();
    for (lam, c) in f.coeffs() {
        if let Some(d) = g.coeffs().get(lam) {
            s += c * d * Q::from_integer(lam.z()) * qpow(&a, lam.len() as i64);
        }
    }
    Ok(s)
}

/// ω_α: p_r ↦ (−1)^{r−1} α p_r.
pub fn omega_alpha(f: &PowerSumElement, alpha: &Alpha) -> Result<PowerSumElement> {
    let a = alpha.value()?;
    let mut r = PowerSumElement::zero();
    r.cap = f.cap;
    r.truncated = f.truncated;
    for (lam, c) in f.coeffs() {
        let sign = if (lam.size() - lam.len()) % 2 == 0 { q(1) } else { q(-1) };
        r.add_term(lam.clone(), c * sign * qpow(&a, lam.len() as i64));
    }
    Ok(r)
}

#[derive(Clone, Debug)]
pub enum Specialization {
    EpsX(Q),
    EpsDelta,
}

pub fn specialize(f: &PowerSumElement, kind: &Specialization) -> Q {
    match kind {
        Specialization::EpsX(x) => f.eps_x(x),
        Specialization::EpsDelta => f.eps_delta(),
    }
}

/// Σ c_μ m_μ in `nvars` variables (every stored μ has ℓ(μ) ≤ nvars).
#[derive(Clone, Debug, PartialEq)]
pub struct MonomialExpansion {
    coeffs: BTreeMap<Partition, Q>,
    nvars: usize,
}

impl Serialize for MonomialExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_map(&self.coeffs, s)
    }
}

impl MonomialExpansion {
    pub fn zero(nvars: usize) -> Self {
        Self { coeffs: BTreeMap::new(), nvars }
    }

    pub fn from_map(coeffs: BTreeMap<Partition, Q>, nvars: usize) -> Self {
        let mut e = Self::zero(nvars);
        for (k, v) in coeffs {
            e.add_term(k, v);
        }
        e
    }

    /// Terms with ℓ(μ) > nvars vanish and are dropped.
    pub fn add_term(&mut self, mu: Partition, c: Q) {
        if c.is_zero() || mu.len() > self.nvars {
            return;
        }
        let e = self.coeffs.entry(mu.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&mu);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Q> {
        &self.coeffs
    }

    pub fn coeff(&self, mu: &Partition) -> Q {
        self.coeffs.get(mu).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut r = Self::zero(self.nvars);
        for (k, v) in &self.coeffs {
            r.add_term(k.clone(), v * c);
        }
        r
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.nvars = self.nvars.min(other.nvars);
        r.coeffs.retain(|k, _| k.len() <= r.nvars);
        for (k, v) in &other.coeffs {
            r.add_term(k.clone(), v.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&q(-1)))
    }

    pub fn layer(&self, d: usize) -> Self {
        Self::from_map(self.coeffs.iter().filter(|(k, _)| k.size() == d).map(|(k, v)| (k.clone(), v.clone())).collect(), self.nvars)
    }

    /// Drop everything with more than n parts.
    pub fn project(&self, n: usize) -> Self {
        let mut r = self.clone();
        r.nvars = n.min(self.nvars);
        r.coeffs.retain(|k, _| k.len() <= n);
        r
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        let mut s = crate::rational::KahanSum::default();
        for (mu, c) in &self.coeffs {
            s.add(crate::rational::to_f64(c) * monomial_eval(mu, x));
        }
        s.value()
    }

    pub fn eval_q(&self, x: &[Q]) -> Q {
        self.coeffs.iter().map(|(mu, c)| c * monomial_eval_q(mu, x)).sum()
    }
}

/// Distinct rearrangements of μ padded with zeros to length n.
pub fn distinct_permutations(mu: &Partition, n: usize) -> Vec<Vec<usize>> {
    let mut v: Vec<usize> = (1..=n).map(|i| mu.part(i)).collect();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    loop {
        // next lexicographic permutation
        let Some(i) = (0..v.len().saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else {
            break;
        };
        let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.clone());
    }
    out
}

pub fn monomial_eval(mu: &Partition, x: &[f64]) -> f64 {
    if mu.len() > x.len() {
        return 0.0;
    }
    distinct_permutations(mu, x.len())
        .iter()
        .map(|e| e.iter().zip(x).map(|(&k, xi)| xi.powi(k as i32)).product::<f64>())
        .sum()
}

pub fn monomial_eval_q(mu: &Partition, x: &[Q]) -> Q {
    if mu.len() > x.len() {
        return Q::zero();
    }
    distinct_permutations(mu, x.len())
        .iter()
        .map(|e| e.iter().zip(x).map(|(&k, xi)| qpow(xi, k as i64)).product::<Q>())
        .sum()
}

/// Change of basis between p and m at a fixed degree.
#[derive(Debug)]
pub struct Transition {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// p_λ = Σ_μ p_to_m[λ][μ] m_μ
    pub p_to_m: Vec<Vec<BigInt>>,
    /// m_λ = Σ_μ m_to_p[λ][μ] p_μ
    pub m_to_p: Vec<Vec<Q>>,
}

static TRANSITIONS: Lazy<RwLock<HashMap<usize, Arc<Transition>>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Number of ways to distribute the parts of λ over the rows of μ with exact row sums.
fn assignment_count(lam: &[usize], rows: &mut Vec<usize>) -> BigInt {
    let Some((&first, rest)) = lam.split_first() else {
        return if rows.iter().all(|&r| r == 0) { BigInt::one() } else { BigInt::zero() };
    };
    let mut total = BigInt::zero();
    for i in 0..rows.len() {
        if rows[i] >= first {
            rows[i] -= first;
            total += assignment_count(rest, rows);
            rows[i] += first;
        }
    }
    total
}

pub fn transition(d: usize) -> Arc<Transition> {
    if let Some(t) = TRANSITIONS.read().get(&d) {
        return t.clone();
    }
    let parts = partitions(d, d);
    let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let nn = parts.len();
    let mut p_to_m = vec![vec![BigInt::zero(); nn]; nn];
    for (a, lam) in parts.iter().enumerate() {
        for (b, mu) in parts.iter().enumerate() {
            // only coarsenings of λ occur, and those come no later in reverse-lex order
            if b <= a {
                p_to_m[a][b] = assignment_count(lam.parts(), &mut mu.parts().to_vec());
            }
        }
    }
    // P is lower triangular in this order; solve m = P^{-1} p row by row.
    let mut inv = vec![vec![Q::zero(); nn]; nn];
    for a in 0..nn {
        let diag = Q::from_integer(p_to_m[a][a].clone());
        for b in 0..=a {
            let mut s = if a == b { q(1) } else { Q::zero() };
            for c in b..a {
                if !p_to_m[a][c].is_zero() {
                    s -= Q::from_integer(p_to_m[a][c].clone()) * &inv[c][b];
                }
            }
            inv[a][b] = s / &diag;
        }
    }
    // inv is the inverse of the p-to-m matrix, so m_μ = Σ_λ inv[μ][λ] p_λ.
    let t = Arc::new(Transition { parts, index, p_to_m, m_to_p: inv });
    TRANSITIONS.write().insert(d, t.clone());
    t
}

pub fn m_to_p(f: &MonomialExpansion) -> PowerSumElement {
    let mut r = PowerSumElement::zero();
    for (mu, c) in f.coeffs() {
        let t = transition(mu.size());
        let i = t.index[mu];
        for (j, v) in t.m_to_p[i].iter().enumerate() {
            if !v.is_zero() {
                r.add_term(t.parts[j].clone(), c * v);
            }
        }
    }
    r
}

pub fn p_to_m(f: &PowerSumElement, n: usize) -> MonomialExpansion {
    let mut r = MonomialExpansion::zero(n);
    for (lam, c) in f.coeffs() {
        let t = transition(lam.size());
        let i = t.index[lam];
        for (j, v) in t.p_to_m[i].iter().enumerate() {
            if !v.is_zero() && t.parts[j].len() <= n {
                r.add_term(t.parts[j].clone(), c * Q::from_integer(v.clone()));
            }
        }
    }
    r
}

/// Coefficient vectors are stored densely per degree; this turns one back into an element.
pub fn dense_to_p(d: usize, v: &[Q]) -> PowerSumElement {
    let t = transition(d);
    let mut r = PowerSumElement::zero();
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            r.add_term(t.parts[i].clone(), c.clone());
        }
    }
    r
}

pub fn sign_of(x: &Q) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qr;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn inner_products() {
        let a = Alpha::ratio(5, 2);
        assert_eq!(inner_product(&PowerSumElement::p(1), &PowerSumElement::p(1), &a).unwrap(), qr(5, 2));
        assert_eq!(inner_product(&PowerSumElement::p(2), &PowerSumElement::p(2), &a).unwrap(), q(5));
        let p1m = PowerSumElement::p(1).pow(4);
        let two = Alpha::int(2);
        assert_eq!(inner_product(&p1m, &p1m, &two).unwrap(), q(16 * 24));
    }

    #[test]
    fn truncated_inputs_refused() {
        let e = PowerSumElement::p(1).exp(3);
        assert_eq!(inner_product(&e, &e, &Alpha::int(1)), Err(Error::Truncated));
    }

    #[test]
    fn omega_generators() {
        let a = Alpha::int(3);
        assert_eq!(omega_alpha(&PowerSumElement::p(1), &a).unwrap(), PowerSumElement::p(1).scale(&q(3)));
        assert_eq!(omega_alpha(&PowerSumElement::p(2), &a).unwrap(), PowerSumElement::p(2).scale(&q(-3)));
        let f = PowerSumElement::p(1).pow(2).add(&PowerSumElement::p(3).scale(&qr(2, 7)));
        let back = omega_alpha(&omega_alpha(&f, &a).unwrap(), &a.dual().unwrap()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn specializations() {
        let f = PowerSumElement::term(p(&[3, 1, 1]), q(1));
        assert_eq!(f.eps_x(&q(5)), q(125));
        assert_eq!(PowerSumElement::p(2).eval(&[1.0, 2.0]), 5.0);
        let e = PowerSumElement::p(1).exp(5);
        assert_eq!(e.eps_delta(), q(1) + q(1) + qr(1, 2) + qr(1, 6) + qr(1, 24) + qr(1, 120));
    }

    #[test]
    fn newton_relations() {
        let m1 = MonomialExpansion::from_map([(p(&[1]), q(1))].into(), 3);
        assert_eq!(m_to_p(&m1), PowerSumElement::p(1));
        let m11 = MonomialExpansion::from_map([(p(&[1, 1]), q(1))].into(), 3);
        let expect = PowerSumElement::p(1).pow(2).sub(&PowerSumElement::p(2)).scale(&qr(1, 2));
        assert_eq!(m_to_p(&m11), expect);
    }

    #[test]
    fn transition_roundtrip() {
        for d in 0..=7 {
            for lam in partitions(d, d) {
                let f = PowerSumElement::term(lam.clone(), q(1));
                assert_eq!(m_to_p(&p_to_m(&f, d)), f);
            }
        }
    }

    #[test]
    fn distinct_perms() {
        assert_eq!(distinct_permutations(&p(&[2, 1]), 3).len(), 6);
        assert_eq!(distinct_permutations(&p(&[1, 1]), 3).len(), 3);
        assert_eq!(monomial_eval(&p(&[1]), &[1.0, 2.0]), 3.0);
    }
}
