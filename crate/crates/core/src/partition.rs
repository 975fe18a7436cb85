//! Partitions, the Jack parameter, hook products, generalized Pochhammer
//! symbols and complements inside an `N × n` box.
//!
//! Boxes are addressed 1-based as `(i, j)` = (row, column).

use std::fmt;

use num::bigint::BigInt;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{q, Scalar, Q};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl Partition {
    /// Weakly decreasing parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parameter(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn row(r: usize) -> Self {
        Partition::from_unsorted(vec![r])
    }

    /// `(N^n)`: n rows of length N.
    pub fn rectangle(cols: usize, rows: usize) -> Self {
        Partition::from_unsorted(vec![cols; rows])
    }

    /// Parses "2,1" or "[2,1]"; an empty string is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
        if t.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad partition {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// λ_i for 1-based i, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        Partition((1..=cols).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &li)| (1..=li).map(move |j| (i + 1, j)))
    }

    pub fn arm(&self, i: usize, j: usize) -> usize {
        self.part(i) - j
    }

    pub fn leg(&self, i: usize, j: usize) -> usize {
        self.conjugate_part(j) - i
    }

    fn conjugate_part(&self, j: usize) -> usize {
        self.0.iter().filter(|&&p| p >= j).count()
    }

    /// n(λ) = Σ (i−1) λ_i.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// Partitions obtained by removing one corner box.
    pub fn children(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if i + 1 == self.len() || self.0[i] > self.0[i + 1] {
                let mut v = self.0.clone();
                v[i] -= 1;
                out.push(Partition::from_unsorted(v));
            }
        }
        out
    }

    /// Partitions obtained by adding one box, optionally capped in length.
    pub fn parents(&self, max_len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            if i >= max_len {
                break;
            }
            if i == 0 || self.part(i) > self.part(i + 1) {
                let mut v = self.0.clone();
                if i == v.len() {
                    v.push(1);
                } else {
                    v[i] += 1;
                }
                out.push(Partition(v));
            }
        }
        out
    }

    /// The box of λ/μ when μ ⊂ λ differ by exactly one box.
    pub fn single_box(&self, mu: &Partition) -> Option<(usize, usize)> {
        if self.size() != mu.size() + 1 || !self.contains(mu) {
            return None;
        }
        (1..=self.len()).find(|&i| self.part(i) != mu.part(i)).map(|i| (i, self.part(i)))
    }

    /// All μ ⊆ λ, in increasing size and then reverse-lexicographic order.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        fn rec(lam: &[usize], i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == lam.len() {
                out.push(Partition::from_unsorted(cur.clone()));
                return;
            }
            for v in (0..=lam[i].min(cap)).rev() {
                cur.push(v);
                rec(lam, i + 1, v, cur, out);
                cur.pop();
            }
        }
        rec(&self.0, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then(b.cmp(a)));
        out
    }

    /// Multiplicities m_r of each part value r ≥ 1.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// z_λ = ∏ r^{m_r} m_r!.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (r, m) in self.multiplicities() {
            for t in 1..=m {
                z *= BigInt::from(r) * BigInt::from(t);
            }
        }
        z
    }

    /// ∏ λ_i!.
    pub fn factorial_product(&self) -> BigInt {
        self.0.iter().map(|&p| factorial(p)).product()
    }

    /// ∏ m_r! (the number of permutations fixing the part sequence).
    pub fn stabilizer(&self) -> BigInt {
        self.multiplicities().iter().map(|&(_, m)| factorial(m)).product()
    }

    pub fn dominates(&self, mu: &Partition) -> bool {
        let (mut a, mut b) = (0, 0);
        for i in 1..=self.len().max(mu.len()) {
            a += self.part(i);
            b += mu.part(i);
            if a < b {
                return false;
            }
        }
        self.size() == mu.size()
    }

    pub fn add_rows(&self, other: &Partition) -> Partition {
        let l = self.len().max(other.len());
        Partition((1..=l).map(|i| self.part(i) + other.part(i)).collect())
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, t| acc * BigInt::from(t))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// All partitions of `m` with at most `max_len` parts, reverse lexicographic.
pub fn partitions(m: usize, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    fn rec(rem: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for v in (1..=rem.min(cap)).rev() {
            cur.push(v);
            rec(rem - v, v, slots - 1, cur, out);
            cur.pop();
        }
    }
    rec(m, m, max_len, &mut Vec::new(), &mut out);
    out
}

/// Partitions of every size `0..=d`, degree-major.
pub fn partitions_upto(d: usize, max_len: usize) -> Vec<Partition> {
    (0..=d).flat_map(|m| partitions(m, max_len)).collect()
}

/// The Jack parameter α > 0, or α = ∞.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Alpha {
    Finite(Q),
    Infinite,
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alpha::Finite(a) => write!(f, "{}", crate::rational::fmt_q(a)),
            Alpha::Infinite => write!(f, "inf"),
        }
    }
}

impl Alpha {
    pub fn new(a: Q) -> Result<Self> {
        if !a.is_positive() {
            return Err(Error::Parameter(format!("alpha must be positive, got {a}")));
        }
        Ok(Alpha::Finite(a))
    }

    pub fn int(a: i64) -> Self {
        Alpha::new(q(a)).expect("positive alpha")
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Alpha::new(crate::rational::qr(n, d)).expect("positive alpha")
    }

    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if matches!(t, "inf" | "infinity" | "∞") {
            return Ok(Alpha::Infinite);
        }
        Alpha::new(crate::rational::parse_q(t)?)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Alpha::Finite(_))
    }

    /// α itself; an error at α = ∞.
    pub fn value(&self) -> Result<Q> {
        match self {
            Alpha::Finite(a) => Ok(a.clone()),
            Alpha::Infinite => Err(Error::Parameter("operation needs finite alpha".into())),
        }
    }

    /// k = 1/α, zero at α = ∞.
    pub fn k(&self) -> Q {
        match self {
            Alpha::Finite(a) => a.recip(),
            Alpha::Infinite => Q::zero(),
        }
    }

    pub fn k_f64(&self) -> f64 {
        crate::rational::to_f64(&self.k())
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Alpha::Finite(a) => crate::rational::to_f64(a),
            Alpha::Infinite => f64::INFINITY,
        }
    }

    /// 1/α; α = ∞ has no finite dual.
    pub fn dual(&self) -> Result<Alpha> {
        Alpha::new(self.k()).map_err(|_| Error::Parameter("alpha = inf has no dual".into()))
    }

    /// p = k(n−1) + 1.
    pub fn p(&self, n: usize) -> Q {
        self.k() * q(n as i64 - 1) + q(1)
    }
}

/// (h, h′) with h = ∏(α a + l + 1) and h′ = ∏(α a + l + α).
pub fn hook_products(lam: &Partition, alpha: &Alpha) -> Result<(Q, Q)> {
    let a = alpha.value()?;
    let mut h = q(1);
    let mut hp = q(1);
    for (i, j) in lam.boxes() {
        let arm = q(lam.arm(i, j) as i64);
        let leg = q(lam.leg(i, j) as i64);
        h *= &a * &arm + &leg + q(1);
        hp *= &a * &arm + &leg + &a;
    }
    Ok((h, hp))
}

/// ∏_s 1/(a(s) + 1 + k l(s)) = α^{|λ|}/h′_λ, finite also at α = ∞.
pub fn jstar_weight<S: Scalar>(lam: &Partition, k: &S) -> S {
    let mut w = S::unit();
    for (i, j) in lam.boxes() {
        w = w * (S::from_i64(lam.arm(i, j) as i64 + 1) + k.clone() * S::from_i64(lam.leg(i, j) as i64));
    }
    S::unit() / w
}

/// (a)_λ = ∏_i (a − k(i−1))_{λ_i}, generic over the scalar kind.
pub fn pochhammer<S: Scalar>(a: &S, lam: &Partition, k: &S) -> S {
    let mut r = S::unit();
    for (i, &li) in lam.parts().iter().enumerate() {
        let base = a.clone() - k.clone() * S::from_i64(i as i64);
        for t in 0..li {
            r = r * (base.clone() + S::from_i64(t as i64));
        }
    }
    r
}

pub fn gen_pochhammer(a: &Q, lam: &Partition, alpha: &Alpha) -> Q {
    pochhammer(a, lam, &alpha.k())
}

pub fn gen_pochhammer_f64(a: f64, lam: &Partition, alpha: &Alpha) -> f64 {
    pochhammer(&a, lam, &alpha.k_f64())
}

/// ρ(λ) = n(λ′) − k n(λ).
pub fn rho(lam: &Partition, alpha: &Alpha) -> Result<Q> {
    let k = alpha.value()?.recip();
    Ok(q(lam.conjugate().n_stat() as i64) - k * q(lam.n_stat() as i64))
}

/// ρ(λ/μ) = ρ(λ) − ρ(μ); for one box at (i,j) this is j − 1 − k(i−1).
pub fn rho_skew(lam: &Partition, mu: &Partition, alpha: &Alpha) -> Result<Q> {
    Ok(rho(lam, alpha)? - rho(mu, alpha)?)
}

/// μ̂_i = N − μ_{n+1−i}.
pub fn complement(mu: &Partition, cols: usize, rows: usize) -> Result<Partition> {
    let rect = Partition::rectangle(cols, rows);
    if !rect.contains(mu) {
        return Err(Error::Containment { lambda: rect, mu: mu.clone() });
    }
    Ok(Partition::from_unsorted((1..=rows).map(|i| cols - mu.part(rows + 1 - i)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qr;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
    }

    #[test]
    fn hooks() {
        let any = Alpha::ratio(7, 3);
        assert_eq!(hook_products(&p(&[1]), &any).unwrap(), (q(1), qr(7, 3)));
        assert_eq!(hook_products(&p(&[2]), &Alpha::int(2)).unwrap(), (q(3), q(8)));
        assert_eq!(hook_products(&p(&[1, 1]), &Alpha::int(2)).unwrap(), (q(2), q(6)));
        assert!(hook_products(&p(&[1]), &Alpha::Infinite).is_err());
    }

    #[test]
    fn pochhammer_examples() {
        let a = qr(5, 7);
        let al = Alpha::int(2);
        assert_eq!(gen_pochhammer(&a, &p(&[1]), &al), a);
        assert_eq!(gen_pochhammer(&a, &p(&[1, 1]), &al), &a * (&a - qr(1, 2)));
        assert_eq!(gen_pochhammer(&a, &p(&[2, 1]), &al), &a * (&a + q(1)) * (&a - qr(1, 2)));
        assert_eq!(gen_pochhammer(&a, &p(&[2, 1]), &Alpha::Infinite), &a * (&a + q(1)) * &a);
    }

    #[test]
    fn rho_examples() {
        let al = Alpha::int(2);
        assert_eq!(rho(&p(&[1]), &al).unwrap(), q(0));
        assert_eq!(rho(&p(&[2]), &Alpha::int(5)).unwrap(), q(1));
        assert_eq!(rho_skew(&p(&[1, 1]), &p(&[1]), &al).unwrap(), qr(-1, 2));
    }

    #[test]
    fn complements() {
        assert_eq!(complement(&p(&[]), 1, 2).unwrap(), p(&[1, 1]));
        assert_eq!(complement(&p(&[2, 2]), 2, 2).unwrap(), p(&[]));
        assert_eq!(complement(&p(&[2, 1]), 3, 3).unwrap(), p(&[3, 2, 1]));
        assert!(complement(&p(&[4]), 3, 3).is_err());
    }

    #[test]
    fn enumeration() {
        assert_eq!(partitions(4, 2), vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]);
        assert_eq!(partitions(0, 3), vec![p(&[])]);
        assert_eq!(partitions(5, 5).len(), 7);
        assert_eq!(p(&[2, 1]).subpartitions().len(), 5);
    }

    #[test]
    fn serde_roundtrip() {
        let s = serde_json::to_string(&p(&[3, 1, 1])).unwrap();
        assert_eq!(s, "[3,1,1]");
        let back: Partition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p(&[3, 1, 1]));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
