//! Laguerre, Jacobi, Hermite and Bessel families as finite expansions in Ω_μ or J*_μ.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::jack::{binom, jack, jstar_at_ones, Norm};
use crate::partition::{factorial, gen_pochhammer, rho_skew, Alpha, Partition};
use crate::poly::NVarPoly;
use crate::rational::{fmt_q, q, qpow, to_f64, Q};
use crate::series::{pfq, pfq_two, HyperParams, Truncation};
use crate::special::{gamma_n, gamma_n_lam};
use crate::symfun::MonomialExpansion;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Basis {
    Omega,
    Jstar,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OmegaExpansion {
    pub coeffs: BTreeMap<Partition, Q>,
    pub basis: Basis,
    pub alpha: Alpha,
    pub n: usize,
}

impl OmegaExpansion {
    fn new(basis: Basis, alpha: &Alpha, n: usize) -> Self {
        Self { coeffs: BTreeMap::new(), basis, alpha: alpha.clone(), n }
    }

    fn push(&mut self, mu: Partition, c: Q) {
        if !c.is_zero() {
            *self.coeffs.entry(mu).or_insert_with(Q::zero) += c;
        }
    }

    pub fn coeff(&self, mu: &Partition) -> Q {
        self.coeffs.get(mu).cloned().unwrap_or_else(Q::zero)
    }

    /// Ω_μ = J*_μ / J*_μ(1_n); the rescaling is exact in both directions.
    pub fn to_basis(&self, basis: Basis) -> Result<Self> {
        if basis == self.basis {
            return Ok(self.clone());
        }
        let mut out = Self::new(basis, &self.alpha, self.n);
        for (mu, c) in &self.coeffs {
            let s = jstar_at_ones(mu, &self.alpha, self.n)?;
            out.push(mu.clone(), if basis == Basis::Omega { c * s } else { c / s });
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Q) -> Self {
        let mut out = self.clone();
        for v in out.coeffs.values_mut() {
            *v *= s;
        }
        out.coeffs.retain(|_, v| !v.is_zero());
        out
    }

    pub fn to_monomial(&self) -> Result<MonomialExpansion> {
        let norm = match self.basis {
            Basis::Omega => Norm::Omega,
            Basis::Jstar => Norm::Jstar,
        };
        let mut f = MonomialExpansion::zero(self.n);
        for (mu, c) in &self.coeffs {
            f = f.add(&jack(mu, &self.alpha, self.n, norm)?.scale(c));
        }
        Ok(f)
    }

    pub fn to_poly(&self) -> Result<NVarPoly> {
        Ok(NVarPoly::from_monomial(&self.to_monomial()?))
    }

    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        Ok(self.to_monomial()?.eval(x))
    }

    /// (μ, "num/den") pairs in partition order.
    pub fn table(&self) -> Vec<(String, String)> {
        self.coeffs.iter().map(|(m, c)| (m.to_string(), fmt_q(c))).collect()
    }
}

fn check_length(lam: &Partition, n: usize) -> Result<()> {
    if lam.len() > n {
        return Err(Error::Parameter(format!("{lam} has more than {n} parts")));
    }
    Ok(())
}

fn nonzero_pochhammer(a: &Q, mu: &Partition, alpha: &Alpha, what: &str) -> Result<Q> {
    let v = gen_pochhammer(a, mu, alpha);
    if v.is_zero() {
        return Err(Error::Parameter(format!("({what})_{mu} = 0 at {what} = {}", fmt_q(a))));
    }
    Ok(v)
}

/// L^{(a)}_λ in the J* basis: Σ_μ (−1)^{|μ|} binom(λ,μ) J*_λ(1)/J*_μ(1) (a+p)_λ/(a+p)_μ J*_μ.
pub fn laguerre(lam: &Partition, a: &Q, alpha: &Alpha, n: usize) -> Result<OmegaExpansion> {
    check_length(lam, n)?;
    let ap = a + alpha.p(n);
    let top = nonzero_pochhammer(&ap, lam, alpha, "a+p")?;
    let jl = jstar_at_ones(lam, alpha, n)?;
    let mut out = OmegaExpansion::new(Basis::Jstar, alpha, n);
    for mu in lam.subpartitions() {
        let sign = if mu.size() % 2 == 0 { q(1) } else { q(-1) };
        let c = sign * binom(lam, &mu, alpha)? * &jl / jstar_at_ones(&mu, alpha, n)? * &top / nonzero_pochhammer(&ap, &mu, alpha, "a+p")?;
        out.push(mu, c);
    }
    Ok(out)
}

/// The Ω-form Σ_μ (−1)^{|μ|} binom(λ,μ) (a+p)_λ/(a+p)_μ Ω_μ, which is L^{(a)}_λ / J*_λ(1_n).
pub fn laguerre_omega(lam: &Partition, a: &Q, alpha: &Alpha, n: usize) -> Result<OmegaExpansion> {
    check_length(lam, n)?;
    let ap = a + alpha.p(n);
    let top = nonzero_pochhammer(&ap, lam, alpha, "a+p")?;
    let mut out = OmegaExpansion::new(Basis::Omega, alpha, n);
    for mu in lam.subpartitions() {
        let sign = if mu.size() % 2 == 0 { q(1) } else { q(-1) };
        let c = sign * binom(lam, &mu, alpha)? * &top / nonzero_pochhammer(&ap, &mu, alpha, "a+p")?;
        out.push(mu, c);
    }
    Ok(out)
}

/// |f_μ|²_a = 2^{−n(a+p)} α^{−|μ|} Γ_n(a+p;μ) J*_μ(1_n).
pub fn laguerre_norm(mu: &Partition, a: f64, alpha: &Alpha, n: usize) -> Result<f64> {
    let ap = a + to_f64(&alpha.p(n));
    let js = to_f64(&jstar_at_ones(mu, alpha, n)?);
    Ok(2f64.powf(-(n as f64) * ap) * alpha.to_f64().powi(-(mu.size() as i32)) * gamma_n_lam(ap, mu, alpha, n)? * js)
}

/// A rational function of one variable C whose denominator is a product of
/// monic linear factors (C − r).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    /// numerator coefficients, constant term first
    num: Vec<Q>,
    /// root → multiplicity
    den: BTreeMap<Q, u32>,
}

fn trim(v: &mut Vec<Q>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn poly_mul_linear(p: &[Q], root: &Q) -> Vec<Q> {
    // p · (C − root)
    let mut out = vec![Q::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i + 1] += c;
        out[i] -= c * root;
    }
    out
}

fn poly_eval(p: &[Q], x: &Q) -> Q {
    p.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
}

impl RatFunc {
    pub fn constant(c: Q) -> Self {
        let mut num = vec![c];
        trim(&mut num);
        Self { num, den: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    fn reduce(mut self) -> Self {
        if self.num.is_empty() {
            self.den.clear();
            return self;
        }
        let roots: Vec<Q> = self.den.keys().cloned().collect();
        for r in roots {
            while self.den.get(&r).copied().unwrap_or(0) > 0 && poly_eval(&self.num, &r).is_zero() {
                // synthetic division by (C − r)
                let d = self.num.len() - 1;
                let mut quo = vec![Q::zero(); d];
                let mut carry = Q::zero();
                for i in (0..=d).rev() {
                    let v = &self.num[i] + &carry * &r;
                    if i > 0 {
                        quo[i - 1] = v.clone();
                    }
                    carry = v;
                }
                self.num = quo;
                let m = self.den.get_mut(&r).unwrap();
                *m -= 1;
                if *m == 0 {
                    self.den.remove(&r);
                }
            }
        }
        self
    }

    fn lift(&self, den: &BTreeMap<Q, u32>) -> Vec<Q> {
        let mut num = self.num.clone();
        for (r, &m) in den {
            let have = self.den.get(r).copied().unwrap_or(0);
            for _ in have..m {
                num = poly_mul_linear(&num, r);
            }
        }
        num
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut den = self.den.clone();
        for (r, &m) in &o.den {
            let e = den.entry(r.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        let (a, b) = (self.lift(&den), o.lift(&den));
        let mut num = vec![Q::zero(); a.len().max(b.len())];
        for (i, c) in a.iter().enumerate() {
            num[i] += c;
        }
        for (i, c) in b.iter().enumerate() {
            num[i] += c;
        }
        trim(&mut num);
        Self { num, den }.reduce()
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut num: Vec<Q> = self.num.iter().map(|v| v * c).collect();
        trim(&mut num);
        Self { num, den: self.den.clone() }.reduce()
    }

    /// Divide by (s·C + t), s ≠ 0.
    pub fn div_linear(&self, s: &Q, t: &Q) -> Self {
        let root = -(t / s);
        let mut out = self.scale(&s.recip());
        *out.den.entry(root).or_insert(0) += 1;
        out.reduce()
    }

    pub fn eval(&self, c: &Q) -> Result<Q> {
        let mut d = q(1);
        for (r, &m) in &self.den {
            d *= qpow(&(c - r), m as i64);
        }
        if d.is_zero() {
            return Err(Error::Pole(format!("rational function singular at C = {}", fmt_q(c))));
        }
        Ok(poly_eval(&self.num, c) / d)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => fmt_q(c),
                1 => format!("{}*C", fmt_q(c)),
                _ => format!("{}*C^{i}", fmt_q(c)),
            })
            .collect();
        write!(f, "({})", terms.join(" + "))?;
        for (r, &m) in &self.den {
            let lin = if r.is_zero() {
                "C".to_string()
            } else if r < &Q::zero() {
                format!("C + {}", fmt_q(&-r.clone()))
            } else {
                format!("C - {}", fmt_q(r))
            };
            if m == 1 {
                write!(f, " / ({lin})")?;
            } else {
                write!(f, " / ({lin})^{m}")?;
            }
        }
        Ok(())
    }
}

/// Scalars the c-recursion can run over.
trait CField: Clone {
    fn from_q(c: Q) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn scale(&self, c: &Q) -> Self;
    /// divide by (C·s + t)
    fn div_lin(&self, s: &Q, t: &Q, what: &str) -> Result<Self>;
}

impl CField for Q {
    fn from_q(c: Q) -> Self {
        c
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn scale(&self, c: &Q) -> Self {
        self * c
    }
    fn div_lin(&self, _: &Q, t: &Q, what: &str) -> Result<Self> {
        // C already folded into t
        if t.is_zero() {
            return Err(Error::Pole(format!("vanishing recursion denominator at {what}")));
        }
        Ok(self / t)
    }
}

impl CField for RatFunc {
    fn from_q(c: Q) -> Self {
        RatFunc::constant(c)
    }
    fn add(&self, o: &Self) -> Self {
        RatFunc::add(self, o)
    }
    fn scale(&self, c: &Q) -> Self {
        RatFunc::scale(self, c)
    }
    fn div_lin(&self, s: &Q, t: &Q, _: &str) -> Result<Self> {
        Ok(self.div_linear(s, t))
    }
}

/// c_{λ/μ} for every μ ⊆ λ, by downward recursion from c_{λ/λ} = 1.
/// `c` is Some(C) for a numeric run, None for the symbolic one.
fn c_recursion<F: CField>(lam: &Partition, c: Option<&Q>, alpha: &Alpha) -> Result<BTreeMap<Partition, F>> {
    let mut subs = lam.subpartitions();
    subs.sort_by_key(|m| std::cmp::Reverse(m.size()));
    let mut out: BTreeMap<Partition, F> = BTreeMap::new();
    for mu in subs {
        if &mu == lam {
            out.insert(mu, F::from_q(q(1)));
            continue;
        }
        let mut s = F::from_q(Q::zero());
        for nu in mu.parents(usize::MAX) {
            if let Some(cn) = out.get(&nu) {
                s = s.add(&cn.scale(&binom(&nu, &mu, alpha)?));
            }
        }
        let r = q((lam.size() - mu.size()) as i64);
        let two_rho = q(2) * rho_skew(lam, &mu, alpha)?;
        let what = format!("({lam},{mu})");
        let v = match c {
            Some(cv) => s.div_lin(&r, &(&r * cv + &two_rho), &what)?,
            None => s.div_lin(&r, &two_rho, &what)?,
        };
        out.insert(mu, v);
    }
    Ok(out)
}

/// c_{λ/μ}(C; α) from the recursion (C|λ−μ| + 2ρ(λ/μ)) c_{λ/μ} = Σ_ν binom(ν,μ) c_{λ/ν}.
pub fn jacobi_c(lam: &Partition, mu: &Partition, c: &Q, alpha: &Alpha) -> Result<Q> {
    if !lam.contains(mu) {
        return Err(Error::Containment { lambda: lam.clone(), mu: mu.clone() });
    }
    Ok(jacobi_c_all(lam, c, alpha)?.remove(mu).unwrap_or_else(Q::zero))
}

pub fn jacobi_c_all(lam: &Partition, c: &Q, alpha: &Alpha) -> Result<BTreeMap<Partition, Q>> {
    c_recursion::<Q>(lam, Some(c), alpha)
}

/// c_{λ/μ} as a rational function of C.
pub fn jacobi_c_symbolic(lam: &Partition, mu: &Partition, alpha: &Alpha) -> Result<RatFunc> {
    if !lam.contains(mu) {
        return Err(Error::Containment { lambda: lam.clone(), mu: mu.clone() });
    }
    Ok(c_recursion::<RatFunc>(lam, None, alpha)?.remove(mu).unwrap_or_else(|| RatFunc::constant(Q::zero())))
}

/// Σ over standard tableaux T of shape λ/μ of ∏_i binom(λ^{(i−1)}, λ^{(i)}) / (iC + 2ρ(λ/λ^{(i)})).
pub fn jacobi_c_tableau(lam: &Partition, mu: &Partition, c: &Q, alpha: &Alpha) -> Result<Q> {
    if !lam.contains(mu) {
        return Err(Error::Containment { lambda: lam.clone(), mu: mu.clone() });
    }
    fn walk(lam: &Partition, cur: &Partition, mu: &Partition, step: usize, acc: Q, c: &Q, alpha: &Alpha) -> Result<Q> {
        if cur == mu {
            return Ok(acc);
        }
        let mut s = Q::zero();
        for ch in cur.children() {
            if !ch.contains(mu) {
                continue;
            }
            let den = q(step as i64) * c + q(2) * rho_skew(lam, &ch, alpha)?;
            if den.is_zero() {
                return Err(Error::Pole(format!("tableau denominator vanishes at ({lam},{ch})")));
            }
            s += walk(lam, &ch, mu, step + 1, &acc * binom(cur, &ch, alpha)? / den, c, alpha)?;
        }
        Ok(s)
    }
    walk(lam, lam, mu, 1, q(1), c, alpha)
}

/// G^{(a,b)}_λ = Σ_μ (−1)^{|μ|} (A)_λ/(A)_μ c_{λ/μ}(C) Ω_μ with A = a+p, C = a+b+2p.
pub fn jacobi(lam: &Partition, a: &Q, b: &Q, alpha: &Alpha, n: usize) -> Result<OmegaExpansion> {
    check_length(lam, n)?;
    let p = alpha.p(n);
    let big_a = a + &p;
    let big_c = a + b + q(2) * &p;
    let top = gen_pochhammer(&big_a, lam, alpha);
    let cs = jacobi_c_all(lam, &big_c, alpha)?;
    let mut out = OmegaExpansion::new(Basis::Omega, alpha, n);
    for (mu, c) in cs {
        let sign = if mu.size() % 2 == 0 { q(1) } else { q(-1) };
        let den = nonzero_pochhammer(&big_a, &mu, alpha, "a+p")?;
        out.push(mu, sign * &top / den * c);
    }
    Ok(out)
}

/// Coefficients a_{λπ} of H_λ/2^{|λ|} = Σ a_{λπ} Ω_π, from the second-order recurrence with a_{λλ} = 1.
pub fn hermite_coeffs(lam: &Partition, alpha: &Alpha) -> Result<BTreeMap<Partition, Q>> {
    let mut subs = lam.subpartitions();
    subs.sort_by_key(|m| std::cmp::Reverse(m.size()));
    let mut a: BTreeMap<Partition, Q> = BTreeMap::new();
    for pi in subs {
        if &pi == lam {
            a.insert(pi, q(1));
            continue;
        }
        let mut s = Q::zero();
        for nu in pi.parents(usize::MAX) {
            if !lam.contains(&nu) {
                continue;
            }
            let b_np = binom(&nu, &pi, alpha)?;
            let r_np = rho_skew(&nu, &pi, alpha)?;
            for mu in nu.parents(usize::MAX) {
                if let Some(am) = a.get(&mu) {
                    if !am.is_zero() {
                        s += am * binom(&mu, &nu, alpha)? * &b_np * (rho_skew(&mu, &nu, alpha)? - &r_np);
                    }
                }
            }
        }
        let d = q(-2 * (lam.size() - pi.size()) as i64);
        a.insert(pi, s / d);
    }
    a.retain(|_, v| !v.is_zero());
    Ok(a)
}

/// H_λ = 2^{|λ|} Σ a_{λπ} Ω_π.
pub fn hermite(lam: &Partition, alpha: &Alpha, n: usize) -> Result<OmegaExpansion> {
    check_length(lam, n)?;
    alpha.value()?;
    let two = qpow(&q(2), lam.size() as i64);
    let mut out = OmegaExpansion::new(Basis::Omega, alpha, n);
    for (pi, c) in hermite_coeffs(lam, alpha)? {
        out.push(pi, c * &two);
    }
    Ok(out)
}

/// c_n 2^{|λ|} / (α^{|λ|} J*_λ(1_n)) with c_n = π^{n/2} / 2^{kn(n−1)/2}.
pub fn hermite_norm(lam: &Partition, alpha: &Alpha, n: usize) -> Result<f64> {
    let nf = n as f64;
    let cn = std::f64::consts::PI.powf(nf / 2.0) / 2f64.powf(alpha.k_f64() * nf * (nf - 1.0) / 2.0);
    let js = to_f64(&jstar_at_ones(lam, alpha, n)?);
    Ok(cn * 2f64.powi(lam.size() as i32) / (alpha.to_f64().powi(lam.size() as i32) * js))
}

/// A_a(x) = Γ_n(a+p)^{−1} ₀F₁(a+p; −x).
pub fn bessel(a: &Q, x: &[f64], alpha: &Alpha, tr: &Truncation) -> Result<f64> {
    let n = x.len();
    let ap = a + alpha.p(n);
    let g = gamma_n(to_f64(&ap), alpha, n)?;
    let neg: Vec<f64> = x.iter().map(|v| -v).collect();
    Ok(pfq(&HyperParams::new(vec![], vec![ap], alpha.clone()), &neg, tr)?.value / g)
}

/// A_a(x, y) = Γ_n(a+p)^{−1} ₀F₁(a+p; −x, y).
pub fn bessel_two(a: &Q, x: &[f64], y: &[f64], alpha: &Alpha, tr: &Truncation) -> Result<f64> {
    let n = x.len();
    let ap = a + alpha.p(n);
    let g = gamma_n(to_f64(&ap), alpha, n)?;
    let neg: Vec<f64> = x.iter().map(|v| -v).collect();
    Ok(pfq_two(&HyperParams::new(vec![], vec![ap], alpha.clone()), &neg, y, tr)?.value / g)
}

/// Coefficient of J_{μ′}(x; 1/α) on each side of the Jacobi duality, with n′ = −n/α kept formal.
pub fn jacobi_duality_formal(lam: &Partition, a: &Q, b: &Q, alpha: &Alpha, n: usize) -> Result<Vec<(Partition, Q, Q)>> {
    let al = alpha.value()?;
    let dual = alpha.dual()?;
    let p = alpha.p(n);
    let (big_a, big_c) = (a + &p, a + b + q(2) * &p);
    let (a2, c2) = (-&al * &big_a, -&al * &big_c);
    let cs = jacobi_c_all(lam, &big_c, alpha)?;
    let cs_dual = jacobi_c_all(&lam.conjugate(), &c2, &dual)?;
    let nq = q(n as i64);
    let mut rows = Vec::new();
    for (mu, c) in cs {
        let sign = if mu.size() % 2 == 0 { q(1) } else { q(-1) };
        let lhs = sign * gen_pochhammer(&big_a, lam, alpha) / gen_pochhammer(&big_a, &mu, alpha) * c / gen_pochhammer(&(&nq / &al), &mu, alpha);
        let mc = mu.conjugate();
        let rhs = gen_pochhammer(&a2, &lam.conjugate(), &dual) / gen_pochhammer(&a2, &mc, &dual) * cs_dual[&mc].clone() / gen_pochhammer(&-nq.clone(), &mc, &dual)
            * qpow(&al, mu.size() as i64);
        rows.push((mu, lhs, rhs));
    }
    Ok(rows)
}

/// Classical one-variable references used as oracles.
pub mod classical {
    use super::*;

    /// Generalized Laguerre L_r^{(a)}(x) via the explicit sum.
    pub fn laguerre(r: usize, a: f64, x: f64) -> f64 {
        (0..=r)
            .map(|s| {
                let binom: f64 = (0..r - s).map(|t| (a + s as f64 + 1.0 + t as f64) / (t as f64 + 1.0)).product();
                let sign = if s % 2 == 0 { 1.0 } else { -1.0 };
                sign * binom * x.powi(s as i32) / (1..=s).map(|t| t as f64).product::<f64>()
            })
            .sum()
    }

    /// Physicists' Hermite H_r(x) by three-term recurrence.
    pub fn hermite(r: usize, x: f64) -> f64 {
        let (mut h0, mut h1) = (1.0, 2.0 * x);
        if r == 0 {
            return h0;
        }
        for m in 1..r {
            let h2 = 2.0 * x * h1 - 2.0 * m as f64 * h0;
            h0 = h1;
            h1 = h2;
        }
        h1
    }

    /// Jacobi polynomial on [0,1] ∝ ₂F₁(−r, r+a+b+1; a+1; x), leading coefficient normalized to 1.
    pub fn jacobi_monic(r: usize, a: f64, b: f64, x: f64) -> f64 {
        let mut coefs = vec![0.0; r + 1];
        let mut t = 1.0;
        for s in 0..=r {
            coefs[s] = t;
            let sf = s as f64;
            t *= (sf - r as f64) * (sf + r as f64 + a + b + 1.0) / ((sf + a + 1.0) * (sf + 1.0));
        }
        let lead = coefs[r];
        coefs.iter().enumerate().map(|(s, c)| c / lead * x.powi(s as i32)).sum()
    }

    pub fn factorial_f64(r: usize) -> f64 {
        crate::rational::to_f64(&Q::from_integer(factorial(r)))
    }
}

/// Cached Ω-basis monomial expansions keyed by (μ, α, n).
pub fn omega_monomials(parts: &[Partition], alpha: &Alpha, n: usize) -> Result<HashMap<Partition, MonomialExpansion>> {
    parts.iter().map(|mu| Ok((mu.clone(), jack(mu, alpha, n, Norm::Omega)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qr;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn laguerre_degree_one() {
        let al = Alpha::ratio(3, 2);
        let a = qr(1, 3);
        let n = 2;
        let l = laguerre(&p(&[1]), &a, &al, n).unwrap().to_monomial().unwrap();
        let ap = &a + al.p(n);
        let k = al.k();
        let mut want = MonomialExpansion::zero(n);
        want.add_term(Partition::empty(), &ap * q(n as i64) * &k);
        want.add_term(p(&[1]), -k);
        assert_eq!(l, want);
    }

    #[test]
    fn laguerre_forms_agree() {
        let al = Alpha::int(2);
        let a = qr(1, 2);
        for lam in [p(&[2]), p(&[1, 1]), p(&[2, 1])] {
            let j = laguerre(&lam, &a, &al, 3).unwrap().to_basis(Basis::Omega).unwrap();
            let o = laguerre_omega(&lam, &a, &al, 3).unwrap().scale(&jstar_at_ones(&lam, &al, 3).unwrap());
            assert_eq!(j, o);
        }
    }

    #[test]
    fn c_special_case() {
        let al = Alpha::ratio(5, 2);
        let c = qr(7, 3);
        for r in 0..5usize {
            for s in 0..=r {
                let mut want = Q::from_integer(crate::partition::binomial(r, r - s));
                for i in 1..=(r - s) {
                    want /= &c + q((r + s + i) as i64 - 2);
                }
                assert_eq!(jacobi_c(&Partition::row(r), &Partition::row(s), &c, &al).unwrap(), want);
            }
        }
    }

    #[test]
    fn symbolic_c_matches_numeric() {
        let al = Alpha::int(3);
        let lam = p(&[2, 1]);
        for mu in lam.subpartitions() {
            let f = jacobi_c_symbolic(&lam, &mu, &al).unwrap();
            for c in [qr(5, 7), q(4)] {
                assert_eq!(f.eval(&c).unwrap(), jacobi_c(&lam, &mu, &c, &al).unwrap());
            }
        }
        let f = jacobi_c_symbolic(&p(&[1]), &Partition::empty(), &al).unwrap();
        assert_eq!(f.to_string(), "(1) / (C)");
    }

    #[test]
    fn hermite_one_variable() {
        let al = Alpha::int(2);
        for r in 0..6 {
            let h = hermite(&Partition::row(r), &al, 1).unwrap();
            let x = 0.37;
            assert!((h.eval(&[x]).unwrap() - classical::hermite(r, x)).abs() < 1e-10);
        }
    }

    #[test]
    fn bessel_cosh() {
        // Γ(1/2)·A_{-1/2}(−x²) = ₀F₁(½; x²) = cosh 2x at n = 1
        let x: f64 = 0.4;
        let tr = Truncation { max_degree: 30, n: 1 };
        let v = bessel(&qr(-1, 2), &[-x * x], &Alpha::int(2), &tr).unwrap() * std::f64::consts::PI.sqrt();
        assert!((v - (2.0 * x).cosh()).abs() < 1e-13);
    }
}
