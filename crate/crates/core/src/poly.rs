//! Sparse exact polynomials in a fixed number of variables.

use std::collections::BTreeMap;

use num::Zero;

use crate::error::{Error, Result};
use crate::partition::{binomial, Partition};
use crate::rational::{q, qpow, Q};
use crate::symfun::{distinct_permutations, MonomialExpansion};

pub type Exponent = Vec<u32>;

#[derive(Clone, Debug, PartialEq)]
pub struct NVarPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, Q>,
}

impl NVarPoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// x_i.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, q(1));
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|e| e.iter().sum::<u32>() as usize).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, e: Exponent, c: Q) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.entry(e.clone()).or_insert_with(Q::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), -c.clone());
        }
        r
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut r = Self::zero(self.nvars);
        if !c.is_zero() {
            for (e, v) in &self.terms {
                r.terms.insert(e.clone(), v * c);
            }
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let e: Exponent = a.iter().zip(b).map(|(x, y)| x + y).collect();
                r.add_term(e, ca * cb);
            }
        }
        r
    }

    /// ∂/∂x_i.
    pub fn deriv(&self, i: usize) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                r.add_term(f, c * q(e[i] as i64));
            }
        }
        r
    }

    /// x_i^r · f.
    pub fn mul_var_pow(&self, i: usize, r: u32) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = e.clone();
            f[i] += r;
            out.terms.insert(f, c.clone());
        }
        out
    }

    /// f(x_1+1, …, x_n+1).
    pub fn shift_by_one(&self) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut partial = vec![(vec![0u32; self.nvars], c.clone())];
            for (i, &ei) in e.iter().enumerate() {
                let mut next = Vec::new();
                for (f, v) in &partial {
                    for t in 0..=ei {
                        let mut g = f.clone();
                        g[i] = t;
                        next.push((g, v * Q::from_integer(binomial(ei as usize, t as usize))));
                    }
                }
                partial = next;
            }
            for (f, v) in partial {
                r.add_term(f, v);
            }
        }
        r
    }

    /// f(−x).
    pub fn negate_args(&self) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let d: u32 = e.iter().sum();
            r.terms.insert(e.clone(), if d % 2 == 0 { c.clone() } else { -c.clone() });
        }
        r
    }

    /// f(1 − x).
    pub fn reflect(&self) -> Self {
        self.shift_by_one().negate_args()
    }

    /// Exact quotient by (x_i − x_j); a nonzero remainder is an error.
    pub fn div_diff(&self, i: usize, j: usize) -> Result<Self> {
        let mut rem = self.terms.clone();
        let mut quo = Self::zero(self.nvars);
        loop {
            let Some((e, c)) = rem.iter().filter(|(e, _)| e[i] > 0).max_by_key(|(e, _)| e[i]).map(|(e, c)| (e.clone(), c.clone())) else {
                break;
            };
            let mut g = e.clone();
            g[i] -= 1;
            quo.add_term(g.clone(), c.clone());
            // subtract (x_i − x_j)·c·x^g
            rem.remove(&e);
            let mut h = g;
            h[j] += 1;
            let v = rem.entry(h.clone()).or_insert_with(Q::zero);
            *v += &c;
            if v.is_zero() {
                rem.remove(&h);
            }
        }
        if rem.is_empty() {
            Ok(quo)
        } else {
            Err(Error::NotSymmetric { i, j })
        }
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        let mut s = crate::rational::KahanSum::default();
        for (e, c) in &self.terms {
            s.add(crate::rational::to_f64(c) * e.iter().zip(x).map(|(&k, xi)| xi.powi(k as i32)).product::<f64>());
        }
        s.value()
    }

    pub fn eval_q(&self, x: &[Q]) -> Q {
        self.terms.iter().map(|(e, c)| c * e.iter().zip(x).map(|(&k, xi)| qpow(xi, k as i64)).product::<Q>()).sum()
    }

    pub fn from_monomial(f: &MonomialExpansion) -> Self {
        Self::from_monomial_block(f, f.nvars(), 0, f.nvars())
    }

    /// Embed a symmetric polynomial in variables `offset..offset+n` of a `total`-variable ring.
    pub fn from_monomial_block(f: &MonomialExpansion, total: usize, offset: usize, n: usize) -> Self {
        let mut r = Self::zero(total);
        for (mu, c) in f.coeffs() {
            for perm in distinct_permutations(mu, n) {
                let mut e = vec![0u32; total];
                for (t, &k) in perm.iter().enumerate() {
                    e[offset + t] = k as u32;
                }
                r.add_term(e, c.clone());
            }
        }
        r
    }

    /// Collect a symmetric polynomial back into the monomial basis.
    pub fn to_monomial(&self) -> Result<MonomialExpansion> {
        let mut out = MonomialExpansion::zero(self.nvars);
        for (e, c) in &self.terms {
            let mu = Partition::from_unsorted(e.iter().map(|&k| k as usize).collect());
            let mut sorted = e.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if *e == sorted {
                out.add_term(mu, c.clone());
            }
        }
        // symmetric iff re-expanding reproduces the input
        if NVarPoly::from_monomial(&out) != *self {
            return Err(Error::NotSymmetric { i: 0, j: 1 });
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_by_difference() {
        // (x0^2 - x1^2) / (x0 - x1) = x0 + x1
        let mut f = NVarPoly::zero(2);
        f.add_term(vec![2, 0], q(1));
        f.add_term(vec![0, 2], q(-1));
        let g = f.div_diff(0, 1).unwrap();
        assert_eq!(g, NVarPoly::var(2, 0).add(&NVarPoly::var(2, 1)));
        assert!(NVarPoly::var(2, 0).div_diff(0, 1).is_err());
    }

    #[test]
    fn shift_of_m1() {
        let m1 = MonomialExpansion::from_map([(Partition::row(1), q(1))].into(), 2);
        let s = NVarPoly::from_monomial(&m1).shift_by_one().to_monomial().unwrap();
        assert_eq!(s.coeff(&Partition::empty()), q(2));
        assert_eq!(s.coeff(&Partition::row(1)), q(1));
    }

    #[test]
    fn reflect_is_one_minus_x() {
        // x0^2 x1 at (1 - x) compared pointwise
        let mut f = NVarPoly::zero(2);
        f.add_term(vec![2, 1], q(3));
        f.add_term(vec![0, 0], q(-1));
        let r = f.reflect();
        let x = [0.3, -1.7];
        assert!((r.eval(&x) - f.eval(&[1.0 - x[0], 1.0 - x[1]])).abs() < 1e-12);
    }
}
