//! Truncated hypergeometric series of one and two matrix arguments.
//!
//! Arguments are eigenvalue vectors. Numeric sums run degree-major with a
//! compensated sum inside each degree; the reported tail is the magnitude of
//! the top layer, which is a heuristic and not a bound.

use std::collections::BTreeMap;

use num::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::jack::{float_table, jack_p, jack_p_power, principal_spec};
use crate::partition::{hook_products, jstar_weight, partitions, pochhammer, Alpha, Partition};
use crate::rational::{fmt_q, q, to_f64, KahanSum, Q};
use crate::symfun::{p_to_m, MonomialExpansion, PowerSumElement};

#[derive(Clone, Debug, PartialEq)]
pub struct HyperParams {
    pub upper: Vec<Q>,
    pub lower: Vec<Q>,
    pub alpha: Alpha,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Truncation {
    pub max_degree: usize,
    pub n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SeriesValue {
    pub value: f64,
    /// |degree-D layer|; heuristic
    pub tail: f64,
    pub degrees_used: usize,
}

/// Boxes (i, j) at which some parameter's Pochhammer factor vanishes.
fn zero_boxes(params: &[Q], k: &Q, n: usize, d: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n.min(d) {
        for j in 1..=d / i {
            let shifted = q(j as i64 - 1) - k * q(i as i64 - 1);
            if params.iter().any(|a| (a + &shifted).is_zero()) {
                out.push((i, j));
            }
        }
    }
    out
}

fn covers(lam: &Partition, (i, j): (usize, usize)) -> bool {
    lam.part(i) >= j
}

impl HyperParams {
    pub fn new(upper: Vec<Q>, lower: Vec<Q>, alpha: Alpha) -> Self {
        Self { upper, lower, alpha }
    }

    pub fn label(&self) -> String {
        let j = |v: &[Q]| v.iter().map(fmt_q).collect::<Vec<_>>().join(",");
        format!("{}F{}([{}];[{}];alpha={})", self.upper.len(), self.lower.len(), j(&self.upper), j(&self.lower), self.alpha)
    }

    /// Rejects lower parameters whose Pochhammer symbol vanishes on a
    /// reachable λ where the upper product does not.
    pub fn check_poles(&self, d: usize, n: usize) -> Result<()> {
        let k = self.alpha.k();
        let up = zero_boxes(&self.upper, &k, n, d);
        for (i, j) in zero_boxes(&self.lower, &k, n, d) {
            let killed = up.iter().any(|&(a, b)| a <= i && b <= j);
            if !killed {
                return Err(Error::Pole(format!("lower parameter vanishes at box ({i},{j}) in {}", self.label())));
            }
        }
        Ok(())
    }

    fn upper_vanishes(&self, lam: &Partition, up_zeros: &[(usize, usize)]) -> bool {
        up_zeros.iter().any(|&b| covers(lam, b))
    }

    /// (a̲)_λ/(b̲)_λ exactly; zero whenever the numerator vanishes.
    pub fn coef_q(&self, lam: &Partition) -> Result<Q> {
        let k = self.alpha.k();
        let num: Q = self.upper.iter().map(|a| pochhammer(a, lam, &k)).product();
        if num.is_zero() {
            return Ok(Q::zero());
        }
        let den: Q = self.lower.iter().map(|b| pochhammer(b, lam, &k)).product();
        if den.is_zero() {
            return Err(Error::Pole(format!("(b)_λ = 0 at λ = {lam} in {}", self.label())));
        }
        Ok(num / den)
    }

    fn float_coefs(&self, parts: &[Partition], d: usize, n: usize) -> Vec<f64> {
        let kq = self.alpha.k();
        let up_zeros = zero_boxes(&self.upper, &kq, n, d);
        let k = to_f64(&kq);
        let up: Vec<f64> = self.upper.iter().map(to_f64).collect();
        let lo: Vec<f64> = self.lower.iter().map(to_f64).collect();
        parts
            .iter()
            .map(|lam| {
                if self.upper_vanishes(lam, &up_zeros) {
                    return 0.0;
                }
                let num: f64 = up.iter().map(|a| pochhammer(a, lam, &k)).product();
                let den: f64 = lo.iter().map(|b| pochhammer(b, lam, &k)).product();
                num / den
            })
            .collect()
    }
}

fn finish(layers: &[KahanSum], d: usize, what: &str) -> Result<SeriesValue> {
    let mut total = KahanSum::default();
    for l in layers {
        total.add(l.value());
    }
    let value = total.value();
    let tail = layers.last().map(|l| l.value().abs()).unwrap_or(0.0);
    if !value.is_finite() || !tail.is_finite() {
        return Err(Error::Overflow(what.to_string()));
    }
    Ok(SeriesValue { value, tail, degrees_used: d })
}

/// Σ_{ℓ(λ)≤n, |λ|≤D} (a̲)_λ/(b̲)_λ α^{|λ|} J*_λ(x).
pub fn pfq(params: &HyperParams, x: &[f64], tr: &Truncation) -> Result<SeriesValue> {
    let layers = pfq_layer_sums(params, x, tr)?;
    finish(&layers, tr.max_degree, &params.label())
}

/// The degree-d layers of `pfq`, d = 0..=D.
pub fn pfq_layers(params: &HyperParams, x: &[f64], tr: &Truncation) -> Result<Vec<f64>> {
    Ok(pfq_layer_sums(params, x, tr)?.iter().map(|l| l.value()).collect())
}

fn pfq_layer_sums(params: &HyperParams, x: &[f64], tr: &Truncation) -> Result<Vec<KahanSum>> {
    let n = x.len();
    let d = tr.max_degree;
    params.check_poles(d, n)?;
    let table = float_table(&params.alpha, n, d);
    let pv = table.p_values(&table.monomials_at(x));
    let coefs = params.float_coefs(&table.parts, d, n);
    let mut layers = vec![KahanSum::default(); d + 1];
    for (i, lam) in table.parts.iter().enumerate() {
        if coefs[i] != 0.0 {
            layers[lam.size()].add(coefs[i] * table.jstar_weight(i) * pv[i]);
        }
    }
    Ok(layers)
}

/// Σ (a̲)_λ/(b̲)_λ α^{|λ|} J*_λ(x) J*_λ(y) / J*_λ(1_n).
pub fn pfq_two(params: &HyperParams, x: &[f64], y: &[f64], tr: &Truncation) -> Result<SeriesValue> {
    let n = x.len();
    if y.len() != n {
        return Err(Error::Parameter("x and y must have the same length".into()));
    }
    let d = tr.max_degree;
    params.check_poles(d, n)?;
    let table = float_table(&params.alpha, n, d);
    let px = table.p_values(&table.monomials_at(x));
    let py = table.p_values(&table.monomials_at(y));
    let p1 = table.p_values(&table.monomials_at(&vec![1.0; n]));
    let coefs = params.float_coefs(&table.parts, d, n);
    let mut layers = vec![KahanSum::default(); d + 1];
    for (i, lam) in table.parts.iter().enumerate() {
        if coefs[i] != 0.0 {
            layers[lam.size()].add(coefs[i] * table.jstar_weight(i) * px[i] * (py[i] / p1[i]));
        }
    }
    finish(&layers, d, &params.label())
}

/// e(x, y) = ₀F₀(x, y).
pub fn exp_kernel(x: &[f64], y: &[f64], alpha: &Alpha, tr: &Truncation) -> Result<SeriesValue> {
    pfq_two(&HyperParams::new(vec![], vec![], alpha.clone()), x, y, tr)
}

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut v = p.clone();
            v.insert(pos, n - 1);
            out.push(v);
        }
    }
    out
}

/// e(x, y; ∞) = (1/n!) Σ_ω exp⟨x, ωy⟩.
pub fn exp_kernel_infinite(x: &[f64], y: &[f64]) -> f64 {
    let perms = all_permutations(x.len());
    let s: f64 = perms.iter().map(|w| x.iter().zip(w).map(|(xi, &j)| xi * y[j]).sum::<f64>().exp()).sum();
    s / perms.len() as f64
}

fn det(mut a: Vec<Vec<f64>>) -> f64 {
    let n = a.len();
    let mut d = 1.0;
    for c in 0..n {
        let piv = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs())).unwrap();
        if a[piv][c] == 0.0 {
            return 0.0;
        }
        if piv != c {
            a.swap(piv, c);
            d = -d;
        }
        d *= a[c][c];
        for r in c + 1..n {
            let f = a[r][c] / a[c][c];
            for t in c..n {
                a[r][t] -= f * a[c][t];
            }
        }
    }
    d
}

/// External oracle at α = 1: ∏_{j<n} j! · det[e^{x_i y_j}] / (Δ(x) Δ(y)).
pub fn exp_kernel_alpha_one(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len();
    let m: Vec<Vec<f64>> = x.iter().map(|xi| y.iter().map(|yj| (xi * yj).exp()).collect()).collect();
    let vander = |v: &[f64]| -> f64 {
        let mut p = 1.0;
        for i in 0..n {
            for j in i + 1..n {
                p *= v[i] - v[j];
            }
        }
        p
    };
    let c: f64 = (1..n).map(|j| (1..=j).map(|t| t as f64).product::<f64>()).product();
    c * det(m) / (vander(x) * vander(y))
}

/// The exact graded series Σ_d [Σ_{|λ|=d} (a̲)_λ/(b̲)_λ α^{|λ|} J*_λ] in n variables.
pub fn pfq_formal(params: &HyperParams, d: usize, n: usize) -> Result<Vec<MonomialExpansion>> {
    params.check_poles(d, n)?;
    let k = params.alpha.k();
    let mut layers = Vec::with_capacity(d + 1);
    for m in 0..=d {
        let mut layer = MonomialExpansion::zero(n);
        for lam in partitions(m, n) {
            let c = params.coef_q(&lam)?;
            if !c.is_zero() {
                layer = layer.add(&jack_p(&lam, &params.alpha, n).scale(&(c * jstar_weight(&lam, &k))));
            }
        }
        layers.push(layer);
    }
    Ok(layers)
}

/// The same series as an element of Λ (all lengths), truncated at degree d.
pub fn pfq_formal_power(params: &HyperParams, d: usize) -> Result<PowerSumElement> {
    params.check_poles(d, d.max(1))?;
    let k = params.alpha.k();
    let mut out = PowerSumElement::zero().with_cap(d);
    for m in 0..=d {
        for lam in partitions(m, m) {
            let c = params.coef_q(&lam)?;
            if !c.is_zero() {
                out = out.add(&jack_p_power(&lam, &params.alpha).scale(&(c * jstar_weight(&lam, &k))));
            }
        }
    }
    Ok(out)
}

/// Σ c_{λμ} p_λ(x) p_μ(y).
#[derive(Clone, Debug, Default, PartialEq)]
pub struct BiSeries {
    terms: BTreeMap<(Partition, Partition), Q>,
}

impl BiSeries {
    pub fn add_product(&mut self, f: &PowerSumElement, g: &PowerSumElement, c: &Q) {
        for (a, ca) in f.coeffs() {
            for (b, cb) in g.coeffs() {
                let key = (a.clone(), b.clone());
                let e = self.terms.entry(key.clone()).or_insert_with(Q::zero);
                *e += ca * cb * c;
                if e.is_zero() {
                    self.terms.remove(&key);
                }
            }
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, v) in &o.terms {
            let e = r.terms.entry(k.clone()).or_insert_with(Q::zero);
            *e -= v;
            if e.is_zero() {
                r.terms.remove(k);
            }
        }
        r
    }

    /// Restrict to x-degree ≤ dx and y-degree ≤ dy.
    pub fn truncate(&self, dx: usize, dy: usize) -> Self {
        Self { terms: self.terms.iter().filter(|((a, b), _)| a.size() <= dx && b.size() <= dy).map(|(k, v)| (k.clone(), v.clone())).collect() }
    }

    /// Apply a linear map to the x factor.
    pub fn map_x(&self, f: impl Fn(&PowerSumElement) -> PowerSumElement) -> Self {
        let mut r = Self::default();
        for ((a, b), c) in &self.terms {
            r.add_product(&f(&PowerSumElement::term(a.clone(), q(1))), &PowerSumElement::term(b.clone(), q(1)), c);
        }
        r
    }

    /// Multiply the y factor by g.
    pub fn mul_y(&self, g: &PowerSumElement) -> Self {
        let mut r = Self::default();
        for ((a, b), c) in &self.terms {
            r.add_product(&PowerSumElement::term(a.clone(), q(1)), &PowerSumElement::term(b.clone(), q(1)).mul(g), c);
        }
        r
    }

    /// Image in m(x)⊗m(y) with both factors in n variables.
    pub fn project(&self, n: usize) -> BTreeMap<(Partition, Partition), Q> {
        let mut out: BTreeMap<(Partition, Partition), Q> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            let ma = p_to_m(&PowerSumElement::term(a.clone(), q(1)), n);
            let mb = p_to_m(&PowerSumElement::term(b.clone(), q(1)), n);
            for (u, cu) in ma.coeffs() {
                for (v, cv) in mb.coeffs() {
                    let key = (u.clone(), v.clone());
                    let e = out.entry(key.clone()).or_insert_with(Q::zero);
                    *e += c * cu * cv;
                    if e.is_zero() {
                        out.remove(&key);
                    }
                }
            }
        }
        out
    }
}

/// α^{|λ|} J*_λ(x) J*_λ(y) / J*_λ(1_n) = w_λ P_λ(x) P_λ(y) / P_λ(1_n) in p⊗p.
pub fn two_arg_term(lam: &Partition, alpha: &Alpha, n: usize) -> Result<(PowerSumElement, Q)> {
    let (h, _) = hook_products(lam, alpha)?;
    let p_at_one = principal_spec(lam, alpha, &q(n as i64))? / h;
    let w = jstar_weight(lam, &alpha.k());
    Ok((jack_p_power(lam, alpha), w / p_at_one))
}

/// The two-argument series as an exact bi-graded element through degree d (ℓ(λ) ≤ n).
pub fn pfq_two_formal(params: &HyperParams, d: usize, n: usize) -> Result<BiSeries> {
    params.check_poles(d, n)?;
    let mut out = BiSeries::default();
    for m in 0..=d {
        for lam in partitions(m, n) {
            let c = params.coef_q(&lam)?;
            if c.is_zero() {
                continue;
            }
            let (p, s) = two_arg_term(&lam, &params.alpha, n)?;
            out.add_product(&p, &p, &(c * s));
        }
    }
    Ok(out)
}

/// A two-argument series with y fixed, collapsed to x ↦ Σ_μ γ_μ m_μ(x).
#[derive(Debug, Clone)]
pub struct FixedKernel {
    table: std::sync::Arc<crate::jack::FloatJackTable>,
    gamma: Vec<f64>,
    top: usize,
}

impl FixedKernel {
    pub fn new(params: &HyperParams, y: &[f64], tr: &Truncation) -> Result<Self> {
        let n = y.len();
        let d = tr.max_degree;
        params.check_poles(d, n)?;
        let table = float_table(&params.alpha, n, d);
        let py = table.p_values(&table.monomials_at(y));
        let p1 = table.p_values(&table.monomials_at(&vec![1.0; n]));
        let coefs = params.float_coefs(&table.parts, d, n);
        let mut gamma = vec![0.0; table.parts.len()];
        for (i, row) in table.rows.iter().enumerate() {
            if coefs[i] == 0.0 {
                continue;
            }
            let s = coefs[i] * table.jstar_weight(i) * py[i] / p1[i];
            for &(j, c) in row {
                gamma[j] += s * c;
            }
        }
        Ok(Self { table, gamma, top: d })
    }

    /// (value, |degree-D layer|).
    pub fn eval(&self, x: &[f64]) -> (f64, f64) {
        let mono = self.table.monomials_at(x);
        let mut s = KahanSum::default();
        let mut tail = 0.0;
        for (j, mu) in self.table.parts.iter().enumerate() {
            let t = self.gamma[j] * mono[j];
            s.add(t);
            if mu.size() == self.top {
                tail += t;
            }
        }
        (s.value(), tail.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qr;

    #[test]
    fn poles_detected() {
        let al = Alpha::int(2);
        let bad = HyperParams::new(vec![q(1)], vec![q(-1)], al.clone());
        assert!(bad.check_poles(5, 2).is_err());
        // terminating numerator reaches zero first
        let ok = HyperParams::new(vec![q(-1)], vec![q(-3)], al.clone());
        assert!(ok.check_poles(8, 2).is_ok());
        let half = HyperParams::new(vec![q(1)], vec![qr(1, 2)], al);
        assert!(half.check_poles(8, 2).is_err());
    }

    #[test]
    fn exp_closed_form() {
        let x = [0.3, -0.2, 0.1];
        let v = pfq(&HyperParams::new(vec![], vec![], Alpha::ratio(3, 2)), &x, &Truncation { max_degree: 30, n: 3 }).unwrap();
        assert!((v.value - 0.2f64.exp()).abs() < 1e-13);
    }

    #[test]
    fn one_variable_gauss_series() {
        let (a, b, c, x) = (0.5, 1.5, 2.5, 0.3);
        let mut term = 1.0;
        let mut s = 1.0;
        for r in 0..40 {
            let r = r as f64;
            term *= (a + r) * (b + r) / ((c + r) * (r + 1.0)) * x;
            s += term;
        }
        for al in [Alpha::int(1), Alpha::int(3)] {
            let p = HyperParams::new(vec![qr(1, 2), qr(3, 2)], vec![qr(5, 2)], al);
            let v = pfq(&p, &[x], &Truncation { max_degree: 40, n: 1 }).unwrap();
            assert!((v.value - s).abs() < 1e-13);
        }
    }

    #[test]
    fn kernel_at_ones_reduces() {
        let p = HyperParams::new(vec![qr(1, 3)], vec![qr(7, 4)], Alpha::int(2));
        let tr = Truncation { max_degree: 12, n: 2 };
        let x = [0.2, -0.4];
        let one = pfq(&p, &x, &tr).unwrap();
        let two = pfq_two(&p, &x, &[1.0, 1.0], &tr).unwrap();
        assert_eq!(one.value, two.value);
    }

    #[test]
    fn alpha_one_oracle() {
        let x = [0.3, -0.1, 0.25];
        let y = [0.5, 0.2, -0.4];
        let s = exp_kernel(&x, &y, &Alpha::int(1), &Truncation { max_degree: 25, n: 3 }).unwrap();
        assert!((s.value - exp_kernel_alpha_one(&x, &y)).abs() < 1e-12);
        let inf = exp_kernel(&x, &y, &Alpha::Infinite, &Truncation { max_degree: 25, n: 3 }).unwrap();
        assert!((inf.value - exp_kernel_infinite(&x, &y)).abs() < 1e-12);
    }

    #[test]
    fn fixed_kernel_matches() {
        let p = HyperParams::new(vec![qr(1, 2)], vec![], Alpha::int(2));
        let tr = Truncation { max_degree: 20, n: 2 };
        let y = [0.3, 0.1];
        let fk = FixedKernel::new(&p, &y, &tr).unwrap();
        let x = [0.4, -0.2];
        let direct = pfq_two(&p, &x, &y, &tr).unwrap();
        assert!((fk.eval(&x).0 - direct.value).abs() < 1e-13);
    }
}
