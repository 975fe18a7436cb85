//! Jack polynomials in every normalization used here, skew elements,
//! generalized binomial coefficients, principal specialization and the
//! formal-degree probe.
//!
//! The exact path orthogonalizes the monomial basis of the full ring Λ
//! (any order refining dominance gives the same P_λ) and projects to n
//! variables. The recurrence path works directly in n variables and is
//! generic over the scalar type; it is what float evaluation uses.

use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;
use std::sync::Arc;

use num::Zero;
use once_cell::sync::Lazy;
use parking_lot::RwLock;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{factorial, hook_products, partitions, pochhammer, Alpha, Partition};
use crate::poly::NVarPoly;
use crate::rational::{fmt_q, parse_q, q, qpow, Scalar, Q};
use crate::symfun::{dense_to_p, inner_product, transition, MonomialExpansion, PowerSumElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Norm {
    P,
    Q,
    J,
    Jstar,
    C,
    Omega,
}

impl std::str::FromStr for Norm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "p" => Norm::P,
            "q" => Norm::Q,
            "j" => Norm::J,
            "jstar" | "j*" => Norm::Jstar,
            "c" => Norm::C,
            "omega" => Norm::Omega,
            _ => return Err(Error::Parse(format!("unknown normalization {s:?}"))),
        })
    }
}

/// P_λ for every λ ⊢ d, in both the monomial and the power-sum basis of Λ.
#[derive(Debug)]
pub struct JackTable {
    pub degree: usize,
    pub parts: Vec<Partition>,
    pub mono: Vec<Vec<Q>>,
    pub power: Vec<Vec<Q>>,
}

#[derive(Serialize, Deserialize)]
struct StoredTable {
    degree: usize,
    mono: Vec<Vec<String>>,
    power: Vec<Vec<String>>,
}

static TABLES: Lazy<RwLock<HashMap<(usize, Alpha), Arc<JackTable>>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Directory for persisted exact tables, if any.
pub const CACHE_ENV: &str = "MHYPERG_CACHE_DIR";

fn cache_path(d: usize, alpha: &Alpha) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_ENV)?;
    let tag = alpha.to_string().replace('/', "_");
    Some(PathBuf::from(dir).join(format!("jack_d{d}_a{tag}.json")))
}

fn load_cached(d: usize, alpha: &Alpha) -> Option<JackTable> {
    let text = std::fs::read_to_string(cache_path(d, alpha)?).ok()?;
    let st: StoredTable = serde_json::from_str(&text).ok()?;
    let conv = |rows: Vec<Vec<String>>| -> Option<Vec<Vec<Q>>> {
        rows.into_iter().map(|r| r.iter().map(|s| parse_q(s).ok()).collect()).collect()
    };
    Some(JackTable { degree: d, parts: transition(d).parts.clone(), mono: conv(st.mono)?, power: conv(st.power)? })
}

fn store_cached(t: &JackTable, alpha: &Alpha) {
    if let Some(path) = cache_path(t.degree, alpha) {
        let conv = |rows: &Vec<Vec<Q>>| rows.iter().map(|r| r.iter().map(fmt_q).collect()).collect();
        let st = StoredTable { degree: t.degree, mono: conv(&t.mono), power: conv(&t.power) };
        if let Ok(s) = serde_json::to_string(&st) {
            let _ = std::fs::create_dir_all(path.parent().unwrap());
            let _ = std::fs::write(path, s);
        }
    }
}

/// Gram–Schmidt over the monomial basis of Λ_d.
fn gram_schmidt(d: usize, alpha: &Alpha) -> JackTable {
    let t = transition(d);
    let nn = t.parts.len();
    let parts = t.parts.clone();
    if !alpha.is_finite() {
        let mono = (0..nn).map(|i| (0..nn).map(|j| if i == j { q(1) } else { Q::zero() }).collect()).collect();
        return JackTable { degree: d, parts, mono, power: t.m_to_p.clone() };
    }
    let a = alpha.value().unwrap();
    let w: Vec<Q> = parts.iter().map(|r| Q::from_integer(r.z()) * qpow(&a, r.len() as i64)).collect();
    let dot = |u: &[Q], v: &[Q]| -> Q {
        let mut s = Q::zero();
        for i in 0..nn {
            if !u[i].is_zero() && !v[i].is_zero() {
                s += &u[i] * &v[i] * &w[i];
            }
        }
        s
    };
    let mut mono: Vec<Vec<Q>> = vec![Vec::new(); nn];
    let mut power: Vec<Vec<Q>> = vec![Vec::new(); nn];
    let mut norms = vec![Q::zero(); nn];
    // lexicographically increasing: (1^d) first
    for i in (0..nn).rev() {
        let mut m = vec![Q::zero(); nn];
        m[i] = q(1);
        let mut p = t.m_to_p[i].clone();
        for j in (i + 1..nn).rev() {
            if !parts[i].dominates(&parts[j]) {
                continue;
            }
            let c = dot(&t.m_to_p[i], &power[j]) / &norms[j];
            if c.is_zero() {
                continue;
            }
            for s in 0..nn {
                if !mono[j][s].is_zero() {
                    m[s] -= &c * &mono[j][s];
                }
                if !power[j][s].is_zero() {
                    p[s] -= &c * &power[j][s];
                }
            }
        }
        norms[i] = dot(&p, &p);
        mono[i] = m;
        power[i] = p;
    }
    JackTable { degree: d, parts, mono, power }
}

pub fn jack_table(d: usize, alpha: &Alpha) -> Arc<JackTable> {
    let key = (d, alpha.clone());
    if let Some(t) = TABLES.read().get(&key) {
        return t.clone();
    }
    let table = match load_cached(d, alpha) {
        Some(t) => t,
        None => {
            let t = gram_schmidt(d, alpha);
            store_cached(&t, alpha);
            t
        }
    };
    let t = Arc::new(table);
    TABLES.write().entry(key).or_insert(t).clone()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JackMethod {
    GramSchmidt,
    Recurrence,
}

/// P_λ in n variables; zero when ℓ(λ) > n.
pub fn jack_p(lam: &Partition, alpha: &Alpha, n: usize) -> MonomialExpansion {
    jack_p_with(lam, alpha, n, JackMethod::GramSchmidt)
}

pub fn jack_p_with(lam: &Partition, alpha: &Alpha, n: usize, method: JackMethod) -> MonomialExpansion {
    if lam.len() > n {
        return MonomialExpansion::zero(n);
    }
    match method {
        JackMethod::GramSchmidt => {
            let t = jack_table(lam.size(), alpha);
            let i = transition(lam.size()).index[lam];
            let mut f = MonomialExpansion::zero(n);
            for (j, c) in t.mono[i].iter().enumerate() {
                f.add_term(t.parts[j].clone(), c.clone());
            }
            f
        }
        JackMethod::Recurrence => {
            let coeffs = jack_recurrence::<Q>(lam, &alpha.k(), n);
            MonomialExpansion::from_map(coeffs.into_iter().collect(), n)
        }
    }
}

/// P_λ as an element of Λ in the power-sum basis.
pub fn jack_p_power(lam: &Partition, alpha: &Alpha) -> PowerSumElement {
    let t = jack_table(lam.size(), alpha);
    let i = transition(lam.size()).index[lam];
    dense_to_p(lam.size(), &t.power[i])
}

fn pad(mu: &Partition, n: usize) -> Vec<usize> {
    (1..=n).map(|i| mu.part(i)).collect()
}

fn rho2<S: Scalar>(kappa: &[usize], k: &S) -> S {
    let mut s = S::nil();
    for (i, &ki) in kappa.iter().enumerate() {
        let ki_s = S::from_i64(ki as i64);
        s = s + ki_s.clone() * (S::from_i64(ki as i64 - 1) - S::from_i64(2 * i as i64) * k.clone());
    }
    s
}

/// Monomial coefficients of P_λ in n variables from the Laplace–Beltrami
/// eigen-equation: (ρ₂(λ) − ρ₂(μ)) c_μ = 2k Σ_{i<j} Σ_{t=1}^{μ_j} (μ_i − μ_j + 2t) c_ν
/// with ν = sort(μ + t e_i − t e_j).
pub fn jack_recurrence<S: Scalar>(lam: &Partition, k: &S, n: usize) -> Vec<(Partition, S)> {
    if lam.len() > n {
        return Vec::new();
    }
    let cands: Vec<Partition> = partitions(lam.size(), n).into_iter().filter(|m| lam.dominates(m)).collect();
    if k.vanishes() {
        return vec![(lam.clone(), S::unit())];
    }
    let mut known: HashMap<Vec<usize>, S> = HashMap::new();
    let top = rho2(&pad(lam, n), k);
    let mut out = Vec::with_capacity(cands.len());
    for mu in cands {
        let v = pad(&mu, n);
        let c = if mu == *lam {
            S::unit()
        } else {
            let mut rhs = S::nil();
            for i in 0..n {
                for j in i + 1..n {
                    for t in 1..=v[j] {
                        let mut nu = v.clone();
                        nu[i] += t;
                        nu[j] -= t;
                        nu.sort_unstable_by(|a, b| b.cmp(a));
                        if let Some(cn) = known.get(&nu) {
                            let f = S::from_i64(v[i] as i64 - v[j] as i64 + 2 * t as i64);
                            rhs = rhs + f * cn.clone();
                        }
                    }
                }
            }
            if rhs.vanishes() {
                S::nil()
            } else {
                S::from_i64(2) * k.clone() * rhs / (top.clone() - rho2(&v, k))
            }
        };
        if !c.vanishes() {
            known.insert(v, c.clone());
            out.push((mu, c));
        }
    }
    out
}

/// ∏_{s∈λ}(X + α a′(s) − l′(s)) = ε_X(J_λ).
pub fn principal_spec(lam: &Partition, alpha: &Alpha, x: &Q) -> Result<Q> {
    let a = alpha.value()?;
    Ok(lam.boxes().map(|(i, j)| x + &a * q(j as i64 - 1) - q(i as i64 - 1)).product())
}

/// J*_λ(1_n) = ε_n(J_λ)/(h h′).
pub fn jstar_at_ones(lam: &Partition, alpha: &Alpha, n: usize) -> Result<Q> {
    let (h, hp) = hook_products(lam, alpha)?;
    Ok(principal_spec(lam, alpha, &q(n as i64))? / (h * hp))
}

/// The scalar s with (normalization of λ) = s · P_λ.
pub fn norm_scalar(lam: &Partition, alpha: &Alpha, n: usize, norm: Norm) -> Result<Q> {
    if let (Alpha::Infinite, Norm::P) = (alpha, norm) {
        return Ok(q(1));
    }
    if let (Alpha::Infinite, Norm::Omega) = (alpha, norm) {
        // Ω_λ = m_λ / m_λ(1_n)
        if lam.len() > n {
            return Err(Error::Parameter(format!("{lam} has more than {n} parts")));
        }
        let count = factorial(n) / (factorial(n - lam.len()) * lam.stabilizer());
        return Ok(Q::from_integer(count).recip());
    }
    let (h, hp) = hook_products(lam, alpha)?;
    let a = alpha.value()?;
    Ok(match norm {
        Norm::P => q(1),
        Norm::Q => h / hp,
        Norm::J => h,
        Norm::Jstar => hp.recip(),
        Norm::C => qpow(&a, lam.size() as i64) * Q::from_integer(factorial(lam.size())) / hp,
        Norm::Omega => {
            if lam.len() > n {
                return Err(Error::Parameter(format!("Omega of {lam} needs at least {} variables", lam.len())));
            }
            h / principal_spec(lam, alpha, &q(n as i64))?
        }
    })
}

pub fn jack(lam: &Partition, alpha: &Alpha, n: usize, norm: Norm) -> Result<MonomialExpansion> {
    let s = norm_scalar(lam, alpha, n, norm)?;
    Ok(jack_p(lam, alpha, n).scale(&s))
}

/// Rescale an expansion of λ from one normalization to another.
pub fn convert(f: &MonomialExpansion, lam: &Partition, from: Norm, to: Norm, alpha: &Alpha, n: usize) -> Result<MonomialExpansion> {
    let s = norm_scalar(lam, alpha, n, to)? / norm_scalar(lam, alpha, n, from)?;
    Ok(f.scale(&s))
}

/// A normalization of λ as an element of Λ; Ω uses n through J_λ(1_n).
pub fn jack_power(lam: &Partition, alpha: &Alpha, n: usize, norm: Norm) -> Result<PowerSumElement> {
    let s = norm_scalar(lam, alpha, n, norm)?;
    Ok(jack_p_power(lam, alpha).scale(&s))
}

/// J_{λ/μ} = Σ_ν ⟨J_λ, J*_μ J*_ν⟩ J_ν (J* is dual to J).
pub fn skew_jack(lam: &Partition, mu: &Partition, alpha: &Alpha) -> Result<PowerSumElement> {
    if !lam.contains(mu) {
        return Ok(PowerSumElement::zero());
    }
    let jl = jack_power(lam, alpha, 0, Norm::J)?;
    let jm = jack_power(mu, alpha, 0, Norm::Jstar)?;
    let mut out = PowerSumElement::zero();
    for nu in partitions(lam.size() - mu.size(), usize::MAX) {
        let jn = jack_power(&nu, alpha, 0, Norm::Jstar)?;
        let c = inner_product(&jl, &jm.mul(&jn), alpha)?;
        if !c.is_zero() {
            out = out.add(&jack_power(&nu, alpha, 0, Norm::J)?.scale(&c));
        }
    }
    Ok(out)
}

static BINOMS: Lazy<RwLock<HashMap<(Partition, Partition, Alpha), Q>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Generalized binomial coefficient: the p₁^{|λ−μ|} coefficient of J_{λ/μ}.
pub fn binom(lam: &Partition, mu: &Partition, alpha: &Alpha) -> Result<Q> {
    if !lam.contains(mu) {
        return Ok(Q::zero());
    }
    if lam == mu {
        return Ok(q(1));
    }
    let key = (lam.clone(), mu.clone(), alpha.clone());
    if let Some(v) = BINOMS.read().get(&key) {
        return Ok(v.clone());
    }
    // coefficient of p₁^r in J_{λ/μ} is ⟨J_{λ/μ}, p₁^r⟩ / (r! α^r)
    let r = lam.size() - mu.size();
    let a = alpha.value()?;
    let jl = jack_power(lam, alpha, 0, Norm::J)?;
    let jm = jack_power(mu, alpha, 0, Norm::Jstar)?;
    let p1r = PowerSumElement::p(1).pow(r);
    let v = inner_product(&jl, &jm.mul(&p1r), alpha)? / (Q::from_integer(factorial(r)) * qpow(&a, r as i64));
    BINOMS.write().insert(key, v.clone());
    Ok(v)
}

/// (1/r!) Σ over saturated chains λ ⊃ … ⊃ μ of the product of one-step binomials.
pub fn binom_chain(lam: &Partition, mu: &Partition, alpha: &Alpha) -> Result<Q> {
    if !lam.contains(mu) {
        return Ok(Q::zero());
    }
    let r = lam.size() - mu.size();
    fn walk(cur: &Partition, mu: &Partition, alpha: &Alpha, memo: &mut HashMap<Partition, Q>) -> Result<Q> {
        if cur == mu {
            return Ok(q(1));
        }
        if let Some(v) = memo.get(cur) {
            return Ok(v.clone());
        }
        let mut s = Q::zero();
        for ch in cur.children() {
            if ch.contains(mu) {
                s += binom(cur, &ch, alpha)? * walk(&ch, mu, alpha, memo)?;
            }
        }
        memo.insert(cur.clone(), s.clone());
        Ok(s)
    }
    Ok(walk(lam, mu, alpha, &mut HashMap::new())? / Q::from_integer(factorial(r)))
}

/// f(x₁+1, …, x_n+1) re-collected in the monomial basis.
pub fn shift_by_one(f: &MonomialExpansion) -> Result<MonomialExpansion> {
    NVarPoly::from_monomial(f).shift_by_one().to_monomial()
}

/// Residual of Ω_λ(1+x) − Σ_μ binom(λ,μ) Ω_μ(x).
pub fn shift_identity_residual(lam: &Partition, alpha: &Alpha, n: usize) -> Result<MonomialExpansion> {
    let lhs = shift_by_one(&jack(lam, alpha, n, Norm::Omega)?)?;
    let mut rhs = MonomialExpansion::zero(n);
    for mu in lam.subpartitions() {
        if mu.len() <= n {
            rhs = rhs.add(&jack(&mu, alpha, n, Norm::Omega)?.scale(&binom(lam, &mu, alpha)?));
        }
    }
    Ok(lhs.sub(&rhs))
}

#[derive(Clone, Debug, Serialize)]
pub struct FormalDegree {
    /// ∏_{i≠j} (ξ_i − ξ_j)_k / (kδ_i − kδ_j)_k, available for integer k.
    pub product_form: Option<String>,
    /// ε_n(P_λ) ε_{n−1+α}(Q_λ).
    pub eps_form: String,
    pub equal: Option<bool>,
}

fn rising(x: &Q, m: u64) -> Q {
    (0..m).map(|t| x + q(t as i64)).product()
}

pub fn formal_degree(lam: &Partition, alpha: &Alpha, n: usize) -> Result<FormalDegree> {
    let a = alpha.value()?;
    let k = a.recip();
    let (h, hp) = hook_products(lam, alpha)?;
    let eps_p = principal_spec(lam, alpha, &q(n as i64))? / &h;
    let eps_q = principal_spec(lam, alpha, &(q(n as i64 - 1) + &a))? / &hp;
    let eps = eps_p * eps_q;
    let product = if k.is_integer() && lam.len() <= n {
        let km = k.to_integer().try_into().unwrap_or(0u64);
        let xi: Vec<Q> = (1..=n).map(|i| q(lam.part(i) as i64) + &k * q((n - i) as i64)).collect();
        let kd: Vec<Q> = (1..=n).map(|i| &k * q((n - i) as i64)).collect();
        let mut v = q(1);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    v *= rising(&(&xi[i] - &xi[j]), km) / rising(&(&kd[i] - &kd[j]), km);
                }
            }
        }
        Some(v)
    } else {
        None
    };
    Ok(FormalDegree {
        equal: product.as_ref().map(|v| *v == eps),
        product_form: product.as_ref().map(fmt_q),
        eps_form: fmt_q(&eps),
    })
}

/// Float monomial tables of P_λ for every λ with ℓ ≤ n and |λ| ≤ D.
#[derive(Debug)]
pub struct FloatJackTable {
    pub n: usize,
    pub max_degree: usize,
    pub k: f64,
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// rows[λ] = [(μ index, coefficient)]
    pub rows: Vec<Vec<(usize, f64)>>,
    /// distinct exponent vectors of each m_μ
    perms: Vec<Vec<Vec<usize>>>,
}

static FLOAT_TABLES: Lazy<RwLock<HashMap<(Alpha, usize, usize), Arc<FloatJackTable>>>> = Lazy::new(|| RwLock::new(HashMap::new()));

pub fn float_table(alpha: &Alpha, n: usize, max_degree: usize) -> Arc<FloatJackTable> {
    let key = (alpha.clone(), n, max_degree);
    if let Some(t) = FLOAT_TABLES.read().get(&key) {
        return t.clone();
    }
    use rayon::prelude::*;
    let k = alpha.k_f64();
    let parts = crate::partition::partitions_upto(max_degree, n);
    let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let rows = parts
        .par_iter()
        .map(|lam| jack_recurrence::<f64>(lam, &k, n).into_iter().map(|(mu, c)| (index[&mu], c)).collect())
        .collect();
    let perms = parts.iter().map(|mu| crate::symfun::distinct_permutations(mu, n)).collect();
    let t = Arc::new(FloatJackTable { n, max_degree, k, parts, index, rows, perms });
    FLOAT_TABLES.write().entry(key).or_insert(t).clone()
}

impl FloatJackTable {
    /// m_μ(x) for every μ in the table.
    pub fn monomials_at(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n);
        let pow: Vec<Vec<f64>> = x
            .iter()
            .map(|&xi| {
                let mut v = Vec::with_capacity(self.max_degree + 1);
                let mut acc = 1.0;
                for _ in 0..=self.max_degree {
                    v.push(acc);
                    acc *= xi;
                }
                v
            })
            .collect();
        self.perms
            .iter()
            .map(|ps| ps.iter().map(|e| e.iter().enumerate().map(|(i, &k)| pow[i][k]).product::<f64>()).sum())
            .collect()
    }

    /// P_λ(x) for every λ, given precomputed monomial values.
    pub fn p_values(&self, mono: &[f64]) -> Vec<f64> {
        self.rows.iter().map(|row| row.iter().map(|&(j, c)| c * mono[j]).sum()).collect()
    }

    /// α^{|λ|}/h′_λ, the factor taking P_λ to α^{|λ|} J*_λ.
    pub fn jstar_weight(&self, i: usize) -> f64 {
        crate::partition::jstar_weight(&self.parts[i], &self.k)
    }
}

/// Exact n-variable rational evaluation helper: J*_λ(x) α^{|λ|}.
pub fn scaled_jstar_eval(lam: &Partition, alpha: &Alpha, x: &[Q]) -> Q {
    let w = crate::partition::jstar_weight(lam, &alpha.k());
    jack_p(lam, alpha, x.len()).eval_q(x) * w
}

/// C_λ completeness in n variables: Σ_{λ⊢m} C_λ as a monomial expansion.
pub fn c_sum(m: usize, alpha: &Alpha, n: usize) -> Result<MonomialExpansion> {
    let mut s = MonomialExpansion::zero(n);
    for lam in partitions(m, n) {
        s = s.add(&jack(&lam, alpha, n, Norm::C)?);
    }
    Ok(s)
}

/// The constant in P_λ(1_n) = ε_n(J_λ)/h_λ, for the generalized Pochhammer form α^{|λ|}(kX)_λ.
pub fn principal_spec_pochhammer(lam: &Partition, alpha: &Alpha, x: &Q) -> Result<Q> {
    let a = alpha.value()?;
    let k = a.recip();
    Ok(qpow(&a, lam.size() as i64) * pochhammer(&(&k * x), lam, &k))
}

pub fn coefficient_table(d: usize, alpha: &Alpha) -> BTreeMap<String, BTreeMap<String, String>> {
    let t = jack_table(d, alpha);
    let mut out = BTreeMap::new();
    for (i, lam) in t.parts.iter().enumerate() {
        let mut row = BTreeMap::new();
        for (j, c) in t.mono[i].iter().enumerate() {
            if !c.is_zero() {
                row.insert(serde_json::to_string(&t.parts[j]).unwrap(), fmt_q(c));
            }
        }
        out.insert(serde_json::to_string(lam).unwrap(), row);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qr;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_jacks() {
        let a = Alpha::ratio(7, 3);
        assert_eq!(jack_p(&p(&[1]), &a, 3).coeffs().len(), 1);
        let p11 = jack_p(&p(&[1, 1]), &a, 3);
        assert_eq!(p11.coeffs().len(), 1);
        let p2 = jack_p(&p(&[2]), &a, 2);
        assert_eq!(p2.coeff(&p(&[2])), q(1));
        assert_eq!(p2.coeff(&p(&[1, 1])), q(2) / (qr(7, 3) + q(1)));
        assert!(jack_p(&p(&[1, 1, 1]), &a, 2).is_zero());
        assert_eq!(jack_p(&p(&[2, 1]), &Alpha::Infinite, 3).coeffs().len(), 1);
    }

    #[test]
    fn recurrence_matches_gram_schmidt() {
        for a in [Alpha::int(1), Alpha::int(2), Alpha::ratio(1, 2), Alpha::ratio(5, 2)] {
            for d in 0..=6 {
                for lam in partitions(d, d) {
                    for n in [2, 3, d.max(1)] {
                        assert_eq!(jack_p_with(&lam, &a, n, JackMethod::Recurrence), jack_p(&lam, &a, n), "{lam} {a} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn j1_is_p1() {
        let a = Alpha::int(3);
        assert_eq!(jack_power(&p(&[1]), &a, 1, Norm::J).unwrap(), PowerSumElement::p(1));
    }

    #[test]
    fn principal_spec_examples() {
        let x = qr(11, 3);
        assert_eq!(principal_spec(&p(&[1]), &Alpha::int(5), &x).unwrap(), x);
        assert_eq!(principal_spec(&p(&[2]), &Alpha::int(2), &x).unwrap(), &x * (&x + q(2)));
        let a = Alpha::ratio(3, 4);
        for lam in partitions(4, 4) {
            assert_eq!(principal_spec(&lam, &a, &x).unwrap(), principal_spec_pochhammer(&lam, &a, &x).unwrap());
        }
    }

    #[test]
    fn binomial_examples() {
        let a = Alpha::ratio(3, 2);
        assert_eq!(binom(&p(&[2, 1]), &p(&[2, 1]), &a).unwrap(), q(1));
        assert_eq!(binom(&p(&[2]), &p(&[1]), &a).unwrap(), q(2));
        assert_eq!(binom(&p(&[1, 1]), &p(&[1]), &a).unwrap(), q(2));
        assert_eq!(binom(&p(&[3]), &p(&[2]), &a).unwrap(), q(3));
        assert_eq!(binom(&p(&[1]), &p(&[2]), &a).unwrap(), q(0));
        // via the explicit skew element
        let e = skew_jack(&p(&[2]), &p(&[1]), &a).unwrap().eps_delta();
        assert_eq!(e, q(2));
    }

    #[test]
    fn formal_degree_small() {
        let fd = formal_degree(&p(&[]), &Alpha::int(1), 2).unwrap();
        assert_eq!(fd.eps_form, "1");
        assert_eq!(formal_degree(&p(&[1]), &Alpha::int(1), 2).unwrap().equal, Some(true));
        assert_eq!(formal_degree(&p(&[2, 1]), &Alpha::ratio(1, 2), 3).unwrap().equal, Some(true));
        assert_eq!(formal_degree(&p(&[2, 1]), &Alpha::int(2), 3).unwrap().equal, None);
    }

    #[test]
    fn float_table_agrees() {
        let a = Alpha::ratio(5, 2);
        let t = float_table(&a, 3, 6);
        for (i, lam) in t.parts.iter().enumerate() {
            let exact = jack_p(lam, &a, 3);
            for &(j, c) in &t.rows[i] {
                let e = crate::rational::to_f64(&exact.coeff(&t.parts[j]));
                assert!((c - e).abs() <= 1e-12 * e.abs().max(1.0));
            }
        }
    }
}
