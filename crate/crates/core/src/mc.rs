//! β-ensemble Monte Carlo.
//!
//! Every check is a ratio ∫ f·w / ∫ w under one of three weights, sampled from the
//! product proposal (Beta, Gamma or Normal per coordinate) with |Δ|^{2k} as the
//! importance weight, so c′_n(α), Γ_n constants and proposal normalizations cancel.
//! Chunk i draws from ChaCha8 stream i of the seed and chunks are reduced in index
//! order, so results do not depend on the thread count.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Beta, Distribution, Gamma, Normal};
use rayon::prelude::*;
use serde::Serialize;

use crate::diffops::{apply, Ctx, OperatorExpr, Prim};
use crate::error::{Error, Result};
use crate::identities::Status;
use crate::jack::{jack, jack_power, Norm};
use crate::ortho::{hermite, jacobi, laguerre};
use crate::partition::{gen_pochhammer_f64, Alpha, Partition};
use crate::poly::NVarPoly;
use crate::rational::{to_f64, Q};
use crate::series::{exp_kernel, exp_kernel_infinite, pfq, FixedKernel, HyperParams, Truncation};
use crate::symfun::{monomial_eval, MonomialExpansion};

const CHUNK: usize = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum WeightFamily {
    /// ∏ x^{a−p}(1−x)^{b−p} on [0,1]^n
    Jacobi { a: f64, b: f64 },
    /// e^{−Σx} ∏ x^{a−p} on ℝ₊^n
    Laguerre { a: f64 },
    /// e^{−p₂(x)} on ℝ^n
    Hermite,
}

#[derive(Clone, Debug, Serialize)]
pub struct Weight {
    pub family: WeightFamily,
    pub n: usize,
    pub k: f64,
}

impl Weight {
    pub fn new(family: WeightFamily, alpha: &Alpha, n: usize) -> Result<Self> {
        let w = Self { family, n, k: alpha.k_f64() };
        w.validate()?;
        Ok(w)
    }

    pub fn p(&self) -> f64 {
        self.k * (self.n as f64 - 1.0) + 1.0
    }

    fn validate(&self) -> Result<()> {
        let p = self.p();
        let bad = |what: &str, v: f64| Error::Parameter(format!("weight not integrable: {what} - p + 1 = {} must be positive", v - p + 1.0));
        match self.family {
            WeightFamily::Jacobi { a, b } => {
                if a - p + 1.0 <= 0.0 {
                    return Err(bad("a", a));
                }
                if b - p + 1.0 <= 0.0 {
                    return Err(bad("b", b));
                }
            }
            WeightFamily::Laguerre { a } => {
                if a - p + 1.0 <= 0.0 {
                    return Err(bad("a", a));
                }
            }
            WeightFamily::Hermite => {}
        }
        if self.k < 0.0 {
            return Err(Error::Parameter("k must be nonnegative".into()));
        }
        Ok(())
    }

    fn proposal(&self) -> Proposal {
        let p = self.p();
        match self.family {
            WeightFamily::Jacobi { a, b } => Proposal::Beta(Beta::new(a - p + 1.0, b - p + 1.0).expect("validated")),
            WeightFamily::Laguerre { a } => Proposal::Gamma(Gamma::new(a - p + 1.0, 1.0).expect("validated")),
            WeightFamily::Hermite => Proposal::Normal(Normal::new(0.0, std::f64::consts::FRAC_1_SQRT_2).expect("finite")),
        }
    }
}

enum Proposal {
    Beta(Beta<f64>),
    Gamma(Gamma<f64>),
    Normal(Normal<f64>),
}

impl Proposal {
    fn draw(&self, rng: &mut ChaCha8Rng) -> f64 {
        match self {
            Proposal::Beta(d) => d.sample(rng),
            Proposal::Gamma(d) => d.sample(rng),
            Proposal::Normal(d) => d.sample(rng),
        }
    }
}

/// |Δ(x)|^{2k}.
pub fn vandermonde_weight(x: &[f64], k: f64) -> f64 {
    if k == 0.0 {
        return 1.0;
    }
    let mut v = 1.0;
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            v *= (x[i] - x[j]).abs();
        }
    }
    v.powf(2.0 * k)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct McEstimate {
    pub value: f64,
    pub stderr: f64,
    pub n_samples: usize,
    pub seed: u64,
}

#[derive(Clone, Default)]
struct Acc {
    sw: f64,
    sw2: f64,
    swf: Vec<f64>,
    sw2f: Vec<f64>,
    sw2f2: Vec<f64>,
    tail: f64,
}

impl Acc {
    fn new(m: usize) -> Self {
        Self { swf: vec![0.0; m], sw2f: vec![0.0; m], sw2f2: vec![0.0; m], ..Default::default() }
    }

    fn merge(&mut self, o: &Acc) {
        self.sw += o.sw;
        self.sw2 += o.sw2;
        self.tail += o.tail;
        for i in 0..self.swf.len() {
            self.swf[i] += o.swf[i];
            self.sw2f[i] += o.sw2f[i];
            self.sw2f2[i] += o.sw2f2[i];
        }
    }
}

/// What a numerator reports per sample: m values and a truncation-tail bound.
pub struct Eval<'a> {
    pub values: &'a mut [f64],
    pub tail: f64,
}

/// m ratio estimates sharing one sample stream, plus the weighted mean tail bound.
pub fn mc_ratio_multi<F>(w: &Weight, m: usize, f: F, samples: usize, seed: u64) -> Result<(Vec<McEstimate>, f64)>
where
    F: Fn(&[f64], &mut Eval) + Sync,
{
    w.validate()?;
    if samples == 0 {
        return Err(Error::Parameter("samples must be positive".into()));
    }
    let prop = w.proposal();
    let chunks = samples.div_ceil(CHUNK);
    let parts: Vec<Acc> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c as u64);
            let count = CHUNK.min(samples - c * CHUNK);
            let mut acc = Acc::new(m);
            let mut x = vec![0.0; w.n];
            let mut vals = vec![0.0; m];
            for _ in 0..count {
                for xi in x.iter_mut() {
                    *xi = prop.draw(&mut rng);
                }
                let wt = vandermonde_weight(&x, w.k);
                let mut ev = Eval { values: &mut vals, tail: 0.0 };
                f(&x, &mut ev);
                let tail = ev.tail;
                acc.sw += wt;
                acc.sw2 += wt * wt;
                acc.tail += wt * tail;
                for i in 0..m {
                    let v = vals[i];
                    acc.swf[i] += wt * v;
                    acc.sw2f[i] += wt * wt * v;
                    acc.sw2f2[i] += wt * wt * v * v;
                }
            }
            acc
        })
        .collect();
    let mut tot = Acc::new(m);
    for p in &parts {
        tot.merge(p);
    }
    if !(tot.sw > 0.0) || !tot.sw.is_finite() || tot.sw * tot.sw / tot.sw2 < 10.0 {
        return Err(Error::DegenerateWeights);
    }
    let est = (0..m)
        .map(|i| {
            let r = tot.swf[i] / tot.sw;
            // delta method: Σ w²(f − R)² / (Σ w)²
            let s = (tot.sw2f2[i] - 2.0 * r * tot.sw2f[i] + r * r * tot.sw2).max(0.0);
            McEstimate { value: r, stderr: s.sqrt() / tot.sw, n_samples: samples, seed }
        })
        .collect();
    Ok((est, tot.tail / tot.sw))
}

/// ∫ f·w / ∫ w.
pub fn mc_ratio(w: &Weight, f: impl Fn(&[f64]) -> f64 + Sync, samples: usize, seed: u64) -> Result<McEstimate> {
    let (mut e, _) = mc_ratio_multi(w, 1, |x, ev| ev.values[0] = f(x), samples, seed)?;
    Ok(e.remove(0))
}

#[derive(Clone, Debug, Serialize)]
pub struct McReport {
    pub check: String,
    pub params: String,
    pub estimate: f64,
    pub stderr: f64,
    pub target: f64,
    pub sigmas: f64,
    pub tail_allowance: f64,
    pub verdict: Status,
    pub n_samples: usize,
    pub seed: u64,
}

impl McReport {
    fn new(check: &str, params: String, e: &McEstimate, target: f64, tail: f64) -> Self {
        let dev = (e.value - target).abs();
        let sigmas = if e.stderr > 0.0 { (dev - tail).max(0.0) / e.stderr } else if dev <= tail { 0.0 } else { f64::INFINITY };
        let verdict = if dev <= 3.0 * e.stderr + tail { Status::Pass } else { Status::Fail };
        Self { check: check.into(), params, estimate: e.value, stderr: e.stderr, target, sigmas, tail_allowance: tail, verdict, n_samples: e.n_samples, seed: e.seed }
    }

    /// Re-label a pass/fail verdict as evidence (conjectural targets).
    pub fn as_evidence(mut self) -> Self {
        self.verdict = Status::Evidence;
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Status::Pass
    }
}

fn omega_eval(lam: &Partition, alpha: &Alpha, n: usize) -> Result<NVarPoly> {
    Ok(NVarPoly::from_monomial(&jack(lam, alpha, n, Norm::Omega)?))
}

fn tail_guard(tail: f64, e: &McEstimate) -> Result<()> {
    if tail > e.stderr.max(1e-12) {
        return Err(Error::Accuracy(format!("kernel truncation tail {tail:.2e} exceeds the statistical error {:.2e}; raise the degree bound or shrink the arguments", e.stderr)));
    }
    Ok(())
}

/// E_{Jacobi(a,b)}[Ω_λ] = (a)_λ/(a+b)_λ.
pub fn selberg_kadell(lam: &Partition, a: f64, b: f64, alpha: &Alpha, n: usize, samples: usize, seed: u64) -> Result<McReport> {
    let w = Weight::new(WeightFamily::Jacobi { a, b }, alpha, n)?;
    let om = omega_eval(lam, alpha, n)?;
    let e = mc_ratio(&w, |x| om.eval(x), samples, seed)?;
    let target = gen_pochhammer_f64(a, lam, alpha) / gen_pochhammer_f64(a + b, lam, alpha);
    Ok(McReport::new("selberg", format!("lambda={lam} a={a} b={b} alpha={alpha} n={n}"), &e, target, 0.0))
}

/// E_{Laguerre(a)}[Ω_λ] = (a)_λ.
pub fn laguerre_moment(lam: &Partition, a: f64, alpha: &Alpha, n: usize, samples: usize, seed: u64) -> Result<McReport> {
    let w = Weight::new(WeightFamily::Laguerre { a }, alpha, n)?;
    let om = omega_eval(lam, alpha, n)?;
    let e = mc_ratio(&w, |x| om.eval(x), samples, seed)?;
    Ok(McReport::new("laguerre-moment", format!("lambda={lam} a={a} alpha={alpha} n={n}"), &e, gen_pochhammer_f64(a, lam, alpha), 0.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HyperIntegral {
    /// ∫ e^{−tr x} ₚF_q(x,y)|x|^{a−p} ∝ ₚ₊₁F_q(a̲,a; b̲; y)
    Laguerre,
    /// ∫_{[0,1]} ₚF_q(x,y)|x|^{a−p}|1−x|^{b−a−p} ∝ ₚ₊₁F_{q+1}(a̲,a; b̲,b; y)
    Jacobi,
}

/// The Laguerre and Jacobi integral forms of pFq, as ratios; `b` is used only for the Jacobi form.
#[allow(clippy::too_many_arguments)]
pub fn hyper_integral(which: HyperIntegral, params: &HyperParams, a: &Q, b: &Q, y: &[f64], samples: usize, seed: u64, tr: &Truncation) -> Result<McReport> {
    let n = y.len();
    let alpha = &params.alpha;
    let (af, bf) = (to_f64(a), to_f64(b));
    let (family, target_params) = match which {
        HyperIntegral::Laguerre => {
            let mut up = params.upper.clone();
            up.push(a.clone());
            (WeightFamily::Laguerre { a: af }, HyperParams::new(up, params.lower.clone(), alpha.clone()))
        }
        HyperIntegral::Jacobi => {
            let mut up = params.upper.clone();
            up.push(a.clone());
            let mut lo = params.lower.clone();
            lo.push(b.clone());
            (WeightFamily::Jacobi { a: af, b: bf - af }, HyperParams::new(up, lo, alpha.clone()))
        }
    };
    let w = Weight::new(family, alpha, n)?;
    let ker = FixedKernel::new(params, y, tr)?;
    let (mut e, tail) = mc_ratio_multi(
        &w,
        1,
        |x, ev| {
            let (v, t) = ker.eval(x);
            ev.values[0] = v;
            ev.tail = t;
        },
        samples,
        seed,
    )?;
    let e = e.remove(0);
    let rhs = pfq(&target_params, y, tr)?;
    let allowance = tail + rhs.tail;
    tail_guard(allowance, &e)?;
    let name = match which {
        HyperIntegral::Laguerre => "hyper-integral-laguerre",
        HyperIntegral::Jacobi => "hyper-integral-jacobi",
    };
    Ok(McReport::new(name, format!("{} a={af} b={bf} y={y:?} alpha={alpha}", params.label()), &e, rhs.value, allowance))
}

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Laguerre { a: Q },
    Jacobi { a: Q, b: Q },
    Hermite,
}

/// ⟨F_λ, F_μ⟩ / ⟨1, 1⟩ under the family's own weight; diagonal targets where closed forms exist.
pub fn orthogonality(family: &Family, lam: &Partition, mu: &Partition, alpha: &Alpha, n: usize, samples: usize, seed: u64) -> Result<McReport> {
    let p = to_f64(&alpha.p(n));
    let (weight, fl, fm) = match family {
        Family::Laguerre { a } => (
            WeightFamily::Laguerre { a: to_f64(a) + p },
            laguerre(lam, a, alpha, n)?.to_poly()?,
            laguerre(mu, a, alpha, n)?.to_poly()?,
        ),
        Family::Jacobi { a, b } => (
            WeightFamily::Jacobi { a: to_f64(a) + p, b: to_f64(b) + p },
            jacobi(lam, a, b, alpha, n)?.to_poly()?,
            jacobi(mu, a, b, alpha, n)?.to_poly()?,
        ),
        Family::Hermite => (WeightFamily::Hermite, hermite(lam, alpha, n)?.to_poly()?, hermite(mu, alpha, n)?.to_poly()?),
    };
    let w = Weight::new(weight, alpha, n)?;
    let e = mc_ratio(&w, |x| fl.eval(x) * fm.eval(x), samples, seed)?;
    let js = to_f64(&crate::jack::jstar_at_ones(lam, alpha, n)?);
    let al = alpha.to_f64();
    let m = lam.size() as i32;
    let target = if lam != mu {
        Some(0.0)
    } else {
        match family {
            Family::Laguerre { a } => Some(al.powi(-m) * gen_pochhammer_f64(to_f64(a) + p, lam, alpha) * js),
            Family::Hermite => Some(2f64.powi(m) / (al.powi(m) * js)),
            Family::Jacobi { .. } => None,
        }
    };
    let label = match family {
        Family::Laguerre { a } => format!("laguerre a={}", to_f64(a)),
        Family::Jacobi { a, b } => format!("jacobi a={} b={}", to_f64(a), to_f64(b)),
        Family::Hermite => "hermite".into(),
    };
    let params = format!("{label} lambda={lam} mu={mu} alpha={alpha} n={n}");
    Ok(match target {
        Some(t) => McReport::new("orthogonality", params, &e, t, 0.0),
        // no closed-form Jacobi norm: reported only
        None => McReport::new("orthogonality", params, &e, f64::NAN, 0.0).as_evidence(),
    })
}

/// Laplace transform of |x|^{a−p}Ω_λ against Γ_n(a;λ)|y|^{−a}Ω_λ(y^{−1}), as a ratio to Γ_n(a).
/// e(−x,y) = e^{−tr x} e(x, 1−y) turns this into a Laguerre(a) expectation.
pub fn conj_c(lam: &Partition, a: f64, alpha: &Alpha, y: &[f64], samples: usize, seed: u64, tr: &Truncation) -> Result<McReport> {
    let n = y.len();
    if y.iter().any(|&v| v <= 0.5) {
        return Err(Error::Parameter("y entries must exceed 1/2 for finite variance".into()));
    }
    let w = Weight::new(WeightFamily::Laguerre { a }, alpha, n)?;
    let det: f64 = y.iter().product();
    let yinv: Vec<f64> = y.iter().map(|v| 1.0 / v).collect();
    let params = format!("lambda={lam} a={a} alpha={alpha} y={y:?}");
    let poch = gen_pochhammer_f64(a, lam, alpha);
    if !alpha.is_finite() {
        let m1 = monomial_eval(lam, &vec![1.0; n]);
        let e = mc_ratio(
            &w,
            |x| {
                let sx: f64 = x.iter().sum();
                let neg: Vec<f64> = x.iter().map(|v| -v).collect();
                exp_kernel_infinite(&neg, y) * sx.exp() * monomial_eval(lam, x) / m1
            },
            samples,
            seed,
        )?;
        let target = poch * det.powf(-a) * monomial_eval(lam, &yinv) / m1;
        return Ok(McReport::new("conjC", params, &e, target, 0.0));
    }
    let om = omega_eval(lam, alpha, n)?;
    let shifted: Vec<f64> = y.iter().map(|v| 1.0 - v).collect();
    let ker = FixedKernel::new(&HyperParams::new(vec![], vec![], alpha.clone()), &shifted, tr)?;
    let (mut e, tail) = mc_ratio_multi(
        &w,
        1,
        |x, ev| {
            let (v, t) = ker.eval(x);
            let o = om.eval(x);
            ev.values[0] = v * o;
            ev.tail = t * o.abs();
        },
        samples,
        seed,
    )?;
    let e = e.remove(0);
    tail_guard(tail, &e)?;
    let target = poch * det.powf(-a) * om.eval(&yinv);
    Ok(McReport::new("conjC", params, &e, target, tail))
}

/// The Hankel kernel identity times Γ_n(a+p): E_{Laguerre(a+p)}[e(x,1−y) ₀F₁(a+p;−x,z)] = |y|^{−a−p} e(−y^{−1}, z).
pub fn hankel_kernel(a: &Q, alpha: &Alpha, y: &[f64], z: &[f64], samples: usize, seed: u64, tr: &Truncation) -> Result<McReport> {
    let n = y.len();
    if y.iter().any(|&v| v <= 0.5) {
        return Err(Error::Parameter("y entries must exceed 1/2 for finite variance".into()));
    }
    let ap = a + alpha.p(n);
    let w = Weight::new(WeightFamily::Laguerre { a: to_f64(&ap) }, alpha, n)?;
    let shifted: Vec<f64> = y.iter().map(|v| 1.0 - v).collect();
    let ek = FixedKernel::new(&HyperParams::new(vec![], vec![], alpha.clone()), &shifted, tr)?;
    let bk = FixedKernel::new(&HyperParams::new(vec![], vec![ap.clone()], alpha.clone()), z, tr)?;
    let (mut e, tail) = mc_ratio_multi(
        &w,
        1,
        |x, ev| {
            let neg: Vec<f64> = x.iter().map(|v| -v).collect();
            let (v1, t1) = ek.eval(x);
            let (v2, t2) = bk.eval(&neg);
            ev.values[0] = v1 * v2;
            ev.tail = t1 * v2.abs() + t2 * v1.abs();
        },
        samples,
        seed,
    )?;
    let e = e.remove(0);
    let det: f64 = y.iter().product();
    let yinv: Vec<f64> = y.iter().map(|v| -1.0 / v).collect();
    let rhs = exp_kernel(&yinv, z, alpha, tr)?;
    let allowance = tail + rhs.tail;
    tail_guard(allowance, &e)?;
    let target = det.powf(-to_f64(&ap)) * rhs.value;
    Ok(McReport::new("hankel-kernel", format!("a={} alpha={alpha} y={y:?} z={z:?}", to_f64(a)), &e, target, allowance))
}

/// Hankel eigenrelation for f_λ(x) = e^{−tr x}L_λ(2x), times Γ_n(a+p):
/// E_{Laguerre(a+p)}[₀F₁(a+p;−x,y) L_λ(2x)] = (−1)^{|λ|} e^{−tr y} L_λ(2y).
pub fn hankel_eigen(lam: &Partition, a: &Q, alpha: &Alpha, y: &[f64], samples: usize, seed: u64, tr: &Truncation) -> Result<McReport> {
    let n = y.len();
    let ap = a + alpha.p(n);
    let w = Weight::new(WeightFamily::Laguerre { a: to_f64(&ap) }, alpha, n)?;
    let lag = laguerre(lam, a, alpha, n)?.to_poly()?;
    let bk = FixedKernel::new(&HyperParams::new(vec![], vec![ap.clone()], alpha.clone()), y, tr)?;
    let (mut e, tail) = mc_ratio_multi(
        &w,
        1,
        |x, ev| {
            let neg: Vec<f64> = x.iter().map(|v| -v).collect();
            let two: Vec<f64> = x.iter().map(|v| 2.0 * v).collect();
            let (v, t) = bk.eval(&neg);
            let l = lag.eval(&two);
            ev.values[0] = v * l;
            ev.tail = t * l.abs();
        },
        samples,
        seed,
    )?;
    let e = e.remove(0);
    tail_guard(tail, &e)?;
    let sign = if lam.size() % 2 == 0 { 1.0 } else { -1.0 };
    let two_y: Vec<f64> = y.iter().map(|v| 2.0 * v).collect();
    let target = sign * (-y.iter().sum::<f64>()).exp() * lag.eval(&two_y);
    Ok(McReport::new("hankel-eigen", format!("lambda={lam} a={} alpha={alpha} y={y:?}", to_f64(a)), &e, target, tail))
}

/// E_{Hermite}[Ω_λ] = (2α)^{−m}·[p₂^m]J_λ for |λ| = 2m, and 0 for odd |λ|.
pub fn hermite_even_moment(lam: &Partition, alpha: &Alpha, n: usize, samples: usize, seed: u64) -> Result<McReport> {
    let w = Weight::new(WeightFamily::Hermite, alpha, n)?;
    let om = omega_eval(lam, alpha, n)?;
    let e = mc_ratio(&w, |x| om.eval(x), samples, seed)?;
    let target = hermite_moment_target(lam, alpha)?;
    Ok(McReport::new("hermite-moment", format!("lambda={lam} alpha={alpha} n={n}"), &e, target, 0.0))
}

pub fn hermite_moment_target(lam: &Partition, alpha: &Alpha) -> Result<f64> {
    if lam.size() % 2 == 1 {
        return Ok(0.0);
    }
    let m = lam.size() / 2;
    let j = jack_power(lam, alpha, 1, Norm::J)?;
    let c = to_f64(&j.coeff(&Partition::new(vec![2; m])?));
    Ok(c * (2.0 * alpha.to_f64()).powi(-(m as i32)))
}

/// ⟨E f, g⟩ − ⟨f, E g⟩ for the Jacobi operator under |x|^a|1−x|^bΔ^{2k}.
pub fn self_adjointness(a: &Q, b: &Q, alpha: &Alpha, n: usize, f: &MonomialExpansion, g: &MonomialExpansion, samples: usize, seed: u64) -> Result<McReport> {
    let p = to_f64(&alpha.p(n));
    let w = Weight::new(WeightFamily::Jacobi { a: to_f64(a) + p, b: to_f64(b) + p }, alpha, n)?;
    let ctx = Ctx::new(alpha, n);
    let op = OperatorExpr::prim(Prim::Eab { a: a.clone(), b: b.clone() });
    let (fp, gp) = (NVarPoly::from_monomial(f), NVarPoly::from_monomial(g));
    let (ef, eg) = (apply(&op, &fp, &ctx)?, apply(&op, &gp, &ctx)?);
    let e = mc_ratio(&w, |x| ef.eval(x) * gp.eval(x) - fp.eval(x) * eg.eval(x), samples, seed)?;
    Ok(McReport::new("self-adjoint", format!("a={} b={} alpha={alpha} n={n}", to_f64(a), to_f64(b)), &e, 0.0, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qr;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn constant_numerator_is_one() {
        let w = Weight::new(WeightFamily::Laguerre { a: 3.0 }, &Alpha::int(2), 2).unwrap();
        let e = mc_ratio(&w, |_| 1.0, 50_000, 7).unwrap();
        assert_eq!(e.value, 1.0);
    }

    #[test]
    fn seeded_determinism() {
        let w = Weight::new(WeightFamily::Jacobi { a: 2.0, b: 3.0 }, &Alpha::int(1), 2).unwrap();
        let a = mc_ratio(&w, |x| x[0] + x[1], 40_000, 11).unwrap();
        let b = mc_ratio(&w, |x| x[0] + x[1], 40_000, 11).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn integrability_rejected() {
        assert!(Weight::new(WeightFamily::Laguerre { a: 0.5 }, &Alpha::int(1), 2).is_err());
    }

    #[test]
    fn beta_moments_one_variable() {
        // n=1: E[x^r] = (a)_r/(a+b)_r
        let r = selberg_kadell(&p(&[2]), 2.5, 1.5, &Alpha::int(2), 1, 100_000, 3).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn selberg_small() {
        let r = selberg_kadell(&p(&[1]), 2.0, 3.0, &Alpha::int(1), 2, 200_000, 5).unwrap();
        assert!((r.target - 0.4).abs() < 1e-12);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn hermite_moment_one_variable() {
        // n=1, λ=(2): E[x²] under e^{−x²} is 1/2
        assert!((hermite_moment_target(&p(&[2]), &Alpha::int(2)).unwrap() - 0.5).abs() < 1e-12);
        let r = hermite_even_moment(&p(&[2]), &Alpha::int(2), 1, 100_000, 9).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn conj_c_alpha_two() {
        let tr = Truncation { max_degree: 50, n: 2 };
        let r = conj_c(&p(&[1]), 3.0, &Alpha::int(2), &[1.0, 1.5], 100_000, 1, &tr).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn laguerre_orthogonal() {
        let a = qr(1, 2);
        let r = orthogonality(&Family::Laguerre { a: a.clone() }, &p(&[1]), &p(&[]), &Alpha::int(1), 2, 100_000, 2).unwrap();
        assert!(r.passed(), "{r:?}");
        let r = orthogonality(&Family::Laguerre { a }, &p(&[1]), &p(&[1]), &Alpha::int(1), 2, 100_000, 2).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}

