//! Named suites, machine-readable reports and fixture tables.
//!
//! A report is a header (the only non-reproducible part), the echoed config,
//! and rows in a fixed order. Checks run in parallel; rows are assembled in
//! submission order.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::diffops::{
    annihilation_check, commutator_identity, eigencheck, exp_p1_checks, jstar_sum_checks, kernel_row_check, laplace_consistency, laplace_eigenvalue,
    omega_lowering_checks, omega_poly, Ctx, KernelRow, NamedCheck, OperatorExpr, PhiKind, Prim,
};
use crate::error::{Error, Result};
use crate::identities::{identity_check, IdentityReport, Instance, Status};
use crate::jack::{binom, c_sum, formal_degree, jack, jack_p, principal_spec, shift_identity_residual, Norm};
use crate::mc::{
    conj_c, hankel_eigen, hankel_kernel, hermite_even_moment, hyper_integral, laguerre_moment, orthogonality, selberg_kadell, self_adjointness, Family,
    HyperIntegral, McReport,
};
use crate::ortho::{hermite, hermite_coeffs, jacobi, jacobi_c_all, jacobi_c_symbolic, jacobi_c_tableau, jacobi_duality_formal, laguerre, laguerre_omega, Basis};
use crate::partition::{partitions, partitions_upto, rho, Alpha, Partition};
use crate::rational::{fmt_q, q, qpow, qr, Q};
use crate::series::{HyperParams, Truncation};
use crate::symfun::{p_to_m, MonomialExpansion, PowerSumElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteName {
    ExactIdentities,
    Conjectures,
    McIntegrals,
    Ortho,
    Operators,
}

impl SuiteName {
    pub const ALL: [SuiteName; 5] = [SuiteName::ExactIdentities, SuiteName::Conjectures, SuiteName::McIntegrals, SuiteName::Ortho, SuiteName::Operators];

    pub fn as_str(&self) -> &'static str {
        match self {
            SuiteName::ExactIdentities => "exact-identities",
            SuiteName::Conjectures => "conjectures",
            SuiteName::McIntegrals => "mc-integrals",
            SuiteName::Ortho => "ortho",
            SuiteName::Operators => "operators",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown suite {s:?}; expected one of exact-identities, conjectures, mc-integrals, ortho, operators")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: SuiteName,
    pub alphas: Vec<Alpha>,
    pub ns: Vec<usize>,
    pub max_degree: usize,
    pub samples: usize,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl SuiteConfig {
    /// The default grid of each suite.
    pub fn new(suite: SuiteName) -> Self {
        let fin = |v: &[(i64, i64)]| v.iter().map(|&(a, b)| Alpha::ratio(a, b)).collect::<Vec<_>>();
        let (alphas, ns, max_degree) = match suite {
            SuiteName::ExactIdentities => (fin(&[(1, 2), (1, 1), (2, 1), (3, 1)]), vec![1, 2, 3], 6),
            SuiteName::Conjectures => (fin(&[(1, 2), (1, 1), (2, 1), (3, 1), (5, 2)]), vec![1, 2, 3], 5),
            SuiteName::McIntegrals => (vec![Alpha::int(1), Alpha::int(2), Alpha::Infinite], vec![2], 45),
            SuiteName::Ortho | SuiteName::Operators => (fin(&[(1, 2), (1, 1), (2, 1), (3, 1)]), vec![1, 2, 3], 4),
        };
        Self { suite, alphas, ns, max_degree, samples: 1_000_000, seed: 42, out: None, format: Format::Json }
    }

    pub fn validate(&self) -> Result<()> {
        if self.alphas.is_empty() || self.ns.is_empty() {
            return Err(Error::Parameter("empty parameter grid".into()));
        }
        if self.ns.contains(&0) {
            return Err(Error::Parameter("n must be at least 1".into()));
        }
        let mc = matches!(self.suite, SuiteName::McIntegrals | SuiteName::Conjectures);
        if mc && self.samples < 100 {
            return Err(Error::Parameter("at least 100 samples are needed".into()));
        }
        if self.suite != SuiteName::McIntegrals && self.alphas.iter().any(|a| !a.is_finite()) {
            return Err(Error::Parameter(format!("suite {} needs finite alpha", self.suite)));
        }
        if self.suite == SuiteName::McIntegrals && self.max_degree < 10 {
            return Err(Error::Parameter("kernel truncation needs max-degree >= 10".into()));
        }
        Ok(())
    }

    fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            suite: self.suite.as_str().into(),
            alphas: self.alphas.iter().map(|a| a.to_string()).collect(),
            ns: self.ns.clone(),
            max_degree: self.max_degree,
            samples: self.samples,
            seed: self.seed,
            format: self.format,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub suite: String,
    pub alphas: Vec<String>,
    pub ns: Vec<usize>,
    pub max_degree: usize,
    pub samples: usize,
    pub seed: u64,
    pub format: Format,
}

#[derive(Clone, Debug, Serialize)]
pub struct Header {
    pub tool: String,
    pub generated_unix_secs: u64,
}

impl Header {
    fn now() -> Self {
        let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        Self { tool: format!("mhyperg {}", env!("CARGO_PKG_VERSION")), generated_unix_secs: secs }
    }
}

/// One check. `holds` records the mathematical outcome; `status` is what gates
/// the exit code, and is "evidence" for conjectural rows whatever `holds` says.
#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub check: String,
    pub params: String,
    pub n: usize,
    pub residual: String,
    pub status: Status,
    pub holds: bool,
    pub detail: String,
}

impl Row {
    fn new(check: impl Into<String>, params: impl Into<String>, n: usize, residual: impl Into<String>, holds: bool, detail: impl Into<String>) -> Self {
        let status = if holds { Status::Pass } else { Status::Fail };
        Self { check: check.into(), params: params.into(), n, residual: residual.into(), status, holds, detail: detail.into() }
    }

    fn exact(check: impl Into<String>, params: impl Into<String>, n: usize, r: &Q, detail: impl Into<String>) -> Self {
        Self::new(check, params, n, fmt_q(r), r.is_zero(), detail)
    }

    fn error(check: impl Into<String>, params: impl Into<String>, n: usize, e: &Error) -> Self {
        Self::new(check, params, n, "", false, format!("error: {e}"))
    }

    fn evidence(mut self) -> Self {
        self.status = Status::Evidence;
        self
    }

    fn from_identity(r: IdentityReport) -> Self {
        let holds = r.status == Status::Pass;
        Self { check: r.name, params: r.instance, n: r.n, residual: r.max_residual.to_string(), status: r.status, holds, detail: r.detail }
    }

    fn from_named(c: NamedCheck, params: String, n: usize) -> Self {
        Self::new(c.name, params, n, if c.pass { "0" } else { "nonzero" }, c.pass, c.detail)
    }

    fn from_mc(r: McReport, n: usize) -> Self {
        let holds = (r.estimate - r.target).abs() <= 3.0 * r.stderr + r.tail_allowance;
        let detail = format!(
            "estimate={:.10e} stderr={:.3e} target={:.10e} tail={:.1e} samples={} seed={}",
            r.estimate, r.stderr, r.target, r.tail_allowance, r.n_samples, r.seed
        );
        let residual = if r.target.is_nan() { "n/a".to_string() } else { format!("{:.3}", r.sigmas) };
        Self { check: r.check, params: r.params, n, residual, status: r.verdict, holds: holds || r.target.is_nan(), detail }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub evidence: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub header: Header,
    pub config: ConfigEcho,
    pub summary: Summary,
    pub rows: Vec<Row>,
}

impl Report {
    /// 0 when no asserted row failed.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail == 0 {
            0
        } else {
            1
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => serde_json::to_string_pretty(self).map(|s| s + "\n").map_err(|e| Error::Io(e.to_string())),
            Format::Csv => {
                let cfg = serde_json::to_string(&self.config).map_err(|e| Error::Io(e.to_string()))?;
                let mut head = format!("# tool={}\n# generated_unix_secs={}\n# config={cfg}\n", self.header.tool, self.header.generated_unix_secs);
                head.push_str(&to_csv(&self.rows)?);
                Ok(head)
            }
        }
    }

    pub fn write(&self, path: &Path, format: Format) -> Result<()> {
        write_file(path, &self.render(format)?)
    }
}

fn to_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

fn write_file(path: &Path, body: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    }
    let mut f = std::fs::File::create(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    f.write_all(body.as_bytes()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

type Job = Box<dyn Fn() -> Vec<Row> + Send + Sync>;

fn job(f: impl Fn() -> Result<Vec<Row>> + Send + Sync + 'static, check: &'static str, params: String, n: usize) -> Job {
    Box::new(move || f().unwrap_or_else(|e| vec![Row::error(check, params.clone(), n, &e)]))
}

/// Run a suite; the report file is written when `cfg.out` is set.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Report> {
    cfg.validate()?;
    let jobs = match cfg.suite {
        SuiteName::ExactIdentities => exact_jobs(cfg),
        SuiteName::Ortho => ortho_jobs(cfg),
        SuiteName::Operators => operator_jobs(cfg),
        SuiteName::McIntegrals => mc_jobs(cfg),
        SuiteName::Conjectures => conjecture_jobs(cfg),
    };
    let rows: Vec<Row> = jobs.par_iter().map(|j| j()).collect::<Vec<_>>().into_iter().flatten().collect();
    let mut summary = Summary::default();
    for r in &rows {
        match r.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Evidence => summary.evidence += 1,
        }
    }
    let report = Report { header: Header::now(), config: cfg.echo(), summary, rows };
    if let Some(path) = &cfg.out {
        report.write(path, cfg.format)?;
    }
    Ok(report)
}

/// A generic rational with a prime denominator, reproducible from the suite seed.
fn generic_q(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Q {
    const DENS: [i64; 4] = [7, 11, 13, 17];
    let d = DENS[rng.random_range(0..DENS.len())];
    let mut v = qr(rng.random_range(lo * d..=hi * d), d);
    if v.denom().is_one() {
        v += qr(1, d);
    }
    v
}

fn seeded(cfg: &SuiteConfig, tag: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(cfg.seed);
    r.set_stream(tag);
    r
}

fn max_abs<'a>(it: impl Iterator<Item = &'a Q>) -> Q {
    it.map(|c| c.abs()).fold(Q::zero(), |a, b| if b > a { b } else { a })
}

// ---------------------------------------------------------------- exact identities

/// Σ_{λ⊢m} C_λ = p₁^m as n-variable polynomials, for every m ≤ d.
pub fn normalization_residual(alpha: &Alpha, n: usize, d: usize) -> Result<Q> {
    let mut worst = Q::zero();
    for m in 0..=d {
        let want = p_to_m(&PowerSumElement::p(1).pow(m), n);
        let got = c_sum(m, alpha, n)?;
        worst = worst.max(max_abs(got.sub(&want).coeffs().values()));
    }
    Ok(worst)
}

/// ε_n(J_λ) by the product formula against J_λ evaluated at 1_n, for ℓ(λ) ≤ n, |λ| ≤ d.
pub fn principal_spec_residual(alpha: &Alpha, n: usize, d: usize) -> Result<Q> {
    let ones = vec![q(1); n];
    let mut worst = Q::zero();
    for lam in partitions_upto(d, n) {
        let by_formula = principal_spec(&lam, alpha, &q(n as i64))?;
        let by_eval = jack(&lam, alpha, n, Norm::J)?.eval_q(&ones);
        worst = worst.max((by_formula - by_eval).abs());
    }
    Ok(worst)
}

fn exact_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    let d = cfg.max_degree;
    let mut rng = seeded(cfg, 1);
    for al in &cfg.alphas {
        for &n in &cfg.ns {
            let params = format!("alpha={al} D={d}");
            let a = al.clone();
            jobs.push(job(move || Ok(vec![Row::exact("normalization", format!("alpha={a} m<={d}"), n, &normalization_residual(&a, n, d)?, "sum of C_lambda over lambda |- m against p1^m")]), "normalization", params.clone(), n));
            let a = al.clone();
            jobs.push(job(move || Ok(vec![Row::exact("principal_spec", format!("alpha={a} |lambda|<={d}"), n, &principal_spec_residual(&a, n, d)?, "product formula against evaluation at 1_n")]), "principal_spec", params.clone(), n));

            let (a1, b1, c1) = (generic_q(&mut rng, 0, 3), generic_q(&mut rng, 0, 3), generic_q(&mut rng, 1, 4));
            let big_n = 1 + (rng.random_range(0..3u32) as i64);
            let instances: Vec<(&'static str, Instance, usize)> = vec![
                ("euler", Instance::new(vec![a1.clone(), b1.clone()], vec![c1.clone()], al.clone()), d),
                ("kummer", Instance::new(vec![a1.clone()], vec![c1.clone()], al.clone()), d),
                ("duality", Instance::new(vec![a1.clone(), b1.clone()], vec![c1.clone()], al.clone()), d),
                ("duality", Instance::new(vec![a1.clone()], vec![c1.clone()], al.clone()), d),
                ("kernel_deriv", Instance::new(vec![], vec![], al.clone()), d),
                ("laguerre_gen", Instance::new(vec![b1.clone()], vec![], al.clone()), d),
                ("saalschutz", Instance::new(vec![a1.clone(), b1.clone(), q(-big_n)], vec![c1.clone()], al.clone()), 0),
                ("gauss", Instance::new(vec![a1.clone(), q(-big_n)], vec![c1.clone()], al.clone()), 0),
            ];
            for (name, inst, dd) in instances {
                let p = format!("alpha={al}");
                jobs.push(job(move || Ok(vec![Row::from_identity(identity_check(name, &inst, dd, n)?)]), name, p, n));
            }
        }
    }
    jobs
}

// ---------------------------------------------------------------- ortho

/// c_{λ/μ} from the recursion against the tableau sum, all μ ⊂ λ.
pub fn c_recursion_vs_tableau(lam: &Partition, c: &Q, alpha: &Alpha) -> Result<Q> {
    let all = jacobi_c_all(lam, c, alpha)?;
    let mut worst = Q::zero();
    for mu in lam.subpartitions() {
        let r = all.get(&mu).cloned().unwrap_or_else(Q::zero);
        worst = worst.max((r - jacobi_c_tableau(lam, &mu, c, alpha)?).abs());
    }
    Ok(worst)
}

/// c_{λ/μ}(C;α) − (−α)^{|λ−μ|} c_{λ′/μ′}(−αC;1/α), largest over μ ⊂ λ.
pub fn c_duality_residual(lam: &Partition, c: &Q, alpha: &Alpha) -> Result<Q> {
    let al = alpha.value()?;
    let dual = alpha.dual()?;
    let lhs = jacobi_c_all(lam, c, alpha)?;
    let rhs = jacobi_c_all(&lam.conjugate(), &(-&al * c), &dual)?;
    let mut worst = Q::zero();
    for mu in lam.subpartitions() {
        let l = lhs.get(&mu).cloned().unwrap_or_else(Q::zero);
        let r = rhs.get(&mu.conjugate()).cloned().unwrap_or_else(Q::zero) * qpow(&-&al, (lam.size() - mu.size()) as i64);
        worst = worst.max((l - r).abs());
    }
    Ok(worst)
}

/// G^{(a,b)}_λ(1−x) − (−1)^{|λ|} G^{(b,a)}_λ(x), largest coefficient.
pub fn jacobi_symmetry_residual(lam: &Partition, a: &Q, b: &Q, alpha: &Alpha, n: usize) -> Result<Q> {
    let lhs = jacobi(lam, a, b, alpha, n)?.to_poly()?.reflect();
    let sign = if lam.size() % 2 == 0 { q(1) } else { q(-1) };
    let rhs = jacobi(lam, b, a, alpha, n)?.to_poly()?.scale(&sign);
    Ok(max_abs(lhs.sub(&rhs).terms().values()))
}

fn ortho_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    let d = cfg.max_degree;
    let mut rng = seeded(cfg, 2);
    for al in &cfg.alphas {
        let c = generic_q(&mut rng, 1, 6);
        for lam in partitions_upto(d, d).into_iter().filter(|l| !l.is_empty()) {
            let (a2, c2, l2) = (al.clone(), c.clone(), lam.clone());
            let p = format!("alpha={al} lambda={lam} C={}", fmt_q(&c));
            let p2 = p.clone();
            jobs.push(job(move || Ok(vec![Row::exact("c_recursion_vs_tableau", p2.clone(), 0, &c_recursion_vs_tableau(&l2, &c2, &a2)?, "all mu in lambda")]), "c_recursion_vs_tableau", p.clone(), 0));
            let (a2, c2, l2, p2) = (al.clone(), c.clone(), lam.clone(), p.clone());
            jobs.push(job(move || Ok(vec![Row::exact("c_duality", p2.clone(), 0, &c_duality_residual(&l2, &c2, &a2)?, "c(C;alpha) against c'(-alpha C;1/alpha)")]), "c_duality", p, 0));
        }
        for &n in &cfg.ns {
            let (a, b) = (generic_q(&mut rng, 0, 3), generic_q(&mut rng, 0, 3));
            for lam in partitions_upto(d, n).into_iter().filter(|l| !l.is_empty()) {
                let p = format!("alpha={al} lambda={lam} a={} b={}", fmt_q(&a), fmt_q(&b));
                let (a2, aa, bb, l2, p2) = (al.clone(), a.clone(), b.clone(), lam.clone(), p.clone());
                jobs.push(job(move || Ok(vec![Row::exact("jacobi_symmetry", p2.clone(), n, &jacobi_symmetry_residual(&l2, &aa, &bb, &a2, n)?, "G(a,b)(1-x) against (-1)^|lambda| G(b,a)(x)")]), "jacobi_symmetry", p, n));
                let p = format!("alpha={al} lambda={lam} a={}", fmt_q(&a));
                let (a2, aa, l2, p2) = (al.clone(), a.clone(), lam.clone(), p.clone());
                jobs.push(job(
                    move || {
                        let j = laguerre(&l2, &aa, &a2, n)?.to_basis(Basis::Omega)?;
                        let o = laguerre_omega(&l2, &aa, &a2, n)?.scale(&crate::jack::jstar_at_ones(&l2, &a2, n)?);
                        let r = max_abs(j.to_monomial()?.sub(&o.to_monomial()?).coeffs().values());
                        Ok(vec![Row::exact("laguerre_forms", p2.clone(), n, &r, "J* expansion against Omega expansion")])
                    },
                    "laguerre_forms",
                    p,
                    n,
                ));
            }
        }
    }
    jobs
}

// ---------------------------------------------------------------- operators

fn operator_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    let d = cfg.max_degree;
    let mut rng = seeded(cfg, 3);
    for al in &cfg.alphas {
        for &n in &cfg.ns {
            let (a, b) = (generic_q(&mut rng, 0, 3), generic_q(&mut rng, 0, 3));
            for lam in partitions_upto(d, n) {
                let p = format!("alpha={al} lambda={lam} a={} b={}", fmt_q(&a), fmt_q(&b));
                let (a2, aa, bb, l2, p2) = (al.clone(), a.clone(), b.clone(), lam.clone(), p.clone());
                jobs.push(job(
                    move || {
                        let g = jacobi(&l2, &aa, &bb, &a2, n)?.to_poly()?;
                        let ev = (&aa + &bb + q(2) * a2.p(n)) * q(l2.size() as i64) + q(2) * rho(&l2, &a2)?;
                        let r = eigencheck(&OperatorExpr::prim(Prim::Eab { a: aa.clone(), b: bb.clone() }), &g, &ev, &Ctx::new(&a2, n))?;
                        Ok(vec![Row::exact("jacobi_eigen", p2.clone(), n, &max_abs(r.terms().values()), format!("eigenvalue {}", fmt_q(&ev)))])
                    },
                    "jacobi_eigen",
                    p,
                    n,
                ));
                let p = format!("alpha={al} lambda={lam}");
                let (a2, l2, p2) = (al.clone(), lam.clone(), p.clone());
                jobs.push(job(
                    move || {
                        let h = hermite(&l2, &a2, n)?.to_poly()?;
                        let r = eigencheck(&OperatorExpr::prim(Prim::EHermite), &h, &q(-2 * l2.size() as i64), &Ctx::new(&a2, n))?;
                        Ok(vec![Row::exact("hermite_eigen", p2.clone(), n, &max_abs(r.terms().values()), "E H + 2|lambda| H")])
                    },
                    "hermite_eigen",
                    p.clone(),
                    n,
                ));
                let (a2, l2, p2) = (al.clone(), lam.clone(), p.clone());
                jobs.push(job(
                    move || {
                        let om = omega_poly(&l2, &a2, n)?;
                        let ev = laplace_eigenvalue(&l2, &a2, n);
                        let r = eigencheck(&OperatorExpr::prim(Prim::LaplaceE), &om, &ev, &Ctx::new(&a2, n))?;
                        let mut rows = vec![Row::exact("laplace_eigen", p2.clone(), n, &max_abs(r.terms().values()), format!("eigenvalue {}", fmt_q(&ev)))];
                        rows.extend(omega_lowering_checks(&l2, &a2, n)?.into_iter().map(|c| Row::from_named(c, p2.clone(), n)));
                        rows.extend(jstar_sum_checks(&l2, &a2, n)?.into_iter().map(|c| Row::from_named(c, p2.clone(), n)));
                        Ok(rows)
                    },
                    "omega_operators",
                    p,
                    n,
                ));
            }
            let (x, y, z) = (generic_q(&mut rng, 0, 3), generic_q(&mut rng, 0, 3), generic_q(&mut rng, 1, 4));
            let kinds = [
                PhiKind::P2F1 { a: x.clone(), b: y.clone(), c: z.clone() },
                PhiKind::P1F1 { a: x.clone(), c: z.clone() },
                PhiKind::P0F1 { c: z.clone() },
                PhiKind::P1F0 { a: x.clone() },
                PhiKind::P0F0,
            ];
            let dd = d + 1;
            for kind in kinds {
                let p = format!("alpha={al} {} D={dd}", kind.params(al).label());
                let (a2, p2) = (al.clone(), p.clone());
                jobs.push(job(
                    move || {
                        let res = annihilation_check(&kind, &a2, n, dd)?;
                        let bad: Vec<usize> = res.iter().filter(|r| !r.zero).map(|r| r.degree).collect();
                        let residual = if bad.is_empty() { "0".to_string() } else { format!("nonzero at degrees {bad:?}") };
                        Ok(vec![Row::new("phi_annihilation", p2.clone(), n, residual, bad.is_empty(), format!("output degrees 0..{}", dd - 1))])
                    },
                    "phi_annihilation",
                    p,
                    n,
                ));
            }
            let p = format!("alpha={al} D={d}");
            let (a2, p2) = (al.clone(), p.clone());
            jobs.push(job(
                move || {
                    let mut rows: Vec<Row> = exp_p1_checks(&a2, n, d)?.into_iter().map(|c| Row::from_named(c, p2.clone(), n)).collect();
                    rows.push(Row::from_named(commutator_identity(&a2, n, d)?, p2.clone(), n));
                    rows.push(Row::from_named(laplace_consistency(&a2, n, d)?, p2.clone(), n));
                    Ok(rows)
                },
                "operator_identities",
                p,
                n,
            ));
        }
    }
    jobs
}

// ---------------------------------------------------------------- Monte Carlo

/// Points in (1/2, 2) used as kernel arguments; shape only depends on n.
fn spread(n: usize, lo: f64, hi: f64) -> Vec<f64> {
    if n == 1 {
        return vec![(lo + hi) / 2.0];
    }
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

/// Per-check seed: FNV-1a of the check label mixed into the suite seed, so that
/// independent checks draw independent streams and one unlucky draw cannot fail
/// a whole row of the grid at once.
pub fn check_seed(seed: u64, label: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    // splitmix64 finalizer
    let mut z = seed ^ h;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).expect("valid partition")
}

/// One Monte Carlo row; `run` receives the derived seed.
fn mc_job(cfg: &SuiteConfig, check: &'static str, label: String, n: usize, evidence: bool, run: impl Fn(usize, u64) -> Result<McReport> + Send + Sync + 'static) -> Job {
    let (samples, seed) = (cfg.samples, check_seed(cfg.seed, &format!("{check}|n={n}|{label}")));
    Box::new(move || {
        let row = match run(samples, seed) {
            // the job label names the check, so errored and finished rows agree
            Ok(r) => Row { check: check.into(), ..Row::from_mc(if evidence { r.as_evidence() } else { r }, n) },
            Err(e) => Row::error(check, label.clone(), n, &e),
        };
        vec![if evidence { row.evidence() } else { row }]
    })
}

fn conj_c_jobs(al: &Alpha, n: usize, cfg: &SuiteConfig, evidence: bool) -> Vec<Job> {
    let tr = Truncation { max_degree: cfg.max_degree, n };
    let mut jobs: Vec<Job> = Vec::new();
    for (lam, y) in [(part(&[1]), spread(n, 1.0, 1.5)), (part(&[2, 1]), spread(n, 0.8, 1.2))] {
        if lam.len() > n {
            continue;
        }
        let a2 = al.clone();
        let label = format!("alpha={al} lambda={lam} y={y:?}");
        jobs.push(mc_job(cfg, "conj_c", label, n, evidence, move |s, seed| conj_c(&lam, 3.0, &a2, &y, s, seed, &tr)));
    }
    jobs
}

fn fam_label(f: &Family) -> String {
    match f {
        Family::Hermite => "hermite".into(),
        Family::Laguerre { a } => format!("laguerre a={}", fmt_q(a)),
        Family::Jacobi { a, b } => format!("jacobi a={} b={}", fmt_q(a), fmt_q(b)),
    }
}

fn mc_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for al in &cfg.alphas {
        for &n in &cfg.ns {
            let tr = Truncation { max_degree: cfg.max_degree, n };
            let proven_c = matches!(al, Alpha::Infinite) || *al == Alpha::int(1) || *al == Alpha::int(2);
            jobs.extend(conj_c_jobs(al, n, cfg, !proven_c));
            if !al.is_finite() {
                continue;
            }
            let lams: Vec<Partition> = [part(&[1]), part(&[2]), part(&[1, 1]), part(&[2, 1])].into_iter().filter(|l| l.len() <= n).collect();
            for lam in &lams {
                let (a2, l2) = (al.clone(), lam.clone());
                jobs.push(mc_job(cfg, "selberg_kadell", format!("alpha={al} lambda={lam}"), n, false, move |s, seed| selberg_kadell(&l2, 3.0, 3.0, &a2, n, s, seed)));
                let (a2, l2) = (al.clone(), lam.clone());
                jobs.push(mc_job(cfg, "laguerre_moment", format!("alpha={al} lambda={lam}"), n, false, move |s, seed| laguerre_moment(&l2, 3.0, &a2, n, s, seed)));
            }
            let pairs: Vec<(Partition, Partition)> = vec![(part(&[2]), part(&[1])), (part(&[2]), part(&[2])), (part(&[1]), part(&[1]))];
            let pairs: Vec<_> = pairs.into_iter().chain((n >= 2).then(|| (part(&[2]), part(&[1, 1])))).collect();
            for (l, m) in pairs {
                for fam in [Family::Hermite, Family::Laguerre { a: qr(1, 2) }, Family::Jacobi { a: qr(1, 2), b: q(1) }] {
                    if matches!(fam, Family::Jacobi { .. }) && l == m {
                        continue;
                    }
                    let (a2, l2, m2) = (al.clone(), l.clone(), m.clone());
                    let label = format!("alpha={al} {} lambda={l} mu={m}", fam_label(&fam));
                    jobs.push(mc_job(cfg, "orthogonality", label, n, false, move |s, seed| orthogonality(&fam, &l2, &m2, &a2, n, s, seed)));
                }
            }
            for lam in [part(&[1, 1]), part(&[2, 1]), part(&[2, 2])].into_iter().filter(|l| l.len() <= n) {
                let a2 = al.clone();
                jobs.push(mc_job(cfg, "hermite_moment", format!("alpha={al} lambda={lam}"), n, false, move |s, seed| hermite_even_moment(&lam, &a2, n, s, seed)));
            }
            let (a2, y) = (al.clone(), spread(n, 0.1, 0.2));
            jobs.push(mc_job(cfg, "hyper_integral", format!("alpha={al} laguerre 0F0 y={y:?}"), n, false, move |s, seed| {
                let hp = HyperParams::new(vec![], vec![], a2.clone());
                hyper_integral(HyperIntegral::Laguerre, &hp, &q(3), &q(0), &y, s, seed, &tr)
            }));
            let (a2, y) = (al.clone(), spread(n, 0.1, 0.3));
            jobs.push(mc_job(cfg, "hyper_integral", format!("alpha={al} jacobi 1F0 y={y:?}"), n, false, move |s, seed| {
                let hp = HyperParams::new(vec![qr(1, 2)], vec![], a2.clone());
                hyper_integral(HyperIntegral::Jacobi, &hp, &q(2), &q(5), &y, s, seed, &tr)
            }));
            let a2 = al.clone();
            jobs.push(mc_job(cfg, "self_adjointness", format!("alpha={al}"), n, false, move |s, seed| {
                let f = MonomialExpansion::from_map([(part(&[2]), q(1)), (part(&[1]), q(2))].into(), n);
                let g = if n >= 2 {
                    MonomialExpansion::from_map([(part(&[1, 1]), q(1)), (part(&[1]), q(-1))].into(), n)
                } else {
                    MonomialExpansion::from_map([(part(&[3]), q(1)), (part(&[1]), q(-1))].into(), n)
                };
                self_adjointness(&qr(1, 2), &q(1), &a2, n, &f, &g, s, seed)
            }));
            // Hankel identities are asserted at α = 2 and reported as evidence elsewhere.
            let proven_h = *al == Alpha::int(2);
            let (a2, y, z) = (al.clone(), spread(n, 1.0, 1.3), spread(n, 0.3, 0.2));
            jobs.push(mc_job(cfg, "hankel_kernel", format!("alpha={al} y={y:?} z={z:?}"), n, !proven_h, move |s, seed| hankel_kernel(&qr(1, 2), &a2, &y, &z, s, seed, &tr)));
            for lam in [part(&[1]), part(&[2, 1])].into_iter().filter(|l| l.len() <= n) {
                let (a2, y) = (al.clone(), spread(n, 0.3, 0.5));
                jobs.push(mc_job(cfg, "hankel_eigen", format!("alpha={al} lambda={lam} y={y:?}"), n, !proven_h, move |s, seed| hankel_eigen(&lam, &qr(1, 2), &a2, &y, s, seed, &tr)));
            }
        }
    }
    jobs
}

// ---------------------------------------------------------------- conjectures

/// Experimental operator-table rows, each applied to the two-argument kernel.
pub fn kernel_rows(a: &Q, b: &Q, c: &Q) -> Vec<KernelRow> {
    vec![
        KernelRow::E00,
        KernelRow::E10 { a: a.clone() },
        KernelRow::E01 { c: c.clone() },
        KernelRow::E11 { a: a.clone(), c: c.clone() },
        KernelRow::E21 { a: a.clone(), b: b.clone(), c: c.clone() },
    ]
}

fn row_label(r: &KernelRow) -> String {
    match r {
        KernelRow::E00 => "0F0".into(),
        KernelRow::E10 { a } => format!("1F0 a={}", fmt_q(a)),
        KernelRow::E01 { c } => format!("0F1 c={}", fmt_q(c)),
        KernelRow::E11 { a, c } => format!("1F1 a={} c={}", fmt_q(a), fmt_q(c)),
        KernelRow::E21 { a, b, c } => format!("2F1 a={} b={} c={}", fmt_q(a), fmt_q(b), fmt_q(c)),
    }
}

fn conjecture_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    let d = cfg.max_degree;
    let mut rng = seeded(cfg, 5);
    for al in &cfg.alphas {
        for &n in &cfg.ns {
            for lam in partitions_upto(d, n) {
                let p = format!("alpha={al} lambda={lam}");
                let (a2, p2) = (al.clone(), p.clone());
                jobs.push(job(
                    move || {
                        let r = shift_identity_residual(&lam, &a2, n)?;
                        Ok(vec![Row::exact("shift_identity", p2.clone(), n, &max_abs(r.coeffs().values()), "Omega(1+x) against sum of binom * Omega").evidence()])
                    },
                    "shift_identity",
                    p,
                    n,
                ));
            }
            for lam in partitions_upto(d, n).into_iter().filter(|l| !l.is_empty()) {
                let p = format!("alpha={al} lambda={lam}");
                let (a2, p2) = (al.clone(), p.clone());
                jobs.push(job(
                    move || {
                        let fd = formal_degree(&lam, &a2, n)?;
                        let row = match (&fd.equal, &fd.product_form) {
                            (Some(eq), Some(prod)) => Row::new("formal_degree", p2.clone(), n, if *eq { "0" } else { "nonzero" }, *eq, format!("product={prod} eps={}", fd.eps_form)),
                            _ => Row::new("formal_degree", p2.clone(), n, "n/a", true, format!("k not an integer; eps={}", fd.eps_form)),
                        };
                        Ok(vec![row.evidence()])
                    },
                    "formal_degree",
                    p,
                    n,
                ));
            }
            let (a, b, c) = (generic_q(&mut rng, 0, 3), generic_q(&mut rng, 0, 3), generic_q(&mut rng, 1, 4));
            for lam in partitions_upto(d.min(4), n).into_iter().filter(|l| !l.is_empty()) {
                let p = format!("alpha={al} lambda={lam} a={} b={}", fmt_q(&a), fmt_q(&b));
                let (a2, aa, bb, p2) = (al.clone(), a.clone(), b.clone(), p.clone());
                jobs.push(job(
                    move || {
                        let rows = jacobi_duality_formal(&lam, &aa, &bb, &a2, n)?;
                        let r = max_abs(rows.iter().map(|(_, l, r)| l - r).collect::<Vec<_>>().iter());
                        Ok(vec![Row::exact("jacobi_duality_formal", p2.clone(), n, &r, "coefficient of J_mu' on each side, n' = -n/alpha").evidence()])
                    },
                    "jacobi_duality_formal",
                    p,
                    n,
                ));
            }
            for row in kernel_rows(&a, &b, &c) {
                let p = format!("alpha={al} {}", row_label(&row));
                let (a2, p2) = (al.clone(), p.clone());
                let dd = d.min(4);
                jobs.push(job(
                    move || {
                        let c = kernel_row_check(&row, &a2, n, dd)?;
                        Ok(vec![Row::new("kernel_row", p2.clone(), n, if c.pass { "0" } else { "nonzero" }, c.pass, c.detail).evidence()])
                    },
                    "kernel_row",
                    p,
                    n,
                ));
            }
            let inst = Instance::new(vec![a.clone()], vec![], al.clone()).with_points(spread(n, 0.05, 0.15), spread(n, 0.1, 0.2));
            let p = format!("alpha={al}");
            jobs.push(job(move || Ok(vec![Row::from_identity(identity_check("shifted_1F0", &inst, 30, n)?).evidence()]), "shifted_1F0", p, n));
        }
    }
    let mc_cfg = SuiteConfig { max_degree: 45, ..cfg.clone() };
    for al in [Alpha::ratio(3, 2), Alpha::int(3)] {
        jobs.extend(conj_c_jobs(&al, 2, &mc_cfg, true));
    }
    jobs
}

// ---------------------------------------------------------------- tables

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableKind {
    JackCoeffs,
    Binomials,
    JacobiC,
    Laguerre,
    Hermite,
}

impl FromStr for TableKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "jack-coeffs" => TableKind::JackCoeffs,
            "binomials" => TableKind::Binomials,
            "jacobi-c" => TableKind::JacobiC,
            "laguerre" => TableKind::Laguerre,
            "hermite" => TableKind::Hermite,
            _ => return Err(Error::Parameter(format!("unknown table {s:?}; expected jack-coeffs, binomials, jacobi-c, laguerre or hermite"))),
        })
    }
}

#[derive(Clone, Debug)]
pub struct TableParams {
    pub alpha: Alpha,
    pub n: usize,
    pub max_degree: usize,
    /// Laguerre parameter a.
    pub a: Q,
    /// Normalization for jack-coeffs.
    pub norm: Norm,
}

impl Default for TableParams {
    fn default() -> Self {
        Self { alpha: Alpha::int(2), n: 4, max_degree: 4, a: qr(1, 2), norm: Norm::C }
    }
}

/// Exact coefficients as "num/den" strings, one row per (λ, μ) pair.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Table {
    pub kind: TableKind,
    pub params: BTreeMap<String, String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => serde_json::to_string_pretty(self).map(|s| s + "\n").map_err(|e| Error::Io(e.to_string())),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                let io = |e: csv::Error| Error::Io(e.to_string());
                w.write_record(&self.columns).map_err(io)?;
                for r in &self.rows {
                    w.write_record(r).map_err(io)?;
                }
                let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
                String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
            }
        }
    }

    /// Sum of a coefficient column grouped by the first column, for quick checks.
    pub fn lookup(&self, key: &str, sub: &str) -> Option<&str> {
        self.rows.iter().find(|r| r[0] == key && r[1] == sub).map(|r| r[2].as_str())
    }
}

pub fn build_table(kind: TableKind, p: &TableParams) -> Result<Table> {
    let d = p.max_degree;
    let al = &p.alpha;
    let mut params = BTreeMap::from([("alpha".to_string(), al.to_string()), ("max_degree".to_string(), d.to_string())]);
    let mut rows = Vec::new();
    let cols = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let columns = match kind {
        TableKind::JackCoeffs => {
            params.insert("n".into(), p.n.to_string());
            params.insert("norm".into(), format!("{:?}", p.norm));
            for m in 0..=d {
                for lam in partitions(m, p.n) {
                    for (mu, c) in jack(&lam, al, p.n, p.norm)?.coeffs() {
                        rows.push(vec![lam.to_string(), mu.to_string(), fmt_q(c)]);
                    }
                }
            }
            cols(&["lambda", "mu", "coeff_m_mu"])
        }
        TableKind::Binomials => {
            for lam in partitions_upto(d, d) {
                for mu in lam.subpartitions() {
                    rows.push(vec![lam.to_string(), mu.to_string(), fmt_q(&binom(&lam, &mu, al)?)]);
                }
            }
            cols(&["lambda", "mu", "binom"])
        }
        TableKind::JacobiC => {
            for lam in partitions_upto(d, d) {
                for mu in lam.subpartitions() {
                    rows.push(vec![lam.to_string(), mu.to_string(), jacobi_c_symbolic(&lam, &mu, al)?.to_string()]);
                }
            }
            cols(&["lambda", "mu", "c_of_C"])
        }
        TableKind::Laguerre => {
            params.insert("n".into(), p.n.to_string());
            params.insert("a".into(), fmt_q(&p.a));
            for lam in partitions_upto(d, p.n) {
                for (mu, c) in laguerre(&lam, &p.a, al, p.n)?.table() {
                    rows.push(vec![lam.to_string(), mu, c]);
                }
            }
            cols(&["lambda", "mu", "coeff_jstar_mu"])
        }
        TableKind::Hermite => {
            for lam in partitions_upto(d, d) {
                for (pi, c) in hermite_coeffs(&lam, al)? {
                    rows.push(vec![lam.to_string(), pi.to_string(), fmt_q(&c)]);
                }
            }
            cols(&["lambda", "pi", "coeff_omega_pi_over_2^|lambda|"])
        }
    };
    Ok(Table { kind, params, columns, rows })
}

/// Build a table and write it to `path`.
pub fn emit_table(kind: TableKind, p: &TableParams, path: &Path, format: Format) -> Result<Table> {
    let t = build_table(kind, p)?;
    write_file(path, &t.render(format)?)?;
    Ok(t)
}

/// c_{(r)/(s)}(C) from the closed form, as a cross-check of the symbolic table.
pub fn c_row_closed_form(r: usize, s: usize, c: &Q) -> Q {
    let mut v = Q::from_integer(crate::partition::binomial(r, r - s));
    for i in 1..=(r - s) {
        v /= c + q((r + s + i) as i64 - 2);
    }
    v
}

/// P_λ monomial coefficients, used by the `jack` subcommand.
pub fn jack_rows(lam: &Partition, alpha: &Alpha, n: usize, norm: Norm) -> Result<Vec<(String, String)>> {
    let f = if norm == Norm::P { jack_p(lam, alpha, n) } else { jack(lam, alpha, n, norm)? };
    Ok(f.coeffs().iter().map(|(m, c)| (m.to_string(), fmt_q(c))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ortho::jacobi_c;

    fn small(suite: SuiteName) -> SuiteConfig {
        let mut c = SuiteConfig::new(suite);
        c.alphas = vec![Alpha::int(2)];
        c.ns = vec![2];
        c.max_degree = 3;
        c.samples = 20_000;
        c
    }

    #[test]
    fn empty_grid_rejected() {
        let mut c = SuiteConfig::new(SuiteName::Ortho);
        c.alphas.clear();
        assert!(matches!(run_suite(&c), Err(Error::Parameter(_))));
        assert!("nope".parse::<SuiteName>().is_err());
    }

    #[test]
    fn exact_suites_pass_small() {
        for s in [SuiteName::ExactIdentities, SuiteName::Ortho, SuiteName::Operators] {
            let r = run_suite(&small(s)).unwrap();
            let bad: Vec<_> = r.failures().collect();
            assert!(bad.is_empty(), "{s}: {bad:?}");
            assert!(r.summary.pass > 0);
        }
    }

    #[test]
    fn reports_are_reproducible() {
        let c = small(SuiteName::Ortho);
        let a = run_suite(&c).unwrap();
        let b = run_suite(&c).unwrap();
        let strip = |r: &Report| serde_json::to_string(&(&r.config, &r.rows)).unwrap();
        assert_eq!(strip(&a), strip(&b));
        let csv = a.render(Format::Csv).unwrap();
        assert!(csv.starts_with("# tool="));
    }

    #[test]
    fn tables() {
        let p = TableParams { max_degree: 3, ..Default::default() };
        let b = build_table(TableKind::Binomials, &p).unwrap();
        for r in &b.rows {
            if r[0] == r[1] {
                assert_eq!(r[2], "1");
            }
        }
        let c = build_table(TableKind::JacobiC, &p).unwrap();
        assert_eq!(c.lookup("(1)", "()"), Some("(1) / (C)"));
        assert_eq!(jacobi_c(&Partition::row(3), &Partition::row(1), &q(5), &Alpha::int(2)).unwrap(), c_row_closed_form(3, 1, &q(5)));
    }
}
