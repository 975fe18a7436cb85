//! Thin command-line front-end over the `mhyperg` library.
//!
//! Exit codes: 0 pass, 1 check failure, 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use mhyperg::diffops::{annihilation_check, eigencheck, laplace_eigenvalue, omega_poly, Ctx, OperatorExpr, PhiKind, Prim};
use mhyperg::jack::Norm;
use mhyperg::mc::{self, Family, HyperIntegral, McReport};
use mhyperg::ortho;
use mhyperg::partition::rho;
use mhyperg::rational::{fmt_q, parse_q, parse_q_list, q};
use mhyperg::series::{pfq, pfq_two, HyperParams, Truncation};
use mhyperg::suite::{build_table, jack_rows, run_suite, Format, SuiteConfig, SuiteName, TableKind, TableParams};
use mhyperg::{Alpha, Error, Partition};

#[derive(Parser)]
#[command(name = "mhyperg", version, about = "Jack polynomials and hypergeometric functions of matrix argument")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Output {
    /// JSON output
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// CSV output
    #[arg(long, global = true)]
    csv: bool,
    /// write to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

impl Output {
    fn format(&self) -> Option<Format> {
        if self.json {
            Some(Format::Json)
        } else if self.csv {
            Some(Format::Csv)
        } else {
            None
        }
    }

    fn emit(&self, text: &str) -> Result<(), Error> {
        match &self.out {
            Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    /// Plain text, or `value` as JSON, or `rows` as CSV.
    fn show<T: Serialize>(&self, plain: &str, value: &T, rows: &[Vec<String>], columns: &[&str]) -> Result<(), Error> {
        let text = match self.format() {
            None => plain.to_string(),
            Some(Format::Json) => serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.to_string()))? + "\n",
            Some(Format::Csv) => {
                let mut w = csv::Writer::from_writer(Vec::new());
                let io = |e: csv::Error| Error::Io(e.to_string());
                w.write_record(columns).map_err(io)?;
                for r in rows {
                    w.write_record(r).map_err(io)?;
                }
                String::from_utf8(w.into_inner().map_err(|e| Error::Io(e.to_string()))?).map_err(|e| Error::Io(e.to_string()))?
            }
        };
        self.emit(&text)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Jack polynomial in the monomial basis
    Jack {
        /// partition, e.g. 3,1
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value = "2")]
        alpha: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// p, q, j, jstar, c or omega
        #[arg(long, alias = "form", default_value = "p")]
        norm: String,
        #[command(flatten)]
        output: Output,
    },
    /// Truncated pFq of one or two matrix arguments
    Pfq {
        /// upper parameters, comma separated rationals
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        upper: String,
        /// lower parameters
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        lower: String,
        /// eigenvalues of x
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// eigenvalues of y for the two-argument series
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
        #[arg(long, default_value = "2")]
        alpha: String,
        #[arg(long, default_value_t = 30)]
        max_degree: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Laguerre, Jacobi or Hermite polynomial as an Omega/J* expansion
    Ortho {
        /// laguerre, jacobi or hermite
        #[arg(long)]
        family: String,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value = "2")]
        alpha: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// evaluate at this point
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Exact eigenfunction or annihilation check
    Opcheck {
        /// jacobi, hermite, laplace, or phi
        #[arg(long)]
        kind: String,
        #[arg(long, default_value = "2,1")]
        lambda: String,
        /// for phi: upper parameters of 2F1/1F1/1F0/0F0/0F1
        #[arg(long, default_value = "1/3,5/2", allow_hyphen_values = true)]
        upper: String,
        #[arg(long, default_value = "7/4", allow_hyphen_values = true)]
        lower: String,
        #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "1/3", allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value = "2")]
        alpha: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        max_degree: usize,
        #[command(flatten)]
        output: Output,
    },
    /// One Monte Carlo consistency check
    Mc {
        /// selberg, laguerre-moment, orthogonality, conj-c, hankel-kernel, hankel-eigen, hermite-moment, hyper-laguerre, hyper-jacobi
        #[arg(long)]
        check: String,
        #[arg(long, default_value = "2,1")]
        lambda: String,
        /// second partition for orthogonality
        #[arg(long, default_value = "1")]
        mu: String,
        /// laguerre, jacobi or hermite (orthogonality)
        #[arg(long, default_value = "laguerre")]
        family: String,
        #[arg(long, default_value = "3", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "3", allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        /// upper parameters of the integrated series (hyper-*)
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        upper: String,
        #[arg(long, default_value = "2")]
        alpha: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 1_000_000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 45)]
        max_degree: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Run a named suite: exact-identities, conjectures, mc-integrals, ortho or operators
    Suite {
        name: String,
        /// comma-separated alpha grid (default depends on the suite)
        #[arg(long)]
        alpha: Option<String>,
        /// comma-separated n grid
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        output: Output,
    },
    /// Emit an exact fixture table: jack-coeffs, binomials, jacobi-c, laguerre or hermite
    Table {
        kind: String,
        #[arg(long, default_value = "2")]
        alpha: String,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "c")]
        norm: String,
        #[command(flatten)]
        output: Output,
    },
}

enum Fail {
    Usage(String),
    Check(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Parameter(_) | Error::Parse(_) | Error::Precondition(_) | Error::Containment { .. } => Fail::Usage(e.to_string()),
            other => Fail::Check(other.to_string()),
        }
    }
}

type Out = Result<bool, Fail>;

fn floats(s: &str) -> Result<Vec<f64>, Error> {
    s.split(',').map(|t| t.trim().parse::<f64>().map_err(|_| Error::Parse(format!("not a number: {t:?}")))).collect()
}

fn alpha_list(s: &str) -> Result<Vec<Alpha>, Error> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(Alpha::parse).collect()
}

fn part_rows(pairs: &[(String, String)]) -> Vec<Vec<String>> {
    pairs.iter().map(|(a, b)| vec![a.clone(), b.clone()]).collect()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Fail::Check(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Fail::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Out {
    match cmd {
        Cmd::Jack { lambda, alpha, n, norm, output } => {
            let lam = Partition::parse(&lambda)?;
            let al = Alpha::parse(&alpha)?;
            let norm: Norm = norm.parse()?;
            let rows = jack_rows(&lam, &al, n, norm)?;
            let plain: String = rows.iter().map(|(m, c)| format!("m{m}\t{c}\n")).collect();
            let map: std::collections::BTreeMap<_, _> = rows.iter().cloned().collect();
            output.show(&plain, &map, &part_rows(&rows), &["mu", "coeff"])?;
            Ok(true)
        }
        Cmd::Pfq { upper, lower, x, y, alpha, max_degree, output } => {
            let params = HyperParams::new(parse_q_list(&upper)?, parse_q_list(&lower)?, Alpha::parse(&alpha)?);
            let xs = floats(&x)?;
            let tr = Truncation { max_degree, n: xs.len() };
            let v = match y {
                Some(y) => {
                    let ys = floats(&y)?;
                    if ys.len() != xs.len() {
                        return Err(Fail::Usage("x and y need the same length".into()));
                    }
                    pfq_two(&params, &xs, &ys, &tr)?
                }
                None => pfq(&params, &xs, &tr)?,
            };
            let plain = format!("{} = {:.15e}\ttail~{:.1e}\n", params.label(), v.value, v.tail);
            let row = vec![vec![params.label(), format!("{:e}", v.value), format!("{:e}", v.tail), v.degrees_used.to_string()]];
            output.show(&plain, &v, &row, &["series", "value", "tail", "degrees_used"])?;
            Ok(true)
        }
        Cmd::Ortho { family, lambda, a, b, alpha, n, at, output } => {
            let lam = Partition::parse(&lambda)?;
            let al = Alpha::parse(&alpha)?;
            let (a, b) = (parse_q(&a)?, parse_q(&b)?);
            let e = match family.as_str() {
                "laguerre" => ortho::laguerre(&lam, &a, &al, n)?,
                "jacobi" => ortho::jacobi(&lam, &a, &b, &al, n)?,
                "hermite" => ortho::hermite(&lam, &al, n)?,
                _ => return Err(Fail::Usage(format!("unknown family {family:?}"))),
            };
            let rows = e.table();
            let basis = format!("{:?}", e.basis);
            let mut plain: String = rows.iter().map(|(m, c)| format!("{basis}{m}\t{c}\n")).collect();
            if let Some(pt) = at {
                let xs = floats(&pt)?;
                if xs.len() != n {
                    return Err(Fail::Usage(format!("--at needs {n} coordinates")));
                }
                plain.push_str(&format!("value at {xs:?}: {:.15e}\n", e.eval(&xs)?));
            }
            let map: std::collections::BTreeMap<_, _> = rows.iter().cloned().collect();
            output.show(&plain, &serde_json::json!({"basis": basis, "coeffs": map}), &part_rows(&rows), &["mu", "coeff"])?;
            Ok(true)
        }
        Cmd::Opcheck { kind, lambda, upper, lower, a, b, alpha, n, max_degree, output } => {
            let lam = Partition::parse(&lambda)?;
            let al = Alpha::parse(&alpha)?;
            let ctx = Ctx::new(&al, n);
            let (a, b) = (parse_q(&a)?, parse_q(&b)?);
            let residual: Vec<(String, String)> = match kind.as_str() {
                "jacobi" => {
                    let g = ortho::jacobi(&lam, &a, &b, &al, n)?.to_poly()?;
                    let ev = (&a + &b + q(2) * al.p(n)) * q(lam.size() as i64) + q(2) * rho(&lam, &al)?;
                    let r = eigencheck(&OperatorExpr::prim(Prim::Eab { a, b }), &g, &ev, &ctx)?;
                    vec![(format!("E_ab G_{lam} - ({}) G", fmt_q(&ev)), r.terms().len().to_string())]
                }
                "hermite" => {
                    let h = ortho::hermite(&lam, &al, n)?.to_poly()?;
                    let r = eigencheck(&OperatorExpr::prim(Prim::EHermite), &h, &q(-2 * lam.size() as i64), &ctx)?;
                    vec![(format!("E H_{lam} + {} H", 2 * lam.size()), r.terms().len().to_string())]
                }
                "laplace" => {
                    let om = omega_poly(&lam, &al, n)?;
                    let ev = laplace_eigenvalue(&lam, &al, n);
                    let r = eigencheck(&OperatorExpr::prim(Prim::LaplaceE), &om, &ev, &ctx)?;
                    vec![(format!("E Omega_{lam} - ({}) Omega", fmt_q(&ev)), r.terms().len().to_string())]
                }
                "phi" => {
                    let (u, l) = (parse_q_list(&upper)?, parse_q_list(&lower)?);
                    let pk = match (u.as_slice(), l.as_slice()) {
                        ([x, y], [z]) => PhiKind::P2F1 { a: x.clone(), b: y.clone(), c: z.clone() },
                        ([x], [z]) => PhiKind::P1F1 { a: x.clone(), c: z.clone() },
                        ([], [z]) => PhiKind::P0F1 { c: z.clone() },
                        ([x], []) => PhiKind::P1F0 { a: x.clone() },
                        ([], []) => PhiKind::P0F0,
                        _ => return Err(Fail::Usage("phi supports 2F1, 1F1, 0F1, 1F0 and 0F0".into())),
                    };
                    annihilation_check(&pk, &al, n, max_degree)?.into_iter().map(|d| (format!("degree {}", d.degree), d.residual_terms.to_string())).collect()
                }
                _ => return Err(Fail::Usage(format!("unknown operator check {kind:?}"))),
            };
            let ok = residual.iter().all(|(_, t)| t == "0");
            let plain: String = residual.iter().map(|(w, t)| format!("{w}\tnonzero terms: {t}\n")).collect::<String>() + if ok { "PASS\n" } else { "FAIL\n" };
            let map: std::collections::BTreeMap<_, _> = residual.iter().cloned().collect();
            output.show(&plain, &serde_json::json!({"pass": ok, "nonzero_terms": map}), &part_rows(&residual), &["check", "nonzero_terms"])?;
            Ok(ok)
        }
        Cmd::Mc { check, lambda, mu, family, a, b, y, z, upper, alpha, n, samples, seed, max_degree, output } => {
            let lam = Partition::parse(&lambda)?;
            let al = Alpha::parse(&alpha)?;
            let tr = Truncation { max_degree, n };
            let pts = |s: &Option<String>, def: f64| -> Result<Vec<f64>, Error> {
                match s {
                    Some(s) => floats(s),
                    None => Ok((0..n).map(|i| def + 0.2 * i as f64).collect()),
                }
            };
            let (aq, bq) = (parse_q(&a)?, parse_q(&b)?);
            let (af, bf) = (mhyperg::rational::to_f64(&aq), mhyperg::rational::to_f64(&bq));
            let r: McReport = match check.as_str() {
                "selberg" => mc::selberg_kadell(&lam, af, bf, &al, n, samples, seed)?,
                "laguerre-moment" => mc::laguerre_moment(&lam, af, &al, n, samples, seed)?,
                "orthogonality" => {
                    let fam = match family.as_str() {
                        "laguerre" => Family::Laguerre { a: aq },
                        "jacobi" => Family::Jacobi { a: aq, b: bq },
                        "hermite" => Family::Hermite,
                        _ => return Err(Fail::Usage(format!("unknown family {family:?}"))),
                    };
                    mc::orthogonality(&fam, &lam, &Partition::parse(&mu)?, &al, n, samples, seed)?
                }
                "conj-c" => mc::conj_c(&lam, af, &al, &pts(&y, 0.8)?, samples, seed, &tr)?,
                "hankel-kernel" => mc::hankel_kernel(&aq, &al, &pts(&y, 1.0)?, &pts(&z, 0.2)?, samples, seed, &tr)?,
                "hankel-eigen" => mc::hankel_eigen(&lam, &aq, &al, &pts(&y, 0.3)?, samples, seed, &tr)?,
                "hermite-moment" => mc::hermite_even_moment(&lam, &al, n, samples, seed)?,
                "hyper-laguerre" | "hyper-jacobi" => {
                    let which = if check == "hyper-laguerre" { HyperIntegral::Laguerre } else { HyperIntegral::Jacobi };
                    let hp = HyperParams::new(parse_q_list(&upper)?, vec![], al.clone());
                    mc::hyper_integral(which, &hp, &aq, &bq, &pts(&y, 0.1)?, samples, seed, &tr)?
                }
                _ => return Err(Fail::Usage(format!("unknown Monte Carlo check {check:?}"))),
            };
            let plain = format!(
                "{} {}\nestimate {:.10e} +- {:.2e}\ntarget   {:.10e}\nsigmas {:.2} tail {:.1e} -> {:?}\n",
                r.check, r.params, r.estimate, r.stderr, r.target, r.sigmas, r.tail_allowance, r.verdict
            );
            let row = vec![vec![r.check.clone(), r.params.clone(), r.estimate.to_string(), r.stderr.to_string(), r.target.to_string(), r.sigmas.to_string(), format!("{:?}", r.verdict)]];
            output.show(&plain, &r, &row, &["check", "params", "estimate", "stderr", "target", "sigmas", "verdict"])?;
            Ok(r.verdict != mhyperg::identities::Status::Fail)
        }
        Cmd::Suite { name, alpha, n, max_degree, samples, seed, output } => {
            let suite: SuiteName = name.parse()?;
            let mut cfg = SuiteConfig::new(suite);
            if let Some(a) = alpha {
                cfg.alphas = alpha_list(&a)?;
            }
            if let Some(ns) = n {
                cfg.ns = ns.split(',').filter(|t| !t.trim().is_empty()).map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad n {t:?}")))).collect::<Result<_, _>>()?;
            }
            cfg.max_degree = max_degree.unwrap_or(cfg.max_degree);
            cfg.samples = samples.unwrap_or(cfg.samples);
            cfg.seed = seed.unwrap_or(cfg.seed);
            cfg.format = output.format().unwrap_or(Format::Json);
            cfg.out = output.out.clone();
            let report = run_suite(&cfg)?;
            if output.out.is_none() {
                if output.format().is_some() {
                    print!("{}", report.render(cfg.format)?);
                } else {
                    for r in &report.rows {
                        println!("{:<9} {:<24} n={} {:<48} residual={}", format!("{:?}", r.status).to_lowercase(), r.check, r.n, r.params, r.residual);
                    }
                }
            }
            for r in report.failures() {
                eprintln!("FAIL {} n={} {}: {}", r.check, r.n, r.params, r.detail);
            }
            eprintln!("{}: {} pass, {} fail, {} evidence", suite, report.summary.pass, report.summary.fail, report.summary.evidence);
            Ok(report.exit_code() == 0)
        }
        Cmd::Table { kind, alpha, n, max_degree, a, norm, output } => {
            let kind: TableKind = kind.parse()?;
            let p = TableParams { alpha: Alpha::parse(&alpha)?, n, max_degree, a: parse_q(&a)?, norm: norm.parse()? };
            let t = build_table(kind, &p)?;
            let text = t.render(output.format().unwrap_or(Format::Json))?;
            output.emit(&text)?;
            Ok(true)
        }
    }
}
