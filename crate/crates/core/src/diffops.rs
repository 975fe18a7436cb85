//! Differential operators on explicit polynomials in one or two blocks of n variables.
//!
//! Singular sums Σ_{i≠j} g_i/(x_i − x_j) are computed pairwise as
//! (g_i − g_j)/(x_i − x_j) by exact division, so an asymmetric input is a hard error.

use std::collections::BTreeMap;

use num::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::jack::{binom, jack, jstar_at_ones, Norm};
use crate::partition::{partitions, partitions_upto, rho, rho_skew, Alpha, Partition};
use crate::poly::NVarPoly;
use crate::rational::{fmt_q, q, Q};
use crate::series::{pfq_formal, pfq_two_formal, HyperParams};
use crate::symfun::{p_to_m, MonomialExpansion, PowerSumElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    X,
    Y,
}

/// The hypergeometric operators whose null space contains a one-argument ₚF_q.
#[derive(Clone, Debug, PartialEq)]
pub enum PhiKind {
    P2F1 { a: Q, b: Q, c: Q },
    P1F1 { a: Q, c: Q },
    P0F1 { c: Q },
    /// ε₁ − ε₂ − na, annihilating |1−x|^{−a}
    P1F0 { a: Q },
    /// ε₁ − n, annihilating e^{p₁}
    P0F0,
}

impl PhiKind {
    pub fn params(&self, alpha: &Alpha) -> HyperParams {
        let (u, l) = match self {
            PhiKind::P2F1 { a, b, c } => (vec![a.clone(), b.clone()], vec![c.clone()]),
            PhiKind::P1F1 { a, c } => (vec![a.clone()], vec![c.clone()]),
            PhiKind::P0F1 { c } => (vec![], vec![c.clone()]),
            PhiKind::P1F0 { a } => (vec![a.clone()], vec![]),
            PhiKind::P0F0 => (vec![], vec![]),
        };
        HyperParams::new(u, l, alpha.clone())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Prim {
    /// (1/s!) Σ x_i^r D_i^s
    U(u32, u32),
    /// Σ_{i≠j} x_i^r D_i / (x_i − x_j)
    V(u32),
    /// Σ x_i^r D_i² + 2k V_r
    Delta(u32),
    /// Σ x_i^{r−1} D_i
    Eps(u32),
    Box1,
    Box2,
    Eab { a: Q, b: Q },
    EHermite,
    Phi(PhiKind),
    /// Σ (x_i²D_i² + x_iD_i) + 2k V_2
    LaplaceE,
    /// Δ^{−2k} Σ D_i(x_i Δ^{2k} D_i(x_i f))
    LaplaceEPrime,
    /// multiplication by p_r
    MulP(u32),
    Identity,
}

/// Σ coef · (P_1 ∘ P_2 ∘ …), each factor acting on one side.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct OperatorExpr {
    pub terms: Vec<(Q, Vec<(Prim, Side)>)>,
}

impl OperatorExpr {
    pub fn prim(p: Prim) -> Self {
        Self::on(p, Side::X)
    }

    pub fn on(p: Prim, side: Side) -> Self {
        Self { terms: vec![(q(1), vec![(p, side)])] }
    }

    pub fn scalar(c: Q) -> Self {
        Self { terms: vec![(c, vec![(Prim::Identity, Side::X)])] }
    }

    pub fn plus(mut self, o: Self) -> Self {
        self.terms.extend(o.terms);
        self
    }

    pub fn minus(self, o: Self) -> Self {
        self.plus(o.times(&q(-1)))
    }

    pub fn times(mut self, c: &Q) -> Self {
        for t in &mut self.terms {
            t.0 *= c;
        }
        self
    }

    /// self ∘ o.
    pub fn compose(&self, o: &Self) -> Self {
        let mut terms = Vec::new();
        for (c1, f1) in &self.terms {
            for (c2, f2) in &o.terms {
                let mut f = f1.clone();
                f.extend(f2.iter().cloned());
                terms.push((c1 * c2, f));
            }
        }
        Self { terms }
    }

    /// [self, o].
    pub fn bracket(&self, o: &Self) -> Self {
        self.compose(o).minus(o.compose(self))
    }
}

/// Variables are blocks of n; X occupies 0..n, Y (if present) n..2n.
#[derive(Clone, Debug)]
pub struct Ctx {
    pub k: Q,
    pub n: usize,
}

impl Ctx {
    pub fn new(alpha: &Alpha, n: usize) -> Self {
        Self { k: alpha.k(), n }
    }

    fn p(&self) -> Q {
        &self.k * q(self.n as i64 - 1) + q(1)
    }

    fn offset(&self, side: Side) -> usize {
        match side {
            Side::X => 0,
            Side::Y => self.n,
        }
    }
}

fn u_rs(f: &NVarPoly, r: u32, s: u32, off: usize, n: usize) -> NVarPoly {
    let fact: i64 = (1..=s as i64).product();
    let mut out = NVarPoly::zero(f.nvars());
    for i in off..off + n {
        let mut g = f.clone();
        for _ in 0..s {
            g = g.deriv(i);
        }
        out = out.add(&g.mul_var_pow(i, r));
    }
    out.scale(&Q::new(1.into(), fact.into()))
}

/// Σ_{i<j} (g_i − g_j)/(x_i − x_j).
fn pair_sum(g: &[NVarPoly], off: usize) -> Result<NVarPoly> {
    let mut out = NVarPoly::zero(g[0].nvars());
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            out = out.add(&g[i].sub(&g[j]).div_diff(off + i, off + j)?);
        }
    }
    Ok(out)
}

fn v_r(f: &NVarPoly, r: u32, off: usize, n: usize) -> Result<NVarPoly> {
    if n < 2 {
        return Ok(NVarPoly::zero(f.nvars()));
    }
    let g: Vec<NVarPoly> = (off..off + n).map(|i| f.deriv(i).mul_var_pow(i, r)).collect();
    pair_sum(&g, off)
}

fn lin(parts: &[(Q, NVarPoly)], nvars: usize) -> NVarPoly {
    parts.iter().fold(NVarPoly::zero(nvars), |acc, (c, p)| acc.add(&p.scale(c)))
}

fn apply_prim(p: &Prim, side: Side, f: &NVarPoly, ctx: &Ctx) -> Result<NVarPoly> {
    let off = ctx.offset(side);
    let n = ctx.n;
    let nv = f.nvars();
    let k = &ctx.k;
    let km = k * q(n as i64 - 1);
    let two = q(2);
    let on = |pp: Prim| apply_prim(&pp, side, f, ctx);
    Ok(match p {
        Prim::Identity => f.clone(),
        Prim::U(r, s) => u_rs(f, *r, *s, off, n),
        Prim::V(r) => v_r(f, *r, off, n)?,
        Prim::Delta(r) => lin(&[(two.clone(), u_rs(f, *r, 2, off, n)), (&two * k, v_r(f, *r, off, n)?)], nv),
        Prim::Eps(r) => u_rs(f, r.saturating_sub(1), 1, off, n),
        Prim::Box1 => lin(&[(q(1), on(Prim::Delta(1))?), (-km.clone(), on(Prim::Eps(1))?)], nv),
        Prim::Box2 => lin(&[(Q::new(1.into(), 2.into()), on(Prim::Delta(2))?), (-km.clone(), on(Prim::Eps(2))?)], nv),
        Prim::Eab { a, b } => {
            let pp = ctx.p();
            let big_a = a + &pp;
            let big_c = a + b + &two * &pp;
            lin(
                &[
                    (two.clone(), on(Prim::Box2)?),
                    (q(-1), on(Prim::Box1)?),
                    (big_c, u_rs(f, 1, 1, off, n)),
                    (-big_a, u_rs(f, 0, 1, off, n)),
                ],
                nv,
            )
        }
        Prim::EHermite => lin(&[(q(-2), u_rs(f, 1, 1, off, n)), (two.clone(), u_rs(f, 0, 2, off, n)), (&two * k, v_r(f, 0, off, n)?)], nv),
        Prim::LaplaceE => lin(&[(two.clone(), u_rs(f, 2, 2, off, n)), (q(1), u_rs(f, 1, 1, off, n)), (&two * k, v_r(f, 2, off, n)?)], nv),
        Prim::LaplaceEPrime => {
            let xf: Vec<NVarPoly> = (off..off + n).map(|i| f.mul_var_pow(i, 1)).collect();
            let mut out = NVarPoly::zero(nv);
            for (t, g) in xf.iter().enumerate() {
                let i = off + t;
                out = out.add(&g.deriv(i)).add(&g.deriv(i).deriv(i).mul_var_pow(i, 1));
            }
            if n >= 2 {
                let h: Vec<NVarPoly> = xf.iter().enumerate().map(|(t, g)| g.deriv(off + t).mul_var_pow(off + t, 1)).collect();
                out = out.add(&pair_sum(&h, off)?.scale(&(&two * k)));
            }
            out
        }
        Prim::MulP(r) => {
            let mut pr = NVarPoly::zero(nv);
            for i in off..off + n {
                let mut e = vec![0u32; nv];
                e[i] = *r;
                pr.add_term(e, q(1));
            }
            f.mul(&pr)
        }
        Prim::Phi(kind) => {
            let nq = q(n as i64);
            let d = |r| on(Prim::Delta(r));
            let e = |r| on(Prim::Eps(r));
            match kind {
                PhiKind::P2F1 { a, b, c } => lin(
                    &[
                        (q(1), d(2)?),
                        (q(-1), d(1)?),
                        (a + b + q(1) - &km, e(2)?),
                        (-(c - &km), e(1)?),
                        (a * b * &nq, f.clone()),
                    ],
                    nv,
                ),
                PhiKind::P1F1 { a, c } => lin(&[(q(1), d(1)?), (c - &km, e(1)?), (q(-1), e(2)?), (-(&nq * a), f.clone())], nv),
                PhiKind::P0F1 { c } => lin(&[(q(1), d(1)?), (c - &km, e(1)?), (-nq, f.clone())], nv),
                PhiKind::P1F0 { a } => lin(&[(q(1), e(1)?), (q(-1), e(2)?), (-(&nq * a), f.clone())], nv),
                PhiKind::P0F0 => lin(&[(q(1), e(1)?), (-nq, f.clone())], nv),
            }
        }
    })
}

/// Apply an operator expression exactly.
pub fn apply(op: &OperatorExpr, f: &NVarPoly, ctx: &Ctx) -> Result<NVarPoly> {
    let mut out = NVarPoly::zero(f.nvars());
    for (c, factors) in &op.terms {
        let mut g = f.clone();
        for (p, side) in factors.iter().rev() {
            g = apply_prim(p, *side, &g, ctx)?;
        }
        out = out.add(&g.scale(c));
    }
    if f.nvars() == ctx.n {
        // symmetric in, symmetric out
        out.to_monomial()?;
    }
    Ok(out)
}

/// apply(op, f) − λ f, returned verbatim.
pub fn eigencheck(op: &OperatorExpr, f: &NVarPoly, eigenvalue: &Q, ctx: &Ctx) -> Result<NVarPoly> {
    Ok(apply(op, f, ctx)?.sub(&f.scale(eigenvalue)))
}

fn split_by_degree(f: &NVarPoly) -> BTreeMap<usize, NVarPoly> {
    let mut out: BTreeMap<usize, NVarPoly> = BTreeMap::new();
    for (e, c) in f.terms() {
        let d = e.iter().sum::<u32>() as usize;
        out.entry(d).or_insert_with(|| NVarPoly::zero(f.nvars())).add_term(e.clone(), c.clone());
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeResidual {
    pub degree: usize,
    pub residual_terms: usize,
    pub zero: bool,
}

/// Φ applied to Σ_{d≤D} layers of the matching ₚF_q; residual per output degree d ≤ D−1.
pub fn annihilation_check(kind: &PhiKind, alpha: &Alpha, n: usize, d: usize) -> Result<Vec<DegreeResidual>> {
    let layers = pfq_formal(&kind.params(alpha), d, n)?;
    let ctx = Ctx::new(alpha, n);
    let op = OperatorExpr::prim(Prim::Phi(kind.clone()));
    let mut total = NVarPoly::zero(n);
    for (deg, layer) in layers.iter().enumerate() {
        let img = apply(&op, &NVarPoly::from_monomial(layer), &ctx)?;
        // each layer feeds only its own degree and the one below
        if split_by_degree(&img).keys().any(|&e| e != deg && e + 1 != deg) {
            return Err(Error::Precondition(format!("operator image of degree-{deg} layer leaves degrees {deg}, {}", deg.saturating_sub(1))));
        }
        total = total.add(&img);
    }
    let by = split_by_degree(&total);
    Ok((0..d)
        .map(|deg| {
            let t = by.get(&deg).map(|p| p.terms().len()).unwrap_or(0);
            DegreeResidual { degree: deg, residual_terms: t, zero: t == 0 }
        })
        .collect())
}

pub fn omega_poly(lam: &Partition, alpha: &Alpha, n: usize) -> Result<NVarPoly> {
    Ok(NVarPoly::from_monomial(&jack(lam, alpha, n, Norm::Omega)?))
}

/// Σ_{μ = λ minus one box, ℓ(μ) ≤ n} w(μ) binom(λ,μ) Ω_μ.
fn one_box_sum(lam: &Partition, alpha: &Alpha, n: usize, w: impl Fn(&Partition) -> Result<Q>) -> Result<NVarPoly> {
    let mut out = NVarPoly::zero(n);
    for mu in lam.children() {
        out = out.add(&omega_poly(&mu, alpha, n)?.scale(&(binom(lam, &mu, alpha)? * w(&mu)?)));
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn named(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> NamedCheck {
    NamedCheck { name: name.into(), pass, detail: detail.into() }
}

/// The five eigen- and lowering relations for Ω_λ.
pub fn omega_lowering_checks(lam: &Partition, alpha: &Alpha, n: usize) -> Result<Vec<NamedCheck>> {
    let ctx = Ctx::new(alpha, n);
    let om = omega_poly(lam, alpha, n)?;
    let r = rho(lam, alpha)?;
    let sz = q(lam.size() as i64);
    let one = |p: Prim| apply(&OperatorExpr::prim(p), &om, &ctx);
    let b1 = OperatorExpr::prim(Prim::Box1);
    let b2 = OperatorExpr::prim(Prim::Box2);
    let checks = vec![
        ("box2 eigen", one(Prim::Box2)?.sub(&om.scale(&r))),
        ("eps2 eigen", one(Prim::Eps(2))?.sub(&om.scale(&sz))),
        ("eps1 lowering", one(Prim::Eps(1))?.sub(&one_box_sum(lam, alpha, n, |_| Ok(q(1)))?)),
        ("box1 lowering", one(Prim::Box1)?.sub(&one_box_sum(lam, alpha, n, |mu| rho_skew(lam, mu, alpha))?)),
        (
            "[box1,box2] lowering",
            apply(&b1.bracket(&b2), &om, &ctx)?.sub(&one_box_sum(lam, alpha, n, |mu| {
                let v = rho_skew(lam, mu, alpha)?;
                Ok(&v * &v)
            })?),
        ),
    ];
    Ok(checks.into_iter().map(|(nm, res)| named(format!("{nm} {lam}"), res.is_zero(), format!("{} residual terms", res.terms().len()))).collect())
}

/// □₁ = [ε₁, □₂] on every m_μ with |μ| ≤ d, ℓ(μ) ≤ n.
pub fn commutator_identity(alpha: &Alpha, n: usize, d: usize) -> Result<NamedCheck> {
    let ctx = Ctx::new(alpha, n);
    let lhs = OperatorExpr::prim(Prim::Box1);
    let rhs = OperatorExpr::prim(Prim::Eps(1)).bracket(&OperatorExpr::prim(Prim::Box2));
    let diff = lhs.minus(rhs);
    let mut bad = 0;
    for mu in partitions_upto(d, n) {
        let f = NVarPoly::from_monomial(&MonomialExpansion::from_map([(mu, q(1))].into(), n));
        if !apply(&diff, &f, &ctx)?.is_zero() {
            bad += 1;
        }
    }
    Ok(named(format!("box1 = [eps1, box2] (n={n}, deg<={d})"), bad == 0, format!("{bad} failing monomials")))
}

/// E′ = np + 2Σx_iD_i + E on every m_μ with |μ| ≤ d.
pub fn laplace_consistency(alpha: &Alpha, n: usize, d: usize) -> Result<NamedCheck> {
    let ctx = Ctx::new(alpha, n);
    let np = q(n as i64) * ctx.p();
    let rhs = OperatorExpr::scalar(np).plus(OperatorExpr::prim(Prim::U(1, 1)).times(&q(2))).plus(OperatorExpr::prim(Prim::LaplaceE));
    let diff = OperatorExpr::prim(Prim::LaplaceEPrime).minus(rhs);
    let mut bad = 0;
    for mu in partitions_upto(d, n) {
        let f = NVarPoly::from_monomial(&MonomialExpansion::from_map([(mu, q(1))].into(), n));
        if !apply(&diff, &f, &ctx)?.is_zero() {
            bad += 1;
        }
    }
    Ok(named(format!("E' = np + 2U11 + E (n={n}, deg<={d})"), bad == 0, format!("{bad} failing monomials")))
}

/// Σλ_i(λ_i + 2k(n−i)), the eigenvalue of the Laplace-section E on Ω_λ.
pub fn laplace_eigenvalue(lam: &Partition, alpha: &Alpha, n: usize) -> Q {
    let k = alpha.k();
    lam.parts().iter().enumerate().map(|(i, &l)| q(l as i64) * (q(l as i64) + q(2) * &k * q((n - i - 1) as i64))).sum()
}

/// ε₁e^{p₁} = n e^{p₁}, ε₂e^{p₁} = p₁e^{p₁}, □₁e^{p₁} = p₁e^{p₁}, □₂e^{p₁} = ½p₂e^{p₁},
/// [□₁,□₂]e^{p₁} = ((k(n−1)+1)p₁ + p₂)e^{p₁}; compared in degrees where both sides are complete.
pub fn exp_p1_checks(alpha: &Alpha, n: usize, d: usize) -> Result<Vec<NamedCheck>> {
    let ctx = Ctx::new(alpha, n);
    let exp = PowerSumElement::p(1).exp(d);
    let e = NVarPoly::from_monomial(&p_to_m(&exp, n));
    let mulp = |r: u32| OperatorExpr::prim(Prim::MulP(r));
    let b1 = OperatorExpr::prim(Prim::Box1);
    let b2 = OperatorExpr::prim(Prim::Box2);
    let cases: Vec<(&str, OperatorExpr, OperatorExpr)> = vec![
        ("eps1 e^p1", OperatorExpr::prim(Prim::Eps(1)), OperatorExpr::scalar(q(n as i64))),
        ("eps2 e^p1", OperatorExpr::prim(Prim::Eps(2)), mulp(1)),
        ("box1 e^p1", b1.clone(), mulp(1)),
        ("box2 e^p1", b2.clone(), mulp(2).times(&Q::new(1.into(), 2.into()))),
        ("[box1,box2] e^p1", b1.bracket(&b2), mulp(1).times(&ctx.p()).plus(mulp(2))),
    ];
    let mut out = Vec::new();
    for (nm, lhs, rhs) in cases {
        let res = apply(&lhs, &e, &ctx)?.sub(&apply(&rhs, &e, &ctx)?);
        // truncation pollutes degrees ≥ d
        let bad = res.terms().keys().filter(|ex| (ex.iter().sum::<u32>() as usize) < d.saturating_sub(1)).count();
        out.push(named(nm, bad == 0, format!("{bad} residual terms below degree {}", d - 1)));
    }
    Ok(out)
}

/// α Σ_λ binom(λ,μ) ρ(λ/μ)^r J*_λ(1_n) for r = 0, 1, 2 against its closed form.
pub fn jstar_sum_checks(mu: &Partition, alpha: &Alpha, n: usize) -> Result<Vec<NamedCheck>> {
    let k = alpha.k();
    let jm = jstar_at_ones(mu, alpha, n)?;
    let nq = q(n as i64);
    let sz = q(mu.size() as i64);
    let targets = [&nq * &k * &jm, &sz * &k * &jm, (alpha.p(n) * &sz + q(2) * rho(mu, alpha)?) * &k * &jm];
    let mut out = Vec::new();
    for (r, target) in targets.iter().enumerate() {
        let mut s = Q::zero();
        for lam in mu.parents(n) {
            let rs = rho_skew(&lam, mu, alpha)?;
            let w: Q = (0..r).map(|_| rs.clone()).product();
            s += binom(&lam, mu, alpha)? * w * jstar_at_ones(&lam, alpha, n)?;
        }
        out.push(named(format!("jstar sum r={} {mu}", r), &s == target, format!("lhs={} rhs={}", fmt_q(&s), fmt_q(target))));
    }
    Ok(out)
}

/// One row of the two-argument kernel operator table.
#[derive(Clone, Debug, PartialEq)]
pub enum KernelRow {
    E00,
    E10 { a: Q },
    E01 { c: Q },
    E11 { a: Q, c: Q },
    E21 { a: Q, b: Q, c: Q },
}

impl KernelRow {
    fn params(&self, alpha: &Alpha) -> HyperParams {
        let (u, l) = match self {
            KernelRow::E00 => (vec![], vec![]),
            KernelRow::E10 { a } => (vec![a.clone()], vec![]),
            KernelRow::E01 { c } => (vec![], vec![c.clone()]),
            KernelRow::E11 { a, c } => (vec![a.clone()], vec![c.clone()]),
            KernelRow::E21 { a, b, c } => (vec![a.clone(), b.clone()], vec![c.clone()]),
        };
        HyperParams::new(u, l, alpha.clone())
    }

    /// δ₃ is read as Σ x_i³D_i² + 2kΣ x_i³D_i/(x_i−x_j), matching the other δ_r.
    pub fn operator(&self, alpha: &Alpha, n: usize) -> OperatorExpr {
        let km = alpha.k() * q(n as i64 - 1);
        let x = |p| OperatorExpr::on(p, Side::X);
        let y = |p| OperatorExpr::on(p, Side::Y);
        let d1x = x(Prim::Delta(1));
        let e1x = x(Prim::Eps(1));
        let e3y = y(Prim::Eps(3));
        let d3y = y(Prim::Delta(3));
        let p1y = y(Prim::MulP(1));
        match self {
            KernelRow::E00 => d1x.minus(e3y).minus(p1y.times(&km)),
            KernelRow::E10 { a } => d1x.minus(d3y).minus(e3y.times(&(a + q(1) - &km))).minus(p1y.times(&(a * &km))),
            KernelRow::E01 { c } => d1x.plus(e1x.times(&(c - &km))).minus(p1y),
            KernelRow::E11 { a, c } => d1x.plus(e1x.times(&(c - &km))).minus(e3y).minus(p1y.times(a)),
            // ε₃ coefficient a+b+1−2k(n−1); the bare a+b fails already at n = 1
            KernelRow::E21 { a, b, c } => {
                let u = a + b + q(1) - q(2) * &km;
                d1x.plus(e1x.times(&(c - &km))).minus(e3y.times(&u)).minus(d3y).minus(p1y.times(&(a * b)))
            }
        }
    }
}

/// Apply a kernel-table row to the exact two-argument series and report whether
/// the image vanishes where the truncation is complete (x-degree < D).
pub fn kernel_row_check(row: &KernelRow, alpha: &Alpha, n: usize, d: usize) -> Result<NamedCheck> {
    let series = pfq_two_formal(&row.params(alpha), d, n)?;
    let mut f = NVarPoly::zero(2 * n);
    for ((mx, my), c) in series.project(n) {
        let px = NVarPoly::from_monomial_block(&MonomialExpansion::from_map([(mx, q(1))].into(), n), 2 * n, 0, n);
        let py = NVarPoly::from_monomial_block(&MonomialExpansion::from_map([(my, q(1))].into(), n), 2 * n, n, n);
        f = f.add(&px.mul(&py).scale(&c));
    }
    let img = apply(&row.operator(alpha, n), &f, &Ctx::new(alpha, n))?;
    let bad = img.terms().keys().filter(|e| (e[..n].iter().sum::<u32>() as usize) < d).count();
    Ok(named(format!("{row:?}"), bad == 0, format!("{bad} residual terms with x-degree < {d}")))
}

/// Σ_{|λ|=m} ... helper used by tests: the Ω_λ for all λ ⊢ m, ℓ ≤ n.
pub fn omegas_of_degree(m: usize, alpha: &Alpha, n: usize) -> Result<Vec<(Partition, NVarPoly)>> {
    partitions(m, n).into_iter().map(|l| Ok((l.clone(), omega_poly(&l, alpha, n)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ortho::{hermite, jacobi};
    use crate::rational::qr;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn eps2_and_box2() {
        let al = Alpha::int(2);
        for c in omega_lowering_checks(&p(&[2, 1]), &al, 3).unwrap() {
            assert!(c.pass, "{c:?}");
        }
        for c in omega_lowering_checks(&p(&[3]), &Alpha::ratio(3, 2), 2).unwrap() {
            assert!(c.pass, "{c:?}");
        }
    }

    #[test]
    fn jacobi_eigen() {
        let al = Alpha::ratio(3, 2);
        let n = 2;
        let (a, b) = (qr(1, 2), qr(1, 3));
        let lam = p(&[2]);
        let g = jacobi(&lam, &a, &b, &al, n).unwrap().to_poly().unwrap();
        let ctx = Ctx::new(&al, n);
        let ev = (&a + &b + q(2) * al.p(n)) * q(2) + q(2) * rho(&lam, &al).unwrap();
        let r = eigencheck(&OperatorExpr::prim(Prim::Eab { a, b }), &g, &ev, &ctx).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn hermite_eigen() {
        let al = Alpha::int(2);
        let h = hermite(&p(&[1, 1]), &al, 2).unwrap().to_poly().unwrap();
        let r = eigencheck(&OperatorExpr::prim(Prim::EHermite), &h, &q(-4), &Ctx::new(&al, 2)).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn phi_annihilates() {
        let al = Alpha::int(2);
        let k = PhiKind::P2F1 { a: qr(1, 3), b: qr(5, 2), c: qr(7, 4) };
        assert!(annihilation_check(&k, &al, 2, 5).unwrap().iter().all(|r| r.zero));
        let k = PhiKind::P0F1 { c: qr(9, 5) };
        assert!(annihilation_check(&k, &Alpha::int(1), 3, 4).unwrap().iter().all(|r| r.zero));
    }

    #[test]
    fn asymmetric_input_rejected() {
        let f = NVarPoly::var(2, 0);
        assert!(apply(&OperatorExpr::prim(Prim::V(1)), &f, &Ctx::new(&Alpha::int(1), 2)).is_err());
    }

    #[test]
    fn exp_and_jstar_sums_and_consistency() {
        for al in [Alpha::int(1), Alpha::int(2), Alpha::ratio(3, 2)] {
            for n in 1..=3 {
                assert!(exp_p1_checks(&al, n, 6).unwrap().iter().all(|c| c.pass));
                for mu in partitions_upto(3, n) {
                    assert!(jstar_sum_checks(&mu, &al, n).unwrap().iter().all(|c| c.pass));
                }
                assert!(commutator_identity(&al, n, 4).unwrap().pass);
                assert!(laplace_consistency(&al, n, 4).unwrap().pass);
                for lam in partitions_upto(3, n) {
                    let om = omega_poly(&lam, &al, n).unwrap();
                    let r = eigencheck(&OperatorExpr::prim(Prim::LaplaceE), &om, &laplace_eigenvalue(&lam, &al, n), &Ctx::new(&al, n)).unwrap();
                    assert!(r.is_zero(), "{lam}");
                }
            }
        }
    }

    #[test]
    fn kernel_rows() {
        let (a, b, c) = (qr(1, 3), qr(2, 5), qr(7, 3));
        let rows = [
            KernelRow::E00,
            KernelRow::E10 { a: a.clone() },
            KernelRow::E01 { c: c.clone() },
            KernelRow::E11 { a: a.clone(), c: c.clone() },
            KernelRow::E21 { a, b, c },
        ];
        for al in [Alpha::int(2), Alpha::ratio(3, 2)] {
            for n in 1..=3 {
                for row in &rows {
                    let r = kernel_row_check(row, &al, n, 4).unwrap();
                    assert!(r.pass, "{r:?}");
                }
            }
        }
    }

    #[test]
    fn e00_row() {
        let c = kernel_row_check(&KernelRow::E00, &Alpha::int(2), 2, 4).unwrap();
        assert!(c.pass, "{c:?}");
    }
}

