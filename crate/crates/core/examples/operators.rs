use mhyperg::diffops::{annihilation_check, eigencheck, laplace_eigenvalue, omega_lowering_checks, omega_poly, Ctx, OperatorExpr, PhiKind, Prim};
use mhyperg::ortho::hermite;
use mhyperg::rational::{fmt_q, q, qr};
use mhyperg::{Alpha, Partition};

fn main() -> mhyperg::Result<()> {
    let alpha = Alpha::ratio(1, 2);
    let n = 3;
    let ctx = Ctx::new(&alpha, n);

    for lam in ["1", "2,1", "2,2", "3,1"] {
        let lam = Partition::parse(lam)?;
        let om = omega_poly(&lam, &alpha, n)?;
        let ev = laplace_eigenvalue(&lam, &alpha, n);
        let r = eigencheck(&OperatorExpr::prim(Prim::LaplaceE), &om, &ev, &ctx)?;
        let h = hermite(&lam, &alpha, n)?.to_poly()?;
        let rh = eigencheck(&OperatorExpr::prim(Prim::EHermite), &h, &q(-2 * lam.size() as i64), &ctx)?;
        println!("{lam}: Laplace eigenvalue {} (residual zero: {})  Hermite residual zero: {}", fmt_q(&ev), r.is_zero(), rh.is_zero());
        for c in omega_lowering_checks(&lam, &alpha, n)? {
            println!("    {:<24} {}", c.name, if c.pass { "ok" } else { "FAIL" });
        }
    }

    let kind = PhiKind::P2F1 { a: qr(1, 3), b: qr(2, 7), c: qr(9, 4) };
    for r in annihilation_check(&kind, &alpha, n, 5)? {
        println!("Phi(2F1) degree {}: {} residual terms", r.degree, r.residual_terms);
    }

    // [U(0,1), MulP(1)] acts as multiplication by n
    let u = OperatorExpr::prim(Prim::U(0, 1));
    let p1 = OperatorExpr::prim(Prim::MulP(1));
    let f = omega_poly(&Partition::parse("2")?, &alpha, n)?;
    let r = eigencheck(&u.bracket(&p1), &f, &q(n as i64), &ctx)?;
    println!("[sum D_i, p1] = n on Omega_(2): {}", r.is_zero());
    Ok(())
}
