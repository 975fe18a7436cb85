use mhyperg::rational::{fmt_q, q};
use mhyperg::symfun::{inner_product, m_to_p, omega_alpha, p_to_m, PowerSumElement};
use mhyperg::Alpha;

fn main() -> mhyperg::Result<()> {
    let alpha = Alpha::int(2);
    // (p1 + p2)^2 in the power-sum basis
    let f = PowerSumElement::p(1).add(&PowerSumElement::p(2)).pow(2);
    for (lam, c) in f.coeffs() {
        println!("p{lam}: {}", fmt_q(c));
    }

    let m = p_to_m(&f, 3);
    println!("\nin three variables, monomial basis:");
    for (mu, c) in m.coeffs() {
        println!("  m{mu}: {}", fmt_q(c));
    }
    assert!(m_to_p(&m).sub(&f).is_zero(), "round trip through m lost terms");

    let w = omega_alpha(&f, &alpha)?;
    println!("\n<f, f>_alpha = {}", fmt_q(&inner_product(&f, &f, &alpha)?));
    println!("<f, omega f>_alpha = {}", fmt_q(&inner_product(&f, &w, &alpha)?));
    println!("f at x=(1,2,3): {}", f.eval_q(&[q(1), q(2), q(3)]));
    Ok(())
}
