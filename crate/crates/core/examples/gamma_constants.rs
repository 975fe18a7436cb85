use mhyperg::special::{beta_n, c_n_prime, gamma, gamma_n, gamma_n_lam};
use mhyperg::{Alpha, Partition};

fn main() -> mhyperg::Result<()> {
    println!("Gamma(1/2)^2 = {:.15}  (pi = {:.15})", gamma(0.5)?.powi(2), std::f64::consts::PI);
    let lam = Partition::parse("2,1")?;
    for alpha in [Alpha::ratio(1, 2), Alpha::int(1), Alpha::int(2)] {
        for n in 1..=3 {
            println!(
                "alpha={alpha} n={n}: Gamma_n(6.5) = {:.6e}  Gamma_n(6.5; {lam}) = {:.6e}  B_n(6.5,5.5) = {:.6e}  c'_n = {:.6}",
                gamma_n(6.5, &alpha, n)?,
                gamma_n_lam(6.5, &lam, &alpha, n)?,
                beta_n(6.5, 5.5, &alpha, n)?,
                c_n_prime(&alpha, n)?
            );
        }
    }
    // poles come back as errors, not infinities
    match gamma(-2.0) {
        Err(e) => println!("Gamma(-2): {e}"),
        Ok(v) => println!("Gamma(-2) = {v}?"),
    }
    Ok(())
}
