//! Multivariate gamma and beta constants built from scalar Γ.
//!
//! Scalar Γ comes from `statrs` (Lanczos, g = 607/128, relative error
//! around 1e−15 on the positive axis; reflection below 1/2).

use crate::error::{Error, Result};
use crate::partition::{Alpha, Partition};

pub fn gamma(x: f64) -> Result<f64> {
    if x <= 0.0 && x == x.floor() {
        return Err(Error::GammaPole(x));
    }
    Ok(statrs::function::gamma::gamma(x))
}

/// Γ_n(a) = ∏_{i=1}^n Γ(a − k(i−1)).
pub fn gamma_n(a: f64, alpha: &Alpha, n: usize) -> Result<f64> {
    let k = alpha.k_f64();
    (0..n).map(|i| gamma(a - k * i as f64)).product()
}

/// Γ_n(a; λ) = ∏ Γ(a + λ_i − k(i−1)) = (a)_λ Γ_n(a).
pub fn gamma_n_lam(a: f64, lam: &Partition, alpha: &Alpha, n: usize) -> Result<f64> {
    let k = alpha.k_f64();
    (0..n).map(|i| gamma(a + lam.part(i + 1) as f64 - k * i as f64)).product()
}

pub fn beta_n(a: f64, b: f64, alpha: &Alpha, n: usize) -> Result<f64> {
    Ok(gamma_n(a, alpha, n)? * gamma_n(b, alpha, n)? / gamma_n(a + b, alpha, n)?)
}

/// c′_n = ∏_{i=1}^n Γ(ik+1)/Γ(k+1).
pub fn c_n_prime(alpha: &Alpha, n: usize) -> Result<f64> {
    let k = alpha.k_f64();
    (1..=n).map(|i| Ok(gamma(i as f64 * k + 1.0)? / gamma(k + 1.0)?)).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::gen_pochhammer_f64;

    #[test]
    fn one_variable() {
        let a = Alpha::ratio(3, 7);
        assert_eq!(gamma_n(2.5, &a, 1).unwrap(), gamma(2.5).unwrap());
        assert!((c_n_prime(&a, 1).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn pochhammer_factorization() {
        let a = Alpha::int(2);
        let lam = Partition::new(vec![3, 1]).unwrap();
        let lhs = gamma_n_lam(2.3, &lam, &a, 3).unwrap();
        let rhs = gen_pochhammer_f64(2.3, &lam, &a) * gamma_n(2.3, &a, 3).unwrap();
        assert!((lhs / rhs - 1.0).abs() < 1e-13);
    }

    #[test]
    fn zonal_constant() {
        // c′_n = n! Γ_n(n/2) / π^{n/2} at α = 2
        let a = Alpha::int(2);
        for n in 1..=4 {
            let lhs = c_n_prime(&a, n).unwrap();
            let nf: f64 = (1..=n).map(|t| t as f64).product();
            let rhs = nf * gamma_n(n as f64 / 2.0, &a, n).unwrap() / std::f64::consts::PI.powf(n as f64 / 2.0);
            assert!((lhs / rhs - 1.0).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn poles_reported() {
        assert_eq!(gamma(-2.0), Err(Error::GammaPole(-2.0)));
        assert!(gamma_n(1.0, &Alpha::int(1), 2).is_err());
    }
}
