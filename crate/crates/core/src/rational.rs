//! Exact rationals and the small scalar trait shared by exact and float kernels.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::{BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Accepts "3", "-2/7" and terminating decimals such as "0.25" or "1e-3".
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Q::new(n, d));
    }
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let neg = mant.starts_with('-');
    let mant = mant.trim_start_matches(['-', '+']);
    let (ip, fp) = mant.split_once('.').unwrap_or((mant, ""));
    if ip.is_empty() && fp.is_empty() {
        return Err(bad());
    }
    let digits = format!("{ip}{fp}");
    let num: BigInt = digits.parse().map_err(|_| bad())?;
    let scale = exp - fp.len() as i32;
    let ten = BigInt::from(10);
    let mut v = Q::from_integer(num);
    if scale >= 0 {
        v *= Q::from_integer(num::pow(ten, scale as usize));
    } else {
        v /= Q::from_integer(num::pow(ten, (-scale) as usize));
    }
    Ok(if neg { -v } else { v })
}

pub fn parse_q_list(s: &str) -> Result<Vec<Q>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_q).collect()
}

/// "num/den", or just "num" for integers.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn qpow(x: &Q, e: i64) -> Q {
    if e >= 0 {
        num::pow(x.clone(), e as usize)
    } else {
        num::pow(x.recip(), (-e) as usize)
    }
}

pub fn is_nonpos_int(x: &Q) -> bool {
    x.is_integer() && !x.is_positive()
}

/// Field operations needed by kernels that run both exactly and in floating point.
pub trait Scalar:
    Clone
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn nil() -> Self;
    fn unit() -> Self;
    fn from_q(x: &Q) -> Self;
    fn from_i64(n: i64) -> Self {
        Self::from_q(&q(n))
    }
    fn vanishes(&self) -> bool;
}

impl Scalar for f64 {
    fn nil() -> Self {
        0.0
    }
    fn unit() -> Self {
        1.0
    }
    fn from_q(x: &Q) -> Self {
        to_f64(x)
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn vanishes(&self) -> bool {
        *self == 0.0
    }
}

impl Scalar for Q {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn from_q(x: &Q) -> Self {
        x.clone()
    }
    fn from_i64(n: i64) -> Self {
        q(n)
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Neumaier compensated sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_q("0.25").unwrap(), qr(1, 4));
        assert_eq!(parse_q("-3/6").unwrap(), qr(-1, 2));
        assert_eq!(parse_q("1e-2").unwrap(), qr(1, 100));
        assert_eq!(parse_q("2.5E1").unwrap(), q(25));
        assert!(parse_q("x").is_err());
        assert!(parse_q("1/0").is_err());
    }

    #[test]
    fn formatting() {
        assert_eq!(fmt_q(&qr(6, 4)), "3/2");
        assert_eq!(fmt_q(&q(-7)), "-7");
    }
}
