//! Jack polynomials and hypergeometric functions of matrix argument.
//!
//! - [`partition`]: partitions, hook products, generalized Pochhammer symbols
//! - [`symfun`]: exact symmetric functions in the power-sum and monomial bases
//! - [`jack`]: Jack polynomials, skew elements, binomial coefficients
//! - [`poly`]: explicit n-variable polynomials
//! - [`special`]: gamma-type constants
//! - [`series`]: one- and two-argument pFq series, the exponential kernel
//! - [`identities`]: exact and numeric identity checks
//! - [`ortho`]: Laguerre, Jacobi, Hermite and Bessel families
//! - [`diffops`]: differential operators and eigenfunction checks
//! - [`mc`]: beta-ensemble Monte Carlo
//! - [`suite`]: suites, reports and tables behind the `mhyperg` binary

pub mod diffops;
pub mod error;
pub mod identities;
pub mod jack;
pub mod mc;
pub mod ortho;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod series;
pub mod special;
pub mod suite;
pub mod symfun;

pub use error::{Error, Result};
pub use partition::{Alpha, Partition};
pub use rational::Q;
