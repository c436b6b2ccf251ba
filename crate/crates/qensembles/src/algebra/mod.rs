//! Exact arithmetic: rationals, dense polynomials, and rational functions
//! in a single base variable.
//!
//! Everything downstream (q-series, ensemble moments, operator algebra)
//! reduces to arithmetic in the field Q(q) of rational functions over the
//! rationals. The base variable is abstract; Stieltjes-Wigert computations
//! use it as s with q = s^2 so that half-integer powers of q stay exact.
//!
//! * [`Rat`]: arbitrary-precision rational scalar.
//! * [`PolyQ`]: dense univariate polynomial over [`Rat`].
//! * [`RatFuncQ`]: quotient of two [`PolyQ`] kept in canonical reduced form.
//! * [`linalg`]: determinants and linear solves over [`RatFuncQ`].
//! * [`XPoly`]: polynomial in a second (spectral) variable with [`RatFuncQ`]
//!   coefficients.

mod poly;
mod ratfunc;
mod xpoly;

pub mod linalg;

pub use poly::PolyQ;
pub use ratfunc::RatFuncQ;
pub use xpoly::XPoly;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational scalar.
///
/// `num_rational::BigRational` keeps values reduced after every operation,
/// which is exactly the canonical-form invariant the crate relies on for
/// equality tests.
pub type Rat = BigRational;

/// The integer `n` as a [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The fraction `n/d` as a [`Rat`].
///
/// # Panics
///
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Errors surfaced by exact-arithmetic helpers.
#[derive(Debug, thiserror::Error)]
pub enum AlgebraError {
    /// Evaluation at the base point 1 hit a genuine pole.
    #[error("pole at the base point 1: {0}")]
    PoleAtOne(String),
    /// A linear system had no unique solution.
    #[error("singular linear system")]
    Singular,
}
