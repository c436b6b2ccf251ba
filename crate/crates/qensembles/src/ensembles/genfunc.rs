//! Moment generating functions in the particle number.
//!
//! For fixed moment order the sequence `N -> m_(k,N)` has a rational
//! generating function: a ratio of polynomials in a bookkeeping variable z
//! whose coefficients live in Q(q). [`RationalGF`] holds such a ratio,
//! [`taylor`] recovers the sequence from it through the denominator's
//! linear recurrence, and [`residue_at_simple_pole`] extracts partial
//! fraction data, which downstream code uses to read off the exponential
//! structure of the moments in N.
//!
//! The closed products built here are
//!
//! ```text
//! sum_(N>=1) (q^(2k) z)^N m_(k,N)  = s^(3k-k^2) z (q^(k+1) z;q)_(k-1)
//!                                    / ((1-z)(qz;q)_k)       Stieltjes-Wigert
//! sum_(N>=1) z^N m_(2k,N)  = z(1+z) ((qz)^2;q^2)_(k-1) (q;q^2)_k
//!                            / ((1-z)(qz;q)_(2k))            discrete q-Hermite
//! sum_(N>=1) z^N m_(2k,N)  = (2k-1)!! z (1+z)^k / (1-z)^(k+2)   Gaussian
//! ```
//!
//! with the Gaussian one stated for the weight exp(-x^2/2). A variant of
//! the Stieltjes-Wigert product without its leading factor `s^k` is kept
//! alongside, since the two differ by exactly that monomial and the audit
//! tracks the discrepancy.

use crate::algebra::{RatFuncQ, XPoly};
use crate::qseries;


/// A ratio of polynomials in z over Q(q), with nonvanishing constant
/// denominator term so Taylor coefficients are defined.
#[derive(Clone, Debug)]
pub struct RationalGF {
    pub num: XPoly,
    pub den: XPoly,
}

/// First `count` Taylor coefficients of `gf` around z = 0.
///
/// # Panics
///
/// Panics if the denominator vanishes at z = 0.
pub fn taylor(gf: &RationalGF, count: usize) -> Vec<RatFuncQ> {
    let d0 = gf.den.coeff(0);
    assert!(!d0.is_zero(), "denominator vanishes at z = 0");
    let mut out: Vec<RatFuncQ> = Vec::with_capacity(count);
    for n in 0..count {
        let mut c = gf.num.coeff(n);
        let reach = n.min(gf.den.degree().unwrap_or(0));
        for i in 1..=reach {
            c = &c - &(&gf.den.coeff(i) * &out[n - i]);
        }
        out.push(&c / &d0);
    }
    out
}

/// Residue of `gf` at a simple pole `z0`: num(z0) / den'(z0).
///
/// # Panics
///
/// Panics unless `z0` is a simple zero of the denominator.
pub fn residue_at_simple_pole(gf: &RationalGF, z0: &RatFuncQ) -> RatFuncQ {
    assert!(gf.den.eval(z0).is_zero(), "not a pole");
    let d = gf.den.derivative().eval(z0);
    assert!(!d.is_zero(), "pole is not simple");
    &gf.num.eval(z0) / &d
}

/// The polynomial `prod_(i=0)^(n-1) (1 - first * ratio^i * z^step)`.
pub fn pochhammer_poly(first: &RatFuncQ, ratio: &RatFuncQ, n: u64, step: usize) -> XPoly {
    let mut acc = XPoly::one();
    let mut factor = first.clone();
    for _ in 0..n {
        let mut term = XPoly::one();
        term = &term - &XPoly::monomial(factor.clone(), step);
        acc = &acc * &term;
        factor = &factor * ratio;
    }
    acc
}

/// Stieltjes-Wigert generating function of `N -> q^(2kN) m_(k,N)`,
/// in the base variable s with q = s^2. The z^N coefficient is exactly
/// `q^(2kN) m_(k,N)`.
pub fn sw_generating_function(k: u64) -> RationalGF {
    let mut gf = sw_generating_function_unnormalized(k);
    // Leading monomial s^(3k - k^2).
    let lead = RatFuncQ::q_pow(3 * k as i64 - (k * k) as i64);
    gf.num = gf.num.scale(&lead);
    gf
}

/// The same product with leading monomial `s^(2k - k^2)` instead, which
/// undershoots the moment data by exactly `s^k`.
pub fn sw_generating_function_variant(k: u64) -> RationalGF {
    let mut gf = sw_generating_function_unnormalized(k);
    let lead = RatFuncQ::q_pow(2 * k as i64 - (k * k) as i64);
    gf.num = gf.num.scale(&lead);
    gf
}

fn sw_generating_function_unnormalized(k: u64) -> RationalGF {
    assert!(k > 0);
    let q = RatFuncQ::variable().pow(2);
    let num = pochhammer_poly(&q.pow(k as i64 + 1), &q, k - 1, 1).shift_up(1);
    let one_minus_z = &XPoly::one() - &XPoly::variable();
    let den = &one_minus_z * &pochhammer_poly(&q, &q, k, 1);
    RationalGF { num, den }
}

/// Discrete q-Hermite generating function of `N -> m_(2k,N)`.
pub fn dqh_generating_function(k: u64) -> RationalGF {
    assert!(k > 0);
    let q = RatFuncQ::variable();
    let q2 = q.pow(2);
    let tail = qseries::pochhammer(&q, &q2, k as i64);
    let one_plus_z = &XPoly::one() + &XPoly::variable();
    let num = (&one_plus_z * &pochhammer_poly(&q2, &q2, k - 1, 2))
        .shift_up(1)
        .scale(&tail);
    let one_minus_z = &XPoly::one() - &XPoly::variable();
    let den = &one_minus_z * &pochhammer_poly(&q, &q, 2 * k, 1);
    RationalGF { num, den }
}

/// Gaussian generating function of `N -> m_(2k,N)` in the exp(-x^2/2)
/// convention: `(2k-1)!! z (1+z)^k / (1-z)^(k+2)`. Coefficients are
/// rational constants.
pub fn gaussian_generating_function(k: u64) -> RationalGF {
    assert!(k > 0);
    let one_plus_z = &XPoly::one() + &XPoly::variable();
    let one_minus_z = &XPoly::one() - &XPoly::variable();
    let mut num = XPoly::one();
    let mut den = XPoly::one();
    for _ in 0..k {
        num = &num * &one_plus_z;
        den = &den * &one_minus_z;
    }
    den = &(&den * &one_minus_z) * &one_minus_z;
    let df = RatFuncQ::constant(qseries::double_factorial(2 * k as i64 - 1));
    RationalGF {
        num: num.shift_up(1).scale(&df),
        den,
    }
}
