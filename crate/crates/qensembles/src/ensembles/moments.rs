//! Density moments: hook-sum route and per-ensemble closed forms.
//!
//! The k-th moment of the N-particle density expands over hook-shaped Schur
//! averages,
//!
//! ```text
//! m_(k,N) = sum_(r=0)^(min(k-1,N-1)) (-1)^r <s_((k-r,1^r))>,
//! ```
//!
//! which ties the moment route to the Schur route. The closed forms below
//! are independent evaluations of `m_(k,N)` for each weight: q-binomial
//! sums, terminating q-hypergeometric series, and classical hypergeometric
//! values for the two limit ensembles. Every function here is checked in
//! the tests against [`Ensemble::density_moment_oracle`], which knows
//! nothing beyond the weight moments.

use super::{Ensemble, Partition};
use crate::algebra::{rat_int, Rat, RatFuncQ};
use crate::qseries;
use num_traits::{One, Zero};


/// Moment via the alternating sum of hook-shaped Schur averages, using the
/// determinant oracle for each average.
pub fn hook_moment_sum(ens: &Ensemble, k: u64, n: usize) -> RatFuncQ {
    assert!(k > 0, "hook shapes need k >= 1");
    let r_max = (k - 1).min(n as u64 - 1);
    let mut acc = RatFuncQ::zero();
    for r in 0..=r_max {
        let term = super::schur::schur_average_oracle(ens, &Partition::hook(k, r), n);
        acc = if r % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Stieltjes-Wigert moment through a little q-Jacobi polynomial evaluated
/// in base 1/q:
///
/// ```text
/// m_(k,N) = -q^(-(N-1/2)k) (-q^(-1/2))^k / (1 - q^(-k))
///           * p_k(q^(-N); 1, q | q^(-1))
/// ```
///
/// written in the base variable s with q = s^2.
pub fn sw_moment_qjacobi(k: u64, n: usize) -> RatFuncQ {
    assert!(k > 0);
    let s = RatFuncQ::variable();
    let q = s.pow(2);
    let q_inv = s.pow(-2);
    let poly = qseries::little_q_jacobi(
        k as i64,
        &q.pow(-(n as i64)),
        &RatFuncQ::one(),
        &q,
        &q_inv,
    )
    .expect("terminating by construction");
    // -q^(-(N-1/2)k) (-q^(-1/2))^k / (1-q^(-k)) = -(-1)^k s^(-2Nk)/(1-s^(-2k))
    let sign = if k % 2 == 0 { -1 } else { 1 };
    let numerator = &RatFuncQ::integer(sign) * &s.pow(-2 * n as i64 * k as i64);
    let denominator = &RatFuncQ::one() - &s.pow(-2 * k as i64);
    &(&numerator / &denominator) * &poly
}

/// Stieltjes-Wigert moment as a q-binomial sum in base 1/q:
///
/// ```text
/// q^((N-1/2)k) m_(k,N) = sum_(r=0)^(k-1) (-1)^r q^(-(k-r)^2/2 - r/2)
///     qbinom(N+k-r-1, k; 1/q) qbinom(k-1, r; 1/q)
/// ```
pub fn sw_moment_sum_inverse_base(k: u64, n: usize) -> RatFuncQ {
    assert!(k > 0);
    let s = RatFuncQ::variable();
    let q_inv = s.pow(-2);
    let mut acc = RatFuncQ::zero();
    for r in 0..k {
        let e = -(((k - r) * (k - r)) as i64) - r as i64;
        let mut term = &RatFuncQ::q_pow(e)
            * &qseries::q_binomial(n as i64 + k as i64 - r as i64 - 1, k as i64, &q_inv);
        term = &term * &qseries::q_binomial(k as i64 - 1, r as i64, &q_inv);
        acc = if r % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    // Divide off q^((N-1/2)k) = s^((2N-1)k).
    &acc * &s.pow(-((2 * n as i64 - 1) * k as i64))
}

/// The same Stieltjes-Wigert moment sum rewritten in base q:
///
/// ```text
/// q^((N-1/2)k) m_(k,N) = q^(-kN-(k^2-2k)/2) sum_(r=0)^(k-1) (-1)^r
///     q^((r^2+r)/2 + kr) qbinom(N+k-r-1, k; q) qbinom(k-1, r; q)
/// ```
pub fn sw_moment_sum_base_q(k: u64, n: usize) -> RatFuncQ {
    assert!(k > 0);
    let s = RatFuncQ::variable();
    let q = s.pow(2);
    let mut acc = RatFuncQ::zero();
    for r in 0..k {
        let e = ((r * r + r) / 2 + k * r) as i64;
        let mut term = &q.pow(e)
            * &qseries::q_binomial(n as i64 + k as i64 - r as i64 - 1, k as i64, &q);
        term = &term * &qseries::q_binomial(k as i64 - 1, r as i64, &q);
        acc = if r % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    // Prefactors: q^(-kN-(k^2-2k)/2) from the rewrite, then divide off
    // q^((N-1/2)k); jointly s^(-4Nk - k^2 + 3k).
    let e = -4 * (n as i64) * (k as i64) - (k * k) as i64 + 3 * k as i64;
    &acc * &s.pow(e)
}

/// Discrete q-Hermite even moment as an alternating q-binomial sum:
///
/// ```text
/// m_(2k,N) = sum_(r=0)^(2k-1) (-1)^(r+floor((r+1)/2)) q^(floor(r/2)(floor(r/2)+1))
///     qbinom(N+2k-r-1, 2k; q) qbinom(k-1, floor(r/2); q^2) (q;q^2)_k
/// ```
pub fn dqh_moment_closed(k: u64, n: usize) -> RatFuncQ {
    assert!(k > 0);
    let q = RatFuncQ::variable();
    let q2 = q.pow(2);
    let tail = qseries::pochhammer(&q, &q2, k as i64);
    let mut acc = RatFuncQ::zero();
    for r in 0..(2 * k) {
        let half = (r / 2) as i64;
        let mut term = &q.pow(half * (half + 1))
            * &qseries::q_binomial(n as i64 + 2 * k as i64 - r as i64 - 1, 2 * k as i64, &q);
        term = &term * &qseries::q_binomial(k as i64 - 1, half, &q2);
        term = &term * &tail;
        let negate = (r + (r + 1) / 2) % 2 == 1;
        acc = if negate { &acc - &term } else { &acc + &term };
    }
    acc
}

/// Discrete q-Hermite second moment in fully expanded form:
///
/// ```text
/// m_(2,N) = (q^(2N)(q + 1/q) - q^N (q + 2 + 1/q) + 2) / (1 - q^2)
/// ```
pub fn dqh_second_moment_explicit(n: usize) -> RatFuncQ {
    let q = RatFuncQ::variable();
    let q_n = q.pow(n as i64);
    let q_2n = q.pow(2 * n as i64);
    let a = &q + &q.pow(-1);
    let b = &(&q + &RatFuncQ::integer(2)) + &q.pow(-1);
    let num = &(&(&q_2n * &a) - &(&q_n * &b)) + &RatFuncQ::integer(2);
    let den = &RatFuncQ::one() - &q.pow(2);
    &num / &den
}

/// Little q-Laguerre moment prefactor
///
/// ```text
/// A_(k,N) = (q;q)_(N+k-1+a) (q;q)_(N+k-1)
///         / ((q;q)_(N-1) (q;q)_k (q;q)_(N+a-1))
/// ```
pub fn lql_moment_prefactor(k: u64, n: usize, alpha: u32) -> RatFuncQ {
    let q = RatFuncQ::variable();
    let qp = |m: i64| qseries::pochhammer(&q, &q, m);
    let a = alpha as i64;
    let num = &qp(n as i64 + k as i64 - 1 + a) * &qp(n as i64 + k as i64 - 1);
    let den = &(&qp(n as i64 - 1) * &qp(k as i64)) * &qp(n as i64 + a - 1);
    &num / &den
}

/// Little q-Laguerre moment as a terminating 3phi2 series:
///
/// ```text
/// m_(k,N) = A_(k,N) 3phi2(q^(-(k-1)), q^(-(N-1)), q^(-(a+N-1));
///                         q^(-(N+k-1)), q^(-(N+k+a-1)) | q; q^(-k))
/// ```
pub fn lql_moment_closed(k: u64, n: usize, alpha: u32) -> RatFuncQ {
    assert!(k > 0);
    let q = RatFuncQ::variable();
    let a = alpha as i64;
    let upper = [
        RatFuncQ::q_pow(-(k as i64 - 1)),
        RatFuncQ::q_pow(-(n as i64 - 1)),
        RatFuncQ::q_pow(-(a + n as i64 - 1)),
    ];
    let lower = [
        RatFuncQ::q_pow(-(n as i64 + k as i64 - 1)),
        RatFuncQ::q_pow(-(n as i64 + k as i64 + a - 1)),
    ];
    let series =
        qseries::basic_hypergeometric(&upper, &lower, &q, &RatFuncQ::q_pow(-(k as i64)), None)
            .expect("terminating by construction");
    &lql_moment_prefactor(k, n, alpha) * &series
}

/// Gaussian moment as an alternating binomial sum, in the convention where
/// the weight is exp(-x^2/2):
///
/// ```text
/// m_(2k,N) = (2k-1)!! sum_(r=0)^(k-1) (-1)^r
///     (C(N+2k-2r-1, 2k) + C(N+2k-2r-2, 2k)) C(k-1, r)
/// ```
///
/// For the weight exp(-x^2) used by [`Ensemble::Gaussian`], the moment is
/// `2^(-k)` times this value.
pub fn gaussian_moment_sum_binomials(k: u64, n: usize) -> Rat {
    assert!(k > 0);
    let df = qseries::double_factorial(2 * k as i64 - 1);
    let mut acc = Rat::zero();
    for r in 0..k {
        let top = n as i64 + 2 * (k as i64) - 2 * (r as i64);
        let mut term = qseries::binomial(top - 1, 2 * k as i64)
            + qseries::binomial(top - 2, 2 * k as i64);
        term = term * qseries::binomial(k as i64 - 1, r as i64);
        acc = if r % 2 == 0 { acc + term } else { acc - term };
    }
    df * acc
}

/// Gaussian moment as a sum over rising factorials, same exp(-x^2/2)
/// convention as [`gaussian_moment_sum_binomials`]:
///
/// ```text
/// m_(2k,N) = (2k-1)!! sum_(l=0)^(N-1) ((k+2)_l / l!) C(k, N-1-l)
/// ```
pub fn gaussian_moment_sum_rising(k: u64, n: usize) -> Rat {
    assert!(k > 0);
    let df = qseries::double_factorial(2 * k as i64 - 1);
    let mut acc = Rat::zero();
    for l in 0..n as u64 {
        let term = qseries::rising(&rat_int(k as i64 + 2), l) / qseries::factorial(l)
            * qseries::binomial(k as i64, n as i64 - 1 - l as i64);
        acc = acc + term;
    }
    df * acc
}

/// Gaussian moment for the weight exp(-x^2) itself, as a terminating
/// Gauss hypergeometric value:
///
/// ```text
/// m_(2k,N) = 2^(-k) (2k-1)!! N 2F1(-k, 1-N; 2 | 2)
/// ```
pub fn gaussian_moment_hypergeometric(k: u64, n: usize) -> Rat {
    assert!(k > 0);
    let series = qseries::classical_hypergeometric(
        &[rat_int(-(k as i64)), rat_int(1 - n as i64)],
        &[rat_int(2)],
        &rat_int(2),
    )
    .expect("terminating by construction");
    let df = qseries::double_factorial(2 * k as i64 - 1);
    let pow2 = Rat::from_integer(num_bigint::BigInt::from(2u32).pow(k as u32));
    df / pow2 * rat_int(n as i64) * series
}

/// Gaussian exp(-x^2) moment written through a ratio of factorials:
///
/// ```text
/// m_(2k,N) = N 2^(-2k) ((2k)!/k!) 2F1(-k, 1-N; 2 | 2)
/// ```
///
/// Agrees with [`gaussian_moment_hypergeometric`] because
/// `(2k)!/k! = 2^k (2k-1)!!`.
pub fn gaussian_moment_gamma_form(k: u64, n: usize) -> Rat {
    assert!(k > 0);
    let series = qseries::classical_hypergeometric(
        &[rat_int(-(k as i64)), rat_int(1 - n as i64)],
        &[rat_int(2)],
        &rat_int(2),
    )
    .expect("terminating by construction");
    let pow4 = Rat::from_integer(num_bigint::BigInt::from(2u32).pow(2 * k as u32));
    rat_int(n as i64) * qseries::factorial(2 * k) / qseries::factorial(k) / pow4 * series
}

/// Laguerre moment through an alternative terminating 3F2 with positive
/// lower parameters:
///
/// ```text
/// m_(k,N) = N (N+a) ((k+a)!/(1+a)!) 3F2(1-k, 2+k, 1-N; 2, 2+a | 1)
/// ```
pub fn laguerre_moment_3f2_alt(k: u64, n: usize, alpha: u32) -> Rat {
    assert!(k > 0);
    let a = alpha as i64;
    let series = qseries::classical_hypergeometric(
        &[rat_int(1 - k as i64), rat_int(2 + k as i64), rat_int(1 - n as i64)],
        &[rat_int(2), rat_int(2 + a)],
        &Rat::one(),
    )
    .expect("terminating by construction");
    let prefactor = rat_int(n as i64)
        * rat_int(n as i64 + a)
        * qseries::factorial((k as i64 + a) as u64)
        / qseries::factorial((1 + a) as u64);
    prefactor * series
}

/// Laguerre moment with integer parameter alpha as a terminating 3F2 value:
///
/// ```text
/// m_(k,N) = (N+k-1+a)! (N+k-1)! / ((N-1)! k! (N+a-1)!)
///     * 3F2(-(k-1), -(N-1), -(a+N-1); -(N+k-1), -(N+k+a-1) | 1)
/// ```
///
/// The series terminates at r = k-1, before either lower parameter's
/// Pochhammer factor can vanish.
pub fn laguerre_moment_hypergeometric(k: u64, n: usize, alpha: u32) -> Rat {
    assert!(k > 0);
    let a = alpha as i64;
    let nn = n as i64;
    let kk = k as i64;
    let series = qseries::classical_hypergeometric(
        &[rat_int(-(kk - 1)), rat_int(-(nn - 1)), rat_int(-(a + nn - 1))],
        &[rat_int(-(nn + kk - 1)), rat_int(-(nn + kk + a - 1))],
        &Rat::one(),
    )
    .expect("terminating by construction");
    let f = |m: i64| qseries::factorial(m as u64);
    let prefactor = f(nn + kk - 1 + a) * f(nn + kk - 1) / (f(nn - 1) * f(kk) * f(nn + a - 1));
    prefactor * series
}
