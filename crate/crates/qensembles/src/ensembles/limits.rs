//! Exact q -> 1 limits onto the classical ensembles, plus the classical
//! moment recurrences and polynomial structure in N.
//!
//! The rescalings
//!
//! ```text
//! (1-q^2)^(-|kappa|/2) <s_kappa>   discrete q-Hermite -> Gaussian exp(-x^2)
//! (1-q)^(-|kappa|)     <s_kappa>   little q-Laguerre  -> Laguerre
//! ```
//!
//! (and the same powers with |kappa| replaced by k for the density moments)
//! have finite values at q = 1 equal to the corresponding classical
//! averages. Everything here is exact rational-function arithmetic: the
//! rescaled quantity is evaluated at q = 1 as an element of Q(q) that has
//! no pole there.

use super::{schur, Partition};
use crate::algebra::{rat_int, AlgebraError, PolyQ, Rat, RatFuncQ};
use num_traits::Zero;


/// The Gaussian limit of a rescaled discrete q-Hermite density moment:
/// `(1-q^2)^(-k) m_(2k,N)` evaluated at q = 1.
pub fn dqh_moment_gaussian_limit(k: u64, n: usize) -> Result<Rat, AlgebraError> {
    let q = RatFuncQ::variable();
    let scale = (&RatFuncQ::one() - &q.pow(2)).pow(-(k as i64));
    let m = super::moments::dqh_moment_closed(k, n);
    (&scale * &m).eval_at_one()
}

/// The Gaussian limit of a rescaled discrete q-Hermite Schur average:
/// `(1-q^2)^(-|kappa|/2) <s_kappa>` at q = 1. Odd |kappa| gives zero on
/// both sides and is returned as zero directly.
pub fn dqh_schur_gaussian_limit(kappa: &Partition, n: usize) -> Result<Rat, AlgebraError> {
    if kappa.size() % 2 == 1 {
        return Ok(Rat::zero());
    }
    let q = RatFuncQ::variable();
    let scale = (&RatFuncQ::one() - &q.pow(2)).pow(-((kappa.size() / 2) as i64));
    let avg = schur::dqh_schur_closed(kappa, n);
    (&scale * &avg).eval_at_one()
}

/// The Laguerre limit of a rescaled little q-Laguerre density moment:
/// `(1-q)^(-k) m_(k,N)` at q = 1.
pub fn lql_moment_laguerre_limit(k: u64, n: usize, alpha: u32) -> Result<Rat, AlgebraError> {
    let q = RatFuncQ::variable();
    let scale = (&RatFuncQ::one() - &q).pow(-(k as i64));
    let m = super::moments::lql_moment_closed(k, n, alpha);
    (&scale * &m).eval_at_one()
}

/// The Laguerre limit of a rescaled little q-Laguerre Schur average:
/// `(1-q)^(-|kappa|) <s_kappa>` at q = 1.
pub fn lql_schur_laguerre_limit(
    kappa: &Partition,
    n: usize,
    alpha: u32,
) -> Result<Rat, AlgebraError> {
    let q = RatFuncQ::variable();
    let scale = (&RatFuncQ::one() - &q).pow(-(kappa.size() as i64));
    let avg = schur::lql_schur_closed(kappa, n, alpha);
    (&scale * &avg).eval_at_one()
}

/// The Gaussian moment `m_(2k,N)` as a polynomial in N, interpolated from
/// `points` exact values in the exp(-x^2/2) convention. With at least k+3
/// points the interpolation is overdetermined enough to expose the true
/// degree k+1 and its leading Catalan coefficient.
pub fn gaussian_moment_polynomial(k: u64, points: usize) -> PolyQ {
    let data: Vec<(Rat, Rat)> = (1..=points)
        .map(|n| {
            (
                rat_int(n as i64),
                super::moments::gaussian_moment_sum_binomials(k, n),
            )
        })
        .collect();
    PolyQ::interpolate(&data)
}

/// Both sides of the three-step Gaussian moment recurrence in the
/// exp(-x^2) convention,
///
/// ```text
/// (k+1) m_(2k,N) = (2k-1) N m_(2k-2,N) + (k-1/2)(k-1)(k-3/2) m_(2k-4,N),
/// ```
///
/// with `m_(0,N) = N`. Requires k >= 2. The factor N on the first
/// right-hand term is essential: without it the relation already fails at
/// N = 2, which [`gaussian_moment_recurrence_variant_sides`] exhibits.
pub fn gaussian_moment_recurrence_sides(k: u64, n: usize) -> (Rat, Rat) {
    assert!(k >= 2);
    let m = |j: u64| -> Rat {
        if j == 0 {
            rat_int(n as i64)
        } else {
            super::moments::gaussian_moment_hypergeometric(j, n)
        }
    };
    let lhs = rat_int(k as i64 + 1) * m(k);
    let first = rat_int(2 * k as i64 - 1) * rat_int(n as i64) * m(k - 1);
    let half = Rat::new(1.into(), 2.into());
    let second = (rat_int(k as i64) - &half)
        * rat_int(k as i64 - 1)
        * (rat_int(k as i64 - 1) - &half)
        * m(k - 2);
    (lhs, first + second)
}

/// The same recurrence with the factor N dropped from the first
/// right-hand term; holds only at N = 1.
pub fn gaussian_moment_recurrence_variant_sides(k: u64, n: usize) -> (Rat, Rat) {
    let (lhs, _) = gaussian_moment_recurrence_sides(k, n);
    let m = |j: u64| -> Rat {
        if j == 0 {
            rat_int(n as i64)
        } else {
            super::moments::gaussian_moment_hypergeometric(j, n)
        }
    };
    let first = rat_int(2 * k as i64 - 1) * m(k - 1);
    let half = Rat::new(1.into(), 2.into());
    let second = (rat_int(k as i64) - &half)
        * rat_int(k as i64 - 1)
        * (rat_int(k as i64 - 1) - &half)
        * m(k - 2);
    (lhs, first + second)
}

/// Both sides of the three-term Laguerre moment recurrence,
///
/// ```text
/// (k+2) m_(k+1,N) = (2k+1)(2N+alpha) m_(k,N) +(k-1)(k^2-alpha^2) m_(k-1,N),
/// ```
///
/// with `m_(0,N) = N`.
pub fn laguerre_moment_recurrence_sides(k: u64, n: usize, alpha: u32) -> (Rat, Rat) {
    assert!(k >= 1);
    let m = |j: u64| -> Rat {
        if j == 0 {
            rat_int(n as i64)
        } else {
            super::moments::laguerre_moment_hypergeometric(j, n, alpha)
        }
    };
    let lhs = rat_int(k as i64 + 2) * m(k + 1);
    let first = rat_int(2 * k as i64 + 1) * rat_int(2 * n as i64 + alpha as i64) * m(k);
    let second = rat_int(k as i64 - 1)
        * (rat_int((k * k) as i64) - rat_int((alpha as i64) * (alpha as i64)))
        * m(k - 1);
    (lhs, first + second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensembles::Ensemble;
    use crate::qseries;

    #[test]
    fn discrete_q_hermite_moments_limit_to_gaussian() {
        let gauss = Ensemble::Gaussian;
        for k in 1..=3u64 {
            for n in 1..=3usize {
                let lim = dqh_moment_gaussian_limit(k, n).expect("finite at q=1");
                let target = gauss.density_moment_oracle(2 * k, n);
                assert_eq!(RatFuncQ::constant(lim), target, "k={k} N={n}");
            }
        }
    }

    #[test]
    fn discrete_q_hermite_schur_limits_to_gaussian() {
        let gauss = Ensemble::Gaussian;
        for n in 1..=3usize {
            for kappa in Partition::enumerate(4, n) {
                let lim = dqh_schur_gaussian_limit(&kappa, n).expect("finite at q=1");
                let target = schur::schur_average_oracle(&gauss, &kappa, n);
                assert_eq!(
                    RatFuncQ::constant(lim),
                    target,
                    "kappa={} N={n}",
                    kappa.display()
                );
            }
        }
    }

    #[test]
    fn little_q_laguerre_moments_limit_to_laguerre() {
        for alpha in [0u32, 1, 2] {
            let lag = Ensemble::Laguerre { alpha };
            for k in 1..=3u64 {
                for n in 1..=3usize {
                    let lim = lql_moment_laguerre_limit(k, n, alpha).expect("finite at q=1");
                    let target = lag.density_moment_oracle(k, n);
                    assert_eq!(
                        RatFuncQ::constant(lim),
                        target,
                        "alpha={alpha} k={k} N={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn little_q_laguerre_schur_limits_to_laguerre() {
        for alpha in [0u32, 2] {
            let lag = Ensemble::Laguerre { alpha };
            for n in 1..=3usize {
                for kappa in Partition::enumerate(4, n) {
                    let lim =
                        lql_schur_laguerre_limit(&kappa, n, alpha).expect("finite at q=1");
                    let target = schur::schur_average_oracle(&lag, &kappa, n);
                    assert_eq!(
                        RatFuncQ::constant(lim),
                        target,
                        "alpha={alpha} kappa={} N={n}",
                        kappa.display()
                    );
                }
            }
        }
    }

    #[test]
    fn gaussian_moments_are_catalan_led_polynomials_in_n() {
        for k in 1..=4u64 {
            let poly = gaussian_moment_polynomial(k, k as usize + 3);
            assert_eq!(poly.degree(), Some(k as usize + 1), "k={k}");
            assert_eq!(poly.leading(), Some(&qseries::catalan(k as i64)), "k={k}");
        }
    }

    #[test]
    fn gaussian_recurrence_needs_particle_count_factor() {
        for k in 2..=4u64 {
            for n in 1..=4usize {
                let (lhs, rhs) = gaussian_moment_recurrence_sides(k, n);
                assert_eq!(lhs, rhs, "k={k} N={n}");
            }
            let (l1, r1) = gaussian_moment_recurrence_variant_sides(k, 1);
            assert_eq!(l1, r1, "variant should hold at N=1, k={k}");
            let (l2, r2) = gaussian_moment_recurrence_variant_sides(k, 2);
            assert_ne!(l2, r2, "variant must fail at N=2, k={k}");
        }
    }

    #[test]
    fn laguerre_recurrence_holds() {
        for alpha in [0u32, 1, 3] {
            for k in 1..=4u64 {
                for n in 1..=3usize {
                    let (lhs, rhs) = laguerre_moment_recurrence_sides(k, n, alpha);
                    assert_eq!(lhs, rhs, "alpha={alpha} k={k} N={n}");
                }
            }
        }
    }
}
