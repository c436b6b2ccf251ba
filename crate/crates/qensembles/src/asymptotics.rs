//! Scaling-window probes for moment growth at large matrix size.
//!
//! The even moments of the discrete q-Hermite density and the scaled
//! Stieltjes-Wigert moments are finite exponential sums in q^N with
//! rational coefficients, so the regime q = e^(-lambda/N), N -> infinity
//! can be probed without any floating-point recursion: evaluate the exact
//! coefficients at the base point, attach the frozen exponentials, and
//! extrapolate in 1/N.
//!
//! Two normalisations make the probes even functions of 1/N, which the
//! extrapolation exploits and the odd-coefficient diagnostic certifies:
//! the q-Hermite object is q^k m(2k, N) and the Stieltjes-Wigert object
//! is s^(2kN - k) times the sum computed by `sw_moment_sum_base_q`. The
//! limits have closed forms: a polynomial in the damped variable
//! x = e^(-lambda) on the q-Hermite side, a terminating Gauss
//! hypergeometric sum on the Stieltjes-Wigert side, and the latter is
//! also reproduced by integrating the limiting eigenvalue density, which
//! lives on a self-reciprocal interval (z_minus z_plus = 1).
//!
//! Variant normalisations of the q-Hermite limit (doubled constant term,
//! halved linear term, growing variable x = e^(lambda)) are kept as
//! negative controls so the probe can adjudicate between them.

use crate::ensembles::coeffs::{dqh_exponential_coefficients, sw_exponential_coefficients};
use crate::ensembles::Ensemble;
use std::f64::consts::{FRAC_PI_2, PI};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum AsymptoticsError {
    #[error("moment order must be positive")]
    ZeroOrder,
    #[error("scale parameter must be positive and finite")]
    BadScale,
    #[error("matrix sizes must be positive and strictly increasing")]
    BadGrid,
    #[error("need at least {0} probe values")]
    ShortGrid(usize),
    #[error("ensemble {0} has no exponential-sum moment expansion")]
    UnsupportedEnsemble(String),
    #[error("exponential coefficient fit unavailable for order {0}")]
    CoefficientFit(u64),
    #[error("probe value at N = {0} is not finite")]
    NonFinite(usize),
    #[error("extrapolation system is ill conditioned")]
    IllConditioned,
    #[error("quadrature did not converge after {0} refinements")]
    QuadratureFailure(usize),
}

/// Which exponential variable the q-Hermite limit polynomial is read in.
///
/// The scaling probe selects `Damped`; `Growing` is kept as a negative
/// control that the audit shows to disagree with the extrapolated data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XConvention {
    /// x = e^(-lambda)
    Damped,
    /// x = e^(lambda)
    Growing,
}

/// Values of a scaled moment along q = e^(-lambda/N) for increasing N.
///
/// `values[i]` holds the probe at `n_list[i]`: for the discrete q-Hermite
/// ensemble (1/N) q^k m(2k, N) and for Stieltjes-Wigert
/// (1/N) s^(2kN - k) m~(k, N), both exact exponential sums evaluated at
/// the base point e^(-lambda/N) resp. e^(-lambda/(2N)).
#[derive(Clone, Debug)]
pub struct ScalingProbe {
    pub ensemble: Ensemble,
    pub k: u64,
    pub lambda: f64,
    pub n_list: Vec<usize>,
    pub values: Vec<f64>,
}

impl ScalingProbe {
    /// Evaluates the probe on a strictly increasing grid of matrix sizes.
    ///
    /// The exponential-sum coefficients are fitted once, exactly, and the
    /// only floating-point step is their evaluation at the base point.
    pub fn collect(
        ensemble: Ensemble,
        k: u64,
        lambda: f64,
        n_list: &[usize],
    ) -> Result<Self, AsymptoticsError> {
        if k == 0 {
            return Err(AsymptoticsError::ZeroOrder);
        }
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(AsymptoticsError::BadScale);
        }
        if n_list.is_empty() || n_list[0] == 0 || n_list.windows(2).any(|w| w[0] >= w[1]) {
            return Err(AsymptoticsError::BadGrid);
        }
        let coeffs = match ensemble {
            Ensemble::DiscreteQHermite => dqh_exponential_coefficients(k),
            Ensemble::StieltjesWigert => sw_exponential_coefficients(k),
            other => return Err(AsymptoticsError::UnsupportedEnsemble(other.name())),
        }
        .ok_or(AsymptoticsError::CoefficientFit(k))?;
        let mut values = Vec::with_capacity(n_list.len());
        for &n in n_list {
            let nf = n as f64;
            let value = match ensemble {
                Ensemble::DiscreteQHermite => {
                    let q0 = (-lambda / nf).exp();
                    let sum: f64 = coeffs
                        .iter()
                        .enumerate()
                        .map(|(p, c)| c.eval_f64(q0) * (-lambda * p as f64).exp())
                        .sum();
                    sum / nf
                }
                Ensemble::StieltjesWigert => {
                    let s0 = (-lambda / (2.0 * nf)).exp();
                    let sum: f64 = coeffs
                        .iter()
                        .enumerate()
                        .map(|(s, b)| b.eval_f64(s0) * (lambda * (k as f64 - s as f64)).exp())
                        .sum();
                    sum * s0.powi(-(k as i32)) / nf
                }
                _ => unreachable!(),
            };
            if !value.is_finite() {
                return Err(AsymptoticsError::NonFinite(n));
            }
            values.push(value);
        }
        Ok(ScalingProbe {
            ensemble,
            k,
            lambda,
            n_list: n_list.to_vec(),
            values,
        })
    }
}

/// Result of removing the even 1/N tail from a probe.
#[derive(Clone, Copy, Debug)]
pub struct Extrapolation {
    pub limit: f64,
    /// Shift of the limit between the last two three-point fits, or the
    /// size of the retained 1/N^4 term when only three values exist.
    pub residual: f64,
}

fn solve_dense(mut a: Vec<Vec<f64>>) -> Option<Vec<f64>> {
    let n = a.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col].abs() < 1e-13 {
            return None;
        }
        a.swap(col, piv);
        for row in (col + 1)..n {
            let f = a[row][col] / a[col][col];
            for c in col..=n {
                a[row][c] -= f * a[col][c];
            }
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut v = a[row][n];
        for c in (row + 1)..n {
            v -= a[row][c] * x[c];
        }
        x[row] = v / a[row][row];
    }
    Some(x)
}

fn fit_even_triple(ns: &[usize], vs: &[f64]) -> Result<Vec<f64>, AsymptoticsError> {
    let n_ref = ns[0] as f64;
    let rows = ns
        .iter()
        .zip(vs)
        .map(|(&n, &v)| {
            let u = n_ref / n as f64;
            vec![1.0, u * u, u.powi(4), v]
        })
        .collect();
    solve_dense(rows).ok_or(AsymptoticsError::IllConditioned)
}

/// Extrapolates the probe to N = infinity through an even 1/N expansion.
///
/// The last three points determine leading term, 1/N^2 and 1/N^4
/// corrections; with four or more points the residual reports how much
/// the leading term moved relative to the previous window.
pub fn extrapolate_leading(probe: &ScalingProbe) -> Result<Extrapolation, AsymptoticsError> {
    let m = probe.values.len();
    if m < 3 {
        return Err(AsymptoticsError::ShortGrid(3));
    }
    if probe.n_list.len() != m || probe.n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(AsymptoticsError::BadGrid);
    }
    let last = fit_even_triple(&probe.n_list[m - 3..], &probe.values[m - 3..])?;
    let residual = if m >= 4 {
        let prev = fit_even_triple(&probe.n_list[m - 4..m - 1], &probe.values[m - 4..m - 1])?;
        (last[0] - prev[0]).abs()
    } else {
        let u_top = probe.n_list[m - 3] as f64 / probe.n_list[m - 1] as f64;
        (last[2] * u_top.powi(4)).abs()
    };
    Ok(Extrapolation {
        limit: last[0],
        residual,
    })
}

/// Size of the fitted 1/N coefficient relative to the leading term.
///
/// A probe that is even in 1/N pushes this ratio to fit noise; a parity
/// defect in the scaling normalisation shows up at order lambda.
pub fn odd_coefficient_ratio(probe: &ScalingProbe) -> Result<f64, AsymptoticsError> {
    let m = probe.values.len();
    if m < 4 {
        return Err(AsymptoticsError::ShortGrid(4));
    }
    if probe.n_list.len() != m || probe.n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(AsymptoticsError::BadGrid);
    }
    let ns = &probe.n_list[m - 4..];
    let vs = &probe.values[m - 4..];
    let n_ref = ns[0] as f64;
    let rows = ns
        .iter()
        .zip(vs)
        .map(|(&n, &v)| {
            let u = n_ref / n as f64;
            vec![1.0, u, u * u, u.powi(3), v]
        })
        .collect();
    let coeffs = solve_dense(rows).ok_or(AsymptoticsError::IllConditioned)?;
    if coeffs[0] == 0.0 {
        return Err(AsymptoticsError::IllConditioned);
    }
    Ok((coeffs[1] / coeffs[0]).abs())
}

fn double_factorial(n: i64) -> f64 {
    let mut v = 1.0;
    let mut m = n;
    while m > 1 {
        v *= m as f64;
        m -= 2;
    }
    v
}

fn factorial(n: u64) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

fn dqh_limit_series(k: u64, lambda: f64, convention: XConvention, variant: bool) -> f64 {
    let x = match convention {
        XConvention::Damped => (-lambda).exp(),
        XConvention::Growing => lambda.exp(),
    };
    let kf = k as f64;
    let mut val = if variant { 2.0 / kf } else { 1.0 / kf };
    if k == 1 {
        val -= if variant { x } else { 2.0 * x };
    }
    let sign_out = if k % 2 == 1 { 1.0 } else { -1.0 };
    for p in k..=2 * k {
        if p == 1 {
            continue;
        }
        let sign_p = if p % 2 == 0 { 1.0 } else { -1.0 };
        let num = double_factorial(2 * (p as i64 - 1)) * double_factorial(2 * k as i64 - 1);
        let den = double_factorial(2 * (p as i64 - k as i64))
            * factorial(p - 1)
            * factorial(2 * k - p);
        val += sign_out * sign_p * (2.0 / p as f64) * (num / den) * x.powi(p as i32);
    }
    val / lambda
}

fn check_order_scale(k: u64, lambda: f64) -> Result<(), AsymptoticsError> {
    if k == 0 {
        return Err(AsymptoticsError::ZeroOrder);
    }
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(AsymptoticsError::BadScale);
    }
    Ok(())
}

/// Closed form of the limiting scaled discrete q-Hermite moment,
/// lim (1/N) q^k m(2k, N) at q = e^(-lambda/N).
///
/// lambda times the limit is 1/k - 2x [k = 1 only] plus an explicit
/// double-factorial polynomial supported on degrees k..2k, evaluated at
/// the variable chosen by `convention`. The probe confirms `Damped`.
pub fn dqh_scaled_limit(
    k: u64,
    lambda: f64,
    convention: XConvention,
) -> Result<f64, AsymptoticsError> {
    check_order_scale(k, lambda)?;
    Ok(dqh_limit_series(k, lambda, convention, false))
}

/// Variant normalisation of [`dqh_scaled_limit`] with the constant term
/// doubled and the linear term halved. The probe rejects it under both
/// conventions; it is retained as a negative control for the audit.
pub fn dqh_scaled_limit_variant(
    k: u64,
    lambda: f64,
    convention: XConvention,
) -> Result<f64, AsymptoticsError> {
    check_order_scale(k, lambda)?;
    Ok(dqh_limit_series(k, lambda, convention, true))
}

fn hyp2f1_terminating(k: u64, z: f64) -> f64 {
    let kf = k as f64;
    let mut sum = 0.0;
    let mut coef = 1.0;
    for j in 0..=k {
        if j > 0 {
            let jf = j as f64;
            coef *= -(kf - jf + 1.0) * (kf + jf - 1.0) / (jf * jf);
        }
        sum += coef * z.powi(j as i32);
    }
    sum
}

/// Closed form of the limiting scaled Stieltjes-Wigert moment,
/// lim (1/N) s^(2kN - k) m~(k, N) at s = e^(-lambda/(2N)):
/// ((-1)^k / (lambda k)) 2F1(-k, k; 1; e^lambda), a terminating sum.
pub fn sw_scaled_limit(k: u64, lambda: f64) -> Result<f64, AsymptoticsError> {
    check_order_scale(k, lambda)?;
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign / (lambda * k as f64) * hyp2f1_terminating(k, lambda.exp()))
}

/// Endpoints of the limiting spectral support, -z -+ sqrt(z^2 - 1) with
/// z = 1 - 2 e^lambda. Their product is exactly 1.
pub fn density_support(lambda: f64) -> (f64, f64) {
    let z = 1.0 - 2.0 * lambda.exp();
    let r = (z * z - 1.0).sqrt();
    (-z - r, -z + r)
}

/// Limiting spectral density of the scaled Stieltjes-Wigert ensemble,
/// (1 / (pi lambda x)) arctan(sqrt(4 e^lambda x - (1+x)^2) / (1 + x))
/// inside the support and zero outside. Invariant under x -> 1/x up to
/// the Jacobian: rho(1/x) = x^2 rho(x).
pub fn limiting_density(x: f64, lambda: f64) -> f64 {
    let disc = 4.0 * lambda.exp() * x - (1.0 + x) * (1.0 + x);
    if !(disc > 0.0 && x > 0.0) {
        return 0.0;
    }
    (disc.sqrt() / (1.0 + x)).atan() / (PI * lambda * x)
}

/// k-th moment of [`limiting_density`] by quadrature.
///
/// The trigonometric substitution x = -z + sqrt(z^2 - 1) sin(theta)
/// flattens both square-root edges, so Simpson refinement converges
/// fast; refinement stops when two successive grids agree to 1e-10.
pub fn limiting_density_moment(k: u64, lambda: f64) -> Result<f64, AsymptoticsError> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(AsymptoticsError::BadScale);
    }
    let z = 1.0 - 2.0 * lambda.exp();
    let r = (z * z - 1.0).sqrt();
    let f = |theta: f64| -> f64 {
        let x = -z + r * theta.sin();
        let c = theta.cos();
        let arg = r * c / (1.0 + x);
        x.powi(k as i32) * arg.atan() / (PI * lambda * x) * r * c
    };
    let simpson = |n: usize| -> f64 {
        let h = PI / n as f64;
        let mut s = f(-FRAC_PI_2) + f(FRAC_PI_2);
        for i in 1..n {
            s += f(-FRAC_PI_2 + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        s * h / 3.0
    };
    let max_refinements = 18;
    let mut n = 64;
    let mut prev = simpson(n);
    for _ in 0..max_refinements {
        n *= 2;
        let cur = simpson(n);
        if (cur - prev).abs() <= 1e-10 * prev.abs().max(1.0) {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(AsymptoticsError::QuadratureFailure(max_refinements))
}

/// Samples (x, rho(x)) on `points` equispaced nodes across the support,
/// endpoints included, for two-column plot output.
pub fn density_profile(lambda: f64, points: usize) -> Vec<(f64, f64)> {
    let (lo, hi) = density_support(lambda);
    let n = points.max(2);
    (0..n)
        .map(|i| {
            let x = lo + (hi - lo) * i as f64 / (n - 1) as f64;
            (x, limiting_density(x, lambda))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensembles::moments::{dqh_moment_closed, sw_moment_sum_base_q};
    use proptest::prelude::*;

    fn probe(ensemble: Ensemble, k: u64, lambda: f64, ns: &[usize]) -> ScalingProbe {
        ScalingProbe::collect(ensemble, k, lambda, ns).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn probe_values_agree_with_exact_moments() {
        let p = probe(Ensemble::DiscreteQHermite, 2, 0.8, &[9]);
        let q0 = (-0.8f64 / 9.0).exp();
        let exact = dqh_moment_closed(2, 9).eval_f64(q0) * q0.powi(2);
        assert!((p.values[0] * 9.0 - exact).abs() <= 1e-9 * exact.abs());

        let p = probe(Ensemble::StieltjesWigert, 1, 0.8, &[7]);
        let s0 = (-0.8f64 / 14.0).exp();
        let exact = sw_moment_sum_base_q(1, 7).eval_f64(s0) * s0.powi(2 * 7 - 1);
        assert!((p.values[0] * 7.0 - exact).abs() <= 1e-9 * exact.abs());
    }

    #[test]
    fn dqh_probe_matches_damped_limit() {
        for k in 1..=3 {
            for lambda in [0.5, 1.0] {
                let p = probe(Ensemble::DiscreteQHermite, k, lambda, &[100, 200, 400]);
                let fit = extrapolate_leading(&p).unwrap().limit;
                let target = dqh_scaled_limit(k, lambda, XConvention::Damped).unwrap();
                assert!(
                    rel(fit, target) <= 1e-8,
                    "k={k} lambda={lambda} fit={fit} target={target}"
                );
            }
        }
    }

    #[test]
    fn dqh_limit_small_orders_in_closed_form() {
        let lambda = 1.0f64;
        let x = (-lambda).exp();
        let k1 = dqh_scaled_limit(1, lambda, XConvention::Damped).unwrap();
        assert!((k1 - (1.0 - x) * (1.0 - x) / lambda).abs() <= 1e-15);
        let k2 = dqh_scaled_limit(2, lambda, XConvention::Damped).unwrap();
        let expect = (0.5 - 3.0 * x * x + 4.0 * x.powi(3) - 1.5 * x.powi(4)) / lambda;
        assert!((k2 - expect).abs() <= 1e-15);
    }

    #[test]
    fn probe_rejects_variant_normalisations() {
        for k in [1, 2] {
            let p = probe(Ensemble::DiscreteQHermite, k, 1.0, &[100, 200, 400]);
            let fit = extrapolate_leading(&p).unwrap().limit;
            for wrong in [
                dqh_scaled_limit(k, 1.0, XConvention::Growing).unwrap(),
                dqh_scaled_limit_variant(k, 1.0, XConvention::Damped).unwrap(),
                dqh_scaled_limit_variant(k, 1.0, XConvention::Growing).unwrap(),
            ] {
                assert!(
                    (fit - wrong).abs() > 1e-2 * fit.abs(),
                    "k={k} fit={fit} wrong={wrong}"
                );
            }
        }
    }

    #[test]
    fn sw_probe_matches_terminating_hypergeometric() {
        let p = probe(Ensemble::StieltjesWigert, 1, 1.0, &[100, 200, 400]);
        let fit = extrapolate_leading(&p).unwrap().limit;
        assert!(rel(fit, std::f64::consts::E - 1.0) <= 1e-6);
        for k in 1..=4 {
            for lambda in [0.5, 1.0] {
                let p = probe(Ensemble::StieltjesWigert, k, lambda, &[100, 200, 400]);
                let fit = extrapolate_leading(&p).unwrap().limit;
                let target = sw_scaled_limit(k, lambda).unwrap();
                assert!(
                    rel(fit, target) <= 1e-8,
                    "k={k} lambda={lambda} fit={fit} target={target}"
                );
            }
        }
    }

    #[test]
    fn probe_convergence_is_second_order() {
        for ensemble in [Ensemble::DiscreteQHermite, Ensemble::StieltjesWigert] {
            let p = probe(ensemble, 2, 1.0, &[100, 200, 400, 800]);
            let d1 = (p.values[1] - p.values[0]).abs();
            let d2 = (p.values[2] - p.values[1]).abs();
            let d3 = (p.values[3] - p.values[2]).abs();
            assert!(d1 / d2 >= 3.8, "{}: {}", p.ensemble.name(), d1 / d2);
            assert!(d2 / d3 >= 3.8, "{}: {}", p.ensemble.name(), d2 / d3);
        }
    }

    #[test]
    fn probe_has_no_odd_component() {
        for ensemble in [Ensemble::DiscreteQHermite, Ensemble::StieltjesWigert] {
            for k in [1, 3] {
                let p = probe(ensemble, k, 1.0, &[100, 200, 400, 800]);
                let ratio = odd_coefficient_ratio(&p).unwrap();
                assert!(ratio < 1e-4, "{} k={k}: {ratio}", p.ensemble.name());
            }
        }
    }

    #[test]
    fn extrapolation_reports_small_residual() {
        let p = probe(Ensemble::StieltjesWigert, 2, 1.0, &[100, 200, 400, 800]);
        let e = extrapolate_leading(&p).unwrap();
        assert!(e.residual <= 1e-8 * e.limit.abs());
        let p3 = probe(Ensemble::StieltjesWigert, 2, 1.0, &[100, 200, 400]);
        let e3 = extrapolate_leading(&p3).unwrap();
        assert!(e3.residual > 0.0 && e3.residual <= 1e-4 * e3.limit.abs());
    }

    #[test]
    fn limiting_density_normalises() {
        for lambda in [0.5, 1.0, 2.0] {
            let norm = limiting_density_moment(0, lambda).unwrap();
            assert!((norm - 1.0).abs() <= 1e-8, "lambda={lambda}: {norm}");
        }
    }

    #[test]
    fn limiting_density_reproduces_scaled_limits() {
        for k in 1..=4 {
            for lambda in [0.5, 1.0] {
                let quad = limiting_density_moment(k, lambda).unwrap();
                let closed = sw_scaled_limit(k, lambda).unwrap();
                assert!(
                    rel(quad, closed) <= 1e-8,
                    "k={k} lambda={lambda} quad={quad} closed={closed}"
                );
            }
        }
    }

    #[test]
    fn density_support_is_self_reciprocal() {
        for lambda in [0.5, 1.0, 2.0] {
            let (lo, hi) = density_support(lambda);
            assert!(0.0 < lo && lo < 1.0 && 1.0 < hi);
            assert!((lo * hi - 1.0).abs() <= 1e-12);
            for x in [1.3, 2.0, hi * 0.9] {
                let lhs = limiting_density(1.0 / x, lambda);
                let rhs = x * x * limiting_density(x, lambda);
                assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1.0));
            }
            assert_eq!(limiting_density(lo * 0.99, lambda), 0.0);
            assert_eq!(limiting_density(hi * 1.01, lambda), 0.0);
        }
    }

    #[test]
    fn density_profile_spans_support() {
        let profile = density_profile(1.0, 41);
        let (lo, hi) = density_support(1.0);
        assert_eq!(profile.len(), 41);
        assert!((profile[0].0 - lo).abs() <= 1e-12);
        assert!((profile[40].0 - hi).abs() <= 1e-12);
        assert!(profile.windows(2).all(|w| w[0].0 < w[1].0));
        assert_eq!(profile[0].1, 0.0);
        assert_eq!(profile[40].1, 0.0);
        assert!(profile[20].1 > 0.0);
    }

    #[test]
    fn grid_validation_rejects_bad_input() {
        let ns = [100usize, 200, 400];
        let dqh = Ensemble::DiscreteQHermite;
        assert_eq!(
            ScalingProbe::collect(dqh, 0, 1.0, &ns).unwrap_err(),
            AsymptoticsError::ZeroOrder
        );
        assert_eq!(
            ScalingProbe::collect(dqh, 1, 0.0, &ns).unwrap_err(),
            AsymptoticsError::BadScale
        );
        assert_eq!(
            ScalingProbe::collect(dqh, 1, 1.0, &[]).unwrap_err(),
            AsymptoticsError::BadGrid
        );
        assert_eq!(
            ScalingProbe::collect(dqh, 1, 1.0, &[100, 100]).unwrap_err(),
            AsymptoticsError::BadGrid
        );
        assert_eq!(
            ScalingProbe::collect(dqh, 1, 1.0, &[0, 100]).unwrap_err(),
            AsymptoticsError::BadGrid
        );
        assert!(matches!(
            ScalingProbe::collect(Ensemble::Gaussian, 1, 1.0, &ns).unwrap_err(),
            AsymptoticsError::UnsupportedEnsemble(_)
        ));
        let short = probe(dqh, 1, 1.0, &[100, 200]);
        assert_eq!(
            extrapolate_leading(&short).unwrap_err(),
            AsymptoticsError::ShortGrid(3)
        );
        let three = probe(dqh, 1, 1.0, &ns);
        assert_eq!(
            odd_coefficient_ratio(&three).unwrap_err(),
            AsymptoticsError::ShortGrid(4)
        );
        assert_eq!(
            sw_scaled_limit(0, 1.0).unwrap_err(),
            AsymptoticsError::ZeroOrder
        );
        assert_eq!(
            dqh_scaled_limit(1, -1.0, XConvention::Damped).unwrap_err(),
            AsymptoticsError::BadScale
        );
    }

    proptest! {
        #[test]
        fn probe_limits_track_closed_forms(k in 1u64..=2, lambda in 0.3f64..1.2) {
            for ensemble in [Ensemble::DiscreteQHermite, Ensemble::StieltjesWigert] {
                let p = probe(ensemble, k, lambda, &[50, 100, 200]);
                let fit = extrapolate_leading(&p).unwrap().limit;
                let target = match ensemble {
                    Ensemble::DiscreteQHermite => {
                        dqh_scaled_limit(k, lambda, XConvention::Damped).unwrap()
                    }
                    _ => sw_scaled_limit(k, lambda).unwrap(),
                };
                prop_assert!(rel(fit, target) <= 1e-6, "{} k={k} lambda={lambda}", p.ensemble.name());
            }
        }
    }
}
