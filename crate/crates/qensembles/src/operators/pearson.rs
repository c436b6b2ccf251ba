//! q-classical weights: Pearson pairs, their verification, and transforms
//! of the associated measures.
//!
//! A weight on the q-lattice is q-classical when a pair of polynomials
//! `(sigma, tau)`, of degrees at most 2 and 1, satisfies the Pearson
//! relation: the q-derivative of `sigma w` equals `tau w`. Two equivalent
//! faces of that relation are checked here against the exact moments, with
//! no reference to the lattice itself:
//!
//! * the weight ratio `w(qx)/w(x)` equals `T(x)/sigma(qx)` with
//!   `T = sigma - (1-q) x tau`, checked as a cross-multiplied polynomial
//!   identity against the stored ratio;
//! * summation by parts holds against the moment functional, in its
//!   two-sided forms for both q-derivatives and in the one-sided form
//!   `L[sigma f] = q L[T f(qx)]`, checked on monomials.
//!
//! The pair can also be recovered from the moments alone: the one-sided
//! form is linear in the five unknown coefficients of `(sigma, tau)`, so a
//! kernel vector of the moment matrix reproduces the pair wherever it is
//! unique.
//!
//! The transforms these pairs feed into are jets of
//! `sum_k lambda^k (1-q)^k L[x^k g] / (q;q)_k`, the expansion of the
//! q-exponential average of an integrand `g` against the weight.

use super::series::FormalSeries;
use super::OperatorError;
use crate::algebra::{linalg, RatFuncQ, XPoly};
use crate::ensembles::Ensemble;

/// A q-classical weight: exact moments plus its Pearson data.
#[derive(Clone, Debug)]
pub struct QWeight {
    /// Moment provider for the weight.
    pub ensemble: Ensemble,
    /// Degree <= 2 member of the Pearson pair.
    pub sigma: XPoly,
    /// Degree <= 1 member of the Pearson pair.
    pub tau: XPoly,
    /// Numerator of the weight ratio `w(qx)/w(x)`.
    pub ratio_num: XPoly,
    /// Denominator of the weight ratio `w(qx)/w(x)`.
    pub ratio_den: XPoly,
}

impl QWeight {
    /// The discrete q-Hermite weight on the symmetric q-lattice, with
    /// pair `(x^2 - 1, x/(1-q))` and ratio `1/(1 - q^2 x^2)`.
    pub fn discrete_q_hermite() -> Self {
        let q = RatFuncQ::variable();
        let inv_one_minus_q = (&RatFuncQ::one() - &q).inv();
        QWeight {
            ensemble: Ensemble::DiscreteQHermite,
            sigma: XPoly::from_coeffs(vec![
                RatFuncQ::integer(-1),
                RatFuncQ::zero(),
                RatFuncQ::one(),
            ]),
            tau: XPoly::from_coeffs(vec![RatFuncQ::zero(), inv_one_minus_q]),
            ratio_num: XPoly::constant(RatFuncQ::one()),
            ratio_den: XPoly::from_coeffs(vec![
                RatFuncQ::one(),
                RatFuncQ::zero(),
                -&RatFuncQ::q_pow(2),
            ]),
        }
    }

    /// The little q-Laguerre weight with integer parameter `alpha`, with
    /// pair `(x^2 - x, (x - 1 + q^(alpha+1))/(1-q))` and ratio
    /// `q^alpha/(1 - qx)`.
    pub fn little_q_laguerre(alpha: u32) -> Self {
        let q = RatFuncQ::variable();
        let inv_one_minus_q = (&RatFuncQ::one() - &q).inv();
        let a1 = RatFuncQ::q_pow(alpha as i64 + 1);
        QWeight {
            ensemble: Ensemble::LittleQLaguerre { alpha },
            sigma: XPoly::from_coeffs(vec![
                RatFuncQ::zero(),
                RatFuncQ::integer(-1),
                RatFuncQ::one(),
            ]),
            tau: XPoly::from_coeffs(vec![
                &(&a1 - &RatFuncQ::one()) * &inv_one_minus_q,
                inv_one_minus_q,
            ]),
            ratio_num: XPoly::constant(RatFuncQ::q_pow(alpha as i64)),
            ratio_den: XPoly::from_coeffs(vec![RatFuncQ::one(), -&q]),
        }
    }

    /// Stable identifier, shared with the underlying ensemble.
    pub fn name(&self) -> String {
        self.ensemble.name()
    }

    /// `T = sigma - (1-q) x tau`, the polynomial in the one-sided
    /// summation-by-parts form.
    pub fn t_poly(&self) -> XPoly {
        let q = RatFuncQ::variable();
        let one_minus_q = &RatFuncQ::one() - &q;
        &self.sigma - &self.tau.shift_up(1).scale(&one_minus_q)
    }

    /// Moment functional of the weight.
    pub fn moment(&self, p: &XPoly) -> RatFuncQ {
        self.ensemble.moment_functional(p)
    }
}

/// Checks the Pearson data of a weight against its moments: the
/// cross-multiplied ratio identity and all three summation-by-parts forms
/// on monomials `f = x^a, g = x^b` with `a + b <= 8`.
pub fn pearson_verify(w: &QWeight) -> Result<(), OperatorError> {
    let q = RatFuncQ::variable();
    let t = w.t_poly();
    if &t * &w.ratio_den != &w.ratio_num * &w.sigma.dilate(&q) {
        return Err(OperatorError::RatioMismatch);
    }
    let qinv = q.inv();
    for a in 0..=8usize {
        for b in 0..=(8 - a) {
            let f = XPoly::monomial(RatFuncQ::one(), a);
            let g = XPoly::monomial(RatFuncQ::one(), b);

            let lhs = w.moment(&(&(&w.sigma * &f.q_derivative(&q)) * &g));
            let fq_gq = &f.dilate(&q) * &g.dilate(&q);
            let rhs = -&w.moment(&(&w.tau * &fq_gq))
                - w.moment(&(&(&w.sigma * &f.dilate(&q)) * &g.q_derivative(&q)));
            if lhs != rhs {
                return Err(OperatorError::PartsMismatch {
                    form: "two-sided",
                    a,
                    b,
                });
            }

            let lhs = w.moment(&(&(&w.sigma * &f.q_derivative(&qinv)) * &g));
            let rhs = -&(&q * &w.moment(&(&w.tau * &(&f * &g))))
                - w.moment(&(&(&w.sigma * &f.dilate(&qinv)) * &g.q_derivative(&qinv)));
            if lhs != rhs {
                return Err(OperatorError::PartsMismatch {
                    form: "two-sided inverse-base",
                    a,
                    b,
                });
            }

            if b == 0 {
                let lhs = w.moment(&(&w.sigma * &f));
                let rhs = &q * &w.moment(&(&t * &f.dilate(&q)));
                if lhs != rhs {
                    return Err(OperatorError::PartsMismatch {
                        form: "one-sided",
                        a,
                        b,
                    });
                }
            }
        }
    }
    Ok(())
}

/// True when `(sigma, tau)` satisfies the one-sided summation-by-parts
/// relation `L[sigma x^a] = q^(a+1) (L[sigma x^a] - (1-q) L[tau x^(a+1)])`
/// for every `a < rows`.
pub fn moment_relations_hold(
    ensemble: &Ensemble,
    sigma: &XPoly,
    tau: &XPoly,
    rows: usize,
) -> bool {
    let q = RatFuncQ::variable();
    let one_minus_q = &RatFuncQ::one() - &q;
    for a in 0..rows {
        let ls = ensemble.moment_functional(&sigma.shift_up(a));
        let lt = ensemble.moment_functional(&tau.shift_up(a + 1));
        let rhs = &RatFuncQ::q_pow(a as i64 + 1) * &(&ls - &(&one_minus_q * &lt));
        if ls != rhs {
            return false;
        }
    }
    true
}

/// Recovers the Pearson pair from the moments alone, where it is unique:
/// the one-sided summation-by-parts relation on `x^0..x^7` is a linear
/// system in the five coefficients of `(sigma, tau)`, and a kernel vector
/// normalized to monic `sigma` is returned. `None` when the kernel is
/// trivial or its `sigma` is not genuinely quadratic.
pub fn derive_pearson_pair(ensemble: &Ensemble) -> Option<(XPoly, XPoly)> {
    let q = RatFuncQ::variable();
    let one_minus_q = &RatFuncQ::one() - &q;
    let mu = |j: u64| ensemble.weight_moment(j);
    let rows: Vec<Vec<RatFuncQ>> = (0..8u64)
        .map(|a| {
            let front = &RatFuncQ::one() - &RatFuncQ::q_pow(a as i64 + 1);
            let tail = &one_minus_q * &RatFuncQ::q_pow(a as i64 + 1);
            vec![
                &front * &mu(a),
                &front * &mu(a + 1),
                &front * &mu(a + 2),
                &tail * &mu(a + 1),
                &tail * &mu(a + 2),
            ]
        })
        .collect();
    let v = linalg::null_vector(&rows)?;
    if v[2].is_zero() {
        return None;
    }
    let sigma = XPoly::from_coeffs(vec![&v[0] / &v[2], &v[1] / &v[2], RatFuncQ::one()]);
    let tau = XPoly::from_coeffs(vec![&v[3] / &v[2], &v[4] / &v[2]]);
    Some((sigma, tau))
}

/// The constant making the monic degree-n orthogonal polynomial an
/// eigenfunction of the second-order operator of the pair:
/// `sigma D D' p + tau D p + c p = 0`, with D the q-derivative and D' the
/// inverse-base q-derivative.
pub fn cn_eigenvalue(w: &QWeight, n: usize) -> Result<RatFuncQ, OperatorError> {
    let system = w.ensemble.orthogonal_system(n + 1);
    let p = &system.polys[n];
    let q = RatFuncQ::variable();
    let second = p.q_derivative(&q.inv()).q_derivative(&q);
    let residual = &(&w.sigma * &second) + &(&w.tau * &p.q_derivative(&q));
    let c = -&residual.coeff(n);
    if (&residual + &p.scale(&c)).is_zero() {
        Ok(c)
    } else {
        Err(OperatorError::NotEigenfunction { degree: n })
    }
}

/// Jet of the q-exponential average of `integrand` against the weight:
/// the coefficient at index k is `(1-q)^k L[x^k integrand] / (q;q)_k`.
pub fn series_from_measure(w: &QWeight, integrand: &XPoly, order: usize) -> FormalSeries {
    let q = RatFuncQ::variable();
    let one_minus_q = &RatFuncQ::one() - &q;
    let mut scale = RatFuncQ::one();
    let mut coeffs = Vec::with_capacity(order);
    for k in 0..order {
        if k > 0 {
            scale = &(&scale * &one_minus_q) / &(&RatFuncQ::one() - &RatFuncQ::q_pow(k as i64));
        }
        coeffs.push(&scale * &w.moment(&integrand.shift_up(k)));
    }
    FormalSeries::new(coeffs)
}

/// Transform of the squared monic degree-n orthogonal polynomial,
/// normalized by its squared norm.
pub fn squared_transform(w: &QWeight, n: usize, order: usize) -> FormalSeries {
    let system = w.ensemble.orthogonal_system(n + 1);
    let p = &system.polys[n];
    series_from_measure(w, &(p * p), order).scale(&system.norms[n].inv())
}

/// The five transforms tied to the degree-n orthogonal polynomial, all
/// normalized by its squared norm `h_n`.
pub struct PolynomialTransforms {
    /// Integrand `p^2`.
    pub phi: FormalSeries,
    /// Integrand `p (D' p)`, with D' the inverse-base q-derivative.
    pub psi_down: FormalSeries,
    /// Integrand `p (D p)`.
    pub psi_up: FormalSeries,
    /// Integrand `(D' p)^2`.
    pub psi_down_sq: FormalSeries,
    /// Integrand `(D' p)(D p)`.
    pub psi_mixed: FormalSeries,
}

/// Builds all five transforms of [`PolynomialTransforms`].
pub fn polynomial_transforms(w: &QWeight, n: usize, order: usize) -> PolynomialTransforms {
    let system = w.ensemble.orthogonal_system(n + 1);
    let p = &system.polys[n];
    let q = RatFuncQ::variable();
    let down = p.q_derivative(&q.inv());
    let up = p.q_derivative(&q);
    let hinv = system.norms[n].inv();
    let make = |g: &XPoly| series_from_measure(w, g, order).scale(&hinv);
    PolynomialTransforms {
        phi: make(&(p * p)),
        psi_down: make(&(p * &down)),
        psi_up: make(&(p * &up)),
        psi_down_sq: make(&(&down * &down)),
        psi_mixed: make(&(&down * &up)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries;

    #[test]
    fn stored_pairs_verify() {
        pearson_verify(&QWeight::discrete_q_hermite()).unwrap();
        for alpha in 0..=2 {
            pearson_verify(&QWeight::little_q_laguerre(alpha)).unwrap();
        }
    }

    #[test]
    fn pairs_recovered_from_moments_where_unique() {
        for w in [
            QWeight::discrete_q_hermite(),
            QWeight::little_q_laguerre(1),
            QWeight::little_q_laguerre(2),
        ] {
            let (sigma, tau) = derive_pearson_pair(&w.ensemble).expect("nontrivial kernel");
            assert_eq!(sigma, w.sigma, "{}", w.name());
            assert_eq!(tau, w.tau, "{}", w.name());
        }
    }

    #[test]
    fn parameterless_little_q_laguerre_admits_a_second_pair() {
        // At alpha = 0 the kernel of the moment relations is
        // two-dimensional: besides the quadratic pair, the weight also
        // satisfies the relations for (1 - x, -1/(1-q)), whose T is the
        // constant 1 and whose ratio identity reproduces the same weight
        // ratio. Both pairs are checked; they are clearly independent.
        let w = QWeight::little_q_laguerre(0);
        assert!(moment_relations_hold(&w.ensemble, &w.sigma, &w.tau, 8));
        let q = RatFuncQ::variable();
        let sigma2 = XPoly::from_coeffs(vec![RatFuncQ::one(), RatFuncQ::integer(-1)]);
        let tau2 = XPoly::constant(-&(&RatFuncQ::one() - &q).inv());
        assert!(moment_relations_hold(&w.ensemble, &sigma2, &tau2, 8));
        assert!(&t_of(&sigma2, &tau2) * &w.ratio_den == &w.ratio_num * &sigma2.dilate(&q));
    }

    fn t_of(sigma: &XPoly, tau: &XPoly) -> XPoly {
        let q = RatFuncQ::variable();
        sigma - &tau.shift_up(1).scale(&(&RatFuncQ::one() - &q))
    }

    #[test]
    fn eigenvalue_constants_at_low_degree() {
        let q = RatFuncQ::variable();
        let neg_inv_one_minus_q = -&(&RatFuncQ::one() - &q).inv();
        let dqh = QWeight::discrete_q_hermite();
        assert_eq!(cn_eigenvalue(&dqh, 0).unwrap(), RatFuncQ::zero());
        assert_eq!(cn_eigenvalue(&dqh, 1).unwrap(), neg_inv_one_minus_q);
        let lql = QWeight::little_q_laguerre(1);
        assert_eq!(cn_eigenvalue(&lql, 1).unwrap(), neg_inv_one_minus_q);
        for n in 2..=4 {
            cn_eigenvalue(&dqh, n).unwrap();
            cn_eigenvalue(&lql, n).unwrap();
        }
    }

    #[test]
    fn bare_weight_transform_matches_its_closed_form() {
        // For the discrete q-Hermite weight with integrand 1 the
        // coefficient at index 2k is (1-q)^(2k+1)/(q^2;q^2)_k, odd
        // coefficients vanish, and the index-2 coefficient reduces to
        // (1-q)^2/(1+q).
        let w = QWeight::discrete_q_hermite();
        let phi = series_from_measure(&w, &XPoly::constant(RatFuncQ::one()), 14);
        let q = RatFuncQ::variable();
        let one_minus_q = &RatFuncQ::one() - &q;
        for k in 0..7 {
            let expected = &one_minus_q.pow(2 * k as i64 + 1)
                / &qseries::pochhammer(&q.pow(2), &q.pow(2), k as i64);
            assert_eq!(*phi.coeff(2 * k), expected, "index {}", 2 * k);
            if 2 * k + 1 < phi.order() {
                assert!(phi.coeff(2 * k + 1).is_zero());
            }
        }
        let explicit = &one_minus_q.pow(2) / &(&RatFuncQ::one() + &q);
        assert_eq!(*phi.coeff(2), explicit);
    }
}
