//! The classical counterpart of the fourth-order equation.
//!
//! For the Hermite, Laguerre and Jacobi weights the exponential generating
//! function of the moments of `p_N^2 w(x) dx` satisfies a fourth-order
//! linear differential equation in the transform variable s whose
//! coefficients are constant-coefficient polynomials in d/ds. Writing `A`
//! and `B` for the Pearson pair `tau` and `sigma` with the variable
//! reinterpreted as d/ds, and `lam` for the eigenvalue of the weight's
//! second-order equation at degree N, the equation reads
//!
//! ```text
//! (s^4 M4 + s^3 M3 + s^2 M2 + s M1) Phi = 0
//! M1 = B'' A - A'' B - A' A + 2 lam B'
//! M2 = 3 B'' B + 2 B' A + 4 lam B - A^2 - 2 A' B
//! M3 = 3 B' B
//! M4 = B^2
//! ```
//!
//! The module builds the equation from the Pearson pair, verifies that it
//! annihilates the transform jets, and compares the result against the
//! explicit per-weight tables in circulation. For Hermite and Laguerre
//! those tables match the assembly up to an overall sign; for Jacobi one
//! constant in the first-order row is off by `2(alpha+beta)`, and the
//! tests exhibit a numeric witness of the resulting defect.

use super::series::FormalSeries;
use super::OperatorError;
use crate::algebra::{linalg, RatFuncQ, XPoly};
use crate::ensembles::{gram_schmidt, Ensemble, OrthogonalSystem};
use crate::qseries;

/// A weight on the real line whose Pearson pair is polynomial of degree
/// at most (2, 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalWeight {
    /// `exp(-x^2)` on the whole line.
    Hermite,
    /// `x^alpha exp(-x)` on the positive half-line.
    Laguerre {
        /// Exponent at the origin.
        alpha: u32,
    },
    /// `x^alpha (1-x)^beta` on the unit interval.
    Jacobi {
        /// Exponent at 0.
        alpha: u32,
        /// Exponent at 1.
        beta: u32,
    },
}

impl ClassicalWeight {
    /// Short machine-friendly weight name.
    pub fn name(&self) -> String {
        match self {
            ClassicalWeight::Hermite => "hermite".into(),
            ClassicalWeight::Laguerre { alpha } => format!("laguerre-a{alpha}"),
            ClassicalWeight::Jacobi { alpha, beta } => format!("jacobi-a{alpha}-b{beta}"),
        }
    }

    /// The n-th raw moment of the weight, normalized so the zeroth Hermite
    /// and Laguerre moments are 1 and the Jacobi moments are the beta
    /// integrals.
    pub fn weight_moment(&self, n: u64) -> RatFuncQ {
        match *self {
            ClassicalWeight::Hermite => Ensemble::Gaussian.weight_moment(n),
            ClassicalWeight::Laguerre { alpha } => {
                Ensemble::Laguerre { alpha }.weight_moment(n)
            }
            ClassicalWeight::Jacobi { alpha, beta } => {
                let a = alpha as u64;
                let b = beta as u64;
                let value = &(&qseries::factorial(n + a) * &qseries::factorial(b))
                    / &qseries::factorial(n + a + b + 1);
                RatFuncQ::constant(value)
            }
        }
    }

    /// Integrates a polynomial against the weight.
    pub fn moment_functional(&self, p: &XPoly) -> RatFuncQ {
        let mut acc = RatFuncQ::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = &acc + &(c * &self.weight_moment(i as u64));
        }
        acc
    }

    /// Monic orthogonal polynomials and their squared norms.
    pub fn orthogonal_system(&self, count: usize) -> OrthogonalSystem {
        gram_schmidt(|p| self.moment_functional(p), count)
    }

    /// The Pearson pair `(sigma, tau)` with `(sigma w)' = tau w`.
    pub fn pearson_pair(&self) -> (XPoly, XPoly) {
        match *self {
            ClassicalWeight::Hermite => (
                XPoly::one(),
                ipoly(&[0, -2]),
            ),
            ClassicalWeight::Laguerre { alpha } => (
                ipoly(&[0, 1]),
                ipoly(&[alpha as i64 + 1, -1]),
            ),
            ClassicalWeight::Jacobi { alpha, beta } => (
                ipoly(&[0, 1, -1]),
                ipoly(&[alpha as i64 + 1, -(alpha as i64 + beta as i64 + 2)]),
            ),
        }
    }
}

fn ipoly(cs: &[i64]) -> XPoly {
    XPoly::from_coeffs(cs.iter().map(|&c| RatFuncQ::integer(c)).collect())
}

/// Checks the moment-level consequences of the Pearson relation: for each
/// row index a below `rows`, integrating `(sigma w)' x^a = tau w x^a` by
/// parts kills the boundary terms, so
/// `sum_i sigma_i a mu_(i+a-1) + sum_j tau_j mu_(j+a) = 0`.
pub fn classical_moment_relations_hold(
    w: &ClassicalWeight,
    sigma: &XPoly,
    tau: &XPoly,
    rows: usize,
) -> bool {
    for a in 0..rows {
        let mut val = RatFuncQ::zero();
        if a > 0 {
            let af = RatFuncQ::integer(a as i64);
            for (i, c) in sigma.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let m = w.weight_moment((i + a - 1) as u64);
                val = &val + &(c * &(&af * &m));
            }
        }
        for (j, c) in tau.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            val = &val + &(c * &w.weight_moment((j + a) as u64));
        }
        if !val.is_zero() {
            return false;
        }
    }
    true
}

/// Recovers the Pearson pair from the moment sequence alone, solving the
/// homogeneous system of [`classical_moment_relations_hold`] rows for
/// `deg sigma <= 2, deg tau <= 1` and normalizing the lowest nonzero
/// coefficient of sigma to 1. Returns None when the moments admit no such
/// pair.
pub fn derive_classical_pair(w: &ClassicalWeight) -> Option<(XPoly, XPoly)> {
    let m = |k: i64| {
        if k < 0 {
            RatFuncQ::zero()
        } else {
            w.weight_moment(k as u64)
        }
    };
    let rows: Vec<Vec<RatFuncQ>> = (0..8)
        .map(|a| {
            let af = RatFuncQ::integer(a);
            vec![
                &af * &m(a - 1),
                &af * &m(a),
                &af * &m(a + 1),
                m(a),
                m(a + 1),
            ]
        })
        .collect();
    let v = linalg::null_vector(&rows)?;
    let lead = v[..3].iter().find(|c| !c.is_zero())?;
    let inv = lead.inv();
    let sigma = XPoly::from_coeffs(v[..3].iter().map(|c| c * &inv).collect());
    let tau = XPoly::from_coeffs(v[3..].iter().map(|c| c * &inv).collect());
    Some((sigma, tau))
}

/// The eigenvalue `lam_N` in `sigma p'' + tau p' = -lam_N p` for the
/// degree-n orthogonal polynomial, computed from the residual and checked
/// against the full eigenfunction relation.
pub fn classical_eigenvalue(w: &ClassicalWeight, n: usize) -> Result<RatFuncQ, OperatorError> {
    let (sigma, tau) = w.pearson_pair();
    let system = w.orthogonal_system(n + 1);
    let p = &system.polys[n];
    let residual = &(&sigma * &p.derivative().derivative()) + &(&tau * &p.derivative());
    let value = -&residual.coeff(n);
    if !(&residual + &p.scale(&value)).is_zero() {
        return Err(OperatorError::NotEigenfunction { degree: n });
    }
    Ok(value)
}

/// The assembled classical equation: `ops[j]`, a polynomial in d/ds,
/// multiplies the j-th power of s. `ops[0]` is always zero.
pub struct ClassicalFourthOrder {
    /// Coefficient operators of the powers 0..4 of the transform variable.
    pub ops: [XPoly; 5],
    /// The second-order eigenvalue at this degree.
    pub eigenvalue: RatFuncQ,
}

/// Builds the classical fourth-order equation at degree n.
pub fn classical_fourth_order(
    w: &ClassicalWeight,
    n: usize,
) -> Result<ClassicalFourthOrder, OperatorError> {
    let (b, a) = w.pearson_pair();
    let lam = classical_eigenvalue(w, n)?;
    let b1 = b.derivative();
    let b2 = b1.derivative();
    let a1 = a.derivative();
    let a2 = a1.derivative();
    let two_lam = &RatFuncQ::integer(2) * &lam;
    let four_lam = &RatFuncQ::integer(4) * &lam;
    let m1 = &(&(&(&b2 * &a) - &(&a2 * &b)) - &(&a1 * &a)) + &b1.scale(&two_lam);
    let m2 = &(&(&(&b2 * &b).scale(&RatFuncQ::integer(3)) + &(&b1 * &a).scale(&RatFuncQ::integer(2)))
        + &b.scale(&four_lam))
        - &(&(&a * &a) + &(&a1 * &b).scale(&RatFuncQ::integer(2)));
    let m3 = (&b1 * &b).scale(&RatFuncQ::integer(3));
    let m4 = &b * &b;
    Ok(ClassicalFourthOrder {
        ops: [XPoly::zero(), m1, m2, m3, m4],
        eigenvalue: lam,
    })
}

/// Applies a polynomial in d/ds to a jet of coefficients in s.
pub fn apply_diff(op: &XPoly, phi: &FormalSeries) -> FormalSeries {
    let mut acc: Option<FormalSeries> = None;
    let mut power = phi.clone();
    for (i, c) in op.coeffs().iter().enumerate() {
        if i > 0 {
            power = diff_series(&power);
        }
        if c.is_zero() {
            continue;
        }
        let term = power.scale(c);
        acc = Some(match acc {
            None => term,
            Some(prev) => &prev + &term,
        });
    }
    acc.unwrap_or_else(|| FormalSeries::zero(phi.order()))
}

fn diff_series(phi: &FormalSeries) -> FormalSeries {
    let n = phi.order().saturating_sub(1);
    FormalSeries::new(
        (0..n)
            .map(|k| &RatFuncQ::integer(k as i64 + 1) * phi.coeff(k + 1))
            .collect(),
    )
}

/// The exponential generating function of the moments of `p_n^2 w dx`,
/// normalized by the squared norm: coefficient k is
/// `L[x^k p_n^2] / (k! h_n)`.
pub fn classical_transform(w: &ClassicalWeight, n: usize, order: usize) -> FormalSeries {
    let system = w.orthogonal_system(n + 1);
    let p = &system.polys[n];
    let p2 = p * p;
    let mut scale = system.norms[n].inv();
    let mut coeffs = Vec::with_capacity(order);
    for k in 0..order {
        if k > 0 {
            scale = &scale / &RatFuncQ::integer(k as i64);
        }
        coeffs.push(&w.moment_functional(&p2.shift_up(k)) * &scale);
    }
    FormalSeries::new(coeffs)
}

/// Applies the full classical operator `sum_j s^j ops[j]` to a jet.
pub fn classical_defect(eq: &ClassicalFourthOrder, phi: &FormalSeries) -> FormalSeries {
    apply_form(
        &eq.ops
            .iter()
            .enumerate()
            .map(|(j, op)| (j, op.clone()))
            .collect::<Vec<_>>(),
        phi,
    )
}

/// Applies `sum_(a, p) s^a p(d/ds)` to a jet.
pub fn apply_form(form: &[(usize, XPoly)], phi: &FormalSeries) -> FormalSeries {
    let mut acc: Option<FormalSeries> = None;
    for (power, op) in form {
        let mut term = apply_diff(op, phi);
        for _ in 0..*power {
            term = term.shift_up();
        }
        acc = Some(match acc {
            None => term,
            Some(prev) => &prev + &term,
        });
    }
    acc.unwrap_or_else(|| FormalSeries::zero(phi.order()))
}

/// Verifies that the classical equation annihilates the transform of the
/// squared degree-n polynomial to `order` coefficients. Returns the
/// number of coefficients checked.
pub fn verify_classical_annihilation(
    w: &ClassicalWeight,
    n: usize,
    order: usize,
) -> Result<usize, OperatorError> {
    let eq = classical_fourth_order(w, n)?;
    let phi = classical_transform(w, n, order);
    let defect = classical_defect(&eq, &phi);
    match defect.first_nonzero() {
        None => Ok(defect.order()),
        Some(index) => Err(OperatorError::NonzeroDefect {
            index,
            value: defect.coeff(index).to_string_var("q"),
        }),
    }
}

/// The explicit per-weight tables of the equation in circulation, as
/// pairs `(a, p)` meaning `s^a p(d/ds)`. These are one power of s lower
/// than the assembly of [`classical_fourth_order`] and scaled by an
/// overall sign that [`classical_form_discrepancies`] detects.
pub fn classical_explicit_form(w: &ClassicalWeight, n: usize) -> Vec<(usize, XPoly)> {
    let nn = n as i64;
    match *w {
        ClassicalWeight::Hermite => vec![
            (0, ipoly(&[0, 4])),
            (1, ipoly(&[-(8 * nn + 4), 0, 4])),
            (3, ipoly(&[-1])),
        ],
        ClassicalWeight::Laguerre { alpha } => {
            let a = alpha as i64;
            vec![
                (0, ipoly(&[a + 1 + 2 * nn, -1])),
                (1, ipoly(&[1 - a * a, 2 * (2 * nn + a + 1), -1])),
                (2, ipoly(&[0, 3])),
                (3, ipoly(&[0, 0, 1])),
            ]
        }
        ClassicalWeight::Jacobi { alpha, beta } => {
            let a = alpha as i64;
            let b = beta as i64;
            let lam = nn * (nn + a + b + 1);
            vec![
                (
                    0,
                    ipoly(&[
                        (a + b) * (a + 1) + 2 * lam,
                        -((a + b) * (a + b + 4) + 4 * lam),
                    ]),
                ),
                (
                    1,
                    ipoly(&[
                        1 - a * a,
                        4 * lam + 2 * (a + 1) * (a + b) - 6,
                        6 - 4 * lam - (a + b) * (a + b + 2),
                    ]),
                ),
                (2, ipoly(&[0, 3, -9, 6])),
                (3, ipoly(&[0, 0, 1, -2, 1])),
            ]
        }
    }
}

/// Compares the assembled equation with the explicit table: shifts the
/// table up one power of s, detects the overall scalar from the leading
/// entry, and returns the remaining differences as
/// `((s power, derivative power), assembled - scalar * table)` with zero
/// entries dropped.
pub fn classical_form_discrepancies(
    w: &ClassicalWeight,
    n: usize,
) -> Result<Vec<((usize, usize), RatFuncQ)>, OperatorError> {
    let eq = classical_fourth_order(w, n)?;
    let mut shifted: [XPoly; 5] = [
        XPoly::zero(),
        XPoly::zero(),
        XPoly::zero(),
        XPoly::zero(),
        XPoly::zero(),
    ];
    for (a, p) in classical_explicit_form(w, n) {
        shifted[a + 1] = p;
    }
    let top = eq.ops[4]
        .degree()
        .expect("the leading coefficient operator is nonzero");
    let factor = &eq.ops[4].coeff(top) / &shifted[4].coeff(top);
    let mut diffs = Vec::new();
    for j in 0..5 {
        let diff = &eq.ops[j] - &shifted[j].scale(&factor);
        for (i, c) in diff.coeffs().iter().enumerate() {
            if !c.is_zero() {
                diffs.push(((j, i), c.clone()));
            }
        }
    }
    Ok(diffs)
}
