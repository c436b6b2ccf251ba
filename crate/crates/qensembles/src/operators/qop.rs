//! q-difference operators in the transform variable.
//!
//! Operators act coefficient-wise on [`FormalSeries`] jets. Writing a_k
//! for the coefficient at index k: the q-derivative [`QOp::D`] sends
//! a_(k+1) to `[k+1]_q a_(k+1)` at index k, the dilation [`QOp::Shift`]
//! rescales a_k by `q^(mk)`, the resolvent [`QOp::Resolvent`] divides a_k
//! by `1 + q^(i+k)` (the exact inverse of `1 + q^i` times the unit
//! dilation, both being diagonal), and [`QOp::MulLambda`] shifts
//! coefficients up one slot. Words of these generators express every
//! operator appearing in the fourth-order equations for transforms of
//! squared orthogonal polynomials.
//!
//! [`lift`] embeds a polynomial in the spectral variable as the same
//! polynomial in D: multiplying the measure by x corresponds to applying D
//! on the transform side. [`op_lift`] additionally dilates the polynomial,
//! which is how products with powers of the transform variable are pushed
//! through a lifted polynomial (see [`op_lift`] for the exact identity).

use super::series::FormalSeries;
use crate::algebra::{RatFuncQ, XPoly};
use crate::qseries;

/// A q-difference operator on jets in the transform variable.
#[derive(Clone, Debug, PartialEq)]
pub enum QOp {
    /// Multiplication by a constant in Q(q).
    Scalar(RatFuncQ),
    /// Multiplication by the transform variable.
    MulLambda,
    /// q-derivative in the transform variable.
    D,
    /// Dilation substituting q^m times the variable.
    Shift(i64),
    /// Inverse of `1 + q^i` times the unit dilation.
    Resolvent(i64),
    /// Operator product; the rightmost factor acts first, so a vector
    /// reads in the same order the product is written.
    Compose(Vec<QOp>),
    /// Pointwise sum of operators.
    Sum(Vec<QOp>),
}

impl QOp {
    /// The identity operator.
    pub fn identity() -> Self {
        QOp::Scalar(RatFuncQ::one())
    }

    /// `1 + q^i` times the unit dilation, the operator inverted by
    /// [`QOp::Resolvent`] with the same index.
    pub fn one_plus_shift(i: i64) -> Self {
        QOp::Sum(vec![
            QOp::identity(),
            QOp::Compose(vec![QOp::Scalar(RatFuncQ::q_pow(i)), QOp::Shift(1)]),
        ])
    }

    /// Applies the operator to a jet, shortening or lengthening it
    /// according to the information each generator consumes or produces.
    pub fn apply(&self, phi: &FormalSeries) -> FormalSeries {
        match self {
            QOp::Scalar(c) => phi.scale(c),
            QOp::MulLambda => phi.shift_up(),
            QOp::D => {
                let q = RatFuncQ::variable();
                let n = phi.order().saturating_sub(1);
                FormalSeries::new(
                    (0..n)
                        .map(|k| &qseries::q_int(k as i64 + 1, &q) * phi.coeff(k + 1))
                        .collect(),
                )
            }
            QOp::Shift(m) => FormalSeries::new(
                phi.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, a)| a * &RatFuncQ::q_pow(m * k as i64))
                    .collect(),
            ),
            QOp::Resolvent(i) => FormalSeries::new(
                phi.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, a)| {
                        a / &(&RatFuncQ::one() + &RatFuncQ::q_pow(i + k as i64))
                    })
                    .collect(),
            ),
            QOp::Compose(ops) => ops
                .iter()
                .rev()
                .fold(phi.clone(), |acc, op| op.apply(&acc)),
            QOp::Sum(ops) => {
                let mut acc = FormalSeries::zero(phi.order());
                for op in ops {
                    acc = &acc + &op.apply(phi);
                }
                acc
            }
        }
    }

    /// Compact textual form for reports.
    pub fn describe(&self) -> String {
        match self {
            QOp::Scalar(c) => format!("({})", c.to_string_var("q")),
            QOp::MulLambda => "lam".to_string(),
            QOp::D => "D".to_string(),
            QOp::Shift(m) => format!("Lam^{m}"),
            QOp::Resolvent(i) => format!("(1+q^{i} Lam)^-1"),
            QOp::Compose(ops) => ops
                .iter()
                .map(QOp::describe)
                .collect::<Vec<_>>()
                .join(" "),
            QOp::Sum(ops) => format!(
                "({})",
                ops.iter()
                    .map(QOp::describe)
                    .collect::<Vec<_>>()
                    .join(" + ")
            ),
        }
    }
}

/// The polynomial `p` with the spectral variable replaced by D.
pub fn lift(p: &XPoly) -> QOp {
    let mut terms = Vec::new();
    for (j, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut word = vec![QOp::Scalar(c.clone())];
        word.extend(std::iter::repeat(QOp::D).take(j));
        terms.push(QOp::Compose(word));
    }
    if terms.is_empty() {
        return QOp::Scalar(RatFuncQ::zero());
    }
    QOp::Sum(terms)
}

/// The lift of the i-th q-derivative of `p` evaluated at `q^(m-i)` times
/// the spectral variable.
///
/// These are the operators through which a lifted polynomial passes a
/// power of the transform variable:
///
/// ```text
/// lift(p) lam^m = sum_(i=0..m) lam^(m-i) qbinom(m, i) op_lift(p, m, i)
/// ```
///
/// with q-binomial coefficients in base q, an identity verified by
/// property test. For `i` exceeding the degree of `p` the result is the
/// zero operator.
///
/// # Panics
///
/// Panics if `i > m`.
pub fn op_lift(p: &XPoly, m: u32, i: u32) -> QOp {
    assert!(i <= m, "derivative count {i} exceeds power {m}");
    let q = RatFuncQ::variable();
    let mut d = p.clone();
    for _ in 0..i {
        d = d.q_derivative(&q);
    }
    lift(&d.dilate(&RatFuncQ::q_pow((m - i) as i64)))
}

/// True when the two operators act identically on every basis jet of the
/// window, comparing outputs on their common prefix. For words of the
/// generators above, whose matrices are banded, this is a complete
/// equality check over the window.
pub fn ops_agree(a: &QOp, b: &QOp, order: usize) -> bool {
    for j in 0..order {
        let basis = FormalSeries::basis(j, order);
        let va = a.apply(&basis);
        let vb = b.apply(&basis);
        let n = va.order().min(vb.order());
        if va.truncate(n) != vb.truncate(n) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qp(e: i64) -> RatFuncQ {
        RatFuncQ::q_pow(e)
    }

    fn q_num(n: i64) -> RatFuncQ {
        qseries::q_int(n, &RatFuncQ::variable())
    }

    fn d_word(n: usize) -> Vec<QOp> {
        std::iter::repeat(QOp::D).take(n).collect()
    }

    #[test]
    fn derivative_on_basis_jets() {
        let phi = FormalSeries::basis(4, 8);
        let d = QOp::D.apply(&phi);
        assert_eq!(d.order(), 7);
        assert_eq!(d.coeff(3), &q_num(4));
        assert_eq!(d.first_nonzero(), Some(3));
    }

    #[test]
    fn shift_and_resolvent_are_mutually_inverse() {
        for i in 0..=2 {
            let forward = QOp::one_plus_shift(i);
            let inverse = QOp::Resolvent(i);
            assert!(ops_agree(
                &QOp::Compose(vec![forward.clone(), inverse.clone()]),
                &QOp::identity(),
                30,
            ));
            assert!(ops_agree(
                &QOp::Compose(vec![inverse, forward]),
                &QOp::identity(),
                30,
            ));
        }
    }

    #[test]
    fn derivative_product_rule_on_the_variable() {
        // D^n lam = [n]_q D^(n-1) + q^n lam D^n.
        for n in 1..=5usize {
            let mut lhs = d_word(n);
            lhs.push(QOp::MulLambda);
            let rhs = QOp::Sum(vec![
                QOp::Compose(
                    std::iter::once(QOp::Scalar(q_num(n as i64)))
                        .chain(d_word(n - 1))
                        .collect(),
                ),
                QOp::Compose(
                    [QOp::Scalar(qp(n as i64)), QOp::MulLambda]
                        .into_iter()
                        .chain(d_word(n))
                        .collect(),
                ),
            ]);
            assert!(ops_agree(&QOp::Compose(lhs), &rhs, 12), "n = {n}");
        }
    }

    fn quadratic(r0: RatFuncQ, r1: RatFuncQ, r2: RatFuncQ) -> XPoly {
        XPoly::from_coeffs(vec![r0, r1, r2])
    }

    #[test]
    fn dilated_derivative_lifts_match_their_expanded_forms() {
        let q = RatFuncQ::variable();
        let triples = [
            (RatFuncQ::integer(5), RatFuncQ::integer(-2), RatFuncQ::integer(3)),
            (RatFuncQ::one(), RatFuncQ::zero(), RatFuncQ::one()),
            (q.clone(), &RatFuncQ::one() - &q, qp(-1)),
        ];
        for (r0, r1, r2) in triples {
            let r = quadratic(r0.clone(), r1.clone(), r2.clone());
            let dd = |c: RatFuncQ, n: usize| {
                QOp::Compose(std::iter::once(QOp::Scalar(c)).chain(d_word(n)).collect())
            };
            let one_plus_q = &RatFuncQ::one() + &q;
            let cases: Vec<(u32, u32, QOp)> = vec![
                (1, 0, QOp::Sum(vec![
                    dd(&r2 * &qp(2), 2),
                    dd(&r1 * &qp(1), 1),
                    dd(r0.clone(), 0),
                ])),
                (1, 1, QOp::Sum(vec![
                    dd(&r2 * &one_plus_q, 1),
                    dd(r1.clone(), 0),
                ])),
                (2, 0, QOp::Sum(vec![
                    dd(&r2 * &qp(4), 2),
                    dd(&r1 * &qp(2), 1),
                    dd(r0.clone(), 0),
                ])),
                (2, 1, QOp::Sum(vec![
                    dd(&(&r2 * &qp(1)) * &one_plus_q, 1),
                    dd(r1.clone(), 0),
                ])),
                (2, 2, QOp::Scalar(&r2 * &one_plus_q)),
                (3, 0, QOp::Sum(vec![
                    dd(&r2 * &qp(6), 2),
                    dd(&r1 * &qp(3), 1),
                    dd(r0.clone(), 0),
                ])),
                (3, 1, QOp::Sum(vec![
                    dd(&(&r2 * &qp(2)) * &one_plus_q, 1),
                    dd(r1.clone(), 0),
                ])),
                (3, 2, QOp::Scalar(&r2 * &one_plus_q)),
                (3, 3, QOp::Scalar(RatFuncQ::zero())),
            ];
            for (m, i, expected) in cases {
                assert!(
                    ops_agree(&op_lift(&r, m, i), &expected, 10),
                    "lift of derivative {i} at power {m}"
                );
            }
        }
    }

    #[test]
    fn lifted_quadratic_passes_a_cube_of_the_variable() {
        // lift(R) lam^3 = lam^3 L0 + [3]_q (lam^2 L1 + lam L2) with
        // L_i = op_lift(R, 3, i), the binomials qbinom(3,1) = qbinom(3,2)
        // collapsing to [3]_q and the i = 3 term vanishing.
        let q = RatFuncQ::variable();
        let r = quadratic(qp(1), &RatFuncQ::one() - &q, RatFuncQ::integer(2));
        let lhs = QOp::Compose(vec![
            lift(&r),
            QOp::MulLambda,
            QOp::MulLambda,
            QOp::MulLambda,
        ]);
        let three = q_num(3);
        let rhs = QOp::Sum(vec![
            QOp::Compose(vec![
                QOp::MulLambda,
                QOp::MulLambda,
                QOp::MulLambda,
                op_lift(&r, 3, 0),
            ]),
            QOp::Compose(vec![
                QOp::Scalar(three.clone()),
                QOp::MulLambda,
                QOp::MulLambda,
                op_lift(&r, 3, 1),
            ]),
            QOp::Compose(vec![QOp::Scalar(three), QOp::MulLambda, op_lift(&r, 3, 2)]),
        ]);
        assert!(ops_agree(&lhs, &rhs, 10));
    }

    fn arb_coeff() -> impl Strategy<Value = RatFuncQ> {
        (-3i64..=3).prop_map(RatFuncQ::integer)
    }

    proptest! {
        #[test]
        fn lifted_polynomials_pass_powers_of_the_variable(
            r0 in arb_coeff(),
            r1 in arb_coeff(),
            r2 in arb_coeff(),
            m in 1u32..=3,
        ) {
            let q = RatFuncQ::variable();
            let r = quadratic(r0, r1, r2);
            let mut lhs = vec![lift(&r)];
            lhs.extend(std::iter::repeat(QOp::MulLambda).take(m as usize));
            let rhs = QOp::Sum(
                (0..=m)
                    .map(|i| {
                        let mut word =
                            vec![QOp::Scalar(qseries::q_binomial(m as i64, i as i64, &q))];
                        word.extend(
                            std::iter::repeat(QOp::MulLambda).take((m - i) as usize),
                        );
                        word.push(op_lift(&r, m, i));
                        QOp::Compose(word)
                    })
                    .collect(),
            );
            prop_assert!(ops_agree(&QOp::Compose(lhs), &rhs, 10));
        }
    }

    fn arb_qop() -> impl Strategy<Value = QOp> {
        prop_oneof![
            (-3i64..=3).prop_map(|n| QOp::Scalar(RatFuncQ::integer(n))),
            Just(QOp::MulLambda),
            Just(QOp::D),
            (-2i64..=2).prop_map(QOp::Shift),
            (0i64..=2).prop_map(QOp::Resolvent),
        ]
    }

    proptest! {
        #[test]
        fn truncation_commutes_with_application(
            word in proptest::collection::vec(arb_qop(), 1..=6),
            values in proptest::collection::vec(-3i64..=3, 40),
        ) {
            let op = QOp::Compose(word);
            let full = FormalSeries::new(
                values.iter().map(|&v| RatFuncQ::integer(v)).collect(),
            );
            let applied_full = op.apply(&full);
            let applied_cut = op.apply(&full.truncate(20));
            prop_assert_eq!(
                applied_full.truncate(applied_cut.order()),
                applied_cut
            );
        }
    }
}
