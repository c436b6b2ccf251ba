//! Operator equations for transforms of squared orthogonal polynomials.
//!
//! A q-classical weight comes with a Pearson pair `(sigma, tau)` relating
//! the weight to its own q-shift. Under the q-exponential transform the
//! moments of `p_N^2` times the measure assemble into a series whose
//! coefficients satisfy, jointly, a fourth-order q-difference equation in
//! the transform variable. The coefficients of that equation are words in
//! five generators: scalars, multiplication by the variable, the
//! q-derivative, dilations, and the diagonal resolvents the dilations
//! invert. [`series`] holds the truncated-jet arithmetic, [`qop`] the
//! operator words, [`pearson`] the weights with their transforms and
//! eigenvalue constants, and [`fourth_order`] the assembled equation
//! together with its verification and the companion first-order system it
//! is eliminated from.
//!
//! [`classical`] runs the same program for the Hermite, Laguerre and
//! Jacobi weights, where the transform is an exponential generating
//! function and the operator coefficients are polynomials in d/ds. Both
//! layers compare the assembled equations against the explicit per-weight
//! forms in circulation and pin down exactly where those forms deviate.

pub mod classical;
pub mod fourth_order;
pub mod pearson;
pub mod qop;
pub mod series;

pub use classical::{
    apply_diff, apply_form, classical_defect, classical_eigenvalue, classical_explicit_form,
    classical_form_discrepancies, classical_fourth_order, classical_moment_relations_hold,
    classical_transform, derive_classical_pair, verify_classical_annihilation, ClassicalFourthOrder,
    ClassicalWeight,
};
pub use fourth_order::{
    annihilation_defect, dqh_explicit_form, fourth_order_equation, verify_annihilation,
    FourthOrderEquation,
};
pub use pearson::{
    cn_eigenvalue, derive_pearson_pair, moment_relations_hold, pearson_verify,
    polynomial_transforms, series_from_measure, squared_transform, PolynomialTransforms, QWeight,
};
pub use qop::{lift, op_lift, ops_agree, QOp};
pub use series::FormalSeries;

/// Failure modes of the operator layer.
#[derive(Debug, thiserror::Error)]
pub enum OperatorError {
    /// The stored weight ratio disagrees with the Pearson pair.
    #[error("weight ratio does not match the Pearson pair")]
    RatioMismatch,
    /// A moment-level consequence of the Pearson relation failed.
    #[error("Pearson {form} relation fails at row ({a}, {b})")]
    PartsMismatch {
        /// Which integrated form of the relation failed.
        form: &'static str,
        /// Power of the variable multiplying sigma.
        a: usize,
        /// Power of the variable multiplying tau.
        b: usize,
    },
    /// An orthogonal polynomial failed its second-order equation.
    #[error("degree {degree} polynomial is not an eigenfunction")]
    NotEigenfunction {
        /// Degree of the offending polynomial.
        degree: usize,
    },
    /// An equation left a nonzero coefficient where it should annihilate.
    #[error("nonzero defect at coefficient {index}: {value}")]
    NonzeroDefect {
        /// Index of the first surviving coefficient.
        index: usize,
        /// The surviving value, rendered in the field of fractions.
        value: String,
    },
}
