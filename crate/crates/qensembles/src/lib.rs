//! Exact moments of q-deformed orthogonal-polynomial ensembles.
//!
//! The library computes spectral moments, Schur-polynomial averages,
//! generating functions, coefficient expansions, q-difference and classical
//! operator equations, and q -> 1 / large-N limits for the Stieltjes-Wigert,
//! discrete q-Hermite, and little q-Laguerre ensembles. Every closed form is
//! checked against independent brute-force oracles (Andreief moment
//! determinants and Christoffel-Darboux sums), and each comparison lands in
//! an audit report with a per-identity status.
//!
//! All symbolic work happens in the field Q(q) of rational functions with
//! exact rational coefficients ([`algebra::RatFuncQ`]); the Stieltjes-Wigert
//! ensemble runs in a base variable s with q = s^2 so half-integer powers of
//! q stay exact. Floating point appears only in the large-N scaling module,
//! and there only to evaluate exact rational functions at numeric points.

pub mod algebra;
pub mod asymptotics;
pub mod ensembles;
pub mod hermite;
pub mod operators;
pub mod qseries;
pub mod report;
