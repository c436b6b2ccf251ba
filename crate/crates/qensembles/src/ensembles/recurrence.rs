//! Search for linear recurrences over a window of exact moment values.
//!
//! The classical Gaussian and Laguerre moment sequences in k satisfy short
//! recurrences whose coefficients are polynomials in k. The q-deformed
//! sequences do not admit the analogous constant-coefficient relations,
//! and the searches here make both statements checkable: a kernel vector
//! of the window matrix is a relation verified on every window
//! simultaneously, while a trivial kernel on an overdetermined window
//! certifies absence.

use crate::algebra::{linalg, RatFuncQ};


/// True when `sum_i coeffs[i] * values[j+i] = 0` for every window start j.
pub fn verify_recurrence(values: &[RatFuncQ], coeffs: &[RatFuncQ]) -> bool {
    if coeffs.len() > values.len() {
        return false;
    }
    for j in 0..=(values.len() - coeffs.len()) {
        let mut acc = RatFuncQ::zero();
        for (i, c) in coeffs.iter().enumerate() {
            acc = &acc + &(c * &values[j + i]);
        }
        if !acc.is_zero() {
            return false;
        }
    }
    true
}

/// True when `sum_i a_i(n) values[n - start + i] = 0` for every window,
/// where `a_i(n) = sum_d coeffs[i][d] n^d` and n is the index of the
/// window's first entry (the entry at offset 0 has index `start`).
pub fn verify_polynomial_recurrence(
    start: i64,
    values: &[RatFuncQ],
    coeffs: &[Vec<RatFuncQ>],
) -> bool {
    let order = coeffs.len() - 1;
    if coeffs.len() > values.len() {
        return false;
    }
    for j in 0..=(values.len() - order - 1) {
        let n = start + j as i64;
        let mut acc = RatFuncQ::zero();
        for (i, poly) in coeffs.iter().enumerate() {
            let mut a = RatFuncQ::zero();
            let mut n_pow = RatFuncQ::one();
            for c in poly {
                a = &a + &(c * &n_pow);
                n_pow = &n_pow * &RatFuncQ::integer(n);
            }
            acc = &acc + &(&a * &values[j + i]);
        }
        if !acc.is_zero() {
            return false;
        }
    }
    true
}

/// Looks for a nonzero constant-coefficient relation of the given order
/// holding across the whole window. `None` means the window matrix has
/// full column rank, so no such relation exists for these values.
pub fn constant_recurrence_search(values: &[RatFuncQ], order: usize) -> Option<Vec<RatFuncQ>> {
    assert!(values.len() > order + 1, "window too short to be meaningful");
    let rows: Vec<Vec<RatFuncQ>> = (0..values.len() - order)
        .map(|j| values[j..=j + order].to_vec())
        .collect();
    linalg::null_vector(&rows)
}

/// Looks for a relation of the given order whose coefficients are
/// polynomials of degree at most `degree` in the window index. The
/// returned value is `coeffs[i][d]` as in
/// [`verify_polynomial_recurrence`]; `None` certifies absence over this
/// window.
pub fn polynomial_recurrence_search(
    start: i64,
    values: &[RatFuncQ],
    order: usize,
    degree: usize,
) -> Option<Vec<Vec<RatFuncQ>>> {
    let unknowns = (order + 1) * (degree + 1);
    assert!(
        values.len() > order + unknowns,
        "window too short: need more than {} values",
        order + unknowns
    );
    let mut rows: Vec<Vec<RatFuncQ>> = Vec::new();
    for j in 0..(values.len() - order) {
        let n = start + j as i64;
        let mut row = Vec::with_capacity(unknowns);
        for i in 0..=order {
            let mut n_pow = RatFuncQ::one();
            for _ in 0..=degree {
                row.push(&n_pow * &values[j + i]);
                n_pow = &n_pow * &RatFuncQ::integer(n);
            }
        }
        rows.push(row);
    }
    let flat = linalg::null_vector(&rows)?;
    let coeffs: Vec<Vec<RatFuncQ>> = (0..=order)
        .map(|i| flat[i * (degree + 1)..(i + 1) * (degree + 1)].to_vec())
        .collect();
    Some(coeffs)
}
