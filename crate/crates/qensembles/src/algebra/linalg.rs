//! Determinants and linear solves over the rational-function field.
//!
//! Plain fraction-field Gaussian elimination. The matrices in this crate are
//! small (Hankel determinants up to about 10 x 10, Vandermonde-type systems
//! for coefficient extraction), so cubic elimination with exact reduction at
//! every step is both fast enough and free of numerical questions.

use super::RatFuncQ;

/// Determinant by Gaussian elimination with row pivoting.
///
/// # Panics
///
/// Panics if the matrix is not square.
pub fn det(mut m: Vec<Vec<RatFuncQ>>) -> RatFuncQ {
    let n = m.len();
    for row in &m {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    let mut sign_flip = false;
    let mut diag = RatFuncQ::one();
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(r) => r,
            None => return RatFuncQ::zero(),
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            sign_flip = !sign_flip;
        }
        let pivot = m[col][col].clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..n {
                let t = &factor * &m[col][c];
                m[r][c] = &m[r][c] - &t;
            }
        }
        diag = &diag * &pivot;
    }
    if sign_flip {
        -&diag
    } else {
        diag
    }
}

/// Solves the square system `a x = rhs`; `None` if `a` is singular.
///
/// # Panics
///
/// Panics on shape mismatch.
pub fn solve(a: &[Vec<RatFuncQ>], rhs: &[RatFuncQ]) -> Option<Vec<RatFuncQ>> {
    let n = a.len();
    assert_eq!(rhs.len(), n, "right-hand side length mismatch");
    let mut m: Vec<Vec<RatFuncQ>> = a
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            assert_eq!(row.len(), n, "solve with a non-square matrix");
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    // Forward elimination.
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot_row, col);
        let pivot = m[col][col].clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..=n {
                let t = &factor * &m[col][c];
                m[r][c] = &m[r][c] - &t;
            }
        }
    }
    // Back substitution.
    let mut x = vec![RatFuncQ::zero(); n];
    for row in (0..n).rev() {
        let mut acc = m[row][n].clone();
        for c in row + 1..n {
            let t = &m[row][c] * &x[c];
            acc = &acc - &t;
        }
        x[row] = &acc / &m[row][row];
    }
    Some(x)
}

/// One nonzero kernel vector of a (possibly rectangular) matrix, or `None`
/// when the kernel is trivial.
///
/// Row echelon form identifies pivot columns; the first free column is set
/// to 1 and the pivot variables back-substituted. Callers that need the
/// kernel to be one-dimensional should verify the returned vector spans it
/// (for example by checking a second candidate is proportional).
///
/// # Panics
///
/// Panics if rows have unequal lengths.
pub fn null_vector(a: &[Vec<RatFuncQ>]) -> Option<Vec<RatFuncQ>> {
    if a.is_empty() {
        return None;
    }
    let ncols = a[0].len();
    let mut m: Vec<Vec<RatFuncQ>> = a
        .iter()
        .map(|row| {
            assert_eq!(row.len(), ncols, "ragged matrix");
            row.clone()
        })
        .collect();
    let nrows = m.len();
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut pivot_row_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut rank = 0usize;
    for col in 0..ncols {
        let pivot_row = match (rank..nrows).find(|&r| !m[r][col].is_zero()) {
            Some(r) => r,
            None => continue,
        };
        m.swap(pivot_row, rank);
        let pivot = m[rank][col].clone();
        for r in 0..nrows {
            if r == rank || m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..ncols {
                let t = &factor * &m[rank][c];
                m[r][c] = &m[r][c] - &t;
            }
        }
        pivot_col_of_row.push(col);
        pivot_row_of_col[col] = Some(rank);
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    let free_col = (0..ncols).find(|&c| pivot_row_of_col[c].is_none())?;
    let mut x = vec![RatFuncQ::zero(); ncols];
    x[free_col] = RatFuncQ::one();
    for (row, &col) in pivot_col_of_row.iter().enumerate() {
        // Reduced rows read pivot * x[col] + m[row][free_col] * 1 = 0.
        x[col] = &(-&m[row][free_col]) / &m[row][col];
    }
    Some(x)
}
