//! q-special functions over the exact coefficient field: q-Pochhammer
//! symbols, q-integers, q-binomials, terminating basic hypergeometric
//! series, little q-Jacobi polynomials, and terminating classical
//! hypergeometric sums.
//!
//! Every function takes the base as an explicit [`RatFuncQ`], so the same
//! code path serves the bases q, q^{-1}, q^2 and s (with q = s^2): a base
//! change is just a different argument, never a separate implementation.

use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::{rat_int, Rat, RatFuncQ};

/// Errors from series evaluation.
#[derive(Debug, thiserror::Error)]
pub enum QSeriesError {
    /// Basic hypergeometric series must have exactly one more upper than
    /// lower parameter.
    #[error("series shape {upper}phi{lower} not supported; only r = s+1")]
    WrongShape { upper: usize, lower: usize },
    /// No upper parameter forces termination and no term cap was given.
    #[error("series does not terminate and no term count was given")]
    NonTerminating,
    /// A lower-parameter Pochhammer factor vanished before the series
    /// terminated.
    #[error("lower parameter produces a zero denominator at term {term}")]
    LowerZero { term: usize },
}

/// The q-Pochhammer symbol (a; base)_n = prod_{i=0}^{n-1} (1 - a*base^i).
///
/// Negative orders follow the standard convention
/// (a; q)_{-n} = 1 / (a q^{-n}; q)_n.
///
/// # Panics
///
/// Panics for negative `n` when a factor of the defining product vanishes
/// (a pole of the extended symbol).
pub fn pochhammer(a: &RatFuncQ, base: &RatFuncQ, n: i64) -> RatFuncQ {
    if n < 0 {
        let shifted = a * &base.pow(n);
        let p = pochhammer(&shifted, base, -n);
        assert!(
            !p.is_zero(),
            "pochhammer pole: (a; base)_{n} with vanishing factor"
        );
        return p.inv();
    }
    let mut result = RatFuncQ::one();
    let mut aq = a.clone();
    for _ in 0..n {
        result = &result * &(&RatFuncQ::one() - &aq);
        if result.is_zero() {
            return result;
        }
        aq = &aq * base;
    }
    result
}

/// The q-factorial (base; base)_n.
pub fn q_factorial(n: i64, base: &RatFuncQ) -> RatFuncQ {
    pochhammer(base, base, n)
}

/// The q-integer [n] = (1 - base^n)/(1 - base), defined for any integer n.
///
/// # Panics
///
/// Panics if the base is the constant 1.
pub fn q_int(n: i64, base: &RatFuncQ) -> RatFuncQ {
    assert!(!base.is_one(), "q-integer undefined at base 1");
    let one = RatFuncQ::one();
    &(&one - &base.pow(n)) / &(&one - base)
}

/// The q-binomial coefficient [n choose k] in the given base; zero outside
/// 0 <= k <= n.
pub fn q_binomial(n: i64, k: i64, base: &RatFuncQ) -> RatFuncQ {
    if k < 0 || n < 0 || k > n {
        return RatFuncQ::zero();
    }
    let k = k.min(n - k);
    // prod_{i=1}^{k} (1 - base^{n-k+i})/(1 - base^i)
    let num = pochhammer(&base.pow(n - k + 1), base, k);
    let den = q_factorial(k, base);
    &num / &den
}

/// Smallest index m <= cap with a*base^m = 1, if any: the point where the
/// Pochhammer factor (1 - a*base^m) kills every later series term.
fn termination_index(a: &RatFuncQ, base: &RatFuncQ, cap: usize) -> Option<usize> {
    if a.is_one() {
        return Some(0);
    }
    // Monomial fast path: a*base^m = 1 forces coefficient 1 and exponent 0,
    // so m solves ae + m*be = 0.
    if let (Some((ac, ae)), Some((bc, be))) = (a.as_monomial(), base.as_monomial()) {
        if bc.is_one() && be != 0 {
            if !ac.is_one() {
                return None;
            }
            return (ae % be == 0 && ae / be < 0).then(|| (-ae / be) as usize);
        }
    }
    let mut aq = a.clone();
    for m in 0..=cap {
        if aq.is_one() {
            return Some(m);
        }
        aq = &aq * base;
    }
    None
}

/// Terminating basic hypergeometric series of shape r = s+1:
///
/// ```text
/// rφs(a_1..a_r; b_1..b_s | base; z)
///   = sum_n  (a_1;base)_n ... (a_r;base)_n
///            / [ (base;base)_n (b_1;base)_n ... (b_s;base)_n ] * z^n
/// ```
///
/// (the parameter-count balance makes the general definition's extra
/// (-1)^n base^{n(n-1)/2} factor equal to 1, so it is omitted).
///
/// The sum runs until an upper parameter of the form base^{-m} truncates
/// it, or until `term_count` terms when given. With neither, the series is
/// rejected rather than summed blindly.
///
/// # Edge cases
///
/// An upper parameter equal to 1 makes every term beyond the zeroth vanish.
pub fn basic_hypergeometric(
    upper: &[RatFuncQ],
    lower: &[RatFuncQ],
    base: &RatFuncQ,
    arg: &RatFuncQ,
    term_count: Option<usize>,
) -> Result<RatFuncQ, QSeriesError> {
    if upper.len() != lower.len() + 1 {
        return Err(QSeriesError::WrongShape {
            upper: upper.len(),
            lower: lower.len(),
        });
    }
    // Number of terms: 0..=m for the tightest terminating upper parameter.
    let scan_cap = if term_count.is_some() { 64 } else { 512 };
    let natural_end = upper
        .iter()
        .filter_map(|a| termination_index(a, base, scan_cap))
        .min();
    let n_terms = match (natural_end, term_count) {
        (Some(m), None) => m + 1,
        (Some(m), Some(c)) => (m + 1).min(c),
        (None, Some(c)) => c,
        (None, None) => return Err(QSeriesError::NonTerminating),
    };

    let one = RatFuncQ::one();
    let mut sum = RatFuncQ::zero();
    let mut term = RatFuncQ::one();
    let mut base_pow = RatFuncQ::one(); // base^{n-1} when term n is formed
    for n in 0..n_terms {
        if n > 0 {
            for a in upper {
                term = &term * &(&one - &(a * &base_pow));
            }
            if term.is_zero() {
                break;
            }
            let mut den = &one - &(&base_pow * base); // the (base;base)_n step, 1 - base^n
            for b in lower {
                den = &den * &(&one - &(b * &base_pow));
            }
            if den.is_zero() {
                return Err(QSeriesError::LowerZero { term: n });
            }
            term = &(&term * arg) / &den;
            base_pow = &base_pow * base;
        }
        sum = &sum + &term;
    }
    Ok(sum)
}

/// The little q-Jacobi polynomial
/// p_n(x; a, b | base) = 2φ1(base^{-n}, a*b*base^{n+1}; a*base | base; base*x).
pub fn little_q_jacobi(
    n: i64,
    x: &RatFuncQ,
    a: &RatFuncQ,
    b: &RatFuncQ,
    base: &RatFuncQ,
) -> Result<RatFuncQ, QSeriesError> {
    assert!(n >= 0, "little q-Jacobi degree must be nonnegative");
    let upper = [base.pow(-n), &(a * b) * &base.pow(n + 1)];
    let lower = [a * base];
    basic_hypergeometric(&upper, &lower, base, &(base * x), None)
}

/// Terminating classical hypergeometric sum
/// rFs(u_1..u_r; l_1..l_s | z) over exact rationals; some upper parameter
/// must be a nonpositive integer.
pub fn classical_hypergeometric(
    upper: &[Rat],
    lower: &[Rat],
    z: &Rat,
) -> Result<Rat, QSeriesError> {
    let n_max = upper
        .iter()
        .filter(|u| u.is_integer() && **u <= Rat::zero())
        .map(|u| (-u.to_integer()).to_usize().unwrap_or(usize::MAX))
        .min()
        .ok_or(QSeriesError::NonTerminating)?;
    let mut sum = Rat::zero();
    let mut term = Rat::one();
    for n in 0..=n_max {
        if n > 0 {
            let shift = rat_int(n as i64 - 1);
            for u in upper {
                term *= u + &shift;
            }
            if term.is_zero() {
                break;
            }
            let mut den = rat_int(n as i64);
            for l in lower {
                den *= l + &shift;
            }
            if den.is_zero() {
                return Err(QSeriesError::LowerZero { term: n });
            }
            term = term * z / den;
        }
        sum += &term;
    }
    Ok(sum)
}

/// n! as an exact rational.
pub fn factorial(n: u64) -> Rat {
    let mut r = Rat::one();
    for i in 2..=n {
        r *= rat_int(i as i64);
    }
    r
}

/// The double factorial n!! with the empty-product conventions
/// (-1)!! = 0!! = 1.
pub fn double_factorial(n: i64) -> Rat {
    assert!(n >= -1, "double factorial undefined below -1");
    let mut r = Rat::one();
    let mut i = n;
    while i >= 2 {
        r *= rat_int(i);
        i -= 2;
    }
    r
}

/// The binomial coefficient C(n, k) for integer n (possibly negative) via
/// the falling-factorial formula; zero for k < 0.
pub fn binomial(n: i64, k: i64) -> Rat {
    if k < 0 || (n >= 0 && k > n) {
        return Rat::zero();
    }
    let mut r = Rat::one();
    for i in 1..=k {
        r *= rat_int(n - k + i);
        r /= rat_int(i);
    }
    r
}

/// The rising factorial (a)_n = a(a+1)...(a+n-1).
pub fn rising(a: &Rat, n: u64) -> Rat {
    let mut r = Rat::one();
    for i in 0..n {
        r *= a + rat_int(i as i64);
    }
    r
}

/// The k-th Catalan number C(2k, k)/(k+1).
pub fn catalan(k: i64) -> Rat {
    binomial(2 * k, k) / rat_int(k + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use proptest::prelude::*;

    fn q() -> RatFuncQ {
        RatFuncQ::variable()
    }

    #[test]
    fn pochhammer_small_orders() {
        let one = RatFuncQ::one();
        assert_eq!(pochhammer(&q(), &q(), 0), one);
        // (q;q)_2 = (1-q)(1-q^2)
        let expect = &(&one - &q()) * &(&one - &q().pow(2));
        assert_eq!(pochhammer(&q(), &q(), 2), expect);
        // (1;q)_r = 0 for r >= 1
        assert!(pochhammer(&one, &q(), 3).is_zero());
    }

    #[test]
    fn pochhammer_negative_order() {
        // (a;q)_{-2} * (a q^{-2}; q)_2 = 1
        let a = RatFuncQ::q_pow(3);
        let lhs = pochhammer(&a, &q(), -2);
        let rhs = pochhammer(&(&a * &RatFuncQ::q_pow(-2)), &q(), 2);
        assert!((&lhs * &rhs).is_one());
    }

    proptest! {
        // (u;q)_{m+n} = (u;q)_m (u q^m;q)_n
        #[test]
        fn pochhammer_splits(m in 0i64..6, n in 0i64..6, e in -3i64..4) {
            let u = RatFuncQ::q_pow(e);
            let whole = pochhammer(&u, &q(), m + n);
            let left = pochhammer(&u, &q(), m);
            let right = pochhammer(&(&u * &q().pow(m)), &q(), n);
            prop_assert_eq!(whole, &left * &right);
        }

        // [n choose l]_{q^{-1}} = q^{-(n-l)l} [n choose l]_q
        #[test]
        fn q_binomial_inversion(n in 0i64..13, l in 0i64..13) {
            prop_assume!(l <= n);
            let inv_base = RatFuncQ::q_pow(-1);
            let lhs = q_binomial(n, l, &inv_base);
            let rhs = &RatFuncQ::q_pow(-(n - l) * l) * &q_binomial(n, l, &q());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn q_binomial_values_and_pascal() {
        let one = RatFuncQ::one();
        // [3 choose 1] = 1 + q + q^2
        let expect = &(&one + &q()) + &q().pow(2);
        assert_eq!(q_binomial(3, 1, &q()), expect);
        assert_eq!(q_binomial(5, 0, &q()), one);
        assert!(q_binomial(2, 3, &q()).is_zero());
        // Both q-Pascal recurrences, n <= 12.
        for n in 1..=12 {
            for k in 0..=n {
                let b = q_binomial(n, k, &q());
                let lhs1 = &q_binomial(n - 1, k - 1, &q())
                    + &(&RatFuncQ::q_pow(k) * &q_binomial(n - 1, k, &q()));
                let lhs2 = &(&RatFuncQ::q_pow(n - k) * &q_binomial(n - 1, k - 1, &q()))
                    + &q_binomial(n - 1, k, &q());
                assert_eq!(lhs1, b);
                assert_eq!(lhs2, b);
            }
        }
    }

    #[test]
    fn q_int_matches_sum() {
        // [4] = 1 + q + q^2 + q^3 in base q
        let mut expect = RatFuncQ::zero();
        for i in 0..4 {
            expect = &expect + &RatFuncQ::q_pow(i);
        }
        assert_eq!(q_int(4, &q()), expect);
        // [-n] = -q^{-n} [n]
        let lhs = q_int(-3, &q());
        let rhs = -&(&RatFuncQ::q_pow(-3) * &q_int(3, &q()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pochhammer_reflection() {
        // (q;q)_{m-r} = (-1)^r q^{r(r+1)/2 - r(m+1)} (q;q)_m / (q^{-m};q)_r
        for m in 0i64..=10 {
            for r in 0..=m {
                let lhs = q_factorial(m - r, &q());
                let sign = if r % 2 == 0 { 1 } else { -1 };
                let power = RatFuncQ::monomial(rat_int(sign), r * (r + 1) / 2 - r * (m + 1));
                let rhs = &(&power * &q_factorial(m, &q()))
                    / &pochhammer(&RatFuncQ::q_pow(-m), &q(), r);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn q_binomial_theorem_series() {
        // sum_{N>=0} z^N [N+k choose N]_q = 1/(z;q)_{k+1}: the series
        // coefficients of the rational function in z satisfy the linear
        // recurrence read off from the denominator polynomial (z;q)_{k+1}.
        for k in 0i64..=6 {
            // (z;q)_{k+1} = sum_j d_j z^j via incremental products
            let mut den = vec![RatFuncQ::one()];
            for i in 0..=k {
                let scale = RatFuncQ::q_pow(i);
                let mut next = vec![RatFuncQ::zero(); den.len() + 1];
                for (j, c) in den.iter().enumerate() {
                    next[j] = &next[j] + c;
                    next[j + 1] = &next[j + 1] - &(c * &scale);
                }
                den = next;
            }
            // Taylor coefficients c_N of 1/den(z): c_0 = 1/d_0 and
            // c_N = -(sum_{j=1..N} d_j c_{N-j})/d_0.
            let mut coeffs: Vec<RatFuncQ> = vec![den[0].inv()];
            for n in 1..=8usize {
                let mut acc = RatFuncQ::zero();
                for j in 1..=n.min(den.len() - 1) {
                    acc = &acc + &(&den[j] * &coeffs[n - j]);
                }
                coeffs.push(-&(&acc / &den[0]));
            }
            for (n, c) in coeffs.iter().enumerate() {
                assert_eq!(*c, q_binomial(n as i64 + k, n as i64, &q()));
            }
        }
    }

    #[test]
    fn hypergeometric_requires_balanced_shape() {
        let r = basic_hypergeometric(&[q()], &[q(), q()], &q(), &RatFuncQ::one(), None);
        assert!(matches!(r, Err(QSeriesError::WrongShape { .. })));
        let nt = basic_hypergeometric(&[q(), q()], &[q()], &q(), &RatFuncQ::one(), None);
        assert!(matches!(nt, Err(QSeriesError::NonTerminating)));
    }

    #[test]
    fn hypergeometric_terminating_cases() {
        let one = RatFuncQ::one();
        // An upper parameter 1 collapses the series to 1.
        let r = basic_hypergeometric(&[one.clone(), q()], &[q().pow(2)], &q(), &q(), None).unwrap();
        assert!(r.is_one());
        // 2phi1(q^{-1}, a2; b1 | q; z) = 1 + (1-q^{-1})(1-a2)/((1-q)(1-b1)) z
        let a2 = RatFuncQ::q_pow(3);
        let b1 = RatFuncQ::q_pow(2);
        let z = RatFuncQ::constant(rat(1, 3));
        let got =
            basic_hypergeometric(&[RatFuncQ::q_pow(-1), a2.clone()], &[b1.clone()], &q(), &z, None)
                .unwrap();
        let coeff = &(&(&one - &RatFuncQ::q_pow(-1)) * &(&one - &a2))
            / &(&(&one - &q()) * &(&one - &b1));
        assert_eq!(got, &one + &(&coeff * &z));
    }

    #[test]
    fn hypergeometric_in_inverse_base() {
        // Termination detection must follow the base: q^2 = base^{-2} in
        // base q^{-1}, so the sum has three terms. Zero parameters
        // contribute Pochhammer factors (0;base)_n = 1.
        let base = RatFuncQ::q_pow(-1);
        let got = basic_hypergeometric(
            &[RatFuncQ::q_pow(2), RatFuncQ::zero()],
            &[RatFuncQ::zero()],
            &base,
            &RatFuncQ::one(),
            None,
        )
        .unwrap();
        let one = RatFuncQ::one();
        let f1 = &one - &RatFuncQ::q_pow(2); // 1 - q^2
        let f2 = &one - &q(); // 1 - q^2 q^{-1}
        let d1 = &one - &base;
        let d2 = &one - &base.pow(2);
        let expect = &(&one + &(&f1 / &d1)) + &(&(&f1 * &f2) / &(&d1 * &d2));
        assert_eq!(got, expect);
    }

    #[test]
    fn little_q_jacobi_basics() {
        assert!(
            little_q_jacobi(0, &q(), &RatFuncQ::one(), &q(), &q())
                .unwrap()
                .is_one()
        );
        // n = 1, a = 1, b = q, base q^{-1}, x = q^{-1}: value 1 - q^{-1}.
        let base = RatFuncQ::q_pow(-1);
        let got = little_q_jacobi(
            1,
            &RatFuncQ::q_pow(-1),
            &RatFuncQ::one(),
            &q(),
            &base,
        )
        .unwrap();
        assert_eq!(got, &RatFuncQ::one() - &RatFuncQ::q_pow(-1));
    }

    #[test]
    fn classical_hypergeometric_terminating() {
        // 2F1(-1, 0; 2 | 2) = 1
        let one = rat_int(1);
        let got = classical_hypergeometric(
            &[rat_int(-1), rat_int(0)],
            &[rat_int(2)],
            &rat_int(2),
        )
        .unwrap();
        assert_eq!(got, one);
        // 2F1(-1, 1-N; 2 | 2) at N = 2 is 2
        let got = classical_hypergeometric(
            &[rat_int(-1), rat_int(-1)],
            &[rat_int(2)],
            &rat_int(2),
        )
        .unwrap();
        assert_eq!(got, rat_int(2));
        // non-terminating input is rejected
        assert!(matches!(
            classical_hypergeometric(&[rat(1, 2)], &[], &rat(1, 3)),
            Err(QSeriesError::NonTerminating)
        ));
    }

    #[test]
    fn integer_helpers() {
        assert_eq!(factorial(5), rat_int(120));
        assert_eq!(double_factorial(-1), rat_int(1));
        assert_eq!(double_factorial(0), rat_int(1));
        assert_eq!(double_factorial(7), rat_int(105));
        assert_eq!(binomial(5, 2), rat_int(10));
        assert_eq!(binomial(3, 5), rat_int(0));
        assert_eq!(binomial(-2, 2), rat_int(3));
        assert_eq!(rising(&rat_int(3), 3), rat_int(60));
        assert_eq!(catalan(4), rat_int(14));
    }
}
