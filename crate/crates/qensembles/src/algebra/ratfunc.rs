//! Rational functions in the base variable, kept in canonical reduced form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{AlgebraError, PolyQ, Rat};

/// Element of Q(q): a quotient of two [`PolyQ`].
///
/// Canonical form invariants, restored after every operation:
/// * numerator and denominator are coprime,
/// * the denominator is monic (and nonzero),
/// * zero is represented as 0/1.
///
/// Equality of canonical forms is therefore exact mathematical equality.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFuncQ {
    num: PolyQ,
    den: PolyQ,
}

impl RatFuncQ {
    /// Builds `num/den` and reduces to canonical form.
    ///
    /// # Panics
    ///
    /// Panics if `den` is the zero polynomial.
    pub fn new(num: PolyQ, den: PolyQ) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFuncQ {
                num: PolyQ::zero(),
                den: PolyQ::one(),
            };
        }
        let g = PolyQ::gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        let lc = den.leading().unwrap().clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFuncQ { num, den }
    }

    pub fn zero() -> Self {
        RatFuncQ {
            num: PolyQ::zero(),
            den: PolyQ::one(),
        }
    }

    pub fn one() -> Self {
        RatFuncQ::from_poly(PolyQ::one())
    }

    pub fn from_poly(p: PolyQ) -> Self {
        RatFuncQ {
            num: p,
            den: PolyQ::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        RatFuncQ::from_poly(PolyQ::constant(c))
    }

    pub fn integer(n: i64) -> Self {
        RatFuncQ::constant(super::rat_int(n))
    }

    /// The base variable q.
    pub fn variable() -> Self {
        RatFuncQ::from_poly(PolyQ::variable())
    }

    /// The Laurent monomial `c * q^e`; negative exponents go to the
    /// denominator.
    pub fn monomial(c: Rat, e: i64) -> Self {
        if c.is_zero() {
            return RatFuncQ::zero();
        }
        if e >= 0 {
            RatFuncQ::from_poly(PolyQ::monomial(c, e as usize))
        } else {
            RatFuncQ {
                num: PolyQ::constant(c),
                den: PolyQ::monomial(Rat::one(), (-e) as usize),
            }
        }
    }

    /// The monomial `q^e`.
    pub fn q_pow(e: i64) -> Self {
        RatFuncQ::monomial(Rat::one(), e)
    }

    pub fn numerator(&self) -> &PolyQ {
        &self.num
    }

    pub fn denominator(&self) -> &PolyQ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Returns the constant value if this is a constant.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.den.is_one() && self.num.degree().map_or(true, |d| d == 0) {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// Detects the Laurent monomial shape `c * q^e` and returns `(c, e)`.
    ///
    /// Canonical reduction guarantees that a monomial numerator over a
    /// monomial denominator has one of the two in degree zero.
    pub fn as_monomial(&self) -> Option<(Rat, i64)> {
        if self.is_zero() {
            return None;
        }
        let vn = self.num.valuation().unwrap();
        let vd = self.den.valuation().unwrap();
        if self.num.degree() != Some(vn) || self.den.degree() != Some(vd) {
            return None;
        }
        let c = self.num.coeff(vn) / self.den.coeff(vd);
        Some((c, vn as i64 - vd as i64))
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    ///
    /// Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero rational function");
        RatFuncQ::new(self.den.clone(), self.num.clone())
    }

    /// Integer power; negative exponents invert.
    ///
    /// # Panics
    ///
    /// Panics on `0^e` with `e < 0`.
    pub fn pow(&self, e: i64) -> Self {
        if e == 0 {
            return RatFuncQ::one();
        }
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut result = RatFuncQ::one();
        let mut b = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &b;
            }
            b = &b * &b;
            n >>= 1;
        }
        result
    }

    /// Double-precision evaluation at a base point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    /// Exact evaluation at a rational base point; `None` on a pole.
    pub fn eval_rat(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// Exact evaluation at the base point 1.
    ///
    /// Because the fraction is reduced, a removable singularity at 1 cannot
    /// occur: any common factor (q - 1) was cancelled during reduction, so a
    /// vanishing denominator here is a genuine pole. This is how limits of
    /// the form `lim_{q->1} (1-q)^{-m} f(q)` are taken exactly: build the
    /// scaled rational function, then call this.
    pub fn eval_at_one(&self) -> Result<Rat, AlgebraError> {
        match self.eval_rat(&Rat::one()) {
            Some(v) => Ok(v),
            None => Err(AlgebraError::PoleAtOne(self.to_string())),
        }
    }

    /// Substitutes `q -> q^m` for positive `m`.
    ///
    /// Also serves as a change of base: a function of q re-read in a base s
    /// with q = s^2 is exactly `subst_pow(2)` with the variable renamed.
    ///
    /// # Panics
    ///
    /// Panics if `m` is zero.
    pub fn subst_pow(&self, m: usize) -> Self {
        // Common roots of n(q^m) and d(q^m) would yield common roots of n and
        // d after taking m-th powers, so coprimality survives substitution.
        RatFuncQ::from_reduced(self.num.subst_pow(m), self.den.subst_pow(m))
    }

    /// Substitutes `q -> 1/q`, returning `f(1/q)` as a rational function.
    ///
    /// With n of degree a and d of degree b, `f(1/q) =
    /// q^(b-a) * rev(n)/rev(d)` where `rev` reverses coefficients.
    pub fn subst_inverse(&self) -> Self {
        if self.is_zero() {
            return RatFuncQ::zero();
        }
        let a = self.num.degree().unwrap() as i64;
        let b = self.den.degree().unwrap() as i64;
        let core = RatFuncQ::new(self.num.reversed(), self.den.reversed());
        &RatFuncQ::q_pow(b - a) * &core
    }

    /// Renders with an explicit variable name.
    pub fn to_string_var(&self, var: &str) -> String {
        if self.den.is_one() {
            return self.num.to_string_var(var);
        }
        format!(
            "({}) / ({})",
            self.num.to_string_var(var),
            self.den.to_string_var(var)
        )
    }

    /// Builds a value that is already known to be reduced, fixing only the
    /// monic-denominator normalization.
    fn from_reduced(num: PolyQ, mut den: PolyQ) -> Self {
        if num.is_zero() {
            return RatFuncQ::zero();
        }
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            return RatFuncQ { num, den };
        }
        let inv = lc.recip();
        den = den.scale(&inv);
        RatFuncQ {
            num: num.scale(&inv),
            den,
        }
    }

    /// Henrici addition a/b + c/d: split g = gcd(b, d) out of both
    /// denominators so every gcd taken is as small as possible, and the
    /// result is reduced by construction.
    fn add_impl(&self, rhs: &RatFuncQ, subtract: bool) -> RatFuncQ {
        if self.is_zero() {
            return if subtract { -rhs } else { rhs.clone() };
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let g = PolyQ::gcd(&self.den, &rhs.den);
        let (b1, d1) = if g.is_one() {
            (self.den.clone(), rhs.den.clone())
        } else {
            (self.den.div_exact(&g), rhs.den.div_exact(&g))
        };
        let left = &self.num * &d1;
        let right = &rhs.num * &b1;
        let t = if subtract { &left - &right } else { &left + &right };
        if t.is_zero() {
            return RatFuncQ::zero();
        }
        // b1 and d1 are coprime to t, so only the split-off g can still
        // share a factor with the numerator.
        let h = PolyQ::gcd(&t, &g);
        let (t, g) = if h.is_one() {
            (t, g)
        } else {
            (t.div_exact(&h), g.div_exact(&h))
        };
        RatFuncQ::from_reduced(t, &(&g * &b1) * &d1)
    }
}

impl Add for &RatFuncQ {
    type Output = RatFuncQ;
    fn add(self, rhs: &RatFuncQ) -> RatFuncQ {
        self.add_impl(rhs, false)
    }
}

impl Sub for &RatFuncQ {
    type Output = RatFuncQ;
    fn sub(self, rhs: &RatFuncQ) -> RatFuncQ {
        self.add_impl(rhs, true)
    }
}

impl Mul for &RatFuncQ {
    type Output = RatFuncQ;
    fn mul(self, rhs: &RatFuncQ) -> RatFuncQ {
        if self.is_zero() || rhs.is_zero() {
            return RatFuncQ::zero();
        }
        // Cross-reduce before multiplying to keep intermediate degrees low.
        let g1 = PolyQ::gcd(&self.num, &rhs.den);
        let g2 = PolyQ::gcd(&rhs.num, &self.den);
        let n1 = if g1.is_one() {
            self.num.clone()
        } else {
            self.num.div_exact(&g1)
        };
        let d2 = if g1.is_one() {
            rhs.den.clone()
        } else {
            rhs.den.div_exact(&g1)
        };
        let n2 = if g2.is_one() {
            rhs.num.clone()
        } else {
            rhs.num.div_exact(&g2)
        };
        let d1 = if g2.is_one() {
            self.den.clone()
        } else {
            self.den.div_exact(&g2)
        };
        // Cross-reduction leaves every numerator factor coprime to every
        // denominator factor, so the product is reduced as built.
        RatFuncQ::from_reduced(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &RatFuncQ {
    type Output = RatFuncQ;
    fn div(self, rhs: &RatFuncQ) -> RatFuncQ {
        self * &rhs.inv()
    }
}

impl Neg for &RatFuncQ {
    type Output = RatFuncQ;
    fn neg(self) -> RatFuncQ {
        RatFuncQ {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFuncQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("q"))
    }
}

impl fmt::Debug for RatFuncQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFuncQ({self})")
    }
}

impl Add for RatFuncQ {
    type Output = RatFuncQ;
    fn add(self, rhs: RatFuncQ) -> RatFuncQ {
        &self + &rhs
    }
}

impl Sub for RatFuncQ {
    type Output = RatFuncQ;
    fn sub(self, rhs: RatFuncQ) -> RatFuncQ {
        &self - &rhs
    }
}

impl Mul for RatFuncQ {
    type Output = RatFuncQ;
    fn mul(self, rhs: RatFuncQ) -> RatFuncQ {
        &self * &rhs
    }
}

impl Div for RatFuncQ {
    type Output = RatFuncQ;
    fn div(self, rhs: RatFuncQ) -> RatFuncQ {
        &self / &rhs
    }
}

impl Neg for RatFuncQ {
    type Output = RatFuncQ;
    fn neg(self) -> RatFuncQ {
        -&self
    }
}

impl Zero for RatFuncQ {
    fn zero() -> Self {
        RatFuncQ::zero()
    }
    fn is_zero(&self) -> bool {
        RatFuncQ::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;

    fn q() -> RatFuncQ {
        RatFuncQ::variable()
    }

    #[test]
    fn reduction_is_canonical() {
        // (q^2 - 1) / (2q - 2) reduces to (q + 1)/2 with monic denominator.
        let num = PolyQ::from_coeffs(vec![rat_int(-1), rat_int(0), rat_int(1)]);
        let den = PolyQ::from_coeffs(vec![rat_int(-2), rat_int(2)]);
        let f = RatFuncQ::new(num, den);
        let expected = &RatFuncQ::constant(rat(1, 2)) * &(&q() + &RatFuncQ::one());
        assert_eq!(f, expected);
        assert!(f.denominator().is_one());
    }

    #[test]
    fn laurent_monomials_round_trip() {
        let m = RatFuncQ::monomial(rat(3, 4), -5);
        assert_eq!(m.as_monomial(), Some((rat(3, 4), -5)));
        let back = &m * &RatFuncQ::q_pow(5);
        assert_eq!(back, RatFuncQ::constant(rat(3, 4)));
    }

    #[test]
    fn field_identities() {
        let f = &(&q() - &RatFuncQ::one()) / &(&q() + &RatFuncQ::integer(2));
        let g = RatFuncQ::monomial(rat_int(5), -2);
        let sum = &f + &g;
        assert_eq!(&sum - &g, f);
        let prod = &f * &g;
        assert_eq!(&prod / &g, f);
        assert!((&f - &f).is_zero());
        assert!(f.pow(3).pow(-1) == f.pow(-3));
    }

    #[test]
    fn inverse_substitution_matches_by_hand() {
        // f = q^2 + q + 1 maps to (q^2 + q + 1)/q^2.
        let f = &(&q().pow(2) + &q()) + &RatFuncQ::one();
        let expected = &f / &q().pow(2);
        assert_eq!(f.subst_inverse(), expected);

        // A pure power inverts its exponent.
        assert_eq!(RatFuncQ::q_pow(3).subst_inverse(), RatFuncQ::q_pow(-3));
    }

    #[test]
    fn power_substitution_spreads_exponents() {
        let f = &(&q() - &RatFuncQ::one()) / &(&q() + &RatFuncQ::integer(2));
        let qq = q().pow(2);
        let expected = &(&qq - &RatFuncQ::one()) / &(&qq + &RatFuncQ::integer(2));
        assert_eq!(f.subst_pow(2), expected);
        assert_eq!(f.subst_pow(1), f);
    }

    proptest::proptest! {
        #[test]
        fn inverse_substitution_is_an_involution(
            nc in proptest::collection::vec(-4i64..=4, 1..5),
            dc in proptest::collection::vec(-4i64..=4, 1..5),
        ) {
            let num = PolyQ::from_coeffs(nc.iter().map(|&c| rat_int(c)).collect());
            let den = PolyQ::from_coeffs(dc.iter().map(|&c| rat_int(c)).collect());
            proptest::prop_assume!(!den.is_zero());
            let f = RatFuncQ::new(num, den);
            proptest::prop_assert_eq!(f.subst_inverse().subst_inverse(), f);
        }

        #[test]
        fn substitutions_commute_with_products(
            nc in proptest::collection::vec(-3i64..=3, 1..4),
            dc in proptest::collection::vec(-3i64..=3, 1..4),
        ) {
            let num = PolyQ::from_coeffs(nc.iter().map(|&c| rat_int(c)).collect());
            let den = PolyQ::from_coeffs(dc.iter().map(|&c| rat_int(c)).collect());
            proptest::prop_assume!(!den.is_zero());
            proptest::prop_assume!(!num.is_zero());
            let f = RatFuncQ::new(num, den);
            let sq = &f * &f;
            proptest::prop_assert_eq!(sq.subst_pow(2), {
                let g = f.subst_pow(2);
                &g * &g
            });
            proptest::prop_assert_eq!(sq.subst_inverse(), {
                let g = f.subst_inverse();
                &g * &g
            });
        }
    }

    #[test]
    fn eval_at_one_detects_poles() {
        // (1 - q^3)/(1 - q) reduces, so q -> 1 gives 3.
        let f = RatFuncQ::new(
            PolyQ::from_coeffs(vec![rat_int(1), rat_int(0), rat_int(0), rat_int(-1)]),
            PolyQ::from_coeffs(vec![rat_int(1), rat_int(-1)]),
        );
        assert_eq!(f.eval_at_one().unwrap(), rat_int(3));

        let pole = RatFuncQ::new(
            PolyQ::one(),
            PolyQ::from_coeffs(vec![rat_int(-1), rat_int(1)]),
        );
        assert!(pole.eval_at_one().is_err());
    }
}
