//! Dense univariate polynomials over arbitrary-precision rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rat;

/// Dense polynomial over [`Rat`] in ascending degree order.
///
/// Invariant: the highest stored coefficient is nonzero; the zero polynomial
/// stores an empty vector. Negative powers of the variable are not
/// representable here; [`super::RatFuncQ`] carries them in its denominator.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PolyQ {
    coeffs: Vec<Rat>,
}

impl PolyQ {
    /// The zero polynomial.
    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        PolyQ::constant(Rat::one())
    }

    /// The constant polynomial `c`.
    pub fn constant(c: Rat) -> Self {
        PolyQ::from_coeffs(vec![c])
    }

    /// The base variable itself.
    pub fn variable() -> Self {
        PolyQ::monomial(Rat::one(), 1)
    }

    /// The monomial `c * q^deg`.
    pub fn monomial(c: Rat, deg: usize) -> Self {
        if c.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        PolyQ { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros to restore the invariant.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    /// Ascending coefficient slice (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `q^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient, or `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplies by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        PolyQ { coeffs }
    }

    /// Divides by `q^k`.
    ///
    /// # Panics
    ///
    /// Panics if any of the lowest `k` coefficients is nonzero.
    pub fn shift_down(&self, k: usize) -> Self {
        if self.is_zero() {
            return PolyQ::zero();
        }
        assert!(
            self.valuation().is_some_and(|v| v >= k),
            "shift_down would produce negative powers"
        );
        PolyQ {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return PolyQ::zero();
        }
        PolyQ {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => PolyQ::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation in double precision.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// Substitutes `q -> q^m`, spreading coefficient `i` to position `m*i`.
    ///
    /// # Panics
    ///
    /// Panics if `m` is zero.
    pub fn subst_pow(&self, m: usize) -> Self {
        assert!(m > 0, "substitution exponent must be positive");
        if self.is_zero() || m == 1 {
            return self.clone();
        }
        let deg = self.coeffs.len() - 1;
        let mut coeffs = vec![Rat::zero(); m * deg + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[m * i] = c.clone();
            }
        }
        PolyQ { coeffs }
    }

    /// Coefficient reversal: for degree-d input returns `q^d * p(1/q)`.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        PolyQ::from_coeffs(coeffs)
    }

    /// Integer power by repeated squaring.
    pub fn pow(&self, e: u32) -> Self {
        let mut result = PolyQ::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `deg r < deg d`.
    ///
    /// # Panics
    ///
    /// Panics if `d` is zero.
    pub fn div_rem(&self, d: &PolyQ) -> (PolyQ, PolyQ) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (PolyQ::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        while rem.len() > dd {
            let dr = rem.len() - 1;
            let factor = rem[dr].clone() / &lc;
            if !factor.is_zero() {
                for i in 0..=dd {
                    let t = &factor * &d.coeffs[i];
                    rem[dr - dd + i] -= t;
                }
                quot[dr - dd] = factor;
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            if rem.is_empty() {
                break;
            }
        }
        (PolyQ::from_coeffs(quot), PolyQ::from_coeffs(rem))
    }

    /// Exact division.
    ///
    /// # Panics
    ///
    /// Panics if the remainder is nonzero.
    pub fn div_exact(&self, d: &PolyQ) -> PolyQ {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "div_exact with nonzero remainder");
        q
    }

    /// Monic greatest common divisor via the primitive polynomial remainder
    /// sequence over the integers, which avoids the coefficient blowup of
    /// naive rational Euclid.
    pub fn gcd(a: &PolyQ, b: &PolyQ) -> PolyQ {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        // Common powers of the variable split off first; the stripped parts
        // have nonzero constant terms, so the variable divides neither.
        let va = a.valuation().unwrap();
        let vb = b.valuation().unwrap();
        let v = va.min(vb);
        let mut u = to_primitive_int(&a.coeffs[va..]);
        let mut w = to_primitive_int(&b.coeffs[vb..]);
        if u.len() < w.len() {
            std::mem::swap(&mut u, &mut w);
        }
        // A constant operand means the stripped parts are coprime.
        while w.len() > 1 {
            let r = pseudo_rem(u, &w);
            if r.is_empty() {
                let g = from_int(&w).monic();
                return g.shift_up(v);
            }
            u = w;
            w = primitive_part(r);
        }
        PolyQ::monomial(Rat::one(), v)
    }

    /// Lagrange interpolation through distinct nodes.
    ///
    /// # Panics
    ///
    /// Panics if two nodes coincide.
    pub fn interpolate(points: &[(Rat, Rat)]) -> PolyQ {
        let mut result = PolyQ::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = PolyQ::one();
            let mut denom = Rat::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                // basis *= (x - xj), denom *= (xi - xj)
                basis = &basis * &PolyQ::from_coeffs(vec![-xj.clone(), Rat::one()]);
                let diff = xi - xj;
                assert!(!diff.is_zero(), "interpolation nodes must be distinct");
                denom *= diff;
            }
            result = &result + &basis.scale(&(yi / denom));
        }
        result
    }

    /// Renders with an explicit variable name; descending degree.
    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign_positive = c.is_positive();
            if out.is_empty() {
                if !sign_positive {
                    out.push('-');
                }
            } else if sign_positive {
                out.push_str(" + ");
            } else {
                out.push_str(" - ");
            }
            let mag = c.abs();
            let coeff_part = if mag.is_one() && deg > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            let var_part = match deg {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{deg}"),
            };
            match (coeff_part.is_empty(), var_part.is_empty()) {
                (true, _) => out.push_str(&var_part),
                (_, true) => out.push_str(&coeff_part),
                _ => {
                    out.push_str(&coeff_part);
                    out.push('*');
                    out.push_str(&var_part);
                }
            }
        }
        out
    }
}

/// Clears denominators and removes integer content; the result is primitive
/// with a positive leading coefficient.
fn to_primitive_int(coeffs: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
    primitive_part(ints)
}

/// Divides by the content and normalizes the leading sign to positive.
fn primitive_part(mut coeffs: Vec<BigInt>) -> Vec<BigInt> {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    if coeffs.is_empty() {
        return coeffs;
    }
    let mut content = BigInt::zero();
    for c in &coeffs {
        content = content.gcd(c);
    }
    if coeffs.last().unwrap().is_negative() {
        content = -content;
    }
    if !content.is_one() {
        for c in coeffs.iter_mut() {
            *c = &*c / &content;
        }
    }
    coeffs
}

/// Pseudo-remainder of integer polynomials: repeatedly cancels the leading
/// term of `r` against `v` after scaling `r` by the leading coefficient
/// of `v`, so no fractions appear.
fn pseudo_rem(mut r: Vec<BigInt>, v: &[BigInt]) -> Vec<BigInt> {
    let dv = v.len() - 1;
    let lc = v[dv].clone();
    while r.len() > dv {
        let dr = r.len() - 1;
        let coef = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lc;
        }
        for i in 0..=dv {
            let t = &coef * &v[i];
            r[dr - dv + i] -= t;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn from_int(coeffs: &[BigInt]) -> PolyQ {
    PolyQ::from_coeffs(coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect())
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        PolyQ::from_coeffs(coeffs)
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        PolyQ::from_coeffs(coeffs)
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        PolyQ::from_coeffs(coeffs)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("q"))
    }
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyQ({self})")
    }
}
