//! Polynomials in the spectral variable x with rational-function
//! coefficients.
//!
//! These carry orthogonal polynomials p_N(x), Pearson data sigma(x), tau(x),
//! and products of such, with every coefficient an exact element of Q(q).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::RatFuncQ;

/// Dense polynomial in x over [`RatFuncQ`], ascending degree order, highest
/// stored coefficient nonzero.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct XPoly {
    coeffs: Vec<RatFuncQ>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        XPoly::constant(RatFuncQ::one())
    }

    pub fn constant(c: RatFuncQ) -> Self {
        XPoly::from_coeffs(vec![c])
    }

    /// The spectral variable x.
    pub fn variable() -> Self {
        XPoly::monomial(RatFuncQ::one(), 1)
    }

    /// The monomial `c * x^deg`.
    pub fn monomial(c: RatFuncQ, deg: usize) -> Self {
        if c.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = vec![RatFuncQ::zero(); deg + 1];
        coeffs[deg] = c;
        XPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<RatFuncQ>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[RatFuncQ] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RatFuncQ {
        self.coeffs.get(i).cloned().unwrap_or_else(RatFuncQ::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &RatFuncQ) -> Self {
        if c.is_zero() {
            return XPoly::zero();
        }
        XPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = vec![RatFuncQ::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        XPoly { coeffs }
    }

    /// Substitutes `x -> c * x`, so the coefficient of `x^j` picks up `c^j`.
    pub fn dilate(&self, c: &RatFuncQ) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        let mut power = RatFuncQ::one();
        for a in &self.coeffs {
            coeffs.push(a * &power);
            power = &power * c;
        }
        XPoly::from_coeffs(coeffs)
    }

    /// Evaluates at an element of Q(q) by Horner.
    pub fn eval(&self, x: &RatFuncQ) -> RatFuncQ {
        let mut acc = RatFuncQ::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Ordinary derivative d/dx.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return XPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, a)| a * &RatFuncQ::integer(j as i64))
            .collect();
        XPoly::from_coeffs(coeffs)
    }

    /// The q-derivative `(f(x) - f(base * x)) / ((1 - base) x)`.
    ///
    /// On monomials: `x^n -> [n]_base x^(n-1)` with
    /// `[n]_base = (1 - base^n)/(1 - base)`. The base is any element of Q(q),
    /// so the same routine serves the q-, 1/q-, and s^2-calculi.
    pub fn q_derivative(&self, base: &RatFuncQ) -> Self {
        if self.coeffs.len() <= 1 {
            return XPoly::zero();
        }
        let one = RatFuncQ::one();
        let denom = &one - base;
        let mut base_pow = base.clone();
        let mut coeffs = Vec::with_capacity(self.coeffs.len() - 1);
        for a in self.coeffs.iter().skip(1) {
            // [n]_base for the current degree n.
            let q_int = &(&one - &base_pow) / &denom;
            coeffs.push(a * &q_int);
            base_pow = &base_pow * base;
        }
        XPoly::from_coeffs(coeffs)
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeff(i) + &rhs.coeff(i));
        }
        XPoly::from_coeffs(coeffs)
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeff(i) - &rhs.coeff(i));
        }
        XPoly::from_coeffs(coeffs)
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = vec![RatFuncQ::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = a * b;
                coeffs[i + j] = &coeffs[i + j] + &t;
            }
        }
        XPoly::from_coeffs(coeffs)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match deg {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{deg}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly({self})")
    }
}
