//! Truncated formal power series in the transform variable.
//!
//! A series here is a jet: the coefficient vector holds exactly the
//! coefficients that are known, and operators acting on series keep that
//! bookkeeping honest. Differentiation consumes one known coefficient,
//! multiplication by the variable produces one, and diagonal operators
//! (shifts, resolvents, scalars) preserve the count. Sums are known only
//! up to the shorter operand. With this convention, applying an operator
//! and then truncating gives the same jet as truncating first, so checks
//! run at one order are meaningful statements about the full series.

use crate::algebra::RatFuncQ;

/// A formal power series known through finitely many coefficients.
///
/// `coeffs[k]` is the coefficient of the k-th power of the transform
/// variable; `coeffs.len()` is the number of known coefficients. Direct
/// `==` compares whole jets including their lengths, so comparisons of
/// series with different histories should go through
/// [`FormalSeries::truncate`] at an explicit common order.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalSeries {
    coeffs: Vec<RatFuncQ>,
}

impl FormalSeries {
    /// Series with the given known coefficients.
    pub fn new(coeffs: Vec<RatFuncQ>) -> Self {
        FormalSeries { coeffs }
    }

    /// The zero series with `order` known coefficients.
    pub fn zero(order: usize) -> Self {
        FormalSeries {
            coeffs: vec![RatFuncQ::zero(); order],
        }
    }

    /// The basis jet with a single 1 at index `k`, known to `order`
    /// coefficients.
    ///
    /// # Panics
    ///
    /// Panics if `k >= order`.
    pub fn basis(k: usize, order: usize) -> Self {
        assert!(k < order, "basis index {k} outside order {order}");
        let mut coeffs = vec![RatFuncQ::zero(); order];
        coeffs[k] = RatFuncQ::one();
        FormalSeries { coeffs }
    }

    /// Number of known coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// The known coefficients.
    pub fn coeffs(&self) -> &[RatFuncQ] {
        &self.coeffs
    }

    /// The coefficient at index `k`.
    ///
    /// # Panics
    ///
    /// Panics if `k` is not a known coefficient.
    pub fn coeff(&self, k: usize) -> &RatFuncQ {
        &self.coeffs[k]
    }

    /// The jet of the first `min(order, self.order())` coefficients.
    pub fn truncate(&self, order: usize) -> Self {
        FormalSeries {
            coeffs: self.coeffs[..order.min(self.coeffs.len())].to_vec(),
        }
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Index of the first nonzero known coefficient.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// The series scaled by a constant.
    pub fn scale(&self, c: &RatFuncQ) -> Self {
        FormalSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by the transform variable: coefficients move up one
    /// slot and the constant term becomes a known zero.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(RatFuncQ::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        FormalSeries { coeffs }
    }
}

impl std::ops::Add for &FormalSeries {
    type Output = FormalSeries;
    fn add(self, rhs: &FormalSeries) -> FormalSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        FormalSeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl std::ops::Sub for &FormalSeries {
    type Output = FormalSeries;
    fn sub(self, rhs: &FormalSeries) -> FormalSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        FormalSeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn jet_bookkeeping() {
        let s = FormalSeries::new(vec![
            RatFuncQ::constant(rat(1, 2)),
            RatFuncQ::one(),
            RatFuncQ::variable(),
        ]);
        assert_eq!(s.order(), 3);
        assert_eq!(s.shift_up().order(), 4);
        assert_eq!(*s.shift_up().coeff(0), RatFuncQ::zero());
        assert_eq!(s.shift_up().coeff(3), s.coeff(2));
        assert_eq!(s.truncate(2).order(), 2);
        assert_eq!(s.truncate(10).order(), 3);
        assert_eq!((&s - &s).first_nonzero(), None);
        assert_eq!((&s + &s.scale(&RatFuncQ::integer(-1))).order(), 3);
    }

    #[test]
    fn sums_know_only_the_common_prefix() {
        let a = FormalSeries::zero(5);
        let b = FormalSeries::basis(2, 3);
        assert_eq!((&a + &b).order(), 3);
        assert_eq!((&a + &b).first_nonzero(), Some(2));
    }
}
