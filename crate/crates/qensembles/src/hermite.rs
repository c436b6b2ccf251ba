//! Shifted-argument identities for the discrete q-Hermite measure.
//!
//! The monic discrete q-Hermite polynomials have Jacobi data
//! `d_n^2 = q^(n-1)(1-q^n)`, and dilating their argument by a power of q
//! re-expands in the unshifted polynomials with closed coefficients.
//! Integrating that expansion gives closed evaluations of the
//! dilation-product averages `M(k, N)` and of the even moments
//! `m(2p, N)` of `p_N^2 d mu`, which in turn difference consecutive
//! spectral-density moments.
//!
//! Everything is kept in monic form: the orthonormal normalisation
//! carries square roots of `1 - q^n` outside Q(q), but recasting monic
//! multiplies each linearisation coefficient by a product of consecutive
//! `d_i`, and the products that survive come squared, hence rational.

use crate::algebra::{RatFuncQ, XPoly};
use crate::ensembles::Ensemble;
use crate::qseries;

/// Jacobi data of the monic discrete q-Hermite recurrence
/// `x p_n = p_(n+1) + d_n^2 p_(n-1)`.
pub struct RecurrenceData {
    d_sq: Vec<RatFuncQ>,
    h: Vec<RatFuncQ>,
}

impl RecurrenceData {
    /// Precomputes `d_n^2 = q^(n-1)(1-q^n)` and the norms
    /// `h_n = prod_(i<=n) d_i^2` for n up to `n_max`.
    pub fn up_to(n_max: usize) -> Self {
        let mut d_sq = vec![RatFuncQ::zero()];
        let mut h = vec![RatFuncQ::one()];
        for n in 1..=n_max {
            let dn = &RatFuncQ::q_pow(n as i64 - 1)
                * &(&RatFuncQ::one() - &RatFuncQ::q_pow(n as i64));
            h.push(&h[n - 1] * &dn);
            d_sq.push(dn);
        }
        Self { d_sq, h }
    }

    /// The squared recurrence coefficient at index n.
    pub fn d_sq(&self, n: usize) -> &RatFuncQ {
        &self.d_sq[n]
    }

    /// The squared norm of the monic degree-n polynomial, relative to a
    /// normalized measure.
    pub fn h(&self, n: usize) -> &RatFuncQ {
        &self.h[n]
    }
}

/// Coefficients of `p_n(q^k x) = sum_l c_l p_(n-2l)(x)` in monic form:
///
/// ```text
/// c_l = (-1)^l q^((k-l)(n-2l) + l(l-n)) qbinom(k, k-l; q^2)
///       prod_(i=0..2l-1) d_(n-i)^2
/// ```
///
/// with l running to `min(k, floor(n/2))`.
pub fn linearisation_monic(n: usize, k: usize) -> Vec<RatFuncQ> {
    let data = RecurrenceData::up_to(n);
    let q2 = RatFuncQ::q_pow(2);
    let top = k.min(n / 2);
    let mut out = Vec::with_capacity(top + 1);
    for l in 0..=top {
        let (ki, li, ni) = (k as i64, l as i64, n as i64);
        let expo = (ki - li) * (ni - 2 * li) + li * (li - ni);
        let mut c = &RatFuncQ::q_pow(expo) * &qseries::q_binomial(ki, ki - li, &q2);
        if l % 2 == 1 {
            c = -&c;
        }
        for i in 0..2 * l {
            c = &c * data.d_sq(n - i);
        }
        out.push(c);
    }
    out
}

/// `p_n(q^k x) - sum_l c_l p_(n-2l)(x)` as a polynomial; zero exactly
/// when the linearisation holds.
pub fn linearisation_defect(n: usize, k: usize) -> XPoly {
    let system = Ensemble::DiscreteQHermite.orthogonal_system(n + 1);
    let mut defect = system.polys[n].dilate(&RatFuncQ::q_pow(k as i64));
    for (l, c) in linearisation_monic(n, k).iter().enumerate() {
        defect = &defect - &system.polys[n - 2 * l].scale(c);
    }
    defect
}

/// The dilation product `prod_(i=0..k-1) (1 - q^(-2i) x^2)`.
pub fn dilation_product(k: usize) -> XPoly {
    let mut p = XPoly::one();
    for i in 0..k {
        let factor = XPoly::from_coeffs(vec![
            RatFuncQ::one(),
            RatFuncQ::zero(),
            -&RatFuncQ::q_pow(-2 * (i as i64)),
        ]);
        p = &p * &factor;
    }
    p
}

/// Closed form of the normalized average of [`dilation_product`] against
/// `p_N^2 d mu`:
///
/// ```text
/// M(k, N) = q^k sum_l q^(2kN + l(4l - 4k - 2N - 1))
///           qbinom(k, k-l; q^2)^2 (q;q)_N / (q;q)_(N-2l)
/// ```
///
/// The Pochhammer ratio is computed as the finite product
/// `prod_(j=N-2l+1..N) (1 - q^j)`, which vanishes for `2l > N`.
pub fn shifted_moment_closed(k: usize, big_n: usize) -> RatFuncQ {
    let q2 = RatFuncQ::q_pow(2);
    let (ki, ni) = (k as i64, big_n as i64);
    let mut sum = RatFuncQ::zero();
    for l in 0..=k.min(big_n / 2) {
        let li = l as i64;
        let expo = 2 * ki * ni + li * (4 * li - 4 * ki - 2 * ni - 1);
        let b = qseries::q_binomial(ki, ki - li, &q2);
        let mut term = &RatFuncQ::q_pow(expo) * &(&b * &b);
        for j in (ni - 2 * li + 1)..=ni {
            term = &term * &(&RatFuncQ::one() - &RatFuncQ::q_pow(j));
        }
        sum = &sum + &term;
    }
    &RatFuncQ::q_pow(ki) * &sum
}

/// Brute-force counterpart of [`shifted_moment_closed`]: integrates the
/// dilation product against the squared monic polynomial and divides by
/// its norm.
pub fn shifted_moment_oracle(k: usize, big_n: usize) -> RatFuncQ {
    let ensemble = Ensemble::DiscreteQHermite;
    let system = ensemble.orthogonal_system(big_n + 1);
    let p2 = &system.polys[big_n] * &system.polys[big_n];
    let val = ensemble.moment_functional(&(&dilation_product(k) * &p2));
    &val / &system.norms[big_n]
}

/// Coefficients `e_i = (-1)^i q^(i(i-1)) qbinom(p, i; q^2)` of the
/// expansion `x^(2p) = sum_i e_i` times [`dilation_product`]`(i)`.
pub fn even_power_in_dilation_basis(p: usize) -> Vec<RatFuncQ> {
    let q2 = RatFuncQ::q_pow(2);
    (0..=p)
        .map(|i| {
            let ii = i as i64;
            let mut e = &RatFuncQ::q_pow(ii * (ii - 1))
                * &qseries::q_binomial(p as i64, ii, &q2);
            if i % 2 == 1 {
                e = -&e;
            }
            e
        })
        .collect()
}

/// Closed form of the normalized even moment of `p_N^2 d mu`, as the
/// dilation-basis expansion of `x^(2p)` paired with
/// [`shifted_moment_closed`].
pub fn squared_moment_closed(p: usize, big_n: usize) -> RatFuncQ {
    let mut sum = RatFuncQ::zero();
    for (i, e) in even_power_in_dilation_basis(p).iter().enumerate() {
        sum = &sum + &(e * &shifted_moment_closed(i, big_n));
    }
    sum
}

/// Brute-force counterpart of [`squared_moment_closed`].
pub fn squared_moment_oracle(p: usize, big_n: usize) -> RatFuncQ {
    let ensemble = Ensemble::DiscreteQHermite;
    let system = ensemble.orthogonal_system(big_n + 1);
    let p2 = &system.polys[big_n] * &system.polys[big_n];
    let val = ensemble.moment_functional(&p2.shift_up(2 * p));
    &val / &system.norms[big_n]
}
