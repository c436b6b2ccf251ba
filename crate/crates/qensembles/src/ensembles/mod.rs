//! Ensemble definitions: weights, exact moments, and orthogonal systems.
//!
//! An ensemble here is an N-particle density proportional to
//! `prod_l w(x_l) * prod_{j<k} (x_k - x_j)^2`, determined by a weight `w`
//! whose moments are exact elements of Q(base). Three q-weights and their
//! two classical limit targets are covered:
//!
//! * Stieltjes-Wigert on the q-lattice of R+, with moments
//!   `mu_n = base^-(n^2+n+1)` in a base variable s, q = s^2, so that the
//!   half-integer powers of q appearing in its theory stay exact;
//! * discrete q-Hermite on the q-lattice of [-1, 1], with
//!   `mu_n = (1-q) (q;q^2)_{n/2}` for even n, zero for odd n;
//! * little q-Laguerre on the q-lattice of [0, 1] with integer parameter
//!   alpha, moments `(q^(alpha+1);q)_n` up to one overall constant;
//! * Gaussian weight `exp(-x^2)` with normalized moments
//!   `(2j-1)!!/2^j` at n = 2j;
//! * Laguerre weight `x^alpha exp(-x)` with normalized moments
//!   `(alpha+1)_n`.
//!
//! Overall constant factors in a weight drop out of every quantity computed
//! downstream (Schur averages and density moments are ratios of moment
//! determinants), so weights are stored up to normalization.
//!
//! The brute-force routes live here and in [`schur`]: an orthogonal system
//! is built by Gram-Schmidt from the moments alone, giving density moments
//! as `sum_j L[x^k p_j^2]/h_j`, and Schur averages come from moment
//! determinants. Closed forms in the submodules are always checked against
//! these.

pub mod coeffs;
pub mod genfunc;
pub mod limits;
pub mod moments;
pub mod partitions;
pub mod recurrence;
pub mod schur;

pub use partitions::Partition;

use crate::algebra::{rat_int, Rat, RatFuncQ, XPoly};
use crate::qseries;

/// A weight on the line (or a q-lattice) with exactly representable moments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ensemble {
    StieltjesWigert,
    DiscreteQHermite,
    LittleQLaguerre { alpha: u32 },
    Gaussian,
    Laguerre { alpha: u32 },
}

impl Ensemble {
    /// Stable identifier used in reports and CSV output.
    pub fn name(&self) -> String {
        match self {
            Ensemble::StieltjesWigert => "stieltjes-wigert".to_string(),
            Ensemble::DiscreteQHermite => "discrete-q-hermite".to_string(),
            Ensemble::LittleQLaguerre { alpha } => format!("little-q-laguerre-a{alpha}"),
            Ensemble::Gaussian => "gaussian".to_string(),
            Ensemble::Laguerre { alpha } => format!("laguerre-a{alpha}"),
        }
    }

    /// Name of the base variable values are expressed in: the
    /// Stieltjes-Wigert case works in s with q = s^2, everything else in q
    /// (classical weights only produce constants).
    pub fn variable(&self) -> &'static str {
        match self {
            Ensemble::StieltjesWigert => "s",
            _ => "q",
        }
    }

    /// n-th weight moment, up to one n-independent normalization constant.
    pub fn weight_moment(&self, n: u64) -> RatFuncQ {
        match self {
            Ensemble::StieltjesWigert => {
                // In s with q = s^2: q^(n/2) * q^(-(n+1)^2/2) = s^-(n^2+n+1).
                let e = (n * n + n + 1) as i64;
                RatFuncQ::q_pow(-e)
            }
            Ensemble::DiscreteQHermite => {
                if n % 2 == 1 {
                    return RatFuncQ::zero();
                }
                let q = RatFuncQ::variable();
                let one_minus_q = &RatFuncQ::one() - &q;
                &one_minus_q * &qseries::pochhammer(&q, &q.pow(2), (n / 2) as i64)
            }
            Ensemble::LittleQLaguerre { alpha } => {
                let q = RatFuncQ::variable();
                qseries::pochhammer(&RatFuncQ::q_pow(*alpha as i64 + 1), &q, n as i64)
            }
            Ensemble::Gaussian => {
                if n % 2 == 1 {
                    return RatFuncQ::zero();
                }
                let df = qseries::double_factorial(n as i64 - 1);
                let pow2 = Rat::from_integer(num_bigint::BigInt::from(2u32).pow((n / 2) as u32));
                RatFuncQ::constant(df / pow2)
            }
            Ensemble::Laguerre { alpha } => {
                RatFuncQ::constant(qseries::rising(&rat_int(*alpha as i64 + 1), n))
            }
        }
    }

    /// Applies the moment functional `L[p] = sum_j p_j mu_j` to a
    /// polynomial in the spectral variable.
    pub fn moment_functional(&self, p: &XPoly) -> RatFuncQ {
        let mut acc = RatFuncQ::zero();
        for (j, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = &acc + &(c * &self.weight_moment(j as u64));
        }
        acc
    }

    /// Monic orthogonal polynomials `p_0..p_(count-1)` with their squared
    /// norms `h_j = L[p_j^2]`, built by Gram-Schmidt from the moments.
    ///
    /// # Panics
    ///
    /// Panics if some `h_j` vanishes, which cannot happen for a moment
    /// sequence of a positive measure.
    pub fn orthogonal_system(&self, count: usize) -> OrthogonalSystem {
        gram_schmidt(|p| self.moment_functional(p), count)
    }

    /// Brute-force k-th moment of the N-particle spectral density,
    /// `m_(k,N) = sum_(j<N) L[x^k p_j^2] / h_j`, so that `m_(0,N) = N`.
    pub fn density_moment_oracle(&self, k: u64, n: usize) -> RatFuncQ {
        let system = self.orthogonal_system(n);
        let mut acc = RatFuncQ::zero();
        for j in 0..n {
            let p2 = &system.polys[j] * &system.polys[j];
            let val = self.moment_functional(&p2.shift_up(k as usize));
            acc = &acc + &(&val / &system.norms[j]);
        }
        acc
    }
}

/// Monic Gram-Schmidt against an arbitrary moment functional.
///
/// `functional` must be linear in its polynomial argument; it is only ever
/// evaluated on products of the polynomials under construction.
///
/// # Panics
///
/// Panics if some squared norm vanishes.
pub fn gram_schmidt(
    functional: impl Fn(&XPoly) -> RatFuncQ,
    count: usize,
) -> OrthogonalSystem {
    let mut polys: Vec<XPoly> = Vec::with_capacity(count);
    let mut norms: Vec<RatFuncQ> = Vec::with_capacity(count);
    for n in 0..count {
        let mut p = XPoly::monomial(RatFuncQ::one(), n);
        for j in 0..n {
            let overlap = functional(&polys[j].shift_up(n));
            if overlap.is_zero() {
                continue;
            }
            let c = &overlap / &norms[j];
            p = &p - &polys[j].scale(&c);
        }
        let h = functional(&(&p * &p));
        assert!(!h.is_zero(), "degenerate moment sequence at degree {n}");
        polys.push(p);
        norms.push(h);
    }
    OrthogonalSystem { polys, norms }
}

/// Monic orthogonal polynomials with their squared norms.
pub struct OrthogonalSystem {
    /// `polys[j]` is the monic degree-j orthogonal polynomial.
    pub polys: Vec<XPoly>,
    /// `norms[j] = L[polys[j]^2]`.
    pub norms: Vec<RatFuncQ>,
}
