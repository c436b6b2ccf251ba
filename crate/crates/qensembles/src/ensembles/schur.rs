//! Schur polynomial averages: determinant oracle and closed product forms.
//!
//! For an N-particle ensemble with weight moments `mu_i`, the average of the
//! Schur polynomial `s_kappa` satisfies
//!
//! ```text
//! <s_kappa> = det[ mu_(kappa_(N+1-j) + j + k - 2) ]_(j,k=1..N)
//!           / det[ mu_(j + k - 2) ]_(j,k=1..N),
//! ```
//!
//! an exact consequence of integrating the two determinant factors row by
//! row. [`schur_average_oracle`] evaluates that ratio directly from the
//! moments; the remaining functions are closed product evaluations specific
//! to one weight each, and the tests pin down how each closed form relates
//! to the oracle (several match only after an explicit monomial factor,
//! which downstream checks track separately).
//!
//! Throughout, `e_j = kappa_j + N - j` is the strictly decreasing exponent
//! sequence of a partition padded to N parts, and `e0_j = N - j` is its
//! empty-partition counterpart.

use super::{Ensemble, Partition};
use crate::algebra::{linalg, Rat, RatFuncQ};
use crate::qseries;
use num_traits::{One, Zero};


/// Exponents `e_j = kappa_j + N - j`, `j = 1..N`, as signed integers.
fn exponent_sequence(kappa: &Partition, n: usize) -> Vec<i64> {
    (1..=n)
        .map(|j| kappa.part(j - 1) as i64 + (n - j) as i64)
        .collect()
}

/// Brute-force Schur average from the moment determinants.
///
/// Returns zero when `kappa` has more parts than there are particles.
///
/// # Panics
///
/// Panics if `n` is zero.
pub fn schur_average_oracle(ens: &Ensemble, kappa: &Partition, n: usize) -> RatFuncQ {
    assert!(n > 0, "need at least one particle");
    if kappa.len() > n {
        return RatFuncQ::zero();
    }
    let numerator: Vec<Vec<RatFuncQ>> = (1..=n)
        .map(|j| {
            let row_shift = kappa.part(n - j);
            (1..=n)
                .map(|k| ens.weight_moment(row_shift + (j + k - 2) as u64))
                .collect()
        })
        .collect();
    let denominator: Vec<Vec<RatFuncQ>> = (1..=n)
        .map(|j| (1..=n).map(|k| ens.weight_moment((j + k - 2) as u64)).collect())
        .collect();
    &linalg::det(numerator) / &linalg::det(denominator)
}

/// Closed product for the Stieltjes-Wigert Schur average, in the base
/// variable s with q = s^2:
///
/// ```text
/// s^(-sum_l kappa_l^2) * prod_(j<k) (1 - q^(-(e_j - e_k))) / (1 - q^(-(k-j)))
/// ```
///
/// The oracle equals `s^(-(2N-1)|kappa|)` times this product: the raw
/// average picks up one factor `s^(1-2N)` per box of the shape.
pub fn sw_schur_closed(kappa: &Partition, n: usize) -> RatFuncQ {
    if kappa.len() > n {
        return RatFuncQ::zero();
    }
    let sum_sq: i64 = kappa.parts().iter().map(|p| (p * p) as i64).sum();
    let q = RatFuncQ::variable().pow(2);
    let one = RatFuncQ::one();
    let mut acc = RatFuncQ::q_pow(-sum_sq);
    let e = exponent_sequence(kappa, n);
    for j in 0..n {
        for k in (j + 1)..n {
            let num = &one - &q.pow(-(e[j] - e[k]));
            let den = &one - &q.pow(-((k - j) as i64));
            acc = &acc * &(&num / &den);
        }
    }
    acc
}

/// Closed product for the discrete q-Hermite Schur average.
///
/// The exponents `e_j` split by parity into an even class and an odd class;
/// the average vanishes unless the even class has the same size as for the
/// empty partition, namely floor((N+1)/2). Otherwise
///
/// ```text
/// <s_kappa> = (-1)^(S0/2)
///   * prod_(even e) (q;q^2)_(e/2)     / (q;q^2)_(e0/2)
///   * prod_(odd e)  (q;q^2)_((e+1)/2) / (q;q^2)_((e0+1)/2)
///   * prod_(k<l, same class) (q^(e_k) - q^(e_l)) / (q^(e0_k) - q^(e0_l))
/// ```
///
/// where S0 counts odd parts of kappa and primed sequences run over the
/// matching parity class of the empty partition. Matches the oracle exactly.
pub fn dqh_schur_closed(kappa: &Partition, n: usize) -> RatFuncQ {
    if kappa.len() > n {
        return RatFuncQ::zero();
    }
    let e = exponent_sequence(kappa, n);
    let e0 = exponent_sequence(&Partition::empty(), n);
    let class = |v: &[i64], parity: i64| -> Vec<i64> {
        v.iter().copied().filter(|x| x % 2 == parity).collect()
    };
    let (even, odd) = (class(&e, 0), class(&e, 1));
    let (even0, odd0) = (class(&e0, 0), class(&e0, 1));
    if even.len() != even0.len() {
        return RatFuncQ::zero();
    }
    let s0 = kappa.odd_part_count();
    assert!(s0 % 2 == 0, "odd-part count must be even when classes balance");
    let mut acc = if (s0 / 2) % 2 == 0 {
        RatFuncQ::one()
    } else {
        -&RatFuncQ::one()
    };
    let q = RatFuncQ::variable();
    let q2 = q.pow(2);
    for (v, v0) in even.iter().zip(&even0) {
        acc = &acc * &qseries::pochhammer(&q, &q2, v / 2);
        acc = &acc / &qseries::pochhammer(&q, &q2, v0 / 2);
    }
    for (v, v0) in odd.iter().zip(&odd0) {
        acc = &acc * &qseries::pochhammer(&q, &q2, (v + 1) / 2);
        acc = &acc / &qseries::pochhammer(&q, &q2, (v0 + 1) / 2);
    }
    for (vals, vals0) in [(&even, &even0), (&odd, &odd0)] {
        for k in 0..vals.len() {
            for l in (k + 1)..vals.len() {
                let num = &q.pow(vals[k]) - &q.pow(vals[l]);
                let den = &q.pow(vals0[k]) - &q.pow(vals0[l]);
                acc = &acc * &(&num / &den);
            }
        }
    }
    acc
}

/// Closed form for the discrete q-Hermite average over the hook
/// (2k - r, 1^r) of size 2k:
///
/// ```text
/// (-1)^floor((r+1)/2) q^(floor(r/2) (floor(r/2)+1))
///   * qbinom(N+2k-r-1, 2k; q) * qbinom(k-1, floor(r/2); q^2) * (q;q^2)_k
/// ```
///
/// Requires `r < 2k`. Vanishes for r >= N through the first q-binomial.
pub fn dqh_hook_schur(k: u64, r: u64, n: usize) -> RatFuncQ {
    assert!(r < 2 * k, "hook (2k-r, 1^r) needs r < 2k");
    let q = RatFuncQ::variable();
    let q2 = q.pow(2);
    let half_r = (r / 2) as i64;
    let sign = if ((r + 1) / 2) % 2 == 0 { 1 } else { -1 };
    let mut acc = &RatFuncQ::integer(sign) * &RatFuncQ::q_pow(half_r * (half_r + 1));
    acc = &acc
        * &qseries::q_binomial(
            n as i64 + 2 * k as i64 - r as i64 - 1,
            2 * k as i64,
            &q,
        );
    acc = &acc * &qseries::q_binomial(k as i64 - 1, half_r, &q2);
    &acc * &qseries::pochhammer(&q, &q2, k as i64)
}

/// Closed product for the little q-Laguerre Schur average with integer
/// parameter alpha:
///
/// ```text
/// prod_j (q^(a+1);q)_(e_j) / (q^(a+1);q)_(e0_j)
///   * prod_(j<l) (q^(e_j) - q^(e_l)) / (q^(e0_j) - q^(e0_l))
/// ```
///
/// Matches the oracle exactly.
pub fn lql_schur_closed(kappa: &Partition, n: usize, alpha: u32) -> RatFuncQ {
    if kappa.len() > n {
        return RatFuncQ::zero();
    }
    let q = RatFuncQ::variable();
    let a = RatFuncQ::q_pow(alpha as i64 + 1);
    let e = exponent_sequence(kappa, n);
    let e0 = exponent_sequence(&Partition::empty(), n);
    let mut acc = RatFuncQ::one();
    for (v, v0) in e.iter().zip(&e0) {
        acc = &acc * &qseries::pochhammer(&a, &q, *v);
        acc = &acc / &qseries::pochhammer(&a, &q, *v0);
    }
    for j in 0..n {
        for l in (j + 1)..n {
            let num = &q.pow(e[j]) - &q.pow(e[l]);
            let den = &q.pow(e0[j]) - &q.pow(e0[l]);
            acc = &acc * &(&num / &den);
        }
    }
    acc
}

/// Closed product for the Gaussian Schur average in the convention where
/// the weight is exp(-x^2/2), so mu_(2j) = (2j-1)!!.
///
/// Same parity-class structure as the discrete q-Hermite case:
///
/// ```text
/// <s_kappa> = (-1)^(S0/2)
///   * prod_(even e) (e-1)!!/(e0-1)!!  * prod_(odd e) e!!/e0!!
///   * prod_(k<l, same class) (e_k - e_l) / (e0_k - e0_l)
/// ```
///
/// For the weight exp(-x^2) used by [`Ensemble::Gaussian`], the average is
/// `2^(-|kappa|/2)` times this value.
pub fn gaussian_schur_closed(kappa: &Partition, n: usize) -> Rat {
    if kappa.len() > n {
        return Rat::zero();
    }
    let e = exponent_sequence(kappa, n);
    let e0 = exponent_sequence(&Partition::empty(), n);
    let class = |v: &[i64], parity: i64| -> Vec<i64> {
        v.iter().copied().filter(|x| x % 2 == parity).collect()
    };
    let (even, odd) = (class(&e, 0), class(&e, 1));
    let (even0, odd0) = (class(&e0, 0), class(&e0, 1));
    if even.len() != even0.len() {
        return Rat::zero();
    }
    let s0 = kappa.odd_part_count();
    assert!(s0 % 2 == 0, "odd-part count must be even when classes balance");
    let mut acc = if (s0 / 2) % 2 == 0 {
        Rat::one()
    } else {
        -Rat::one()
    };
    for (v, v0) in even.iter().zip(&even0) {
        acc = acc * qseries::double_factorial(v - 1) / qseries::double_factorial(v0 - 1);
    }
    for (v, v0) in odd.iter().zip(&odd0) {
        acc = acc * qseries::double_factorial(*v) / qseries::double_factorial(*v0);
    }
    for (vals, vals0) in [(&even, &even0), (&odd, &odd0)] {
        for k in 0..vals.len() {
            for l in (k + 1)..vals.len() {
                acc = acc * Rat::from_integer((vals[k] - vals[l]).into())
                    / Rat::from_integer((vals0[k] - vals0[l]).into());
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn shapes(max_size: u64, n: usize) -> Vec<Partition> {
        Partition::enumerate(max_size, n)
    }

    #[test]
    fn empty_partition_average_is_one() {
        for ens in [
            Ensemble::StieltjesWigert,
            Ensemble::DiscreteQHermite,
            Ensemble::LittleQLaguerre { alpha: 1 },
            Ensemble::Gaussian,
            Ensemble::Laguerre { alpha: 2 },
        ] {
            for n in 1..=3 {
                assert!(
                    schur_average_oracle(&ens, &Partition::empty(), n).is_one(),
                    "{} N={n}",
                    ens.name()
                );
            }
        }
    }

    #[test]
    fn first_power_sum_equals_first_density_moment() {
        // s_(1) = x_1 + .. + x_N, so its average is m_(1,N).
        for ens in [
            Ensemble::StieltjesWigert,
            Ensemble::LittleQLaguerre { alpha: 0 },
            Ensemble::Laguerre { alpha: 1 },
        ] {
            for n in 1..=3 {
                assert_eq!(
                    schur_average_oracle(&ens, &Partition::new(vec![1]), n),
                    ens.density_moment_oracle(1, n),
                    "{} N={n}",
                    ens.name()
                );
            }
        }
    }

    #[test]
    fn stieltjes_wigert_closed_matches_oracle_up_to_monomial() {
        let ens = Ensemble::StieltjesWigert;
        for n in 1..=3 {
            for kappa in shapes(4, n) {
                let oracle = schur_average_oracle(&ens, &kappa, n);
                let closed = sw_schur_closed(&kappa, n);
                let factor =
                    RatFuncQ::q_pow(-((2 * n as i64 - 1) * kappa.size() as i64));
                assert_eq!(
                    oracle,
                    &factor * &closed,
                    "kappa={} N={n}",
                    kappa.display()
                );
            }
        }
    }

    #[test]
    fn discrete_q_hermite_closed_matches_oracle() {
        let ens = Ensemble::DiscreteQHermite;
        for n in 1..=3 {
            for kappa in shapes(5, n) {
                assert_eq!(
                    schur_average_oracle(&ens, &kappa, n),
                    dqh_schur_closed(&kappa, n),
                    "kappa={} N={n}",
                    kappa.display()
                );
            }
        }
    }

    #[test]
    fn discrete_q_hermite_worked_example() {
        // kappa = (1,1), N = 2: the average is -(1-q).
        let q = RatFuncQ::variable();
        assert_eq!(
            dqh_schur_closed(&Partition::new(vec![1, 1]), 2),
            -&(&RatFuncQ::one() - &q)
        );
    }

    #[test]
    fn discrete_q_hermite_hook_closed_matches_oracle() {
        let ens = Ensemble::DiscreteQHermite;
        for k in 1..=3u64 {
            for r in 0..(2 * k) {
                for n in 1..=3usize {
                    let kappa = Partition::hook(2 * k, r);
                    assert_eq!(
                        schur_average_oracle(&ens, &kappa, n),
                        dqh_hook_schur(k, r, n),
                        "k={k} r={r} N={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn little_q_laguerre_closed_matches_oracle() {
        for alpha in [0u32, 1, 2] {
            let ens = Ensemble::LittleQLaguerre { alpha };
            for n in 1..=3 {
                for kappa in shapes(4, n) {
                    assert_eq!(
                        schur_average_oracle(&ens, &kappa, n),
                        lql_schur_closed(&kappa, n, alpha),
                        "alpha={alpha} kappa={} N={n}",
                        kappa.display()
                    );
                }
            }
        }
    }

    #[test]
    fn gaussian_closed_matches_oracle_after_rescaling() {
        // The oracle weight is exp(-x^2); the closed product is stated for
        // exp(-x^2/2), a scaling x -> x sqrt(2) worth 2^(-|kappa|/2).
        let ens = Ensemble::Gaussian;
        for n in 1..=3 {
            for kappa in shapes(6, n) {
                let oracle = schur_average_oracle(&ens, &kappa, n);
                let closed = gaussian_schur_closed(&kappa, n);
                if kappa.size() % 2 == 1 {
                    assert!(oracle.is_zero(), "kappa={}", kappa.display());
                    assert!(closed.is_zero(), "kappa={}", kappa.display());
                    continue;
                }
                let halves = (kappa.size() / 2) as u32;
                let scale = rat(1, 1 << halves);
                assert_eq!(
                    oracle,
                    RatFuncQ::constant(scale * closed),
                    "kappa={} N={n}",
                    kappa.display()
                );
            }
        }
    }
}
