//! Closed-form bounds: class numbers, torsion subgroups, Ihara limits and
//! the asymptotic divisor-counting quantities of exact sequences.

mod asymptotic;
mod torsion;

use num_traits::Zero;
use thiserror::Error;

use crate::exactmath::{exact_sqrt, is_prime, isqrt_floor, prime_power, rat, rat_pow, Natural, Rational};

pub use asymptotic::{class_number_limit, delta_lower, delta_mu, mu0, prop_optimal_rhs, AsymptoticInputs};
pub use torsion::{
    bassa_j2_lower, gs_minus_b, matching_cases, torsion_limit_upper, BassaJ2Bound, Decomposition, TorsionBoundResult,
    TorsionCase,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("{0} is not a prime power")]
    InvalidPrimePower(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a perfect square")]
    NotSquare(u64),
    #[error("extension degree {0} must be odd and at least 3")]
    EvenExponent(u64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub(crate) fn check_prime_power(q: u64) -> Result<(u64, u32), BoundsError> {
    prime_power(q).ok_or(BoundsError::InvalidPrimePower(q))
}

pub(crate) fn square_root_of_field_size(q: u64) -> Result<u64, BoundsError> {
    check_prime_power(q)?;
    exact_sqrt(q).ok_or(BoundsError::NotSquare(q))
}

/// Class-number lower bound `H = q^(g-1) (q-1)^2 / ((q+1)(g+1))`.
pub fn class_number_lower(q: u64, g: u64) -> Rational {
    assert!(q >= 2, "q must be at least 2");
    let qr = rat(q);
    rat_pow(&qr, g as i64 - 1) * rat((q - 1) * (q - 1)) / (rat(q + 1) * rat(g + 1))
}

/// Weil's bound `|J_F[r]| <= r^(2g)`.
pub fn weil_torsion_upper(r: u64, g: u64) -> Natural {
    num_traits::pow(Natural::from(r), 2 * g as usize)
}

/// `q + 1 + floor(2 g sqrt(q))`, the Hasse-Weil cap on rational places.
pub fn hasse_weil_b1_upper(q: u64, g: u64) -> Natural {
    let four_g2_q = Natural::from(4u32) * Natural::from(g) * Natural::from(g) * Natural::from(q);
    Natural::from(q) + 1u32 + isqrt_floor(&four_g2_q)
}

/// `ceil(2 g sqrt(q))`.
pub fn hasse_weil_excess_ceil(q: u64, g: u64) -> Natural {
    let four_g2_q = Natural::from(4u32) * Natural::from(g) * Natural::from(g) * Natural::from(q);
    crate::exactmath::isqrt_ceil(&four_g2_q)
}

/// Ihara limit `sqrt(q) - 1` of the Garcia-Stichtenoth tower over a square field.
pub fn ihara_gs(q: u64) -> Result<u64, BoundsError> {
    Ok(square_root_of_field_size(q)? - 1)
}

/// Lower bound `2(p^(m+1) - 1) / (p + 1 + eps)`, `eps = (p-1)/(p^m - 1)`,
/// on the Ihara limit of the Bassa-Beelen-Garcia-Stichtenoth tower over
/// `GF(p^n)`, `n = 2m + 1`.
pub fn ihara_bassa(p: u64, n: u64) -> Result<Rational, BoundsError> {
    if !is_prime(p) {
        return Err(BoundsError::NotPrime(p));
    }
    if n < 3 || n.is_multiple_of(2) {
        return Err(BoundsError::EvenExponent(n));
    }
    let m = (n - 1) / 2;
    let pr = rat(p);
    let p_m = rat_pow(&pr, m as i64);
    let eps = rat(p - 1) / (&p_m - rat(1));
    let num = rat(2) * (&p_m * &pr - rat(1));
    let den = pr + rat(1) + eps;
    debug_assert!(!den.is_zero());
    Ok(num / den)
}
