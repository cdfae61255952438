//! Upper bounds on the `r`-torsion limit `J_r(q, A(q))`.
//!
//! Write `r = p^l r'` with `gcd(r', p) = 1`, `c = gcd(r', q - 1)` and, for
//! square `q`, `k = l sqrt(q) / (sqrt(q) + 1)`. Bounds are in base-`q`
//! logarithm units:
//!
//! | case | condition                                   | bound                                     |
//! |------|---------------------------------------------|-------------------------------------------|
//! | I    | `r | q`, `q` square                         | `log_q(r) / (sqrt(q) + 1)`                |
//! | II   | `r | q - 1`                                 | `2 log_q(r)`                              |
//! | III  | `r ∤ q - 1`, `q` non-square or `c > p^k`    | `log_q(r)`                                |
//! | IV   | `r ∤ q`, `r ∤ q - 1`, `q` square, `c <= p^k` | `l/(sqrt(q)+1) log_q(p) + log_q(c r')`    |

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::{check_prime_power, square_root_of_field_size, BoundsError};
use crate::exactmath::directed::log;
use crate::exactmath::{
    exact_sqrt, gcd, is_prime, rat, rat_frac, DirectedReal, Interval, LogBase, Rational, DEFAULT_DIGITS,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TorsionCase {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for TorsionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TorsionCase::I => "I",
            TorsionCase::II => "II",
            TorsionCase::III => "III",
            TorsionCase::IV => "IV",
        };
        f.write_str(s)
    }
}

/// `r = p^l r'`, `c = gcd(r', q - 1)` and the threshold exponent `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub p: u64,
    pub l: u32,
    pub r_prime: u64,
    pub c: u64,
    /// `l sqrt(q) / (sqrt(q) + 1)`; only rational (and only used) for square `q`.
    #[serde(with = "crate::exactmath::ratio::option")]
    pub k_exp: Option<Rational>,
}

impl Decomposition {
    fn new(q: u64, r: u64) -> Result<Self, BoundsError> {
        let (p, _) = check_prime_power(q)?;
        let mut r_prime = r;
        let mut l = 0;
        while r_prime.is_multiple_of(p) {
            r_prime /= p;
            l += 1;
        }
        let c = gcd(r_prime, q - 1);
        let k_exp = exact_sqrt(q).map(|s| rat(l as u64) * rat(s) / rat(s + 1));
        Ok(Self { p, l, r_prime, c, k_exp })
    }

    /// `c <= p^k`, decided exactly as `c^den <= p^num` for `k = num/den`.
    fn c_at_most_threshold(&self) -> Option<bool> {
        let k = self.k_exp.as_ref()?;
        let num = k.numer().to_usize().expect("threshold numerator fits");
        let den = k.denom().to_usize().expect("threshold denominator fits");
        let lhs = num_traits::pow(BigUint::from(self.c), den);
        let rhs = num_traits::pow(BigUint::from(self.p), num);
        Some(lhs <= rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionBoundResult {
    pub q: u64,
    pub r: u64,
    pub case: TorsionCase,
    /// Enclosure of the bound, base-`q` logarithm units.
    pub bound: Interval,
    pub decomposition: Decomposition,
}

impl TorsionBoundResult {
    /// The bound as an exact rational, when it is one.
    pub fn exact(&self) -> Option<&Rational> {
        self.bound.exact()
    }

    pub fn upper(&self) -> DirectedReal {
        self.bound.upper(DEFAULT_DIGITS)
    }
}

fn validate(q: u64, r: u64) -> Result<(), BoundsError> {
    check_prime_power(q)?;
    if r < 2 {
        return Err(BoundsError::InvalidArgument(format!("r must be at least 2, got {r}")));
    }
    Ok(())
}

/// Every case whose hypotheses hold for `(q, r)`, each evaluated literally.
/// The calculator relies on this being a single case.
pub fn matching_cases(q: u64, r: u64) -> Result<Vec<TorsionCase>, BoundsError> {
    validate(q, r)?;
    let dec = Decomposition::new(q, r)?;
    let square = exact_sqrt(q).is_some();
    let divides_q = q.is_multiple_of(r);
    let divides_q_minus_1 = (q - 1).is_multiple_of(r);
    let c_small = dec.c_at_most_threshold();
    let mut out = Vec::new();
    if divides_q && square {
        out.push(TorsionCase::I);
    }
    if divides_q_minus_1 {
        out.push(TorsionCase::II);
    }
    if !divides_q_minus_1 && (!square || c_small == Some(false)) {
        out.push(TorsionCase::III);
    }
    if !divides_q && !divides_q_minus_1 && square && c_small == Some(true) {
        out.push(TorsionCase::IV);
    }
    Ok(out)
}

fn select_case(q: u64, r: u64, dec: &Decomposition) -> TorsionCase {
    if (q - 1).is_multiple_of(r) {
        return TorsionCase::II;
    }
    if exact_sqrt(q).is_none() {
        return TorsionCase::III;
    }
    if q.is_multiple_of(r) {
        return TorsionCase::I;
    }
    match dec.c_at_most_threshold() {
        // the tie c = p^k belongs to case IV
        Some(true) => TorsionCase::IV,
        _ => TorsionCase::III,
    }
}

fn log_q(x: u64, q: u64) -> Interval {
    log(&rat(x), LogBase::Int(q), DEFAULT_DIGITS)
}

/// Upper bound on the `r`-torsion limit over `GF(q)`.
pub fn torsion_limit_upper(q: u64, r: u64) -> Result<TorsionBoundResult, BoundsError> {
    validate(q, r)?;
    let dec = Decomposition::new(q, r)?;
    let case = select_case(q, r, &dec);
    let bound = match case {
        TorsionCase::I => {
            let s = exact_sqrt(q).expect("case I needs a square q");
            log_q(r, q).scale(&rat_frac(1, (s + 1) as i64))
        }
        TorsionCase::II => log_q(r, q).scale(&rat(2)),
        TorsionCase::III => log_q(r, q),
        TorsionCase::IV => {
            let s = exact_sqrt(q).expect("case IV needs a square q");
            let coef = rat(dec.l as u64) / rat(s + 1);
            log_q(dec.p, q).scale(&coef).add(&log_q(dec.c * dec.r_prime, q))
        }
    };
    Ok(TorsionBoundResult { q, r, case, bound, decomposition: dec })
}

/// `sqrt(q) - 1 - B` where `B` is the torsion bound for `(q, r)`; a lower
/// bound on `A(F) - J_r(F)` for the Garcia-Stichtenoth tower.
pub fn gs_minus_b(q: u64, r: u64) -> Result<Interval, BoundsError> {
    let s = square_root_of_field_size(q)?;
    let b = torsion_limit_upper(q, r)?;
    Ok(Interval::point(rat(s) - rat(1)).sub(&b.bound))
}

/// Torsion estimate for the Bassa-Beelen-Garcia-Stichtenoth tower:
/// `A(F) >= a + shift + J_2(F)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BassaJ2Bound {
    pub q: u64,
    #[serde(with = "crate::exactmath::ratio")]
    pub ihara: Rational,
    /// `ihara - 2 log_q 2`.
    pub a: Interval,
    /// `log_q 2` in characteristic 2, zero otherwise.
    pub shift: Interval,
}

pub fn bassa_j2_lower(p: u64, n: u64) -> Result<BassaJ2Bound, BoundsError> {
    let ihara = super::ihara_bassa(p, n)?;
    debug_assert!(is_prime(p));
    let q = p.checked_pow(n as u32).ok_or_else(|| BoundsError::InvalidArgument(format!("{p}^{n} overflows")))?;
    let log2 = log_q(2, q);
    let a = Interval::point(ihara.clone()).sub(&log2.scale(&rat(2)));
    let shift = if p == 2 { log2 } else { Interval::zero() };
    Ok(BassaJ2Bound { q, ihara, a, shift })
}
