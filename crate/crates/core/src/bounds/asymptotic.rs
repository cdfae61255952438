//! Limits attached to an asymptotically exact sequence of function fields:
//! `mu_0`, the class-number growth `h(F)` and `Delta(mu)`.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{square_root_of_field_size, BoundsError};
use crate::exactmath::directed::{ln, rebase};
use crate::exactmath::{rat, rat_pow, Interval, LogBase, Rational};

/// Field size and the limits `beta_m = lim B_m(F_i) / g_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsymptoticInputs {
    pub q: u64,
    #[serde(with = "crate::exactmath::ratio::map")]
    pub beta: BTreeMap<u32, Rational>,
}

impl AsymptoticInputs {
    pub fn new(q: u64, beta: BTreeMap<u32, Rational>) -> Result<Self, BoundsError> {
        if q < 2 {
            return Err(BoundsError::InvalidArgument(format!("q must be at least 2, got {q}")));
        }
        if let Some((m, b)) = beta.iter().find(|(m, b)| **m == 0 || b.is_negative()) {
            return Err(BoundsError::InvalidArgument(format!("invalid beta_{m} = {b}")));
        }
        Ok(Self { q, beta })
    }

    /// `log(q^m / (q^m - 1))` summed against `beta_m`, natural log.
    fn beta_series(&self, digits: u32) -> Interval {
        let q = rat(self.q);
        self.beta.iter().filter(|(_, b)| !b.is_zero()).fold(Interval::zero(), |acc, (&m, b)| {
            let qm = rat_pow(&q, m as i64);
            let term = ln(&(&qm / (&qm - rat(1))), digits).scale(b);
            acc.add(&term)
        })
    }
}

/// `mu_0 = sum_m m beta_m / (q^m - 1)`.
pub fn mu0(inputs: &AsymptoticInputs) -> Rational {
    let q = rat(inputs.q);
    inputs.beta.iter().map(|(&m, b)| rat(m as u64) * b / (rat_pow(&q, m as i64) - rat(1))).sum()
}

/// `h(F) = log q + sum_i beta_i log(q^i / (q^i - 1))`.
pub fn class_number_limit(inputs: &AsymptoticInputs, base: LogBase, digits: u32) -> Interval {
    let natural = ln(&rat(inputs.q), digits).add(&inputs.beta_series(digits));
    rebase(&natural, base, digits)
}

/// `Delta(mu) = h(F) - (1 - mu) log q`, with `h_f` already in `base`.
pub fn delta_mu(h_f: &Interval, mu: &Rational, q: u64, base: LogBase, digits: u32) -> Interval {
    let log_q = rebase(&ln(&rat(q), digits), base, digits);
    h_f.sub(&log_q.scale(&(rat(1) - mu)))
}

/// `mu log q + sum_m beta_m log(q^m / (q^m - 1))`.
pub fn delta_lower(mu: &Rational, inputs: &AsymptoticInputs, base: LogBase, digits: u32) -> Interval {
    let natural = ln(&rat(inputs.q), digits).scale(mu).add(&inputs.beta_series(digits));
    rebase(&natural, base, digits)
}

/// `sqrt(q) + (sqrt(q) - 1) log((q - 1) / q)` for square `q`.
pub fn prop_optimal_rhs(q: u64, base: LogBase, digits: u32) -> Result<Interval, BoundsError> {
    let s = square_root_of_field_size(q)?;
    let log_term = rebase(&ln(&(rat(q - 1) / rat(q)), digits), base, digits);
    Ok(log_term.scale(&rat(s - 1)).add_rational(&rat(s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat_frac;

    fn example2() -> AsymptoticInputs {
        AsymptoticInputs::new(9, [(1, rat_frac(6, 7)), (2, rat_frac(2, 21))].into()).unwrap()
    }

    fn close(iv: &Interval, expected: f64) -> bool {
        (iv.to_f64() - expected).abs() < 1e-12
    }

    #[test]
    fn mu0_examples() {
        assert_eq!(mu0(&example2()), rat_frac(23, 210));
        let gs = AsymptoticInputs::new(9, [(1, rat(2))].into()).unwrap();
        assert_eq!(mu0(&gs), rat_frac(1, 4));
        let empty = AsymptoticInputs::new(9, BTreeMap::new()).unwrap();
        assert_eq!(mu0(&empty), rat(0));
        assert!(AsymptoticInputs::new(9, [(1, rat(-1))].into()).is_err());
    }

    #[test]
    fn class_number_limit_examples() {
        let empty = AsymptoticInputs::new(9, BTreeMap::new()).unwrap();
        assert!(close(&class_number_limit(&empty, LogBase::Natural, 50), 9f64.ln()));
        let gs = AsymptoticInputs::new(9, [(1, rat(2))].into()).unwrap();
        let h = class_number_limit(&gs, LogBase::Natural, 50);
        assert!(close(&h, 9f64.ln() + 2.0 * (9f64 / 8.0).ln()));
        assert!(h.lo() >= ln(&rat(9), 50).lo());
        let h9 = class_number_limit(&gs, LogBase::Int(9), 50);
        assert!(close(&h9, 1.0 + 2.0 * (9f64 / 8.0).ln() / 9f64.ln()));
    }

    #[test]
    fn delta_examples() {
        let q = 9;
        let ln9 = ln(&rat(9), 50);
        let d = delta_mu(&ln9, &rat(1), q, LogBase::Natural, 50);
        assert!(close(&d, 9f64.ln()));
        let inputs = example2();
        let h = class_number_limit(&inputs, LogBase::Natural, 50);
        let d = delta_mu(&h, &rat_frac(1, 2), q, LogBase::Natural, 50);
        assert!(close(&d, h.to_f64() - 0.5 * 9f64.ln()));
        let lower = delta_lower(&rat_frac(1, 2), &inputs, LogBase::Natural, 50);
        let expected = 0.5 * 9f64.ln() + 6.0 / 7.0 * (9f64 / 8.0).ln() + 2.0 / 21.0 * (81f64 / 80.0).ln();
        assert!(close(&lower, expected));
        let empty = AsymptoticInputs::new(9, BTreeMap::new()).unwrap();
        assert_eq!(delta_lower(&rat(0), &empty, LogBase::Natural, 50), Interval::zero());
    }

    #[test]
    fn prop_rhs_examples() {
        assert!(close(&prop_optimal_rhs(9, LogBase::Natural, 50).unwrap(), 3.0 + 2.0 * (8f64 / 9.0).ln()));
        assert!(close(&prop_optimal_rhs(4, LogBase::Natural, 50).unwrap(), 2.0 + (0.75f64).ln()));
        assert_eq!(prop_optimal_rhs(7, LogBase::Natural, 50), Err(BoundsError::NotSquare(7)));
    }
}
