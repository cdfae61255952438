//! Rational enclosures of irrational quantities and directed rounding.
//!
//! An [`Interval`] holds exact rational endpoints `lo <= x <= hi` for a real
//! `x`. A [`DirectedReal`] is one endpoint snapped outward to a decimal grid,
//! so a value rounded [`Rounding::Up`] is never below the true result and a
//! value rounded [`Rounding::Down`] is never above it.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{exact_log, rat, to_decimal, Rational};

/// Decimal digits carried by default.
pub const DEFAULT_DIGITS: u32 = 50;

/// Extra digits used internally before the final outward rounding.
const GUARD_DIGITS: u32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rounding {
    /// Toward `+inf`.
    Up,
    /// Toward `-inf`.
    Down,
}

/// Logarithm base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum LogBase {
    #[default]
    Natural,
    Int(u64),
}

/// One-sided decimal approximation of a real.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectedReal {
    #[serde(with = "super::ratio")]
    pub value: Rational,
    pub rounding: Rounding,
    pub digits: u32,
}

impl DirectedReal {
    pub fn value(&self) -> &Rational {
        &self.value
    }
}

impl fmt::Display for DirectedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_decimal(&self.value, self.digits as usize))
    }
}

fn grid(digits: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), digits as usize)
}

fn floor_to_grid(r: &Rational, digits: u32) -> Rational {
    let g = grid(digits);
    let scaled = r * Rational::from_integer(g.clone());
    Rational::new(scaled.floor().to_integer(), g)
}

fn ceil_to_grid(r: &Rational, digits: u32) -> Rational {
    let g = grid(digits);
    let scaled = r * Rational::from_integer(g.clone());
    Rational::new(scaled.ceil().to_integer(), g)
}

/// Closed rational interval `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    #[serde(with = "super::ratio")]
    lo: Rational,
    #[serde(with = "super::ratio")]
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Self { lo, hi }
    }

    pub fn point(r: Rational) -> Self {
        Self { lo: r.clone(), hi: r }
    }

    pub fn zero() -> Self {
        Self::point(Rational::zero())
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// The exact value when the enclosure has collapsed to a point.
    pub fn exact(&self) -> Option<&Rational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    pub fn contains(&self, r: &Rational) -> bool {
        &self.lo <= r && r <= &self.hi
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval { lo: &self.lo - &other.hi, hi: &self.hi - &other.lo }
    }

    pub fn add_rational(&self, r: &Rational) -> Interval {
        Interval { lo: &self.lo + r, hi: &self.hi + r }
    }

    pub fn neg(&self) -> Interval {
        Interval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn scale(&self, r: &Rational) -> Interval {
        let a = &self.lo * r;
        let b = &self.hi * r;
        if r.is_negative() {
            Interval { lo: b, hi: a }
        } else {
            Interval { lo: a, hi: b }
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let cands = [&self.lo * &other.lo, &self.lo * &other.hi, &self.hi * &other.lo, &self.hi * &other.hi];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    /// Division by an interval that excludes zero.
    pub fn div(&self, other: &Interval) -> Interval {
        assert!(other.lo.is_positive() || other.hi.is_negative(), "interval division by an enclosure of zero");
        let inv = Interval { lo: other.hi.recip(), hi: other.lo.recip() };
        self.mul(&inv)
    }

    /// Snaps the endpoints outward onto the `10^-digits` grid.
    pub fn outward(&self, digits: u32) -> Interval {
        if self.exact().is_some() {
            return self.clone();
        }
        Interval { lo: floor_to_grid(&self.lo, digits), hi: ceil_to_grid(&self.hi, digits) }
    }

    pub fn round(&self, rounding: Rounding, digits: u32) -> DirectedReal {
        let value = match rounding {
            Rounding::Up => ceil_to_grid(&self.hi, digits),
            Rounding::Down => floor_to_grid(&self.lo, digits),
        };
        DirectedReal { value, rounding, digits }
    }

    pub fn upper(&self, digits: u32) -> DirectedReal {
        self.round(Rounding::Up, digits)
    }

    pub fn lower(&self, digits: u32) -> DirectedReal {
        self.round(Rounding::Down, digits)
    }

    /// `self <= other` holds for every pair of enclosed values.
    pub fn certainly_le(&self, other: &Interval) -> bool {
        self.hi <= other.lo
    }

    /// `self < other` holds for every pair of enclosed values.
    pub fn certainly_lt(&self, other: &Interval) -> bool {
        self.hi < other.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat(2)
    }

    pub fn to_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "{}", to_decimal(&self.midpoint(), 15)),
        }
    }
}

fn tolerance(digits: u32) -> Rational {
    Rational::new(BigInt::one(), grid(digits))
}

/// `atanh(z)` for `0 <= z <= 1/3`, enclosure width at most `2 tol`.
///
/// Terms are truncated onto a fixed grid finer than `tol` so the partial
/// sums stay small integers; each truncation loses less than one grid step.
fn atanh_small(z: &Rational, tol: &Rational) -> Interval {
    debug_assert!(!z.is_negative() && z <= &Rational::new(1.into(), 3.into()));
    if z.is_zero() {
        return Interval::zero();
    }
    let (a, b) = (z.numer(), z.denom());
    let (a2, b2) = (a * a, b * b);
    let gap = &b2 - &a2;
    let scale = tol.denom() * BigInt::from(1000);
    let mut num_pow = a.clone();
    let mut den_pow = b.clone();
    let mut sum = BigInt::zero();
    let mut terms = 0u64;
    let mut k = 1u64;
    loop {
        sum += (&num_pow * &scale) / (&den_pow * BigInt::from(k));
        terms += 1;
        num_pow *= &a2;
        den_pow *= &b2;
        k += 2;
        // remainder <= z^k / (k (1 - z^2))
        let tail_num = &num_pow * &b2;
        let tail_den = &den_pow * BigInt::from(k) * &gap;
        if &tail_num * tol.denom() <= &tail_den * tol.numer() {
            let lo = Rational::new(sum.clone(), scale.clone());
            let hi = Rational::new(sum + BigInt::from(terms), scale) + Rational::new(tail_num, tail_den);
            return Interval::new(lo, hi);
        }
    }
}

fn ln2_enclosure(digits: u32) -> Interval {
    static CACHE: OnceLock<Interval> = OnceLock::new();
    const CACHED_DIGITS: u32 = 160;
    if digits <= CACHED_DIGITS {
        return CACHE
            .get_or_init(|| {
                let tol = tolerance(CACHED_DIGITS + GUARD_DIGITS);
                atanh_small(&Rational::new(1.into(), 3.into()), &tol)
                    .scale(&rat(2))
                    .outward(CACHED_DIGITS + GUARD_DIGITS)
            })
            .clone();
    }
    let tol = tolerance(digits + GUARD_DIGITS);
    atanh_small(&Rational::new(1.into(), 3.into()), &tol).scale(&rat(2)).outward(digits + GUARD_DIGITS)
}

/// Natural logarithm of a positive rational, width below `10^-digits`.
pub fn ln(x: &Rational, digits: u32) -> Interval {
    assert!(x.is_positive(), "logarithm of a nonpositive number");
    if x.is_one() {
        return Interval::zero();
    }
    if x < &Rational::one() {
        return ln(&x.recip(), digits).neg();
    }
    // x = 2^k * y with 1 <= y < 2
    let num_bits = x.numer().bits() as i64;
    let den_bits = x.denom().bits() as i64;
    let mut k = (num_bits - den_bits).max(0);
    let two = rat(2);
    let mut y = x / super::rat_pow(&two, k);
    while y < Rational::one() {
        k -= 1;
        y *= &two;
    }
    while y >= two {
        k += 1;
        y /= &two;
    }
    let work = digits + GUARD_DIGITS;
    let z = (&y - Rational::one()) / (&y + Rational::one());
    let tol = tolerance(work + 1 + decimal_len(k as u64));
    let ln_y = atanh_small(&z, &tol).scale(&two);
    let ln_2 = ln2_enclosure(work + decimal_len(k as u64));
    ln_2.scale(&rat(k)).add(&ln_y).outward(work)
}

fn decimal_len(v: u64) -> u32 {
    v.max(1).ilog10() + 1
}

/// `log_base(x)` for a positive rational `x`.
///
/// For an integer base and an integer argument that are powers of a common
/// integer the result is an exact point.
pub fn log(x: &Rational, base: LogBase, digits: u32) -> Interval {
    match base {
        LogBase::Natural => ln(x, digits),
        LogBase::Int(b) => {
            assert!(b >= 2, "logarithm base must be >= 2");
            if x.is_integer() {
                if let Some(n) = x.to_integer().to_u64() {
                    if n >= 1 {
                        if let Some(r) = exact_log(n, b) {
                            return Interval::point(r);
                        }
                    }
                }
            }
            if let Some((n, d)) = x.numer().to_u64().zip(x.denom().to_u64()) {
                if let (Some(a), Some(c)) = (exact_log(n, b), exact_log(d, b)) {
                    return Interval::point(a - c);
                }
            }
            let work = digits + GUARD_DIGITS;
            ln(x, work).div(&ln(&rat(b), work)).outward(work)
        }
    }
}

/// Converts a natural-log quantity into the requested base.
pub fn rebase(natural: &Interval, base: LogBase, digits: u32) -> Interval {
    match base {
        LogBase::Natural => natural.clone(),
        LogBase::Int(b) => {
            let work = digits + GUARD_DIGITS;
            natural.div(&ln(&rat(b), work)).outward(work)
        }
    }
}

/// `sqrt(x)` for a nonnegative rational; exact when `x` is a rational square.
pub fn sqrt(x: &Rational, digits: u32) -> Interval {
    assert!(!x.is_negative(), "square root of a negative number");
    let (n, d) = (x.numer().magnitude(), x.denom().magnitude());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        return Interval::point(Rational::new(
            BigInt::from_biguint(Sign::Plus, rn),
            BigInt::from_biguint(Sign::Plus, rd),
        ));
    }
    // sqrt(n/d) = sqrt(n d) / d
    let work = digits + GUARD_DIGITS;
    let scale = num_traits::pow(num_bigint::BigUint::from(10u32), work as usize);
    let s = (n * d * &scale * &scale).sqrt();
    let den = BigInt::from_biguint(Sign::Plus, d * &scale);
    let lo = Rational::new(BigInt::from_biguint(Sign::Plus, s.clone()), den.clone());
    let hi = Rational::new(BigInt::from_biguint(Sign::Plus, s + 1u32), den);
    Interval::new(lo, hi)
}

/// Enclosure of Euler's number from the factorial series.
pub fn e_enclosure(digits: u32) -> Interval {
    let tol = tolerance(digits + GUARD_DIGITS);
    let mut term = Rational::one();
    let mut sum = Rational::one();
    let mut k = 1u64;
    loop {
        term /= rat(k);
        sum += &term;
        // sum_{j > k} 1/j! < 1/(k! k)
        let tail = &term / rat(k);
        if tail <= tol {
            return Interval::new(sum.clone(), sum + tail).outward(digits + GUARD_DIGITS);
        }
        k += 1;
    }
}

/// A rational upper bound for `e`, within `10^-digits` of it.
///
/// All requests up to 180 digits are rounded from one shared 200-digit
/// enclosure, which makes the result nonincreasing in `digits`.
pub fn e_upper(digits: u32) -> Rational {
    assert!(digits >= 1, "digits must be >= 1");
    static CACHE: OnceLock<Interval> = OnceLock::new();
    let enclosure =
        if digits <= 180 { CACHE.get_or_init(|| e_enclosure(200)).clone() } else { e_enclosure(digits + 20) };
    ceil_to_grid(enclosure.hi(), digits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat_frac, ratio::parse_rational};

    // 60 digits of reference constants
    const LN2: &str = "0.693147180559945309417232121458176568075500134360255254120680";
    const LN3: &str = "1.098612288668109691395245236922525704647490557822749451734694";
    const E: &str = "2.718281828459045235360287471352662497757247093699959574966967";
    const SQRT2: &str = "1.414213562373095048801688724209698078569671875376948073176679";

    fn near(iv: &Interval, reference: &str, digits: u32) {
        let r = parse_rational(reference).unwrap();
        let slack = tolerance(digits);
        assert!(iv.lo() <= &(&r + &slack) && &(&r - &slack) <= iv.hi(), "{iv:?} vs {reference}");
        assert!(iv.width() <= tolerance(digits));
    }

    #[test]
    fn ln_constants() {
        near(&ln(&rat(2), 50), LN2, 50);
        near(&ln(&rat(3), 50), LN3, 50);
        near(&ln(&rat(9), 50).scale(&rat_frac(1, 2)), LN3, 49);
        near(&ln(&rat_frac(1, 3), 50).neg(), LN3, 50);
        near(&ln(&rat(1024), 50).scale(&rat_frac(1, 10)), LN2, 49);
    }

    #[test]
    fn ln_respects_f64() {
        for (n, d) in [(9i64, 8i64), (81, 80), (5, 1), (1, 7), (1000003, 17), (3, 2)] {
            let iv = ln(&rat_frac(n, d), 30);
            let f = (n as f64 / d as f64).ln();
            assert!((iv.to_f64() - f).abs() < 1e-12, "{n}/{d}");
        }
    }

    #[test]
    fn log_base_exact_and_inexact() {
        assert_eq!(log(&rat(3), LogBase::Int(9), 50).exact(), Some(&rat_frac(1, 2)));
        assert_eq!(log(&rat_frac(1, 8), LogBase::Int(2), 50).exact(), Some(&rat(-3)));
        let l = log(&rat(2), LogBase::Int(9), 50);
        assert!(l.exact().is_none());
        assert!((l.to_f64() - 2f64.ln() / 9f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn sqrt_enclosures() {
        assert_eq!(sqrt(&rat(4096), 50).exact(), Some(&rat(64)));
        assert_eq!(sqrt(&rat_frac(9, 4), 50).exact(), Some(&rat_frac(3, 2)));
        near(&sqrt(&rat(2), 50), SQRT2, 50);
    }

    #[test]
    fn e_values() {
        near(&e_enclosure(50), E, 50);
        assert_eq!(e_upper(5), rat_frac(271829, 100000));
        assert_eq!(e_upper(1), rat_frac(28, 10));
        for d in 1..=10 {
            assert!(e_upper(d) >= e_upper(d + 5));
        }
        let e = parse_rational(E).unwrap();
        for d in [1u32, 3, 10, 50] {
            let u = e_upper(d);
            assert!(u >= e && &u - &e <= tolerance(d));
        }
    }

    #[test]
    fn directed_rounding_brackets() {
        let iv = ln(&rat(7), 50);
        let up = iv.upper(20);
        let down = iv.lower(20);
        assert!(down.value <= *iv.lo() && *iv.hi() <= up.value);
        assert_eq!(up.to_string().len(), "1.".len() + 20);
    }

    #[test]
    fn interval_arithmetic() {
        let a = Interval::new(rat(1), rat(2));
        let b = Interval::new(rat(-3), rat(4));
        assert_eq!(a.mul(&b), Interval::new(rat(-6), rat(8)));
        assert_eq!(a.sub(&b), Interval::new(rat(-3), rat(5)));
        assert_eq!(a.scale(&rat(-1)), Interval::new(rat(-2), rat(-1)));
        assert_eq!(a.div(&a), Interval::new(rat_frac(1, 2), rat(2)));
    }
}
