//! Exact scalars and the combinatorics behind effective-divisor counts.
//!
//! Everything that feeds a feasibility verdict is evaluated with
//! arbitrary-precision integers and rationals. Irrational quantities
//! (square roots, `e`, logarithms) live in [`directed`] as rational
//! enclosures that can be rounded in a chosen direction.

pub mod directed;
pub mod partitions;
pub mod ratio;

use num_bigint::BigUint;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub use directed::{e_upper, DirectedReal, Interval, LogBase, Rounding, DEFAULT_DIGITS};
pub use partitions::{count_effective_divisors, enumerate_exponent_vectors, partition_count_at_most, ExponentVector};

/// Arbitrary-precision nonnegative integer.
pub type Natural = BigUint;
/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;
/// Gcd-reduced rational with positive denominator.
pub type Rational = BigRational;

/// Exact binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Natural {
    if k > n {
        return Natural::zero();
    }
    let k = k.min(n - k);
    let mut acc = Natural::one();
    for i in 0..k {
        // acc * (n - i) is always divisible by (i + 1) at this point
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `floor(sqrt(n))`.
pub fn isqrt_floor(n: &Natural) -> Natural {
    n.sqrt()
}

/// `ceil(sqrt(n))`.
pub fn isqrt_ceil(n: &Natural) -> Natural {
    let r = n.sqrt();
    if &(&r * &r) == n {
        r
    } else {
        r + 1u32
    }
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Splits `q = p^e` with `p` prime, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = smallest_prime_factor(q);
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn smallest_prime_factor(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Exact integer square root if `n` is a perfect square.
pub fn exact_sqrt(n: u64) -> Option<u64> {
    let r = isqrt_floor(&Natural::from(n)).to_u64()?;
    (r * r == n).then_some(r)
}

/// Writes `n >= 2` as `base^exp` with `base` not itself a perfect power.
fn primitive_root_power(n: u64) -> (u64, u32) {
    let mut best = (n, 1);
    for exp in 2..64u32 {
        let root = integer_root(n, exp);
        if root < 2 {
            break;
        }
        if root.checked_pow(exp) == Some(n) {
            best = (root, exp);
        }
    }
    best
}

fn integer_root(n: u64, exp: u32) -> u64 {
    let mut r = (n as f64).powf(1.0 / exp as f64).round() as u64;
    while r > 0 && r.checked_pow(exp).is_none_or(|v| v > n) {
        r -= 1;
    }
    while (r + 1).checked_pow(exp).is_some_and(|v| v <= n) {
        r += 1;
    }
    r
}

/// `log_base(arg)` when it is rational, i.e. when both are powers of a
/// common integer.
pub fn exact_log(arg: u64, base: u64) -> Option<Rational> {
    assert!(base >= 2 && arg >= 1);
    if arg == 1 {
        return Some(Rational::zero());
    }
    let (b, e) = primitive_root_power(base);
    let mut rest = arg;
    let mut c = 0i64;
    while rest.is_multiple_of(b) {
        rest /= b;
        c += 1;
    }
    (rest == 1).then(|| Rational::new(c.into(), (e as i64).into()))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Rational from a natural.
pub fn rat(n: impl Into<Integer>) -> Rational {
    Rational::from_integer(n.into())
}

pub fn rat_frac(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// `base^exp` as an exact rational, negative exponents allowed.
pub fn rat_pow(base: &Rational, exp: i64) -> Rational {
    let b = if exp >= 0 { base.clone() } else { base.recip() };
    let e = exp.unsigned_abs() as usize;
    // powers of coprime parts stay coprime, so no reduction is needed
    Rational::new_raw(num_traits::pow(b.numer().clone(), e), num_traits::pow(b.denom().clone(), e))
}

/// Decimal rendering rounded half-up at `places` fractional digits.
pub fn to_decimal(r: &Rational, places: usize) -> String {
    let neg = r < &Rational::zero();
    let abs = if neg { -r.clone() } else { r.clone() };
    let scale = num_traits::pow(Integer::from(10), places);
    let scaled = abs * Rational::from_integer(scale.clone());
    let rounded = (scaled + rat_frac(1, 2)).floor().to_integer();
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let mut s = String::new();
    if neg && !rounded.is_zero() {
        s.push('-');
    }
    s.push_str(&int_part.to_string());
    if places > 0 {
        let frac = frac_part.to_string();
        s.push('.');
        s.push_str(&"0".repeat(places - frac.len()));
        s.push_str(&frac);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), Natural::from(6u32));
        assert_eq!(binomial(5, 0), Natural::from(1u32));
        assert_eq!(binomial(36, 4), Natural::from(36u32 * 35 * 34 * 33 / 24));
        assert_eq!(binomial(3, 5), Natural::zero());
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![Natural::one()];
        for n in 1..=60u64 {
            let mut next = vec![Natural::one(); n as usize + 1];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n, k as u64), v);
            }
        }
    }

    #[test]
    fn isqrt_examples() {
        let n = |v: u64| Natural::from(v);
        assert_eq!(isqrt_floor(&n(9)), n(3));
        assert_eq!(isqrt_floor(&n(10)), n(3));
        assert_eq!(isqrt_ceil(&n(10)), n(4));
        assert_eq!(isqrt_ceil(&n(4096)), n(64));
        assert_eq!(isqrt_ceil(&n(0)), n(0));
    }

    #[test]
    fn isqrt_brackets_large_values() {
        let big: Natural = num_traits::pow(Natural::from(10u32), 80) + 12345u32;
        let f = isqrt_floor(&big);
        assert!(&f * &f <= big);
        assert!((&f + 1u32) * (&f + 1u32) > big);
        assert_eq!(isqrt_ceil(&big), f + 1u32);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(4096), Some((2, 12)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert!(!is_prime(4));
        assert!(is_prime(2_147_483_647));
    }

    #[test]
    fn exact_logs() {
        assert_eq!(exact_log(3, 9), Some(rat_frac(1, 2)));
        assert_eq!(exact_log(2, 8), Some(rat_frac(1, 3)));
        assert_eq!(exact_log(8, 4), Some(rat_frac(3, 2)));
        assert_eq!(exact_log(1, 7), Some(rat(0)));
        assert_eq!(exact_log(2, 9), None);
        assert_eq!(exact_log(5, 9), None);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal(&rat_frac(34992, 5), 1), "6998.4");
        assert_eq!(to_decimal(&rat_frac(1, 8), 4), "0.1250");
        assert_eq!(to_decimal(&rat_frac(-2, 3), 3), "-0.667");
        assert_eq!(to_decimal(&rat(7), 0), "7");
    }
}
