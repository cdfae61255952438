use std::collections::BTreeMap;

use arithss::exactmath::{
    binomial, count_effective_divisors, e_upper, partition_count_at_most, rat, rat_pow, Natural, DEFAULT_DIGITS,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn mobius(mut n: u64) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Places of the rational function field over `GF(q)`: `q + 1` of degree 1,
/// and the monic irreducibles of each higher degree.
fn rational_function_field(q: u64, max_degree: u32) -> BTreeMap<u32, u64> {
    (1..=max_degree)
        .map(|i| {
            let i64_ = i as i64;
            let sum: i64 = (1..=i64_)
                .filter(|d| i64_ % d == 0)
                .map(|d| mobius(d as u64) * (q as i64).pow((i64_ / d) as u32))
                .sum();
            let irreducibles = (sum / i64_) as u64;
            (i, if i == 1 { irreducibles + 1 } else { irreducibles })
        })
        .collect()
}

/// `A_n` from the recurrence `n A_n = sum_j S_j A_{n-j}`, `S_j = sum_{i | j} i B_i`.
fn a_n_by_recurrence(places: &BTreeMap<u32, u64>, n: u64) -> Natural {
    let s = |j: u64| -> BigInt {
        places.iter().filter(|(&i, _)| j.is_multiple_of(i as u64)).map(|(&i, &b)| BigInt::from(i as u64 * b)).sum()
    };
    let mut a: Vec<BigInt> = vec![BigInt::from(1)];
    for m in 1..=n {
        let total: BigInt = (1..=m).map(|j| s(j) * &a[(m - j) as usize]).sum();
        a.push(total / BigInt::from(m));
    }
    a[n as usize].to_biguint().unwrap()
}

#[test]
fn effective_divisors_of_rational_function_fields() {
    for q in [2u64, 3] {
        let places = rational_function_field(q, 12);
        for n in 0..=12u64 {
            let expected = (num_traits::pow(Natural::from(q), n as usize + 1) - 1u32) / (q - 1);
            assert_eq!(count_effective_divisors(&places, n), expected, "q = {q}, n = {n}");
        }
    }
}

#[test]
fn partition_bound() {
    for n in 0..=60u64 {
        for delta in 1..=10u64 {
            let bound = num_traits::pow(Natural::from(n + 1), delta as usize - 1);
            assert!(partition_count_at_most(n, delta) <= bound, "p({n}, {delta})");
        }
    }
}

#[test]
fn binomial_bound() {
    let e = e_upper(DEFAULT_DIGITS);
    for b in 2..=20u64 {
        for n in 1..=30u64 {
            let lhs = rat(BigInt::from(binomial(b + n - 1, n)));
            let rhs = rat_pow(&(&e * rat(b + n - 1) / rat(n)), n as i64);
            assert!(lhs <= rhs, "B = {b}, n = {n}");
        }
    }
}

proptest! {
    #[test]
    fn effective_divisors_match_recurrence(
        places in prop::collection::btree_map(1u32..6, 0u64..12, 0..5),
        n in 0u64..14,
    ) {
        prop_assert_eq!(count_effective_divisors(&places, n), a_n_by_recurrence(&places, n));
    }

    #[test]
    fn partitions_are_monotone_in_parts(n in 0u64..40, delta in 1u64..8) {
        prop_assert!(partition_count_at_most(n, delta) <= partition_count_at_most(n, delta + 1));
    }
}
