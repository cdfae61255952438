//! Count effective divisors of each degree from place counts, with the
//! partition and binomial estimates that bound them.
//!
//! ```bash
//! cargo run --example effective_divisors
//! ```

use std::collections::BTreeMap;

use arithss::exactmath::{
    binomial, count_effective_divisors, e_upper, partition_count_at_most, rat, to_decimal, DEFAULT_DIGITS,
};
use num_bigint::BigInt;

fn main() {
    // rational function field over GF(3): monic irreducibles per degree, plus the place at infinity
    let places: BTreeMap<u32, u64> = [(1, 4), (2, 3), (3, 8), (4, 18), (5, 48), (6, 116)].into();
    for n in 0..=6 {
        println!("A_{n} = {}", count_effective_divisors(&places, n));
    }

    let curve: BTreeMap<u32, u64> = [(1, 32), (2, 4), (3, 0), (4, 10)].into();
    println!("\nq = 9, g = 5 curve");
    let b = curve[&1];
    let e = e_upper(DEFAULT_DIGITS);
    for n in 1..=6u64 {
        let count = count_effective_divisors(&curve, n);
        let binom = binomial(b + n - 1, n);
        let estimate = num_traits::pow(&e * rat(b + n - 1) / rat(n), n as usize);
        let parts = partition_count_at_most(n, curve.len() as u64);
        println!(
            "n = {n}  A_n = {count:<12} C(B1+n-1, n) = {binom:<10} <= {:<16} partitions = {parts}",
            to_decimal(&estimate, 1)
        );
        assert!(rat(BigInt::from(binom)) <= estimate);
    }
}
