//! Exponent vectors, effective-divisor counts and restricted partitions.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{binomial, Natural};

/// A solution `b` of `sum_{i in degrees} i * b_i = n` with `b_i >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExponentVector {
    pub counts: BTreeMap<u32, u64>,
}

impl ExponentVector {
    /// Total degree `sum i * b_i`.
    pub fn degree(&self) -> u64 {
        self.counts.iter().map(|(&i, &b)| i as u64 * b).sum()
    }

    /// Counts in increasing order of degree.
    pub fn as_tuple(&self) -> Vec<u64> {
        self.counts.values().copied().collect()
    }
}

fn normalized_degrees(degrees: &[u32]) -> Vec<u32> {
    let mut ds: Vec<u32> = degrees.to_vec();
    ds.sort_unstable();
    ds.dedup();
    assert!(ds.first().is_none_or(|&d| d >= 1), "degrees must be >= 1");
    ds
}

/// All `b` with `sum i * b_i = n` over the given degree set.
///
/// Vectors are indexed by increasing degree and emitted in decreasing
/// lexicographic order, so for degrees `{1, 2}` and `n = 4` the result is
/// `(4,0), (2,1), (0,2)`.
pub fn enumerate_exponent_vectors(n: u64, degrees: &[u32]) -> Vec<ExponentVector> {
    let ds = normalized_degrees(degrees);
    let mut out = Vec::new();
    let mut current = vec![0u64; ds.len()];
    fn walk(ds: &[u32], pos: usize, rest: u64, current: &mut Vec<u64>, out: &mut Vec<ExponentVector>) {
        if pos == ds.len() {
            if rest == 0 {
                let counts = ds.iter().copied().zip(current.iter().copied()).collect();
                out.push(ExponentVector { counts });
            }
            return;
        }
        let d = ds[pos] as u64;
        for b in (0..=rest / d).rev() {
            current[pos] = b;
            walk(ds, pos + 1, rest - b * d, current, out);
        }
        current[pos] = 0;
    }
    if ds.is_empty() {
        if n == 0 {
            out.push(ExponentVector { counts: BTreeMap::new() });
        }
        return out;
    }
    walk(&ds, 0, n, &mut current, &mut out);
    out
}

/// Number of effective divisors of degree `n` given place counts `B_i`:
/// `A_n = sum_{b in U_n} prod_{i in Delta} C(B_i + b_i - 1, b_i)` with
/// `Delta = {i : B_i >= 1}`.
pub fn count_effective_divisors(places: &BTreeMap<u32, u64>, n: u64) -> Natural {
    let support: Vec<(u64, u64)> = places.iter().filter(|(_, &b)| b >= 1).map(|(&i, &b)| (i as u64, b)).collect();

    // Same traversal of U_n as enumerate_exponent_vectors, without
    // materializing the vectors.
    fn walk(support: &[(u64, u64)], rest: u64) -> Natural {
        match support.split_first() {
            None => {
                if rest == 0 {
                    Natural::one()
                } else {
                    Natural::zero()
                }
            }
            Some((&(deg, count), tail)) => {
                let mut total = Natural::zero();
                for b in 0..=rest / deg {
                    let tail_sum = walk(tail, rest - b * deg);
                    if !tail_sum.is_zero() {
                        total += binomial(count + b - 1, b) * tail_sum;
                    }
                }
                total
            }
        }
    }
    walk(&support, n)
}

/// Partitions of `n` into at most `max_parts` parts.
pub fn partition_count_at_most(n: u64, max_parts: u64) -> Natural {
    assert!(max_parts >= 1, "max_parts must be >= 1");
    // By conjugation: partitions of n into parts of size <= max_parts.
    let n = n as usize;
    let mut dp = vec![Natural::zero(); n + 1];
    dp[0] = Natural::one();
    for part in 1..=(max_parts as usize).min(n.max(1)) {
        for m in part..=n {
            let prev = dp[m - part].clone();
            dp[m] += prev;
        }
    }
    dp[n].clone()
}
