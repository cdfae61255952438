//! Ihara-limit lower bounds from the classical towers and the torsion correction.
//!
//! ```bash
//! cargo run --example ihara_limits
//! ```

use arithss::bounds::{bassa_j2_lower, gs_minus_b, ihara_gs};
use arithss::exactmath::to_decimal;

fn main() {
    println!("square fields, q = l^2: A(q) >= l - 1");
    for l in [2u64, 3, 4, 5, 7, 8, 9] {
        let q = l * l;
        let a = ihara_gs(q).unwrap();
        let line = match gs_minus_b(q, 2) {
            Ok(slack) => format!("  A - J_2 >= {}", to_decimal(slack.lo(), 6)),
            Err(e) => format!("  ({e})"),
        };
        println!("q = {q:>3}: {a}{line}");
    }

    println!("\nq = p^n, n odd: Bassa-type bound");
    for (p, n) in [(2u64, 3u64), (3, 3), (5, 3), (2, 5), (3, 5)] {
        match bassa_j2_lower(p, n) {
            Ok(b) => println!(
                "q = {:>4}: A >= {}  (~{}), a = {}, shift = {}",
                b.q,
                b.ihara,
                to_decimal(&b.ihara, 6),
                to_decimal(b.a.lo(), 6),
                to_decimal(b.shift.lo(), 6)
            ),
            Err(e) => println!("p = {p}, n = {n}: {e}"),
        }
    }
}
