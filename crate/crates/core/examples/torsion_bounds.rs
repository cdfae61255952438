//! Upper bounds on the asymptotic r-torsion of class groups, per case.
//!
//! ```bash
//! cargo run --example torsion_bounds -- 9
//! ```

use arithss::bounds::{matching_cases, torsion_limit_upper};
use arithss::exactmath::to_decimal;

fn main() {
    let q: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(9);
    println!("q = {q}");
    for r in 2..=20 {
        let cases = match matching_cases(q, r) {
            Ok(cases) => cases,
            Err(e) => {
                eprintln!("{e}");
                std::process::exit(2);
            }
        };
        let bound = torsion_limit_upper(q, r).expect("cases already resolved");
        let shown = match bound.exact() {
            Some(exact) => format!("{exact} (exact)"),
            None => format!("<= {}", to_decimal(bound.bound.hi(), 12)),
        };
        println!("r = {r:>2}  case {:<3} {shown}  matched {cases:?}", bound.case.to_string());
    }
}
