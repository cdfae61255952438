//! Walk a tower level by level, then test an asymptotic parameter choice.
//!
//! ```bash
//! cargo run --example tower_asymptotics
//! ```

use arithss::bounds::{class_number_limit, delta_lower, mu0};
use arithss::exactmath::{rat_frac, to_decimal, LogBase, DEFAULT_DIGITS};
use arithss::feasibility::{asymptotic_check, AsymptoticOptions};
use arithss::towers::{beta_empirical, example2_profile};

fn main() {
    let profile = example2_profile();
    let inputs = profile.asymptotic_inputs();
    println!("{} over GF({})", profile.name, profile.q);
    for level in 1..=6 {
        let genus = profile.genus_at(level).unwrap();
        let b1 = profile.b_lower(1, level).unwrap();
        let beta = beta_empirical(&profile, 1, level).map(|b| b.to_string()).unwrap_or_default();
        println!("level {level}: genus {genus:>6}  B1 >= {b1:>6}  B1/g = {beta}");
    }

    let floor = mu0(&inputs);
    let h = class_number_limit(&inputs, LogBase::Natural, DEFAULT_DIGITS);
    println!("mu_0 = {floor}");
    println!("class number growth >= {}", to_decimal(h.lo(), 12));
    for mu in [rat_frac(1, 5), rat_frac(1, 2), rat_frac(1, 1)] {
        let delta = delta_lower(&mu, &inputs, LogBase::Natural, DEFAULT_DIGITS);
        println!("delta({mu}) >= {}", to_decimal(delta.lo(), 12));
    }

    for (n, base) in [(9000, LogBase::Natural), (9300, LogBase::Natural), (9000, LogBase::Int(profile.q))] {
        let options = AsymptoticOptions { base, ..Default::default() };
        match asymptotic_check(&profile, 2, &rat_frac(1, 2), 10, n, 2, options) {
            Ok(report) => println!("n = {n}, log base {base:?}: {:?}", report.verdict),
            Err(e) => println!("n = {n}: {e}"),
        }
    }
}
