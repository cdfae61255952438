//! Run both explicit feasibility checks on a curve, for a grid of parameters.
//!
//! ```bash
//! cargo run --example feasibility_check
//! cargo run --example feasibility_check -- path/to/curve.json
//! ```

use arithss::feasibility::{
    check_many, check_thm41, check_thm42, CurveData, FeasibilityError, FeasibilityReport, SharingParams,
};

const DEFAULT_CURVE: &str = r#"{"q": 4096, "g": 5, "B": {"1": 4737, "2": 0, "3": 0, "4": 0}}"#;

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).unwrap_or_else(|e| {
            eprintln!("cannot read {path}: {e}");
            std::process::exit(2);
        }),
        None => DEFAULT_CURVE.to_string(),
    };
    let curve = CurveData::from_json(&text).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(2);
    });

    let cells: Vec<SharingParams> = [2, 3, 4, 8, 16, 32, 48, 64]
        .into_iter()
        .flat_map(|d| [10, 18].map(|n| SharingParams::new(d, 1, 1, n)))
        .collect();
    let first = check_many(&cells, 0, |p| check_thm41(&curve, p, Default::default()));
    let second = check_many(&cells, 0, |p| check_thm42(&curve, p));

    println!("{:>3} {:>3}  {:<12} {:<12}", "d", "n", "first", "second");
    for ((p, a), b) in cells.iter().zip(first).zip(second) {
        let verdict = |r: Result<FeasibilityReport, FeasibilityError>| match r {
            Ok(report) => format!("{:?}", report.verdict),
            Err(e) => format!("error: {e}"),
        };
        println!("{:>3} {:>3}  {:<12} {:<12}", p.d, p.n, verdict(a), verdict(b));
    }
}
