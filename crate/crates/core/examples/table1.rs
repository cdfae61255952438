//! Recompute the asymptotic share-count table and diff it against the printed values.
//!
//! ```bash
//! cargo run --example table1
//! ```

use arithss::feasibility::{generate_table1, CellStatus};

fn main() {
    let table = generate_table1();
    println!("t = {}, k = {}, mu = {}", table.t, table.k, table.mu);
    println!("{:>3} {:>3} {:>6} {:>5} {:>4} {:>6} {:>8}  status", "d", "i", "genus", "s", "r2", "n", "printed");
    for row in &table.rows {
        let status = match row.status {
            CellStatus::Match => "ok".to_string(),
            CellStatus::Mismatch(delta) => format!("printed {delta:+}"),
        };
        println!(
            "{:>3} {:>3} {:>6} {:>5} {:>4} {:>6} {:>8}  {status}",
            row.d, row.i, row.genus, row.s, row.r2, row.n, row.printed
        );
    }
    for (bound, printed) in &table.torsion {
        println!(
            "d = {}: torsion case {}, bound ~ {:.6}, printed j_d = {printed}",
            bound.r,
            bound.case,
            bound.bound.to_f64()
        );
    }
    println!("{} of {} cells differ from the printed table", table.mismatches().len(), table.rows.len());
}
