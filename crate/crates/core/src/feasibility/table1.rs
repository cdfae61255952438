//! Share counts `n_i` along the first four levels of the example tower over
//! `GF(9)`, checked against the values as printed.

use serde::{Deserialize, Serialize};

use super::solve_degree_s;
use crate::bounds::{torsion_limit_upper, TorsionBoundResult};
use crate::exactmath::{rat_frac, Rational};
use crate::towers::example2_profile;

pub const TABLE1_T: u64 = 50;
pub const TABLE1_K: u64 = 2;

/// `n_i` as printed, rows `d = 2..=5`, columns `i = 1..=4`.
pub const PRINTED_TABLE1: [[u64; 4]; 4] =
    [[166, 201, 309, 525], [225, 280, 450, 791], [288, 363, 595, 1060], [343, 438, 732, 1321]];

/// The printed `j_d` column, in tenths.
const PRINTED_JD_TENTHS: [i64; 4] = [8, 8, 8, 2];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CellStatus {
    Match,
    /// Printed minus computed.
    Mismatch(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub d: u64,
    pub i: u32,
    pub genus: u64,
    pub s: i64,
    pub r2: i64,
    pub n: i64,
    pub printed: u64,
    pub status: CellStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1 {
    pub t: u64,
    pub k: u64,
    #[serde(with = "crate::exactmath::ratio")]
    pub mu: Rational,
    pub rows: Vec<Table1Row>,
    /// Torsion bound for each `d` next to the printed `j_d` entry.
    pub torsion: Vec<(TorsionBoundResult, String)>,
}

impl Table1 {
    pub fn mismatches(&self) -> Vec<&Table1Row> {
        self.rows.iter().filter(|r| r.status != CellStatus::Match).collect()
    }

    pub fn cell(&self, d: u64, i: u32) -> Option<&Table1Row> {
        self.rows.iter().find(|r| r.d == d && r.i == i)
    }
}

pub fn generate_table1() -> Table1 {
    let profile = example2_profile();
    let mu = rat_frac(1, 2);
    let mut rows = Vec::new();
    let mut torsion = Vec::new();
    for (row, d) in (2..=5u64).enumerate() {
        for i in 1..=4u32 {
            let genus =
                profile.genus_at(i).expect("example tower genus is closed-form").try_into().expect("small genus");
            let s = solve_degree_s(genus, TABLE1_T, TABLE1_K);
            let r2 = (genus / 2) as i64;
            let n = d as i64 * s + TABLE1_T as i64 - r2;
            let printed = PRINTED_TABLE1[row][i as usize - 1];
            let status = match printed as i64 - n {
                0 => CellStatus::Match,
                diff => CellStatus::Mismatch(diff),
            };
            rows.push(Table1Row { d, i, genus, s, r2, n, printed, status });
        }
        let bound = torsion_limit_upper(profile.q, d).expect("q = 9 is a prime power");
        torsion.push((bound, rat_frac(PRINTED_JD_TENTHS[row], 10).to_string()));
    }
    Table1 { t: TABLE1_T, k: TABLE1_K, mu, rows, torsion }
}
