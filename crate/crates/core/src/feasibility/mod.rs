//! Decision procedures for the existence of `(n, t, d, n - t)`-arithmetic
//! secret sharing schemes with uniformity.
//!
//! Every check produces a [`FeasibilityReport`] carrying the verdict and the
//! quantities it was decided from. All comparisons are exact; where an
//! irrational term enters (`sqrt(q)`, `e`, logarithms) it is replaced by a
//! rational bound rounded against feasibility, so `Feasible` is always a
//! sound verdict while `Infeasible` may occasionally be conservative.

mod asymptotic;
mod table1;
mod theorems;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{hasse_weil_b1_upper, BoundsError};
use crate::exactmath::{prime_power, Natural, Rational};
use crate::towers::TowerError;

pub use asymptotic::{asymptotic_check, AsymptoticOptions};
pub use table1::{generate_table1, CellStatus, Table1, Table1Row, PRINTED_TABLE1};
pub use theorems::{check_thm41, check_thm42, NumeratorMode, Thm41Options};

#[derive(Debug, Error)]
pub enum FeasibilityError {
    #[error("invalid curve data: {0}")]
    InvalidCurve(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("mu = {mu} is below mu_0 = {mu0}")]
    MuBelowMu0 { mu: Box<Rational>, mu0: Box<Rational> },
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Tower(#[from] TowerError),
    #[error("malformed curve JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// Numeric fingerprint of a function field `F/GF(q)`: its genus and the
/// number of places of each degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveData {
    pub q: u64,
    pub g: u64,
    #[serde(rename = "B")]
    pub places: BTreeMap<u32, u64>,
}

impl CurveData {
    pub fn new(q: u64, g: u64, places: BTreeMap<u32, u64>) -> Result<Self, FeasibilityError> {
        let curve = Self { q, g, places };
        curve.validate()?;
        Ok(curve)
    }

    pub fn from_json(text: &str) -> Result<Self, FeasibilityError> {
        let curve: CurveData = serde_json::from_str(text)?;
        curve.validate()?;
        Ok(curve)
    }

    pub fn validate(&self) -> Result<(), FeasibilityError> {
        if prime_power(self.q).is_none() {
            return Err(BoundsError::InvalidPrimePower(self.q).into());
        }
        if self.g < 1 {
            return Err(FeasibilityError::InvalidCurve("genus must be at least 1".into()));
        }
        if self.places.contains_key(&0) {
            return Err(FeasibilityError::InvalidCurve("place degrees start at 1".into()));
        }
        let cap = hasse_weil_b1_upper(self.q, self.g);
        if Natural::from(self.b(1)) > cap {
            return Err(FeasibilityError::InvalidCurve(format!(
                "B_1 = {} exceeds the Hasse-Weil bound {cap}",
                self.b(1)
            )));
        }
        Ok(())
    }

    /// `B_i`, zero when absent.
    pub fn b(&self, degree: u32) -> u64 {
        self.places.get(&degree).copied().unwrap_or(0)
    }

    /// Degrees in `1..g` without an explicit entry.
    pub fn missing_degrees(&self) -> Vec<u32> {
        (1..self.g as u32).filter(|i| !self.places.contains_key(i)).collect()
    }

    /// `Delta = {i : 1 <= i <= g - 1, B_i >= 1}`.
    pub fn delta_set(&self) -> Vec<u32> {
        (1..self.g as u32).filter(|&i| self.b(i) >= 1).collect()
    }

    /// Degree `m` in `1..g` with `B_m` maximal, smallest on ties.
    pub fn max_place_degree(&self) -> Option<u32> {
        (1..self.g as u32).fold(None, |best, i| match best {
            Some(b) if self.b(b) >= self.b(i) => Some(b),
            _ if self.b(i) >= 1 => Some(i),
            _ => best,
        })
    }
}

/// Target scheme parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SharingParams {
    pub d: u64,
    pub t: u64,
    pub k: u64,
    pub n: u64,
}

impl SharingParams {
    pub fn new(d: u64, t: u64, k: u64, n: u64) -> Self {
        Self { d, t, k, n }
    }

    pub fn validate(&self) -> Result<(), FeasibilityError> {
        let bad = |m: String| Err(FeasibilityError::InvalidParameters(m));
        if self.d < 2 {
            return bad(format!("d = {} must be at least 2", self.d));
        }
        if self.n < 2 {
            return bad(format!("n = {} must exceed 1", self.n));
        }
        if self.t < 1 || self.t >= self.n {
            return bad(format!("t = {} must satisfy 1 <= t < n = {}", self.t, self.n));
        }
        if self.k < 1 {
            return bad("k must be at least 1".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    /// Sufficiency via the binomial-maximum bound on `A_{r_2}`.
    T41,
    /// Sufficiency via the partition and binomial bounds on `A_{r_2}`.
    T42,
    /// Riemann-Roch system solvability.
    RR,
    /// Conditions on an asymptotically exact family.
    Asymptotic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Feasible,
    Infeasible,
    Inapplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityReport {
    pub theorem: Theorem,
    pub verdict: Verdict,
    /// The hypothesis that failed, for `Inapplicable`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violated: Option<String>,
    pub s: Option<i64>,
    pub r1: Option<i64>,
    pub r2: Option<i64>,
    /// Class-number lower bound used, if any.
    #[serde(with = "crate::exactmath::ratio::option")]
    pub h: Option<Rational>,
    /// The two compared quantities.
    #[serde(with = "crate::exactmath::ratio::option")]
    pub lhs: Option<Rational>,
    #[serde(with = "crate::exactmath::ratio::option")]
    pub rhs: Option<Rational>,
    pub delta_set: Vec<u32>,
    pub m_star: Option<u32>,
    /// Further named intermediates, rationals as `num/den`.
    #[serde(default)]
    pub details: BTreeMap<String, String>,
    #[serde(default)]
    pub notes: Vec<String>,
    #[serde(default)]
    pub warnings: Vec<String>,
}

impl FeasibilityReport {
    pub(crate) fn empty(theorem: Theorem) -> Self {
        Self {
            theorem,
            verdict: Verdict::Inapplicable,
            violated: None,
            s: None,
            r1: None,
            r2: None,
            h: None,
            lhs: None,
            rhs: None,
            delta_set: Vec::new(),
            m_star: None,
            details: BTreeMap::new(),
            notes: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub(crate) fn inapplicable(mut self, condition: impl Into<String>) -> Self {
        self.verdict = Verdict::Inapplicable;
        self.violated = Some(condition.into());
        self
    }

    pub(crate) fn detail(&mut self, key: &str, value: impl ToString) {
        self.details.insert(key.to_string(), value.to_string());
    }

    pub fn is_feasible(&self) -> bool {
        self.verdict == Verdict::Feasible
    }
}

/// The `s` with `r_1 = 2g - s + t + k - 2 = 1`.
pub fn solve_degree_s(g: u64, t: u64, k: u64) -> i64 {
    2 * g as i64 + t as i64 + k as i64 - 3
}

/// `r_2 = d s - n + t`.
pub fn r2_of(d: u64, s: i64, n: u64, t: u64) -> i64 {
    d as i64 * s - n as i64 + t as i64
}

/// One equation `l(m X + Y) = 0` with `deg Y = d`, plus the upper bounds on
/// `A_{r}` and `|J_F[m]|` used for it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RRTerm {
    pub m: i64,
    pub d: i64,
    #[serde(with = "crate::exactmath::ratio::natural")]
    pub a_upper: Natural,
    #[serde(with = "crate::exactmath::ratio::natural")]
    pub torsion_upper: Natural,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RRSystem {
    pub terms: Vec<RRTerm>,
    #[serde(with = "crate::exactmath::ratio")]
    pub h_lower: Rational,
    pub s: i64,
}

impl RRSystem {
    pub fn new(terms: Vec<RRTerm>, h_lower: Rational, s: i64) -> Result<Self, FeasibilityError> {
        if terms.iter().any(|t| t.m == 0) {
            return Err(FeasibilityError::InvalidParameters("m_i must be nonzero".into()));
        }
        Ok(Self { terms, h_lower, s })
    }

    /// `r_i = m_i s + d_i`.
    pub fn degrees(&self) -> Vec<i64> {
        self.terms.iter().map(|t| t.m * self.s + t.d).collect()
    }
}

/// Solvable in `Cl_s(F)` when `h > sum A_{r_i} |J_F[m_i]|`.
pub fn rr_solvable(sys: &RRSystem) -> FeasibilityReport {
    let mut report = FeasibilityReport::empty(Theorem::RR);
    let degrees = sys.degrees();
    report.s = Some(sys.s);
    report.r1 = degrees.first().copied();
    report.r2 = degrees.get(1).copied();
    let total: Natural = sys.terms.iter().map(|t| &t.a_upper * &t.torsion_upper).sum();
    let lhs = Rational::from_integer(total.into());
    report.verdict = if sys.h_lower > lhs { Verdict::Feasible } else { Verdict::Infeasible };
    report.h = Some(sys.h_lower.clone());
    report.rhs = Some(sys.h_lower.clone());
    report.lhs = Some(lhs);
    report.notes.push("feasible iff h_lower > sum A_r_i * |J[m_i]|".into());
    report
}

/// Evaluates independent parameter cells on a thread pool with `jobs`
/// workers (0 picks the default).
pub fn check_many<F>(cells: &[SharingParams], jobs: usize, check: F) -> Vec<Result<FeasibilityReport, FeasibilityError>>
where
    F: Fn(SharingParams) -> Result<FeasibilityReport, FeasibilityError> + Sync,
{
    let run = || cells.par_iter().map(|&c| check(c)).collect();
    if jobs == 0 {
        return run();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(run),
        Err(_) => cells.iter().map(|&c| check(c)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rat_frac};

    fn term(a: u64, j: u64) -> RRTerm {
        RRTerm { m: 1, d: 0, a_upper: Natural::from(a), torsion_upper: Natural::from(j) }
    }

    #[test]
    fn solve_s_and_r2() {
        assert_eq!(solve_degree_s(5, 50, 2), 59);
        assert_eq!(solve_degree_s(1, 1, 1), 1);
        assert_eq!(solve_degree_s(108, 50, 2), 265);
        assert_eq!(r2_of(2, 59, 166, 50), 2);
        assert_eq!(r2_of(3, 79, 280, 50), 7);
        assert_eq!(r2_of(2, 0, 0, 0), 0);
    }

    #[test]
    fn rr_examples() {
        let sys = RRSystem::new(vec![term(3, 1)], rat(100), 0).unwrap();
        assert_eq!(rr_solvable(&sys).verdict, Verdict::Feasible);
        let sys = RRSystem::new(vec![term(3, 1)], rat(3), 0).unwrap();
        assert_eq!(rr_solvable(&sys).verdict, Verdict::Infeasible);
        let sys = RRSystem::new(vec![term(40, 1), term(5, 1024)], rat_frac(34992, 5), 0).unwrap();
        let r = rr_solvable(&sys);
        assert_eq!(r.verdict, Verdict::Feasible);
        assert_eq!(r.lhs, Some(rat(5160)));
        assert!(RRSystem::new(vec![RRTerm { m: 0, ..term(1, 1) }], rat(1), 0).is_err());
    }

    #[test]
    fn rr_degrees_follow_m_s_plus_d() {
        let sys = RRSystem::new(
            vec![RRTerm { m: -1, d: 12, ..term(1, 1) }, RRTerm { m: 2, d: -17, ..term(1, 1) }],
            rat(1),
            9,
        )
        .unwrap();
        assert_eq!(sys.degrees(), vec![3, 1]);
    }

    #[test]
    fn curve_validation() {
        let ok = CurveData::from_json(r#"{"q": 9, "g": 5, "B": {"1": 32, "2": 4, "4": 10}}"#).unwrap();
        assert_eq!(ok.delta_set(), vec![1, 2, 4]);
        assert_eq!(ok.missing_degrees(), vec![3]);
        assert_eq!(ok.max_place_degree(), Some(1));
        assert!(CurveData::from_json(r#"{"q": 9, "g": 5, "B": {"1": 41}}"#).is_err());
        assert!(CurveData::from_json(r#"{"q": 10, "g": 5, "B": {"1": 1}}"#).is_err());
        assert!(CurveData::from_json(r#"{"q": 9, "g": 0, "B": {}}"#).is_err());
        let tie = CurveData::new(9, 5, [(1, 3), (2, 7), (3, 7)].into()).unwrap();
        assert_eq!(tie.max_place_degree(), Some(2));
    }

    #[test]
    fn params_validation() {
        assert!(SharingParams::new(2, 1, 1, 18).validate().is_ok());
        assert!(SharingParams::new(1, 1, 1, 18).validate().is_err());
        assert!(SharingParams::new(2, 18, 1, 18).validate().is_err());
        assert!(SharingParams::new(2, 1, 1, 1).validate().is_err());
        assert!(SharingParams::new(2, 1, 0, 5).validate().is_err());
    }
}
