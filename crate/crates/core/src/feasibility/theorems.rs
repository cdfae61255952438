//! The binomial-maximum and partition-bound sufficiency theorems.

use num_bigint::BigInt;

use super::{r2_of, solve_degree_s, CurveData, FeasibilityError, FeasibilityReport, SharingParams, Theorem, Verdict};
use crate::bounds::{class_number_lower, hasse_weil_excess_ceil};
use crate::exactmath::directed::sqrt;
use crate::exactmath::{binomial, e_upper, rat, rat_pow, Natural, Rational, DEFAULT_DIGITS};

/// How `2 g sqrt(q)` enters the numerator of the first theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NumeratorMode {
    /// `H - ceil(2 g sqrt(q)) - q - 1`.
    #[default]
    HasseWeilCeil,
    /// `H - 2 g sqrt(q)_down - q - 1` with `sqrt(q)` rounded down to the
    /// given number of digits. Not sound; used to probe the margin.
    HasseWeilDirected(u32),
    /// `H - B_1`, the observed count in place of the Hasse-Weil cap.
    ObservedB1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Thm41Options {
    pub numerator: NumeratorMode,
}

enum Prep {
    Ready(Prepared),
    /// A hypothesis failed; the report is `Inapplicable`.
    Done(FeasibilityReport),
}

struct Prepared {
    report: FeasibilityReport,
    delta: u32,
    m: u32,
    r2: i64,
    h: Rational,
}

fn binomial_for(curve: &CurveData, i: u32) -> Natural {
    let f = (curve.g - 1) / i as u64;
    binomial(curve.b(i) + f, f)
}

/// Shared pipeline: `Delta`, `m`, `s`, `r_1`, `r_2` and the hypotheses common
/// to both theorems.
fn prepare(
    curve: &CurveData,
    params: SharingParams,
    theorem: Theorem,
    r2_max: Option<i64>,
    precheck: impl Fn(&CurveData, u32) -> Option<String>,
) -> Result<Prep, FeasibilityError> {
    curve.validate()?;
    params.validate()?;
    let SharingParams { d, t, k, n } = params;
    let mut report = FeasibilityReport::empty(theorem);
    for i in curve.missing_degrees() {
        report.warnings.push(format!("B_{i} absent, treated as 0"));
    }
    let s = solve_degree_s(curve.g, t, k);
    let r1 = 2 * curve.g as i64 - s + t as i64 + k as i64 - 2;
    let r2 = r2_of(d, s, n, t);
    report.s = Some(s);
    report.r1 = Some(r1);
    report.r2 = Some(r2);
    report.delta_set = curve.delta_set();
    report.m_star = curve.max_place_degree();
    let h = class_number_lower(curve.q, curve.g);
    report.h = Some(h.clone());

    if let Some(msg) = report.m_star.and_then(|m| precheck(curve, m)) {
        return Ok(Prep::Done(report.inapplicable(msg)));
    }
    if curve.b(1) < n + k {
        let msg = format!("B_1 = {} < n + k = {}", curve.b(1), n + k);
        return Ok(Prep::Done(report.inapplicable(msg)));
    }
    if r2 < 1 {
        return Ok(Prep::Done(report.inapplicable(format!("r_2 = {r2} < 1"))));
    }
    if let Some(max) = r2_max {
        if r2 > max {
            return Ok(Prep::Done(report.inapplicable(format!("r_2 = {r2} > g - 1 = {max}"))));
        }
    }
    let Some(m) = report.m_star else {
        return Ok(Prep::Done(report.inapplicable("Delta is empty")));
    };
    let delta = report.delta_set.len() as u32;
    report.detail("delta", delta);
    Ok(Prep::Ready(Prepared { report, delta, m, r2, h }))
}

fn decide(mut report: FeasibilityReport, lhs: Rational, rhs: Rational) -> FeasibilityReport {
    report.verdict = if lhs <= rhs { Verdict::Feasible } else { Verdict::Infeasible };
    report.lhs = Some(lhs);
    report.rhs = Some(rhs);
    report
}

fn d_pow_2g(d: u64, g: u64) -> Rational {
    rat(num_traits::pow(BigInt::from(d), 2 * g as usize))
}

/// `d^(2g) <= (H - 2g sqrt(q) - q - 1) / C(B_m + f, f)^delta` with
/// `1 <= r_2 <= g - 1`.
pub fn check_thm41(
    curve: &CurveData,
    params: SharingParams,
    options: Thm41Options,
) -> Result<FeasibilityReport, FeasibilityError> {
    let prep = match prepare(curve, params, Theorem::T41, Some(curve.g as i64 - 1), |_, _| None)? {
        Prep::Ready(p) => p,
        Prep::Done(report) => return Ok(report),
    };
    let Prepared { mut report, delta, m, h, .. } = prep;
    let f = (curve.g - 1) / m as u64;
    let binom = binomial_for(curve, m);
    report.detail("f", f);
    report.detail("binomial", &binom);

    // the proof bounds the product by the largest binomial, which need not
    // sit at the degree with the most places
    if let Some(big) = report.delta_set.iter().copied().find(|&i| binomial_for(curve, i) > binom) {
        report
            .warnings
            .push(format!("C(B_{big} + f, f) exceeds the binomial at m = {m}; the proof needs the larger one"));
    }

    let q1 = rat(curve.q + 1);
    let numerator = match options.numerator {
        NumeratorMode::HasseWeilCeil => {
            let excess = hasse_weil_excess_ceil(curve.q, curve.g);
            report.detail("hasse_weil_excess", &excess);
            &h - rat(BigInt::from(excess)) - q1
        }
        NumeratorMode::HasseWeilDirected(digits) => {
            let root = sqrt(&rat(curve.q), digits).lo().clone();
            &h - rat(2 * curve.g) * root - q1
        }
        NumeratorMode::ObservedB1 => &h - rat(curve.b(1)),
    };
    report.detail("numerator", &numerator);
    let denominator = rat(num_traits::pow(BigInt::from(binom), delta as usize));
    let rhs = numerator / denominator;
    let lhs = d_pow_2g(params.d, curve.g);
    Ok(decide(report, lhs, rhs))
}

/// `d^(2g) <= (H - B_1) / ((r_2 + 1)^(delta - 1) (e (1 + (r_2 - 1)/(B_m - 1)))^(r_2 delta))`
/// with `r_2 >= 1`; `e` is rounded up.
pub fn check_thm42(curve: &CurveData, params: SharingParams) -> Result<FeasibilityReport, FeasibilityError> {
    let degenerate = |c: &CurveData, m: u32| {
        let bm = c.b(m);
        (bm < 2).then(|| format!("B_m = {bm} (m = {m}) leaves B_m - 1 = 0"))
    };
    let prep = match prepare(curve, params, Theorem::T42, None, degenerate)? {
        Prep::Ready(p) => p,
        Prep::Done(report) => return Ok(report),
    };
    let Prepared { mut report, delta, m, r2, h } = prep;
    let bm = curve.b(m);
    let e = e_upper(DEFAULT_DIGITS);
    let growth = rat(1) + rat(r2 - 1) / rat(bm - 1);
    let per_degree = rat_pow(&(e * growth), r2 * delta as i64);
    let partitions = rat_pow(&rat(r2 + 1), delta as i64 - 1);
    let denominator = partitions * per_degree;
    let numerator = &h - rat(curve.b(1));
    report.detail("numerator", &numerator);
    let rhs = numerator / denominator;
    let lhs = d_pow_2g(params.d, curve.g);
    Ok(decide(report, lhs, rhs))
}
