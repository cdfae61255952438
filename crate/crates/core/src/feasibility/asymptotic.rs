//! Conditions for a tower to yield an infinite family of schemes.

use num_bigint::BigInt;

use super::{FeasibilityError, FeasibilityReport, Theorem, Verdict};
use crate::bounds::{mu0, prop_optimal_rhs, torsion_limit_upper};
use crate::exactmath::directed::{ln, rebase};
use crate::exactmath::{exact_sqrt, rat, LogBase, Natural, Rational, DEFAULT_DIGITS};
use crate::towers::TowerProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AsymptoticOptions {
    /// Logarithm for `(1 - mu) log q`. The torsion bound is always in
    /// base-`q` units.
    pub base: LogBase,
    pub digits: u32,
}

impl Default for AsymptoticOptions {
    fn default() -> Self {
        Self { base: LogBase::Natural, digits: DEFAULT_DIGITS }
    }
}

/// Checks `(i) J_d <= (1 - mu) log q` with the torsion upper bound in place
/// of `J_d`, and `(ii) B_1(F_level) >= n + k`.
pub fn asymptotic_check(
    profile: &TowerProfile,
    d: u64,
    mu: &Rational,
    level: u32,
    n: u64,
    k: u64,
    options: AsymptoticOptions,
) -> Result<FeasibilityReport, FeasibilityError> {
    let inputs = profile.asymptotic_inputs();
    let floor = mu0(&inputs);
    if *mu < floor {
        return Err(FeasibilityError::MuBelowMu0 { mu: Box::new(mu.clone()), mu0: Box::new(floor) });
    }
    let AsymptoticOptions { base, digits } = options;
    let mut report = FeasibilityReport::empty(Theorem::Asymptotic);
    report.detail("mu0", &floor);

    let torsion = torsion_limit_upper(profile.q, d)?;
    let log_q = rebase(&ln(&rat(profile.q), digits), base, digits);
    let rhs = log_q.scale(&(rat(1) - mu));
    let cond_i = torsion.bound.certainly_le(&rhs);
    report.lhs = Some(torsion.bound.upper(digits).value().clone());
    report.rhs = Some(rhs.lower(digits).value().clone());
    report.detail("torsion_case", torsion.case);
    report.notes.push(format!(
        "(i) J_{d} <= {} <= (1 - mu) log q = {}: {}",
        torsion.bound,
        rhs,
        if cond_i { "holds" } else { "fails" }
    ));

    let b1 = profile.b_lower(1, level)?;
    let needed = Natural::from(n + k);
    let cond_ii = b1 >= needed;
    report.detail("b1_lower", &b1);
    report
        .notes
        .push(format!("(ii) B_1(F_{level}) >= {b1} vs n + k = {needed}: {}", if cond_ii { "holds" } else { "fails" }));

    if let Ok(genus) = profile.genus_at(level) {
        let r2 = (mu * rat(BigInt::from(genus.clone()))).floor().to_integer();
        report.r2 = r2.try_into().ok();
        report.detail("genus", genus);
    }

    if exact_sqrt(profile.q).is_some() {
        let bound = prop_optimal_rhs(profile.q, base, digits)?;
        let lhs = torsion.bound.add_rational(mu);
        let holds = lhs.certainly_le(&bound);
        report.notes.push(format!(
            "mu + J_{d} <= {lhs} vs sqrt(q) + (sqrt(q) - 1) log((q - 1)/q) = {bound}: {}",
            if holds { "holds" } else { "fails" }
        ));
    }

    report.verdict = if cond_i && cond_ii { Verdict::Feasible } else { Verdict::Infeasible };
    Ok(report)
}
