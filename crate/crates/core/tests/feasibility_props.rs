use std::collections::BTreeMap;

use arithss::bounds::{hasse_weil_b1_upper, hasse_weil_excess_ceil};
use arithss::exactmath::{count_effective_divisors, rat, Natural};
use arithss::feasibility::{
    check_thm41, check_thm42, rr_solvable, solve_degree_s, CurveData, FeasibilityReport, NumeratorMode, RRSystem,
    RRTerm, SharingParams, Thm41Options, Verdict,
};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;

fn fixture(name: &str) -> CurveData {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    CurveData::from_json(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn curves() -> impl Strategy<Value = CurveData> {
    (prop::sample::select(vec![4u64, 9, 16, 25, 49, 64, 81, 1024, 4096]), 2u64..7).prop_flat_map(|(q, g)| {
        let cap = hasse_weil_b1_upper(q, g).to_u64().unwrap();
        let rest = prop::collection::vec(0u64..40, (g - 2) as usize);
        (Just(q), Just(g), 0..=cap, rest).prop_map(|(q, g, b1, rest)| {
            let mut places: BTreeMap<u32, u64> = [(1, b1)].into();
            places.extend(rest.into_iter().enumerate().map(|(i, b)| (i as u32 + 2, b)));
            CurveData::new(q, g, places).unwrap()
        })
    })
}

fn params() -> impl Strategy<Value = (u64, u64, u64)> {
    (1u64..4, 1u64..4, 2u64..30).prop_filter("t < n", |(t, _, n)| t < n)
}

fn check_invariants(curve: &CurveData, p: SharingParams, report: &FeasibilityReport) {
    if let (Some(s), Some(r1)) = (report.s, report.r1) {
        assert_eq!(s, solve_degree_s(curve.g, p.t, p.k));
        assert_eq!(2 * curve.g as i64 - s + p.t as i64 + p.k as i64 - 2, 1);
        assert_eq!(r1, 1);
    }
    if report.verdict == Verdict::Feasible {
        assert!(report.lhs.as_ref().unwrap() <= report.rhs.as_ref().unwrap());
    }
    if report.verdict == Verdict::Inapplicable {
        assert!(report.violated.is_some());
    }
}

#[test]
fn acceptance_fixtures() {
    let big = fixture("curve_q4096_g5.json");
    let p = SharingParams::new(2, 1, 1, 18);
    assert_eq!(check_thm41(&big, p, Default::default()).unwrap().verdict, Verdict::Feasible);
    let small = fixture("curve_q9_g5.json");
    for (t, k, n) in [(1, 1, 15), (1, 2, 17), (2, 1, 18), (1, 1, 16)] {
        let r = check_thm41(&small, SharingParams::new(2, t, k, n), Default::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Infeasible, "t = {t}, k = {k}, n = {n}");
    }
    let sparse = fixture("curve_sparse.json");
    let r = check_thm41(&sparse, SharingParams::new(2, 1, 1, 15), Default::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Inapplicable);
}

#[test]
fn monotone_sweep_on_fixture() {
    let big = fixture("curve_q4096_g5.json");
    for n in [10, 18, 25] {
        let verdicts: Vec<_> = (2..22)
            .map(|d| check_thm41(&big, SharingParams::new(d, 1, 1, n), Default::default()).unwrap().verdict)
            .collect();
        let first_bad = verdicts.iter().position(|v| *v != Verdict::Feasible).unwrap_or(verdicts.len());
        assert!(verdicts[first_bad..].iter().all(|v| *v != Verdict::Feasible), "n = {n}: {verdicts:?}");
    }
}

#[test]
fn directed_sqrt_numerator_agrees_on_fixtures() {
    let options = Thm41Options { numerator: NumeratorMode::HasseWeilDirected(50) };
    for (name, p) in [
        ("curve_q4096_g5.json", SharingParams::new(2, 1, 1, 18)),
        ("curve_q9_g5.json", SharingParams::new(2, 1, 1, 15)),
    ] {
        let curve = fixture(name);
        let a = check_thm41(&curve, p, Default::default()).unwrap();
        let b = check_thm41(&curve, p, options).unwrap();
        assert_eq!(a.verdict, b.verdict, "{name}");
        assert!(a.rhs.unwrap() <= b.rhs.unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn verdicts_never_recover_as_d_grows(curve in curves(), (t, k, n) in params()) {
        // the second bound raises e to the power r_2 delta; keep r_2 modest
        for (check, top) in [(0, 22), (1, 10)] {
            let mut seen_negative = false;
            for d in 2..top {
                let p = SharingParams::new(d, t, k, n);
                let report = if check == 0 {
                    check_thm41(&curve, p, Default::default()).unwrap()
                } else {
                    check_thm42(&curve, p).unwrap()
                };
                check_invariants(&curve, p, &report);
                if seen_negative {
                    prop_assert_ne!(report.verdict, Verdict::Feasible, "d = {}", d);
                }
                seen_negative |= report.verdict == Verdict::Infeasible;
            }
        }
    }

    #[test]
    fn thm41_feasible_implies_rr_solvable(curve in curves(), (t, k, n) in params(), d in 2u64..5) {
        let p = SharingParams::new(d, t, k, n);
        let report = check_thm41(&curve, p, Default::default()).unwrap();
        if report.is_feasible() {
            let r2 = report.r2.unwrap() as u64;
            let slack = rat(BigInt::from(hasse_weil_excess_ceil(curve.q, curve.g))) + rat(curve.q + 1);
            let h_lower = report.h.clone().unwrap() - slack + rat(curve.b(1));
            let delta_places: BTreeMap<u32, u64> =
                curve.places.iter().filter(|(&i, _)| (i as u64) < curve.g).map(|(&i, &b)| (i, b)).collect();
            let sys = RRSystem::new(
                vec![
                    RRTerm { m: -1, d: 0, a_upper: Natural::from(curve.b(1)), torsion_upper: Natural::one() },
                    RRTerm {
                        m: d as i64,
                        d: 0,
                        a_upper: count_effective_divisors(&delta_places, r2),
                        torsion_upper: num_traits::pow(Natural::from(d), 2 * curve.g as usize),
                    },
                ],
                h_lower,
                report.s.unwrap(),
            ).unwrap();
            prop_assert_eq!(rr_solvable(&sys).verdict, Verdict::Feasible);
        }
    }

    #[test]
    fn reports_round_trip_through_json(curve in curves(), (t, k, n) in params(), d in 2u64..6) {
        let p = SharingParams::new(d, t, k, n);
        for report in [check_thm41(&curve, p, Default::default()).unwrap(), check_thm42(&curve, p).unwrap()] {
            let text = serde_json::to_string(&report).unwrap();
            let back: FeasibilityReport = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(back, report);
        }
    }

    #[test]
    fn curve_json_round_trips(curve in curves()) {
        let text = serde_json::to_string(&curve).unwrap();
        prop_assert_eq!(CurveData::from_json(&text).unwrap(), curve);
    }
}
