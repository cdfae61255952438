use arithss::bounds::{
    class_number_limit, delta_lower, delta_mu, matching_cases, mu0, torsion_limit_upper, AsymptoticInputs, TorsionCase,
};
use arithss::exactmath::directed::log;
use arithss::exactmath::{rat, rat_frac, Interval, LogBase, Rational, DEFAULT_DIGITS};
use arithss::towers::gs_profile;
use num_traits::Signed;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GRID_Q: [u64; 10] = [4, 8, 9, 16, 25, 27, 32, 49, 64, 81];

fn log_q(r: u64, q: u64) -> Interval {
    log(&rat(r), LogBase::Int(q), DEFAULT_DIGITS)
}

/// `a <= b` unless the enclosures say otherwise.
fn not_above(a: &Interval, b: &Interval) -> bool {
    !b.certainly_lt(a)
}

#[test]
fn exactly_one_case_applies_on_grid() {
    for q in GRID_Q {
        for r in 2..=30 {
            let cases = matching_cases(q, r).unwrap();
            assert_eq!(cases.len(), 1, "q = {q}, r = {r}: {cases:?}");
            assert_eq!(torsion_limit_upper(q, r).unwrap().case, cases[0]);
        }
    }
}

#[test]
fn case_four_never_exceeds_case_three() {
    for q in GRID_Q {
        for r in 2..=30 {
            let t = torsion_limit_upper(q, r).unwrap();
            if t.case == TorsionCase::IV {
                assert!(not_above(&t.bound, &log_q(r, q)), "q = {q}, r = {r}");
            }
        }
    }
}

#[test]
fn bound_at_most_twice_log() {
    for q in GRID_Q {
        for r in 2..=30 {
            let t = torsion_limit_upper(q, r).unwrap();
            assert!(not_above(&t.bound, &log_q(r, q).scale(&rat(2))), "q = {q}, r = {r}");
            assert!(!t.bound.lo().is_negative());
        }
    }
}

#[test]
fn gs_mu0_is_one_over_ell_plus_one() {
    for ell in 2..=16u64 {
        let inputs = AsymptoticInputs::new(ell * ell, [(1, rat(ell - 1))].into()).unwrap();
        assert_eq!(mu0(&inputs), rat_frac(1, ell as i64 + 1));
        if let Ok(profile) = gs_profile(ell) {
            assert_eq!(mu0(&profile.asymptotic_inputs()), rat_frac(1, ell as i64 + 1));
        }
    }
}

fn random_rational<R: Rng>(rng: &mut R, max_num: i64) -> Rational {
    rat_frac(rng.random_range(0..=max_num), rng.random_range(1..=50))
}

#[test]
fn delta_identity_to_forty_digits() {
    let tolerance = Rational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(10), 40));
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    for _ in 0..20 {
        let q = GRID_Q[rng.random_range(0..GRID_Q.len())];
        let beta = (1..=rng.random_range(1..=3u32)).map(|m| (m, random_rational(&mut rng, 100))).collect();
        let inputs = AsymptoticInputs::new(q, beta).unwrap();
        let mu = random_rational(&mut rng, 50);
        for base in [LogBase::Natural, LogBase::Int(q)] {
            let h = class_number_limit(&inputs, base, DEFAULT_DIGITS);
            let a = delta_mu(&h, &mu, q, base, DEFAULT_DIGITS);
            let b = delta_lower(&mu, &inputs, base, DEFAULT_DIGITS);
            let gap = (a.midpoint() - b.midpoint()).abs();
            assert!(gap <= tolerance, "q = {q}, mu = {mu}");
            assert!(a.width() <= tolerance && b.width() <= tolerance);
        }
    }
}

proptest! {
    #[test]
    fn class_number_limit_is_at_least_log_q(
        q in prop::sample::select(GRID_Q.to_vec()),
        b1 in 0i64..20,
        b2 in 0i64..20,
    ) {
        let inputs = AsymptoticInputs::new(q, [(1, rat(b1)), (2, rat(b2))].into()).unwrap();
        let h = class_number_limit(&inputs, LogBase::Int(q), DEFAULT_DIGITS);
        prop_assert!(h.hi() >= &rat(1));
    }

    #[test]
    fn case_one_bound_is_exact(
        (p, m) in prop::sample::select(vec![(2u64, 2u32), (3, 2), (2, 4), (5, 2), (7, 2), (2, 6), (3, 4)]),
        j in 1u32..7,
    ) {
        // r = p^j with r | q: j / (m (sqrt(q) + 1))
        prop_assume!(j <= m);
        let q = p.pow(m);
        let s = p.pow(m / 2) as i64;
        let t = torsion_limit_upper(q, p.pow(j)).unwrap();
        prop_assert_eq!(t.case, TorsionCase::I);
        prop_assert_eq!(t.exact(), Some(&rat_frac(j as i64, m as i64 * (s + 1))));
    }
}
