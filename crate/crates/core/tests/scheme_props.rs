use arithss::field::FieldElement;
use arithss::scheme::{
    plan_scheme, reconstruct_product, recover_secret, share, star_product, verify_disconnected, verify_reconstruction,
    SchemeParams, ShareBundle,
};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};

fn fixtures() -> Vec<SchemeParams> {
    vec![
        plan_scheme(13, 8, 1, 2, 1).unwrap(),
        plan_scheme(16, 10, 2, 2, 1).unwrap(),
        plan_scheme(9, 7, 1, 2, 2).unwrap(),
    ]
}

fn random_secret(p: &SchemeParams, rng: &mut ChaCha8Rng) -> Vec<FieldElement> {
    (0..p.k).map(|_| p.field.random(rng)).collect()
}

fn opened(shares: &[FieldElement], idx: &[usize]) -> Vec<(usize, FieldElement)> {
    idx.iter().map(|&i| (i, shares[i].clone())).collect()
}

#[test]
fn share_then_recover_is_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for p in fixtures() {
        let mut idx: Vec<usize> = (0..p.n).collect();
        for _ in 0..1000 {
            let secret = random_secret(&p, &mut rng);
            let b = share(&p, &secret, &mut rng).unwrap();
            idx.shuffle(&mut rng);
            assert_eq!(recover_secret(&p, &opened(&b.shares, &idx[..=p.degree_cap])).unwrap(), secret);
            assert_eq!(recover_secret(&p, &opened(&b.shares, &idx)).unwrap(), secret);
        }
    }
}

#[test]
fn verifiers_hold_on_fixtures_and_modes_agree() {
    for p in fixtures() {
        assert!(verify_disconnected(&p));
        assert_eq!(verify_reconstruction(&p, true), verify_reconstruction(&p, false));
        assert!(verify_reconstruction(&p, true));
    }
}

#[test]
fn product_reconstruction_over_every_honest_set() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for p in fixtures() {
        let sets: Vec<Vec<usize>> = (0..p.n).combinations(p.n - p.t).collect();
        for _ in 0..20 {
            let bundles: Vec<ShareBundle> =
                (0..p.d).map(|_| share(&p, &random_secret(&p, &mut rng), &mut rng).unwrap()).collect();
            let prod = star_product(&bundles).unwrap();
            for b in &sets {
                assert_eq!(reconstruct_product(&p, &opened(&prod.shares, b)).unwrap(), prod.secret);
            }
        }
    }
}

#[test]
fn random_product_trials() {
    let p = plan_scheme(13, 8, 1, 2, 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut idx: Vec<usize> = (0..p.n).collect();
    for _ in 0..1000 {
        let f = share(&p, &random_secret(&p, &mut rng), &mut rng).unwrap();
        let g = share(&p, &random_secret(&p, &mut rng), &mut rng).unwrap();
        let expected = vec![p.field.mul(&f.secret[0], &g.secret[0])];
        let prod = star_product(&[f, g]).unwrap();
        idx.shuffle(&mut rng);
        assert_eq!(reconstruct_product(&p, &opened(&prod.shares, &idx[..p.n - p.t])).unwrap(), expected);
    }
}

#[test]
fn products_have_degree_at_most_d_t() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for p in fixtures() {
        let dt = p.d * p.degree_cap;
        for _ in 0..50 {
            let bundles: Vec<ShareBundle> =
                (0..p.d).map(|_| share(&p, &random_secret(&p, &mut rng), &mut rng).unwrap()).collect();
            let prod = star_product(&bundles).unwrap();
            let points: Vec<_> = p.share_points.iter().cloned().zip(prod.shares.iter().cloned()).collect();
            let f = p.field.poly_interpolate(&points[..=dt]).unwrap();
            assert!(f.degree().is_none_or(|deg| deg <= dt));
            for (x, y) in &points {
                assert_eq!(&p.field.poly_eval(&f, x), y);
            }
        }
    }
}

#[test]
fn shares_look_uniform_for_a_fixed_secret() {
    let p = plan_scheme(13, 8, 1, 2, 1).unwrap();
    let secret = vec![p.field.from_int(7)];
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let q = p.field.order() as usize;
    let trials = 10_000;
    let mut counts = vec![vec![0u64; q]; p.n];
    for _ in 0..trials {
        let b = share(&p, &secret, &mut rng).unwrap();
        for (i, s) in b.shares.iter().enumerate() {
            counts[i][p.field.index_of(s) as usize] += 1;
        }
    }
    let expected = trials as f64 / q as f64;
    let chi = ChiSquared::new((q - 1) as f64).unwrap();
    for (i, hist) in counts.iter().enumerate() {
        let stat: f64 = hist.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
        let p_value = 1.0 - chi.cdf(stat);
        assert!(p_value > 0.001, "share {i}: chi2 = {stat}, p = {p_value}");
    }
}
