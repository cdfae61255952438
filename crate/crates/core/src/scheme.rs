//! Genus-0 arithmetic secret sharing: polynomials of degree at most `T`
//! evaluated at `k` secret points and `n` share points.

use itertools::Itertools;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmath::prime_power;
use crate::field::{make_field, FieldElement, FieldError, FieldSpec, Poly};

pub const DEFAULT_SEED: u64 = 0x5eed;
const SAMPLED_SUBSETS: usize = 200;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SchemeError {
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("expected {expected} secret values, got {got}")]
    SecretLength { expected: usize, got: usize },
    #[error("need at least {needed} shares, got {got}")]
    NotEnoughShares { needed: usize, got: usize },
    #[error("opened shares do not lie on a polynomial of degree at most {0}")]
    InconsistentShares(usize),
    #[error("share index {0} out of range or repeated")]
    BadIndex(usize),
    #[error("bundles were dealt under different parameters")]
    MismatchedParams,
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeParams {
    pub field: FieldSpec,
    pub k: usize,
    pub n: usize,
    pub t: usize,
    pub d: usize,
    /// Degree cap `T`.
    #[serde(rename = "T")]
    pub degree_cap: usize,
    pub secret_points: Vec<FieldElement>,
    pub share_points: Vec<FieldElement>,
    pub seed: u64,
}

/// Smallest valid scheme over `GF(q)`: `T = t + k - 1`, points taken in
/// canonical order (secret points first).
pub fn plan_scheme(q: u64, n: usize, t: usize, d: usize, k: usize) -> Result<SchemeParams, SchemeError> {
    if d < 2 || k < 1 || t < 1 || t >= n {
        return Err(SchemeError::InvalidParameters(format!(
            "need d >= 2, k >= 1 and 1 <= t < n; got d = {d}, k = {k}, t = {t}, n = {n}"
        )));
    }
    let (p, m) = prime_power(q).ok_or_else(|| SchemeError::InvalidParameters(format!("{q} is not a prime power")))?;
    let field = make_field(p, m as usize)?;
    let degree_cap = t + k - 1;
    check_degree(d, degree_cap, n, t)?;
    if (n + k) as u64 > q {
        return Err(SchemeError::Infeasible(format!("n + k = {} > q = {q}", n + k)));
    }
    let mut points = (0..(n + k) as u64).map(|i| field.element_at(i));
    let secret_points = points.by_ref().take(k).collect();
    let share_points = points.collect();
    Ok(SchemeParams { field, k, n, t, d, degree_cap, secret_points, share_points, seed: DEFAULT_SEED })
}

fn check_degree(d: usize, cap: usize, n: usize, t: usize) -> Result<(), SchemeError> {
    if d * cap + t + 1 > n {
        return Err(SchemeError::Infeasible(format!("dT = {} > n - t - 1 = {}", d * cap, n as i64 - t as i64 - 1)));
    }
    Ok(())
}

impl SchemeParams {
    /// Raises `T`, re-checking `T >= t + k - 1` and `dT <= n - t - 1`.
    pub fn with_degree_cap(mut self, cap: usize) -> Result<Self, SchemeError> {
        if cap + 1 < self.t + self.k {
            return Err(SchemeError::InvalidParameters(format!("T = {cap} < t + k - 1")));
        }
        check_degree(self.d, cap, self.n, self.t)?;
        self.degree_cap = cap;
        Ok(self)
    }

    /// Sets `T` without validation, for probing the verifiers.
    pub fn with_degree_cap_unchecked(mut self, cap: usize) -> Self {
        self.degree_cap = cap;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Generator seeded from `seed`.
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    /// Number of free coefficients after fixing the secret, `T + 1 - k`.
    pub fn randomness(&self) -> usize {
        self.degree_cap + 1 - self.k
    }

    fn eval_row(&self, x: &FieldElement, degree: usize) -> Vec<FieldElement> {
        self.field.powers(x, degree)
    }
}

/// A dealt codeword. Only the share vector is serialized; the secret stays
/// with the dealer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShareBundle {
    pub params: SchemeParams,
    pub shares: Vec<FieldElement>,
    #[serde(skip)]
    pub secret: Vec<FieldElement>,
}

/// Uniform `f` of degree at most `T` with `f(Q_j) = secret_j`.
pub fn share<R: Rng + ?Sized>(
    params: &SchemeParams,
    secret: &[FieldElement],
    rng: &mut R,
) -> Result<ShareBundle, SchemeError> {
    let aux: Vec<FieldElement> = (0..params.randomness()).map(|_| params.field.random(rng)).collect();
    share_with_aux(params, secret, &aux)
}

/// Sharing with the values at the first `T + 1 - k` share points given.
pub fn share_with_aux(
    params: &SchemeParams,
    secret: &[FieldElement],
    aux: &[FieldElement],
) -> Result<ShareBundle, SchemeError> {
    if secret.len() != params.k {
        return Err(SchemeError::SecretLength { expected: params.k, got: secret.len() });
    }
    assert!(params.randomness() >= 1, "t >= 1 leaves at least one free coefficient");
    assert_eq!(aux.len(), params.randomness(), "one auxiliary value per free coefficient");
    let points: Vec<_> = params
        .secret_points
        .iter()
        .cloned()
        .zip(secret.iter().cloned())
        .chain(params.share_points.iter().cloned().zip(aux.iter().cloned()))
        .collect();
    let f = params.field.poly_interpolate(&points)?;
    Ok(ShareBundle {
        params: params.clone(),
        shares: params.share_points.iter().map(|x| params.field.poly_eval(&f, x)).collect(),
        secret: secret.to_vec(),
    })
}

/// Interpolates degree `<= degree` through the opened shares and checks
/// any surplus points lie on it.
fn interpolate_opened(
    params: &SchemeParams,
    opened: &[(usize, FieldElement)],
    degree: usize,
) -> Result<Poly, SchemeError> {
    let needed = degree + 1;
    if opened.len() < needed {
        return Err(SchemeError::NotEnoughShares { needed, got: opened.len() });
    }
    if let Some(&(i, _)) = opened.iter().duplicates_by(|(i, _)| *i).next() {
        return Err(SchemeError::BadIndex(i));
    }
    let mut points = Vec::with_capacity(opened.len());
    for (i, v) in opened {
        let x = params.share_points.get(*i).ok_or(SchemeError::BadIndex(*i))?;
        points.push((x.clone(), v.clone()));
    }
    let f = params.field.poly_interpolate(&points[..needed])?;
    if points[needed..].iter().any(|(x, y)| params.field.poly_eval(&f, x) != *y) {
        return Err(SchemeError::InconsistentShares(degree));
    }
    Ok(f)
}

fn evaluate_at_secret_points(params: &SchemeParams, f: &Poly) -> Vec<FieldElement> {
    params.secret_points.iter().map(|q| params.field.poly_eval(f, q)).collect()
}

/// Recovers the secret from at least `T + 1` opened `(index, share)` pairs.
pub fn recover_secret(
    params: &SchemeParams,
    opened: &[(usize, FieldElement)],
) -> Result<Vec<FieldElement>, SchemeError> {
    let f = interpolate_opened(params, opened, params.degree_cap)?;
    Ok(evaluate_at_secret_points(params, &f))
}

/// Coordinatewise product of codewords.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductShares {
    pub shares: Vec<FieldElement>,
    pub secret: Vec<FieldElement>,
}

pub fn star_product(bundles: &[ShareBundle]) -> Result<ProductShares, SchemeError> {
    let (first, rest) = bundles.split_first().ok_or_else(|| SchemeError::InvalidParameters("empty product".into()))?;
    if rest.iter().any(|b| b.params != first.params) {
        return Err(SchemeError::MismatchedParams);
    }
    let field = &first.params.field;
    let times = |acc: Vec<FieldElement>, next: &[FieldElement]| {
        acc.iter().zip(next).map(|(a, b)| field.mul(a, b)).collect::<Vec<_>>()
    };
    let shares = rest.iter().fold(first.shares.clone(), |acc, b| times(acc, &b.shares));
    let secret = rest.iter().fold(first.secret.clone(), |acc, b| times(acc, &b.secret));
    Ok(ProductShares { shares, secret })
}

/// Recovers the product secret from opened product shares, degree `<= dT`.
pub fn reconstruct_product(
    params: &SchemeParams,
    opened: &[(usize, FieldElement)],
) -> Result<Vec<FieldElement>, SchemeError> {
    let f = interpolate_opened(params, opened, params.d * params.degree_cap)?;
    Ok(evaluate_at_secret_points(params, &f))
}

/// Every `t` shares together with the secret can take any value: the map
/// `f -> (f(Q_1..Q_k), f(P_a))_{a in A}` has rank `k + t` for all `|A| = t`.
pub fn verify_disconnected(params: &SchemeParams) -> bool {
    let cap = params.degree_cap;
    let secret_rows: Vec<_> = params.secret_points.iter().map(|q| params.eval_row(q, cap)).collect();
    let subsets: Vec<Vec<usize>> = (0..params.n).combinations(params.t).collect();
    subsets.par_iter().all(|subset| {
        let mut rows = secret_rows.clone();
        rows.extend(subset.iter().map(|&i| params.eval_row(&params.share_points[i], cap)));
        params.field.rank(&rows) == params.k + params.t
    })
}

/// No nonzero polynomial of degree `<= dT` vanishes on `n - t` share points:
/// `dT < n - t`, and every evaluation matrix on `n - t` points has full
/// column rank. Sampled mode draws 200 subsets from `seed`.
pub fn verify_reconstruction(params: &SchemeParams, exhaustive: bool) -> bool {
    let degree = params.d * params.degree_cap;
    let size = params.n - params.t;
    let symbolic = degree < size;
    let subsets: Vec<Vec<usize>> = if exhaustive {
        (0..params.n).combinations(size).collect()
    } else {
        let mut rng = params.rng();
        (0..SAMPLED_SUBSETS).map(|_| sample(&mut rng, params.n, size).into_vec()).collect()
    };
    let ranks = subsets.par_iter().all(|subset| {
        let rows: Vec<_> = subset.iter().map(|&i| params.eval_row(&params.share_points[i], degree)).collect();
        params.field.rank(&rows) == degree + 1
    });
    symbolic && ranks
}
