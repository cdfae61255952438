//! Numeric profiles of towers of function fields.
//!
//! A tower enters the feasibility machinery only through its field size,
//! its genus sequence, lower bounds on place counts per level and the limits
//! `beta_m`. Profiles are plain data and can be loaded from JSON:
//!
//! ```json
//! {"name": "custom", "q": 9,
//!  "beta": {"1": "6/7", "2": "2/21"},
//!  "genus": {"kind": "table", "values": {"1": 5, "2": 15}},
//!  "b_lower": {"kind": "table", "values": {"1": {"1": 18, "2": 36}}}}
//! ```

use std::collections::BTreeMap;

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{ihara_bassa, AsymptoticInputs, BoundsError};
use crate::exactmath::{prime_power, rat, rat_frac, rat_pow, Natural, Rational};

#[derive(Debug, Error)]
pub enum TowerError {
    #[error("tower {name:?} has no per-level {what} data")]
    PerLevelDataUnavailable { name: String, what: &'static str },
    #[error("tower {name:?} has genus 0 at level {level}")]
    ZeroGenus { name: String, level: u32 },
    #[error("invalid tower profile: {0}")]
    InvalidProfile(String),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error("malformed tower profile JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// How `g(F_i)` is obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GenusSpec {
    /// Composite quadratic tower over `GF(9)`.
    Example2,
    /// Garcia-Stichtenoth tower over `GF(ell^2)`. With `substitute_ell` the
    /// genus formula is evaluated with `ell` in place of `q`; that variant is
    /// exploratory and not the formula as stated for the tower.
    Gs {
        ell: u64,
        #[serde(default)]
        substitute_ell: bool,
    },
    Table {
        #[serde(deserialize_with = "int_keys::flat")]
        values: BTreeMap<u32, u64>,
    },
    Unavailable,
}

/// How lower bounds on `B_m(F_i)` are obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PlaceBoundSpec {
    /// `B_1 >= 9 * 2^i`, `B_2 >= 2^i`.
    Example2,
    /// `B_1 >= (q - 1) ell^i + 2 ell`.
    Gs {
        ell: u64,
    },
    /// `values[degree][level]`.
    Table {
        #[serde(deserialize_with = "int_keys::nested")]
        values: BTreeMap<u32, BTreeMap<u32, u64>>,
    },
    Unavailable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerProfile {
    pub name: String,
    pub q: u64,
    pub genus: GenusSpec,
    pub b_lower: PlaceBoundSpec,
    #[serde(default, with = "crate::exactmath::ratio::map")]
    pub beta: BTreeMap<u32, Rational>,
    /// First level at which `b_lower` is valid; below it the bound is 0.
    #[serde(default)]
    pub valid_from: u32,
    /// Explicit Ihara-limit lower bound; falls back to `beta_1`.
    #[serde(default, with = "crate::exactmath::ratio::option", skip_serializing_if = "Option::is_none")]
    pub ihara_lower: Option<Rational>,
}

// Integer-keyed maps arrive with string keys once serde has buffered an
// internally tagged enum, so keys are parsed by hand.
mod int_keys {
    use std::collections::BTreeMap;

    use serde::{de, Deserialize, Deserializer};

    fn key<E: de::Error>(k: &str) -> Result<u32, E> {
        k.parse().map_err(|_| E::custom(format!("map key {k:?} is not an integer")))
    }

    pub fn flat<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<u32, u64>, D::Error> {
        BTreeMap::<String, u64>::deserialize(d)?.into_iter().map(|(k, v)| Ok((key(&k)?, v))).collect()
    }

    pub fn nested<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<u32, BTreeMap<u32, u64>>, D::Error> {
        BTreeMap::<String, BTreeMap<String, u64>>::deserialize(d)?
            .into_iter()
            .map(|(k, inner)| {
                let inner = inner.into_iter().map(|(k, v)| Ok((key(&k)?, v))).collect::<Result<_, D::Error>>()?;
                Ok((key(&k)?, inner))
            })
            .collect()
    }
}

fn to_natural(v: BigInt) -> Natural {
    assert!(!v.is_negative(), "negative genus or place count");
    v.to_biguint().expect("nonnegative")
}

fn rational_to_natural(v: Rational) -> Natural {
    assert!(v.is_integer(), "formula produced a non-integer");
    to_natural(v.to_integer())
}

/// `(q+1) q^i - (q+2) q^(i/2) + 1` for even `i`,
/// `(q+1) q^i - (q+1)(q+2)/2 q^((i-1)/2) + 1` for odd `i`.
fn gs_genus(base: u64, level: u32) -> Natural {
    let q = BigInt::from(base);
    let lead = (&q + 1) * num_traits::pow(q.clone(), level as usize);
    let correction = if level.is_multiple_of(2) {
        (&q + 2) * num_traits::pow(q.clone(), (level / 2) as usize)
    } else {
        (&q * &q + 3 * &q + 2) / 2 * num_traits::pow(q.clone(), ((level - 1) / 2) as usize)
    };
    to_natural(lead - correction + 1)
}

/// `21 * 2^(i-1) - 33 * 2^((i-2)/2) + 6` for even `i`,
/// `21 * 2^(i-1) - 11 * 2^((i+1)/2) + 6` for odd `i`.
fn example2_genus(level: u32) -> Natural {
    let two = rat(2);
    let i = level as i64;
    let g = if level.is_multiple_of(2) {
        rat(21) * rat_pow(&two, i - 1) - rat(33) * rat_pow(&two, (i - 2) / 2) + rat(6)
    } else {
        rat(21) * rat_pow(&two, i - 1) - rat(11) * rat_pow(&two, (i + 1) / 2) + rat(6)
    };
    rational_to_natural(g)
}

impl TowerProfile {
    pub fn from_json(text: &str) -> Result<Self, TowerError> {
        let profile: TowerProfile = serde_json::from_str(text)?;
        profile.validate()?;
        Ok(profile)
    }

    pub fn validate(&self) -> Result<(), TowerError> {
        if prime_power(self.q).is_none() {
            return Err(BoundsError::InvalidPrimePower(self.q).into());
        }
        AsymptoticInputs::new(self.q, self.beta.clone())?;
        let check_ell = |ell: u64| {
            if ell.checked_mul(ell) != Some(self.q) {
                return Err(TowerError::InvalidProfile(format!(
                    "gs tower with ell = {ell} needs q = ell^2, got q = {}",
                    self.q
                )));
            }
            Ok(())
        };
        if let GenusSpec::Gs { ell, .. } = self.genus {
            check_ell(ell)?;
        }
        if let PlaceBoundSpec::Gs { ell } = self.b_lower {
            check_ell(ell)?;
        }
        Ok(())
    }

    /// Built-in profile by name: `example2`, `gs:<ell>` or `bassa:<p>:<n>`.
    pub fn builtin(name: &str) -> Result<Self, TowerError> {
        let parts: Vec<&str> = name.split(':').collect();
        let num =
            |s: &str| s.parse::<u64>().map_err(|_| TowerError::InvalidProfile(format!("bad number {s:?} in {name:?}")));
        match parts.as_slice() {
            ["example2"] => Ok(example2_profile()),
            ["gs", ell] => gs_profile(num(ell)?),
            ["bassa", p, n] => bassa_profile(num(p)?, num(n)?),
            _ => Err(TowerError::InvalidProfile(format!("unknown built-in tower {name:?}"))),
        }
    }

    fn unavailable(&self, what: &'static str) -> TowerError {
        TowerError::PerLevelDataUnavailable { name: self.name.clone(), what }
    }

    pub fn genus_at(&self, level: u32) -> Result<Natural, TowerError> {
        match &self.genus {
            GenusSpec::Example2 => Ok(example2_genus(level)),
            GenusSpec::Gs { ell, substitute_ell } => {
                let base = if *substitute_ell { *ell } else { self.q };
                Ok(gs_genus(base, level))
            }
            GenusSpec::Table { values } => {
                values.get(&level).map(|&g| Natural::from(g)).ok_or_else(|| self.unavailable("genus"))
            }
            GenusSpec::Unavailable => Err(self.unavailable("genus")),
        }
    }

    /// Lower bound on `B_degree(F_level)`; 0 where nothing is known.
    pub fn b_lower(&self, degree: u32, level: u32) -> Result<Natural, TowerError> {
        if matches!(self.b_lower, PlaceBoundSpec::Unavailable) {
            return Err(self.unavailable("place-count"));
        }
        if level < self.valid_from {
            return Ok(Natural::zero());
        }
        let pow = |base: u64, e: u32| num_traits::pow(Natural::from(base), e as usize);
        Ok(match &self.b_lower {
            PlaceBoundSpec::Example2 => match degree {
                1 => pow(2, level) * 9u32,
                2 => pow(2, level),
                _ => Natural::zero(),
            },
            PlaceBoundSpec::Gs { ell } => match degree {
                1 => pow(*ell, level) * (self.q - 1) + 2 * ell,
                _ => Natural::zero(),
            },
            PlaceBoundSpec::Table { values } => values
                .get(&degree)
                .and_then(|per_level| per_level.get(&level))
                .map_or_else(Natural::zero, |&v| Natural::from(v)),
            PlaceBoundSpec::Unavailable => unreachable!(),
        })
    }

    pub fn ihara_lower(&self) -> Option<Rational> {
        self.ihara_lower.clone().or_else(|| self.beta.get(&1).cloned())
    }

    pub fn asymptotic_inputs(&self) -> AsymptoticInputs {
        AsymptoticInputs { q: self.q, beta: self.beta.clone() }
    }
}

/// Garcia-Stichtenoth tower `y^ell x^(ell-1) + y = x^ell` over `GF(ell^2)`.
pub fn gs_profile(ell: u64) -> Result<TowerProfile, TowerError> {
    gs_profile_with(ell, false)
}

pub fn gs_profile_with(ell: u64, substitute_ell: bool) -> Result<TowerProfile, TowerError> {
    if prime_power(ell).is_none() {
        return Err(BoundsError::InvalidPrimePower(ell).into());
    }
    let q = ell.checked_mul(ell).ok_or_else(|| TowerError::InvalidProfile(format!("ell = {ell} too large")))?;
    Ok(TowerProfile {
        name: format!("gs:{ell}"),
        q,
        genus: GenusSpec::Gs { ell, substitute_ell },
        b_lower: PlaceBoundSpec::Gs { ell },
        beta: [(1, rat(ell - 1))].into(),
        valid_from: 4,
        ihara_lower: None,
    })
}

/// Composite quadratic tower over `GF(9)`.
pub fn example2_profile() -> TowerProfile {
    TowerProfile {
        name: "example2".to_string(),
        q: 9,
        genus: GenusSpec::Example2,
        b_lower: PlaceBoundSpec::Example2,
        beta: [(1, rat_frac(6, 7)), (2, rat_frac(2, 21))].into(),
        valid_from: 0,
        ihara_lower: None,
    }
}

/// Bassa-Beelen-Garcia-Stichtenoth tower over `GF(p^n)`; only its Ihara
/// bound is known here.
pub fn bassa_profile(p: u64, n: u64) -> Result<TowerProfile, TowerError> {
    let ihara = ihara_bassa(p, n)?;
    let q = p.checked_pow(n as u32).ok_or_else(|| TowerError::InvalidProfile(format!("{p}^{n} overflows")))?;
    Ok(TowerProfile {
        name: format!("bassa:{p}:{n}"),
        q,
        genus: GenusSpec::Unavailable,
        b_lower: PlaceBoundSpec::Unavailable,
        beta: BTreeMap::new(),
        valid_from: 0,
        ihara_lower: Some(ihara),
    })
}

/// `b_lower(m, level) / genus_at(level)`.
pub fn beta_empirical(profile: &TowerProfile, m: u32, level: u32) -> Result<Rational, TowerError> {
    let g = profile.genus_at(level)?;
    if g.is_zero() {
        return Err(TowerError::ZeroGenus { name: profile.name.clone(), level });
    }
    let b = profile.b_lower(m, level)?;
    Ok(Rational::new(BigInt::from_biguint(Sign::Plus, b), BigInt::from_biguint(Sign::Plus, g)))
}
