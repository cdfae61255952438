//! `"num/den"` string encoding for rationals in JSON.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{de, Deserialize, Deserializer, Serializer};

use super::Rational;

/// Parses `"a/b"`, `"a"` or a plain decimal such as `"0.5"`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|e| format!("bad numerator in {s:?}: {e}"))?;
        let den = BigInt::from_str(den.trim()).map_err(|e| format!("bad denominator in {s:?}: {e}"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches('-'), frac);
        let mag = BigInt::from_str(&digits).map_err(|e| format!("bad decimal {s:?}: {e}"))?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let v = Rational::new(mag, den);
        return Ok(if neg { -v } else { v });
    }
    BigInt::from_str(s).map(Rational::from_integer).map_err(|e| format!("bad rational {s:?}: {e}"))
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    let s = String::deserialize(d)?;
    parse_rational(&s).map_err(de::Error::custom)
}

pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_some(&format_rational(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?.map(|s| parse_rational(&s).map_err(de::Error::custom)).transpose()
    }
}

pub mod map {
    use super::*;
    use serde::ser::SerializeMap;

    pub fn serialize<S: Serializer>(m: &BTreeMap<u32, Rational>, s: S) -> Result<S::Ok, S::Error> {
        let mut out = s.serialize_map(Some(m.len()))?;
        for (k, v) in m {
            out.serialize_entry(&k.to_string(), &format_rational(v))?;
        }
        out.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<u32, Rational>, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| {
                let k = k.parse::<u32>().map_err(de::Error::custom)?;
                let v = parse_rational(&v).map_err(de::Error::custom)?;
                Ok((k, v))
            })
            .collect()
    }
}

/// Big naturals as decimal strings.
pub mod natural {
    use super::*;
    use crate::exactmath::Natural;

    pub fn serialize<S: Serializer>(n: &Natural, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Natural, D::Error> {
        let raw = String::deserialize(d)?;
        Natural::from_str(raw.trim()).map_err(de::Error::custom)
    }
}
