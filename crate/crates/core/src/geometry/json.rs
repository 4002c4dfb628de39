//! JSON forms of [`VRep`] and [`HRep`]:
//!
//! ```json
//! {"dim": 2, "vertices": [["0/1", "1/2"], ["1/1", "0/1"]]}
//! {"dim": 2, "facets": [{"normal": [1, 0], "rhs": "1/1"}]}
//! ```
//!
//! Rationals are always written as `"p/q"` with `q > 0`; plain integers
//! are accepted on input.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{de, ser, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

use super::{HRep, HalfSpace, RationalPoint, VRep};

pub fn format_rational(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::Rational(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

#[derive(Serialize, Deserialize)]
struct VRepJson {
    dim: usize,
    vertices: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct FacetJson {
    normal: Vec<i64>,
    rhs: String,
}

#[derive(Serialize, Deserialize)]
struct HRepJson {
    dim: usize,
    facets: Vec<FacetJson>,
}

impl Serialize for VRep {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        VRepJson {
            dim: self.dim(),
            vertices: self
                .vertices()
                .iter()
                .map(|v| v.coords().iter().map(format_rational).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VRep {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = VRepJson::deserialize(deserializer)?;
        let points = raw
            .vertices
            .iter()
            .map(|v| {
                v.iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>>>()
                    .map(RationalPoint::new)
            })
            .collect::<Result<Vec<_>>>()
            .map_err(de::Error::custom)?;
        VRep::new(raw.dim, points).map_err(de::Error::custom)
    }
}

impl Serialize for HRep {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let facets = self
            .rows()
            .iter()
            .map(|r| {
                let normal = r
                    .normal
                    .iter()
                    .map(|a| {
                        i64::try_from(a).map_err(|_| ser::Error::custom("normal entry exceeds i64"))
                    })
                    .collect::<std::result::Result<Vec<_>, S::Error>>()?;
                Ok(FacetJson {
                    normal,
                    rhs: format_rational(&r.rhs),
                })
            })
            .collect::<std::result::Result<Vec<_>, S::Error>>()?;
        HRepJson {
            dim: self.dim(),
            facets,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HRep {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = HRepJson::deserialize(deserializer)?;
        let rows = raw
            .facets
            .into_iter()
            .map(|f| HalfSpace::from_integers(f.normal, parse_rational(&f.rhs)?))
            .collect::<Result<Vec<_>>>()
            .map_err(de::Error::custom)?;
        HRep::new(raw.dim, rows).map_err(de::Error::custom)
    }
}

impl VRep {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

impl HRep {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}
