//! Serde adapters that write big integers and rationals as exact JSON values.
//!
//! Integers become JSON numbers of unbounded length (serde_json is built with
//! `arbitrary_precision`); rationals become `"p/q"` strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub fn int_to_json(x: &BigInt) -> serde_json::Value {
    serde_json::Value::Number(x.to_string().parse().expect("decimal integer"))
}

pub fn int_from_json(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => n.to_string().parse().ok(),
        serde_json::Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
}

pub fn rat_to_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn rat_from_str(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

pub mod int {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        int_to_json(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        int_from_json(&v).ok_or_else(|| D::Error::custom("expected an integer"))
    }
}

pub mod int_vec {
    use super::*;

    pub fn serialize<S: Serializer>(x: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        x.iter().map(int_to_json).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let v = Vec::<serde_json::Value>::deserialize(d)?;
        v.iter()
            .map(|x| int_from_json(x).ok_or_else(|| D::Error::custom("expected an integer")))
            .collect()
    }
}

pub mod rat {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        rat_to_string(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let v = String::deserialize(d)?;
        rat_from_str(&v).ok_or_else(|| D::Error::custom("expected a rational p/q"))
    }
}

/// `Option<Vec<Vec<BigInt>>>`, written as nested arrays or `null`.
pub mod opt_int_rows {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Option<Vec<Vec<BigInt>>>, s: S) -> Result<S::Ok, S::Error> {
        x.as_ref()
            .map(|rows| {
                rows.iter()
                    .map(|r| r.iter().map(int_to_json).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            })
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<Vec<BigInt>>>, D::Error> {
        let v = Option::<Vec<Vec<serde_json::Value>>>::deserialize(d)?;
        v.map(|rows| {
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|x| int_from_json(x).ok_or_else(|| D::Error::custom("expected an integer")))
                        .collect()
                })
                .collect()
        })
        .transpose()
    }
}
