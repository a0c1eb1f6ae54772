//! Big integers on the JSON boundary.
//!
//! Counts are always written as decimal strings so that values beyond the
//! 53-bit range of JSON numbers survive a round trip. On input, plain JSON
//! integers are accepted too.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::Deserialize;
use serde_json::Value;

/// Why a JSON value could not be read as an integer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecimalError {
    #[error("expected an integer, found the non-integral number {0}")]
    NonInteger(String),
    #[error("expected a decimal integer, found {0}")]
    Malformed(String),
}

pub fn parse_big(s: &str) -> Result<BigInt, DecimalError> {
    let t = s.trim();
    if let Ok(v) = BigInt::from_str(t) {
        return Ok(v);
    }
    // "12.5" and "1e3" are numbers, just not integers.
    if t.parse::<f64>().is_ok() {
        Err(DecimalError::NonInteger(t.to_string()))
    } else {
        Err(DecimalError::Malformed(t.to_string()))
    }
}

/// Reads a JSON string or JSON number as an integer.
pub fn big_from_value(v: &Value) -> Result<BigInt, DecimalError> {
    match v {
        Value::String(s) => parse_big(s),
        // serde_json keeps the literal text for integers that fit i64/u64;
        // anything else round-trips through its display form.
        Value::Number(n) => parse_big(&n.to_string()),
        other => Err(DecimalError::Malformed(other.to_string())),
    }
}

pub fn bigs_from_value(v: &Value) -> Result<Vec<BigInt>, DecimalError> {
    match v {
        Value::Array(items) => items.iter().map(big_from_value).collect(),
        other => Err(DecimalError::Malformed(other.to_string())),
    }
}

pub fn to_strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

/// `#[serde(with = "decimal::big")]`
pub mod big {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let v = Value::deserialize(d)?;
        big_from_value(&v).map_err(de::Error::custom)
    }
}

/// `#[serde(with = "decimal::big_vec")]`
pub mod big_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Vec<BigInt>;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("an array of decimal integers")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                let mut out = Vec::new();
                while let Some(v) = seq.next_element::<Value>()? {
                    out.push(big_from_value(&v).map_err(de::Error::custom)?);
                }
                Ok(out)
            }
        }
        d.deserialize_seq(V)
    }
}
