use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize};

use crate::decimal;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FlagError {
    #[error("d = {0} is too large for a dense flag vector")]
    TooLarge(usize),
    #[error("expected 2^{d} = {expected} counts, found {found}")]
    WrongLength { d: usize, expected: usize, found: usize },
    #[error("f_S for S = {mask:#b} is negative")]
    Negative { mask: usize },
    #[error("f of the empty rank set must be 1, found {0}")]
    EmptyChainCount(BigInt),
    #[error("subset key {0:?} is not a bitmask below 2^d")]
    BadKey(String),
    #[error(transparent)]
    Decimal(#[from] decimal::DecimalError),
}

/// Flag f-vector `(f_S)_{S ⊆ [d]}`. Subset `S` is stored at the bitmask with
/// bit `i - 1` set for each rank `i ∈ S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlagVector {
    d: usize,
    counts: Vec<BigInt>,
}

impl FlagVector {
    pub fn new(d: usize, counts: Vec<BigInt>) -> Result<Self, FlagError> {
        if d > 20 {
            return Err(FlagError::TooLarge(d));
        }
        let expected = 1usize << d;
        if counts.len() != expected {
            return Err(FlagError::WrongLength {
                d,
                expected,
                found: counts.len(),
            });
        }
        if let Some(mask) = counts.iter().position(|c| c.is_negative()) {
            return Err(FlagError::Negative { mask });
        }
        if !counts[0].is_one() {
            return Err(FlagError::EmptyChainCount(counts[0].clone()));
        }
        Ok(FlagVector { d, counts })
    }

    pub fn from_u64s(d: usize, counts: &[u64]) -> Result<Self, FlagError> {
        Self::new(d, counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn get(&self, mask: usize) -> BigInt {
        self.counts[mask].clone()
    }

    /// `f_S` for `S` given as a list of ranks.
    pub fn get_set(&self, ranks: &[usize]) -> BigInt {
        self.get(ranks.iter().fold(0, |m, r| m | 1 << (r - 1)))
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// Coordinatewise `self <= other`; false for different `d`.
    pub fn le(&self, other: &FlagVector) -> bool {
        self.d == other.d && self.counts.iter().zip(&other.counts).all(|(a, b)| a <= b)
    }
}

/// `{"d": 2, "counts": {"0": "1", "1": "3", ...}}`, keys in mask order.
impl Serialize for FlagVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Counts<'a>(&'a [BigInt]);
        impl Serialize for Counts<'_> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for (mask, c) in self.0.iter().enumerate() {
                    map.serialize_entry(&mask.to_string(), &c.to_string())?;
                }
                map.end()
            }
        }
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("d", &self.d)?;
        map.serialize_entry("counts", &Counts(&self.counts))?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for FlagVector {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            d: usize,
            counts: BTreeMap<String, serde_json::Value>,
        }
        let r = Repr::deserialize(de)?;
        from_parts(r.d, &r.counts).map_err(serde::de::Error::custom)
    }
}

fn from_parts(d: usize, raw: &BTreeMap<String, serde_json::Value>) -> Result<FlagVector, FlagError> {
    if d > 20 {
        return Err(FlagError::TooLarge(d));
    }
    let size = 1usize << d;
    let mut counts: Vec<Option<BigInt>> = vec![None; size];
    for (k, v) in raw {
        let mask: usize = k.trim().parse().map_err(|_| FlagError::BadKey(k.clone()))?;
        if mask >= size {
            return Err(FlagError::BadKey(k.clone()));
        }
        counts[mask] = Some(decimal::big_from_value(v)?);
    }
    let found = counts.iter().filter(|c| c.is_some()).count();
    if found != size {
        return Err(FlagError::WrongLength {
            d,
            expected: size,
            found,
        });
    }
    FlagVector::new(d, counts.into_iter().map(Option::unwrap).collect())
}
