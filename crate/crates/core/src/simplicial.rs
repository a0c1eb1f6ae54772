//! Deciding whether an integer vector is the f-vector of a simplicial
//! polytope, plus the g-vector arithmetic of connected sums and the position
//! of a g-vector in the nonnegative orthant.
//!
//! A vector is accepted exactly when its h-vector is palindromic and the
//! first half of its successive differences is an M-sequence. Each step is a
//! linear transform or a binary search, so the decision runs in time
//! polynomial in the bit size of the input.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::decimal::{self, DecimalError};
use crate::macaulay::{self, approximate_point, MSequenceViolation, OrthantPoint};
use crate::vectors::{f_to_h, h_to_g, FVector, GVector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DeciderError {
    #[error("g-vectors have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("not an M-sequence: {0}")]
    NotMSequence(MSequenceViolation),
    #[error("the origin spans no ray")]
    ZeroDirection,
    #[error("angle tolerance must be positive")]
    NonPositiveTolerance,
    #[error("no scale up to {cap} brings the angle below the tolerance")]
    ScaleCapExceeded { cap: u64 },
}

/// Why a vector was rejected. Only the first failure is reported.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum RejectReason {
    /// A negative entry, in the input f-vector (`vector = "f"`) or in the
    /// derived g-vector (`vector = "g"`).
    NegativeEntry { vector: char, index: usize },
    NonPalindromicH {
        #[serde(with = "decimal::big_vec")]
        h: Vec<BigInt>,
    },
    /// An entry that is a number but not an integer.
    NonInteger { index: usize, value: String },
    /// `g_{index+1} > g_index^<index>`.
    MacaulayViolation { index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Accepted { certificate: GVector },
    Rejected { reason: RejectReason },
}

impl Decision {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Decision::Accepted { .. })
    }

    pub fn certificate(&self) -> Option<&GVector> {
        match self {
            Decision::Accepted { certificate } => Some(certificate),
            Decision::Rejected { .. } => None,
        }
    }

    pub fn reason(&self) -> Option<&RejectReason> {
        match self {
            Decision::Accepted { .. } => None,
            Decision::Rejected { reason } => Some(reason),
        }
    }

    /// `{"verdict":"accepted","g":[...]}` or
    /// `{"verdict":"rejected","reason":"...", ...}`.
    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::{json, Map, Value};
        match self {
            Decision::Accepted { certificate } => json!({
                "verdict": "accepted",
                "g": decimal::to_strings(certificate.entries()),
            }),
            Decision::Rejected { reason } => {
                let mut out = Map::new();
                out.insert("verdict".into(), Value::from("rejected"));
                if let Value::Object(fields) = serde_json::to_value(reason).expect("serializable") {
                    out.extend(fields);
                }
                Value::Object(out)
            }
        }
    }
}

/// Decides membership of `v` in the set of f-vectors of simplicial
/// `d`-polytopes, `d = v.d()`.
pub fn decide_simplicial_f(v: &FVector) -> Decision {
    let h = f_to_h(v);
    if !h.is_palindromic() {
        return Decision::Rejected {
            reason: RejectReason::NonPalindromicH {
                h: h.entries().to_vec(),
            },
        };
    }
    let g = h_to_g(&h);
    match macaulay::is_m_sequence(&g) {
        Ok(()) => Decision::Accepted { certificate: g },
        Err(MSequenceViolation::Negative { index }) => Decision::Rejected {
            reason: RejectReason::NegativeEntry { vector: 'g', index },
        },
        Err(MSequenceViolation::Macaulay { index, .. }) => Decision::Rejected {
            reason: RejectReason::MacaulayViolation { index },
        },
    }
}

/// Same decision on unvalidated JSON entries, so that negative and
/// non-integral inputs are reported as verdicts rather than parse errors.
/// Anything that is not a number at all is an input error.
pub fn decide_simplicial_json(entries: &[serde_json::Value]) -> Result<Decision, DecimalError> {
    let mut values = Vec::with_capacity(entries.len());
    for (n, e) in entries.iter().enumerate() {
        match decimal::big_from_value(e) {
            Ok(v) => values.push(v),
            Err(DecimalError::NonInteger(s)) => {
                return Ok(Decision::Rejected {
                    reason: RejectReason::NonInteger {
                        index: n + 1,
                        value: s,
                    },
                })
            }
            Err(err) => return Err(err),
        }
    }
    if let Some(p) = values.iter().position(|v| v.is_negative()) {
        return Ok(Decision::Rejected {
            reason: RejectReason::NegativeEntry {
                vector: 'f',
                index: p + 1,
            },
        });
    }
    match FVector::new(values) {
        Ok(f) => Ok(decide_simplicial_f(&f)),
        Err(e) => Err(DecimalError::Malformed(e.to_string())),
    }
}

/// g-vector of a connected sum: coordinatewise addition.
pub fn connected_sum_g(g1: &GVector, g2: &GVector) -> Result<GVector, DeciderError> {
    if g1.k() != g2.k() {
        return Err(DeciderError::LengthMismatch(g1.k(), g2.k()));
    }
    let sum = g1
        .entries()
        .iter()
        .zip(g2.entries())
        .map(|(a, b)| a + b)
        .collect();
    Ok(GVector::new(sum).expect("lengths checked"))
}

/// Position of an M-sequence in the nonnegative orthant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum BoundaryClass {
    /// The origin, the g-vector of the simplex.
    Apex,
    /// `(a, 0, ..., 0)` with `a > 0`: the ray of the 1-stacked polytopes.
    ExtremalRay,
    /// `(a_1, ..., a_k, 0, ..., 0)` with all `a_i > 0` and `1 < k <` length.
    Boundary { k: usize },
    /// No zero entry.
    Interior,
}

/// Zeros inside an M-sequence can only form a tail, so every M-sequence is
/// either strictly positive or of the form `(a_1..a_k, 0..0)`.
pub fn classify_boundary(g: &GVector) -> Result<BoundaryClass, DeciderError> {
    macaulay::is_m_sequence(g).map_err(DeciderError::NotMSequence)?;
    let support = g.entries().iter().take_while(|v| v.is_positive()).count();
    Ok(match support {
        s if s == g.k() && s > 0 => BoundaryClass::Interior,
        0 => BoundaryClass::Apex,
        1 => BoundaryClass::ExtremalRay,
        k => BoundaryClass::Boundary { k },
    })
}

/// `sin^2` of the angle between two nonzero vectors, exactly.
pub fn sin2_angle(u: &[BigInt], v: &[BigInt]) -> BigRational {
    let dot: BigInt = u.iter().zip(v).map(|(a, b)| a * b).sum();
    let uu: BigInt = u.iter().map(|a| a * a).sum();
    let vv: BigInt = v.iter().map(|a| a * a).sum();
    let den = &uu * &vv;
    BigRational::new(&den - &dot * &dot, den)
}

/// Angle in radians between two nonzero vectors of the nonnegative orthant.
pub fn angle(u: &[BigInt], v: &[BigInt]) -> f64 {
    let s2 = sin2_angle(u, v).to_f64().unwrap_or(0.0).clamp(0.0, 1.0);
    s2.sqrt().asin()
}

/// Finds an M-sequence whose direction from the origin is within `eps`
/// radians of `x`, by approximating `t x` for `t = 1, 2, 4, ...` up to
/// `max_scale`. The relative error of the approximation shrinks like
/// `t^(-1/k)`, so the loop terminates for every positive `eps`.
pub fn ray_density_witness(
    x: &OrthantPoint,
    eps: f64,
    max_scale: u64,
) -> Result<(GVector, f64), DeciderError> {
    if !(eps > 0.0) {
        return Err(DeciderError::NonPositiveTolerance);
    }
    if x.is_origin() {
        return Err(DeciderError::ZeroDirection);
    }
    let mut t = BigInt::one();
    let cap = BigInt::from(max_scale);
    while t <= cap {
        let g = approximate_point(&x.scaled(&t));
        if !g.entries().iter().all(Zero::is_zero) {
            let theta = angle(g.entries(), x.coords());
            if theta < eps {
                return Ok((g, theta));
            }
        }
        t <<= 1u32;
    }
    Err(DeciderError::ScaleCapExceeded { cap: max_scale })
}
