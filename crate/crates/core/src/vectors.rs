//! f-, h- and g-vectors of simplicial polytopes and the exact transforms
//! between them.
//!
//! Indexing follows the rank convention: `f_i` counts rank-`i` faces, that
//! is faces of dimension `i - 1`, for `1 <= i <= d`. The empty face
//! `f_0 = 1` is implicit and never stored. Likewise `g_0 = 1` is implicit in
//! a [`GVector`]. An [`HVector`] stores all of `h_0..h_d`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::decimal;
use crate::macaulay::binomial_u64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VectorError {
    #[error("vector must have at least one entry")]
    Empty,
    #[error("entry {index} is negative")]
    NegativeEntry { index: usize },
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("h_0 must be 1 to match the implicit empty face, found {0}")]
    LeadingCoefficient(BigInt),
    #[error("operation requires d = {expected}, found d = {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("denominator is zero")]
    ZeroDenominator,
}

/// Face numbers `(f_1, ..., f_d)` in the rank convention.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FVectorRepr", into = "FVectorRepr")]
pub struct FVector {
    entries: Vec<BigInt>,
}

impl FVector {
    pub fn new(entries: Vec<BigInt>) -> Result<Self, VectorError> {
        if entries.is_empty() {
            return Err(VectorError::Empty);
        }
        if let Some(index) = entries.iter().position(|v| v.is_negative()) {
            return Err(VectorError::NegativeEntry { index: index + 1 });
        }
        Ok(FVector { entries })
    }

    pub fn from_u64s(entries: &[u64]) -> Result<Self, VectorError> {
        Self::new(entries.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// f-vector of the `d`-simplex: `f_i = C(d+1, i)`.
    pub fn simplex(d: usize) -> Self {
        let n = d as u64 + 1;
        FVector {
            entries: (1..=d as u64).map(|i| binomial_u64(n, i)).collect(),
        }
    }

    pub fn d(&self) -> usize {
        self.entries.len()
    }

    /// `f_1..f_d`; index 0 of the slice is `f_1`.
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// `f_i` for `0 <= i <= d`, with `f_0 = 1`.
    pub fn get(&self, i: usize) -> BigInt {
        if i == 0 {
            BigInt::one()
        } else {
            self.entries[i - 1].clone()
        }
    }

    /// `N(v) = sum_i ceil(lg2 f_i)`, the bit size of the encoding.
    pub fn bit_size(&self) -> u64 {
        bit_size(&self.entries)
    }

    /// The vector read backwards, `(f_d, ..., f_1)`.
    pub fn reversed(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.reverse();
        FVector { entries }
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.entries)
    }
}

/// `(h_0, ..., h_d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "HVectorRepr", into = "HVectorRepr")]
pub struct HVector {
    entries: Vec<BigInt>,
}

impl HVector {
    pub fn new(entries: Vec<BigInt>) -> Result<Self, VectorError> {
        if entries.len() < 2 {
            return Err(VectorError::Empty);
        }
        Ok(HVector { entries })
    }

    pub fn from_i64s(entries: &[i64]) -> Result<Self, VectorError> {
        Self::new(entries.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn d(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// `h_i = h_{d-i}` for all `i`.
    pub fn is_palindromic(&self) -> bool {
        let e = &self.entries;
        e.iter().eq(e.iter().rev())
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.entries)
    }
}

/// `(g_1, ..., g_k)` with `g_0 = 1` implicit. Also used for points of the
/// nonnegative orthant that the g-vectors of simplicial polytopes span.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "GVectorRepr", into = "GVectorRepr")]
pub struct GVector {
    entries: Vec<BigInt>,
}

impl GVector {
    /// May be empty: polytopes of dimension `d <= 1` have `floor(d/2) = 0`.
    pub fn new(entries: Vec<BigInt>) -> Result<Self, VectorError> {
        Ok(GVector { entries })
    }

    pub fn from_i64s(entries: &[i64]) -> Result<Self, VectorError> {
        Self::new(entries.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn zeros(k: usize) -> Self {
        GVector {
            entries: vec![BigInt::zero(); k],
        }
    }

    pub fn k(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// `g_i` for `1 <= i <= k`.
    pub fn get(&self, i: usize) -> &BigInt {
        &self.entries[i - 1]
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.entries
    }

    /// Sum of absolute values.
    pub fn l1_norm(&self) -> BigInt {
        self.entries.iter().map(|v| v.abs()).sum()
    }

    /// `||self - other||_1`. Panics on length mismatch.
    pub fn l1_distance(&self, other: &GVector) -> BigInt {
        assert_eq!(self.k(), other.k(), "l1 distance of vectors of unequal length");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).abs())
            .sum()
    }

    pub fn scaled(&self, t: &BigInt) -> GVector {
        GVector {
            entries: self.entries.iter().map(|v| v * t).collect(),
        }
    }
}

impl fmt::Display for GVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.entries)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, v: &[BigInt]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// `sum ceil(lg2 v)` over the entries; zeros and ones contribute nothing.
pub fn bit_size(values: &[BigInt]) -> u64 {
    values
        .iter()
        .map(|v| {
            if v.abs() <= BigInt::one() {
                0
            } else {
                (v.abs() - 1u32).bits()
            }
        })
        .sum()
}

/// `h_k = sum_{i<=k} (-1)^(k-i) C(d-i, k-i) f_i`, which is the coefficient
/// form of `sum h_k x^(d-k) = sum f_i (x-1)^(d-i)`.
pub fn f_to_h(f: &FVector) -> HVector {
    let d = f.d();
    let entries = (0..=d)
        .map(|k| {
            (0..=k).fold(BigInt::zero(), |acc, i| {
                let term = binomial_u64((d - i) as u64, (k - i) as u64) * f.get(i);
                if (k - i) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect();
    HVector { entries }
}

/// `f_i = sum_{k<=i} C(d-k, i-k) h_k`. Requires `h_0 = 1`.
pub fn h_to_f(h: &HVector) -> Result<FVector, VectorError> {
    if !h.entries[0].is_one() {
        return Err(VectorError::LeadingCoefficient(h.entries[0].clone()));
    }
    let d = h.d();
    let entries: Vec<BigInt> = (1..=d)
        .map(|i| {
            (0..=i)
                .map(|k| binomial_u64((d - k) as u64, (i - k) as u64) * &h.entries[k])
                .sum()
        })
        .collect();
    // A valid h can still produce a negative f (e.g. h = (1,-5,1));
    // that is not a face-count vector.
    FVector::new(entries)
}

/// `g_i = h_i - h_{i-1}` for `1 <= i <= floor(d/2)`. Entries past the middle
/// are ignored; symmetry is not checked here.
pub fn h_to_g(h: &HVector) -> GVector {
    let k = h.d() / 2;
    let e = &h.entries;
    GVector {
        entries: (1..=k).map(|i| &e[i] - &e[i - 1]).collect(),
    }
}

/// Rebuilds the palindromic h-vector from its first half of differences.
pub fn g_to_h(g: &GVector, d: usize) -> Result<HVector, VectorError> {
    let half = d / 2;
    if g.k() != half {
        return Err(VectorError::LengthMismatch {
            expected: half,
            found: g.k(),
        });
    }
    let mut entries = vec![BigInt::zero(); d + 1];
    entries[0] = BigInt::one();
    for i in 1..=half {
        entries[i] = &entries[i - 1] + g.get(i);
    }
    for i in half + 1..=d {
        entries[i] = entries[d - i].clone();
    }
    Ok(HVector { entries })
}

/// `(f_2 + f_3) / (f_1 + f_4)` of a 4-dimensional f-vector in the rank
/// convention. In dimension indexing this is `(f_1 + f_2) / (f_0 + f_3)`.
pub fn fatness(f: &FVector) -> Result<BigRational, VectorError> {
    if f.d() != 4 {
        return Err(VectorError::DimensionMismatch {
            expected: 4,
            found: f.d(),
        });
    }
    let num = f.get(2) + f.get(3);
    let den = f.get(1) + f.get(4);
    if den.is_zero() {
        return Err(VectorError::ZeroDenominator);
    }
    Ok(BigRational::new(num, den))
}

#[derive(Serialize, Deserialize)]
struct FVectorRepr {
    d: usize,
    #[serde(with = "decimal::big_vec")]
    f: Vec<BigInt>,
}

impl TryFrom<FVectorRepr> for FVector {
    type Error = VectorError;
    fn try_from(r: FVectorRepr) -> Result<Self, Self::Error> {
        if r.f.len() != r.d {
            return Err(VectorError::LengthMismatch {
                expected: r.d,
                found: r.f.len(),
            });
        }
        FVector::new(r.f)
    }
}

impl From<FVector> for FVectorRepr {
    fn from(v: FVector) -> Self {
        FVectorRepr {
            d: v.d(),
            f: v.entries,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct HVectorRepr {
    d: usize,
    #[serde(with = "decimal::big_vec")]
    h: Vec<BigInt>,
}

impl TryFrom<HVectorRepr> for HVector {
    type Error = VectorError;
    fn try_from(r: HVectorRepr) -> Result<Self, Self::Error> {
        if r.h.len() != r.d + 1 {
            return Err(VectorError::LengthMismatch {
                expected: r.d + 1,
                found: r.h.len(),
            });
        }
        HVector::new(r.h)
    }
}

impl From<HVector> for HVectorRepr {
    fn from(v: HVector) -> Self {
        HVectorRepr {
            d: v.d(),
            h: v.entries,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GVectorRepr {
    k: usize,
    #[serde(with = "decimal::big_vec")]
    g: Vec<BigInt>,
}

impl TryFrom<GVectorRepr> for GVector {
    type Error = VectorError;
    fn try_from(r: GVectorRepr) -> Result<Self, Self::Error> {
        if r.g.len() != r.k {
            return Err(VectorError::LengthMismatch {
                expected: r.k,
                found: r.g.len(),
            });
        }
        GVector::new(r.g)
    }
}

impl From<GVector> for GVectorRepr {
    fn from(v: GVector) -> Self {
        GVectorRepr {
            k: v.k(),
            g: v.entries,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: &[u64]) -> FVector {
        FVector::from_u64s(v).unwrap()
    }

    fn h(v: &[i64]) -> HVector {
        HVector::from_i64s(v).unwrap()
    }

    fn g(v: &[i64]) -> GVector {
        GVector::from_i64s(v).unwrap()
    }

    /// Independent route: expand sum f_i (x-1)^(d-i) as a dense polynomial
    /// by repeated multiplication, then read coefficients of x^(d-k).
    fn h_by_expansion(fv: &FVector) -> Vec<BigInt> {
        let d = fv.d();
        let mut total = vec![BigInt::zero(); d + 1];
        for i in 0..=d {
            let mut poly = vec![BigInt::one()];
            for _ in 0..d - i {
                let mut next = vec![BigInt::zero(); poly.len() + 1];
                for (j, c) in poly.iter().enumerate() {
                    next[j + 1] += c;
                    next[j] -= c;
                }
                poly = next;
            }
            for (j, c) in poly.iter().enumerate() {
                total[j] += c * fv.get(i);
            }
        }
        total.reverse();
        total
    }

    #[test]
    fn f_to_h_examples() {
        assert_eq!(f_to_h(&f(&[5, 10, 10, 5])), h(&[1, 1, 1, 1, 1]));
        assert_eq!(f_to_h(&f(&[6, 12, 8])), h(&[1, 3, 3, 1]));
        assert_eq!(f_to_h(&f(&[6, 13, 8])), h(&[1, 3, 4, 0]));
    }

    #[test]
    fn f_to_h_matches_polynomial_expansion() {
        for v in [&[6u64, 13, 8][..], &[7, 3, 100, 4, 9], &[1], &[0, 0, 0]] {
            let fv = f(v);
            assert_eq!(f_to_h(&fv).entries(), &h_by_expansion(&fv)[..]);
        }
    }

    #[test]
    fn h_to_f_examples() {
        assert_eq!(h_to_f(&h(&[1, 1, 1, 1, 1])).unwrap(), f(&[5, 10, 10, 5]));
        assert_eq!(h_to_f(&h(&[1, 3, 3, 1])).unwrap(), f(&[6, 12, 8]));
        for m in 3..=6u64 {
            let hv = h(&[1, m as i64 - 2, 1]);
            assert_eq!(h_to_f(&hv).unwrap(), f(&[m, m]));
        }
    }

    #[test]
    fn h_to_f_rejects_bad_leading_entry() {
        assert_eq!(
            h_to_f(&h(&[2, 3, 3, 1])),
            Err(VectorError::LeadingCoefficient(BigInt::from(2)))
        );
    }

    #[test]
    fn h_to_g_examples() {
        assert_eq!(h_to_g(&h(&[1, 1, 1, 1, 1])), g(&[0, 0]));
        assert_eq!(h_to_g(&h(&[1, 3, 3, 1])), g(&[2]));
        assert_eq!(h_to_g(&h(&[1, 4, 6, 4, 1])), g(&[3, 2]));
    }

    #[test]
    fn g_to_h_examples() {
        assert_eq!(g_to_h(&g(&[0, 0]), 4).unwrap(), h(&[1, 1, 1, 1, 1]));
        assert_eq!(g_to_h(&g(&[2]), 3).unwrap(), h(&[1, 3, 3, 1]));
        assert_eq!(g_to_h(&g(&[3, 2]), 5).unwrap(), h(&[1, 4, 6, 6, 4, 1]));
        assert_eq!(
            g_to_h(&g(&[3, 2]), 3),
            Err(VectorError::LengthMismatch { expected: 1, found: 2 })
        );
    }

    #[test]
    fn fatness_examples() {
        let two = BigRational::from_integer(BigInt::from(2));
        let seven_thirds = BigRational::new(BigInt::from(7), BigInt::from(3));
        assert_eq!(fatness(&f(&[5, 10, 10, 5])).unwrap(), two);
        assert_eq!(fatness(&f(&[16, 32, 24, 8])).unwrap(), seven_thirds);
        assert_eq!(fatness(&f(&[8, 24, 32, 16])).unwrap(), seven_thirds);
        assert!(matches!(
            fatness(&f(&[6, 12, 8])),
            Err(VectorError::DimensionMismatch { expected: 4, found: 3 })
        ));
        assert_eq!(fatness(&f(&[0, 1, 1, 0])), Err(VectorError::ZeroDenominator));
    }

    #[test]
    fn simplex_maps_to_all_ones() {
        for d in 1..=20 {
            let hv = f_to_h(&FVector::simplex(d));
            assert!(hv.entries().iter().all(|x| x.is_one()), "d = {d}");
        }
    }

    #[test]
    fn palindrome_detection() {
        assert!(f_to_h(&f(&[6, 12, 8])).is_palindromic());
        assert!(!f_to_h(&f(&[6, 13, 8])).is_palindromic());
    }

    #[test]
    fn bit_size_counts_ceil_log2() {
        // ceil(lg2): 1 -> 0, 2 -> 1, 5 -> 3, 8 -> 3, 9 -> 4
        assert_eq!(f(&[1, 2, 5, 8, 9]).bit_size(), 1 + 3 + 3 + 4);
    }

    #[test]
    fn negative_f_is_rejected() {
        assert_eq!(
            FVector::new(vec![BigInt::from(3), BigInt::from(-1)]),
            Err(VectorError::NegativeEntry { index: 2 })
        );
    }

    #[test]
    fn json_uses_decimal_strings() {
        let v = f(&[5, 10, 10, 5]);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"{"d":4,"f":["5","10","10","5"]}"#);
        let back: FVector = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<FVector>(r#"{"d":3,"f":["5"]}"#).is_err());
    }
}
