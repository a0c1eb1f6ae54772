//! Macaulay representations, pseudo-powers and M-sequences.
//!
//! Every positive integer `a` has a unique `i`-th Macaulay representation
//!
//! ```text
//! a = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j),   a_i > ... > a_j >= j >= 1
//! ```
//!
//! found greedily. The pseudo-power `a^<i>` bumps both indices of every
//! term. A sequence `(1, g_1, ..., g_k)` is an M-sequence when all entries
//! are nonnegative and `g_{i+1} <= g_i^<i>` for every `i`. All searches here
//! are binary searches over monotone binomial functions, so their cost is
//! polynomial in the bit length of the input.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::decimal;
use crate::vectors::GVector;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MacaulayError {
    #[error("Macaulay representations exist only for positive integers, got {0}")]
    NonPositive(BigInt),
    #[error("index must be at least 1")]
    ZeroIndex,
    #[error("coordinate index {index} is outside 1..={k}")]
    IndexOutOfRange { index: usize, k: usize },
    #[error("orthant coordinate {index} is negative")]
    NegativeCoordinate { index: usize },
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: &BigInt, k: u64) -> BigInt {
    if n.is_negative() || BigInt::from(k) > *n {
        return BigInt::zero();
    }
    // C(n, k) = C(n, n - k); only worth it when n - k is a small number.
    let k = match (n - BigInt::from(k)).to_u64() {
        Some(rest) if rest < k => rest,
        _ => k,
    };
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

pub fn binomial_u64(n: u64, k: u64) -> BigInt {
    binomial(&BigInt::from(n), k)
}

/// The `i`-th Macaulay representation of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacaulayRep {
    pub index: usize,
    /// `(a_t, t)` pairs, `t` strictly decreasing from `index`.
    pub terms: Vec<MacaulayTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacaulayTerm {
    #[serde(with = "decimal::big")]
    pub top: BigInt,
    pub bottom: usize,
}

impl MacaulayRep {
    pub fn value(&self) -> BigInt {
        self.terms
            .iter()
            .map(|t| binomial(&t.top, t.bottom as u64))
            .sum()
    }

    /// `sum C(a_t + 1, t + 1)`.
    pub fn pseudo_power(&self) -> BigInt {
        self.terms
            .iter()
            .map(|t| binomial(&(&t.top + 1u32), t.bottom as u64 + 1))
            .sum()
    }

    /// Checks the shape constraints: tops strictly decreasing, bottoms
    /// stepping down by one from `index`, and `top >= bottom >= 1`.
    pub fn is_well_formed(&self) -> bool {
        if self.terms.is_empty() {
            return false;
        }
        self.terms.iter().enumerate().all(|(n, t)| {
            t.bottom >= 1 && t.bottom + n == self.index && t.top >= BigInt::from(t.bottom)
        }) && self.terms.windows(2).all(|w| w[0].top > w[1].top)
    }
}

impl fmt::Display for MacaulayRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, t) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "C({},{})", t.top, t.bottom)?;
        }
        Ok(())
    }
}

/// Largest `n` with `C(n, t) <= bound`, for `t >= 1` and `bound >= 1`.
/// `C(t, t) = 1 <= bound` and `C(bound + t, t) > bound`, so the answer lies
/// in `[t, bound + t)`.
fn largest_top(bound: &BigInt, t: u64) -> BigInt {
    let mut lo = BigInt::from(t);
    let mut hi = bound + t;
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) >> 1u32;
        if binomial(&mid, t) <= *bound {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

pub fn macaulay_rep(a: &BigInt, i: usize) -> Result<MacaulayRep, MacaulayError> {
    if i == 0 {
        return Err(MacaulayError::ZeroIndex);
    }
    if !a.is_positive() {
        return Err(MacaulayError::NonPositive(a.clone()));
    }
    let mut rest = a.clone();
    let mut terms = Vec::new();
    let mut t = i;
    while rest.is_positive() {
        // t cannot reach 0 with a positive remainder: at t = 1 the greedy
        // step takes C(rest, 1) = rest.
        debug_assert!(t >= 1);
        let top = largest_top(&rest, t as u64);
        rest -= binomial(&top, t as u64);
        terms.push(MacaulayTerm { top, bottom: t });
        t -= 1;
    }
    Ok(MacaulayRep { index: i, terms })
}

/// `a^<i>`; `0^<i> = 0` and negative inputs give 0 as well.
pub fn pseudo_power(a: &BigInt, i: usize) -> Result<BigInt, MacaulayError> {
    if i == 0 {
        return Err(MacaulayError::ZeroIndex);
    }
    if !a.is_positive() {
        return Ok(BigInt::zero());
    }
    Ok(macaulay_rep(a, i)?.pseudo_power())
}

/// First reason a sequence fails to be an M-sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MSequenceViolation {
    /// `g_index < 0`.
    Negative { index: usize },
    /// `g_{index+1} > g_index^<index>`.
    Macaulay {
        index: usize,
        #[serde(with = "decimal::big")]
        bound: BigInt,
        #[serde(with = "decimal::big")]
        found: BigInt,
    },
}

impl MSequenceViolation {
    pub fn index(&self) -> usize {
        match self {
            MSequenceViolation::Negative { index } | MSequenceViolation::Macaulay { index, .. } => {
                *index
            }
        }
    }
}

impl fmt::Display for MSequenceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MSequenceViolation::Negative { index } => write!(f, "g_{index} is negative"),
            MSequenceViolation::Macaulay {
                index,
                bound,
                found,
            } => write!(
                f,
                "g_{} = {found} exceeds g_{index}^<{index}> = {bound}",
                index + 1
            ),
        }
    }
}

/// Whether `(1, g_1, ..., g_k)` is an M-sequence. Nothing constrains `g_1`
/// beyond nonnegativity.
pub fn is_m_sequence(g: &GVector) -> Result<(), MSequenceViolation> {
    let e = g.entries();
    if let Some(p) = e.iter().position(|v| v.is_negative()) {
        return Err(MSequenceViolation::Negative { index: p + 1 });
    }
    for i in 1..e.len() {
        let bound = pseudo_power(&e[i - 1], i).expect("index is positive");
        if e[i] > bound {
            return Err(MSequenceViolation::Macaulay {
                index: i,
                bound,
                found: e[i].clone(),
            });
        }
    }
    Ok(())
}

/// Smallest `m >= 0` with `m^<i> >= target`. Since `m^<i> >= m`, the search
/// range is `[0, target]`.
pub fn least_preimage(target: &BigInt, i: usize) -> BigInt {
    if !target.is_positive() {
        return BigInt::zero();
    }
    let pp = |m: &BigInt| pseudo_power(m, i).expect("index is positive");
    let mut lo = BigInt::zero(); // pp(lo) < target
    let mut hi = target.clone(); // pp(hi) >= target
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) >> 1u32;
        if pp(&mid) >= *target {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// The reverse-lexicographically least M-sequence of length `k` whose
/// `index`-th entry is `a` and whose later entries are zero. Built backwards
/// from `index`, each earlier entry is the least value whose pseudo-power
/// still covers the next one.
pub fn least_msequence_with_coordinate(
    index: usize,
    a: &BigInt,
    k: usize,
) -> Result<GVector, MacaulayError> {
    if index == 0 || index > k {
        return Err(MacaulayError::IndexOutOfRange { index, k });
    }
    if a.is_negative() {
        return Err(MacaulayError::NegativeCoordinate { index });
    }
    let mut entries = vec![BigInt::zero(); k];
    entries[index - 1] = a.clone();
    for t in (1..index).rev() {
        entries[t - 1] = least_preimage(&entries[t], t);
    }
    Ok(GVector::new(entries).expect("nonempty"))
}

/// A point of the nonnegative integer orthant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<serde_json::Value>", into = "Vec<String>")]
pub struct OrthantPoint {
    coords: Vec<BigInt>,
}

impl OrthantPoint {
    pub fn new(coords: Vec<BigInt>) -> Result<Self, MacaulayError> {
        if coords.is_empty() {
            return Err(MacaulayError::IndexOutOfRange { index: 1, k: 0 });
        }
        if let Some(p) = coords.iter().position(|v| v.is_negative()) {
            return Err(MacaulayError::NegativeCoordinate { index: p + 1 });
        }
        Ok(OrthantPoint { coords })
    }

    pub fn from_u64s(coords: &[u64]) -> Result<Self, MacaulayError> {
        Self::new(coords.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// `x(a) = (0, ..., 0, a)` in `k` coordinates.
    pub fn last_axis(k: usize, a: BigInt) -> Result<Self, MacaulayError> {
        let mut coords = vec![BigInt::zero(); k];
        if let Some(last) = coords.last_mut() {
            *last = a;
        }
        Self::new(coords)
    }

    pub fn k(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn scaled(&self, t: &BigInt) -> OrthantPoint {
        OrthantPoint {
            coords: self.coords.iter().map(|c| c * t).collect(),
        }
    }

    pub fn as_gvector(&self) -> GVector {
        GVector::new(self.coords.clone()).expect("nonempty")
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl TryFrom<Vec<serde_json::Value>> for OrthantPoint {
    type Error = String;
    fn try_from(v: Vec<serde_json::Value>) -> Result<Self, Self::Error> {
        let coords = v
            .iter()
            .map(decimal::big_from_value)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        OrthantPoint::new(coords).map_err(|e| e.to_string())
    }
}

impl From<OrthantPoint> for Vec<String> {
    fn from(p: OrthantPoint) -> Self {
        decimal::to_strings(&p.coords)
    }
}

/// An M-sequence close to `x`: the coordinatewise sum of the least
/// M-sequences through each axis point `x_i e_i`. Sums of M-sequences are
/// M-sequences (g-vectors add under connected sum), and the implicit
/// `g_0 = 1` is not summed. The result is within
/// `O(||x||_1^((k-1)/k))` of `x` in the l1 norm.
pub fn approximate_point(x: &OrthantPoint) -> GVector {
    let k = x.k();
    let mut sum = vec![BigInt::zero(); k];
    for (n, c) in x.coords().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let m = least_msequence_with_coordinate(n + 1, c, k).expect("index in range, c >= 0");
        for (s, v) in sum.iter_mut().zip(m.entries()) {
            *s += v;
        }
    }
    GVector::new(sum).expect("nonempty")
}

/// `||x(a) - M(a)||_1` for `x(a) = (0, ..., 0, a)` in `k` coordinates.
pub fn axis_distance(k: usize, a: &BigInt) -> BigInt {
    let x = OrthantPoint::last_axis(k, a.clone()).expect("a >= 0");
    approximate_point(&x).l1_distance(&x.as_gvector())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn g(v: &[i64]) -> GVector {
        GVector::from_i64s(v).unwrap()
    }

    fn pascal(n: usize) -> Vec<Vec<BigInt>> {
        let mut rows: Vec<Vec<BigInt>> = vec![vec![b(1)]];
        for r in 1..=n {
            let prev = &rows[r - 1];
            let mut row = vec![b(1); r + 1];
            for c in 1..r {
                row[c] = &prev[c - 1] + &prev[c];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_u64(5, 3), b(10));
        assert_eq!(binomial_u64(7, 0), b(1));
        assert_eq!(binomial_u64(3, 5), b(0));
        let tri = pascal(100);
        assert_eq!(binomial_u64(100, 50), tri[100][50]);
        for n in 0..=40 {
            for k in 0..=n {
                assert_eq!(binomial_u64(n as u64, k as u64), tri[n][k]);
            }
        }
    }

    #[test]
    fn binomial_of_huge_top() {
        let n: BigInt = BigInt::from(10).pow(40);
        // C(n, 2) = n(n-1)/2
        assert_eq!(binomial(&n, 2), &n * (&n - 1) / 2);
    }

    #[test]
    fn rep_examples() {
        let r = macaulay_rep(&b(10), 3).unwrap();
        assert_eq!(r.to_string(), "C(5,3)");
        let r = macaulay_rep(&b(1), 4).unwrap();
        assert_eq!(r.to_string(), "C(4,4)");
        let r = macaulay_rep(&b(7), 3).unwrap();
        assert_eq!(r.to_string(), "C(4,3) + C(3,2)");
        assert!(r.is_well_formed());
        assert_eq!(r.value(), b(7));
    }

    #[test]
    fn rep_rejects_bad_input() {
        assert_eq!(macaulay_rep(&b(0), 2), Err(MacaulayError::NonPositive(b(0))));
        assert_eq!(macaulay_rep(&b(3), 0), Err(MacaulayError::ZeroIndex));
    }

    #[test]
    fn pseudo_power_examples() {
        assert_eq!(pseudo_power(&b(0), 3).unwrap(), b(0));
        assert_eq!(pseudo_power(&b(10), 3).unwrap(), b(15));
        assert_eq!(pseudo_power(&b(7), 3).unwrap(), b(9));
        assert_eq!(pseudo_power(&b(2), 1).unwrap(), b(3));
        assert_eq!(pseudo_power(&b(6), 2).unwrap(), b(10));
    }

    #[test]
    fn pseudo_power_is_monotone() {
        for i in 1..=5 {
            let mut prev = b(0);
            for a in 0..500 {
                let p = pseudo_power(&b(a), i).unwrap();
                assert!(p >= prev, "a = {a}, i = {i}");
                prev = p;
            }
        }
    }

    #[test]
    fn m_sequence_examples() {
        assert_eq!(is_m_sequence(&g(&[0, 0, 0, 0])), Ok(()));
        assert_eq!(
            is_m_sequence(&g(&[2, 5])),
            Err(MSequenceViolation::Macaulay {
                index: 1,
                bound: b(3),
                found: b(5)
            })
        );
        assert_eq!(is_m_sequence(&g(&[3, 6, 10])), Ok(()));
        assert_eq!(
            is_m_sequence(&g(&[3, -1, 0])),
            Err(MSequenceViolation::Negative { index: 2 })
        );
        // a zero forces a zero tail
        assert_eq!(is_m_sequence(&g(&[2, 0, 1])).unwrap_err().index(), 2);
    }

    #[test]
    fn least_msequence_examples() {
        assert_eq!(least_msequence_with_coordinate(1, &b(7), 3).unwrap(), g(&[7, 0, 0]));
        assert_eq!(least_msequence_with_coordinate(2, &b(10), 2).unwrap(), g(&[4, 10]));
        assert_eq!(least_msequence_with_coordinate(2, &b(3), 2).unwrap(), g(&[2, 3]));
        assert!(least_msequence_with_coordinate(3, &b(3), 2).is_err());
    }

    /// Exhaustive rev-lex search over (g_1, g_2) with g_2 fixed.
    #[test]
    fn least_msequence_is_revlex_minimal() {
        for a in 0..200i64 {
            let got = least_msequence_with_coordinate(2, &b(a), 2).unwrap();
            let best = (0..=a)
                .find(|&m| is_m_sequence(&g(&[m, a])).is_ok())
                .unwrap();
            assert_eq!(got, g(&[best, a]));
        }
    }

    #[test]
    fn approximate_point_examples() {
        let zero = OrthantPoint::from_u64s(&[0, 0, 0]).unwrap();
        assert_eq!(approximate_point(&zero), g(&[0, 0, 0]));
        let p = OrthantPoint::from_u64s(&[5, 0, 0]).unwrap();
        assert_eq!(approximate_point(&p), g(&[5, 0, 0]));
        for m in 2..60u64 {
            let a = m * (m + 1) / 2;
            let x = OrthantPoint::from_u64s(&[0, a]).unwrap();
            let mx = approximate_point(&x);
            assert_eq!(mx, g(&[m as i64, a as i64]));
            assert_eq!(mx.l1_distance(&x.as_gvector()), BigInt::from(m));
        }
    }

    #[test]
    fn approximate_point_is_m_sequence() {
        for v in [[3u64, 0, 100], [0, 7, 7], [1, 1, 1], [40, 2, 900]] {
            let x = OrthantPoint::from_u64s(&v).unwrap();
            assert!(is_m_sequence(&approximate_point(&x)).is_ok(), "{v:?}");
        }
    }

    #[test]
    fn orthant_point_json() {
        let p: OrthantPoint = serde_json::from_str(r#"["3", 4]"#).unwrap();
        assert_eq!(p.coords(), &[b(3), b(4)]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["3","4"]"#);
        assert!(serde_json::from_str::<OrthantPoint>(r#"["-1"]"#).is_err());
    }
}
