//! Data for two experiments: how far the last-axis points `x(a) = (0, ...,
//! 0, a)` lie from the nearest M-sequence, and how the cone coordinates of
//! Stanley's spheres approach the extremal rays.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::cd::{self, CdError, CdPolynomial};
use crate::decimal;
use crate::macaulay::axis_distance;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityRow {
    #[serde(with = "decimal::big")]
    pub a: BigInt,
    #[serde(with = "decimal::big")]
    pub distance: BigInt,
    /// Slope of `ln distance` against `ln a` from the previous row.
    pub local_slope: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityTable {
    pub k: usize,
    pub rows: Vec<DensityRow>,
    /// Least-squares slope of `ln distance` on `ln a` over rows with
    /// positive distance.
    pub fitted_slope: Option<f64>,
    pub note: Option<String>,
}

/// `a = ⌊10^(3 + j/4)⌋` for `j = 0..=24`: 25 points from `10^3` to `10^9`.
pub fn default_density_grid() -> Vec<BigInt> {
    (0..=24)
        .map(|j| BigInt::from(10f64.powf(3.0 + j as f64 / 4.0).floor() as u64))
        .collect()
}

/// `||x(a) - M(a)||_1` for each `a`, where `M(a)` is the componentwise
/// least M-sequence whose `k`-th entry is `a`. The distance grows like
/// `a^((k-1)/k)`. For `k = 1` every point is an M-sequence and the rows are
/// zero.
pub fn experiment_density(k: usize, grid: &[BigInt]) -> DensityTable {
    if k <= 1 {
        return DensityTable {
            k,
            rows: grid
                .iter()
                .map(|a| DensityRow {
                    a: a.clone(),
                    distance: BigInt::zero(),
                    local_slope: None,
                })
                .collect(),
            fitted_slope: None,
            note: Some("k = 1: every nonnegative point is an M-sequence, distances are 0".into()),
        };
    }
    let mut rows: Vec<DensityRow> = Vec::with_capacity(grid.len());
    for a in grid {
        let distance = axis_distance(k, a);
        let local_slope = rows.last().and_then(|prev| slope_between(prev, a, &distance));
        rows.push(DensityRow {
            a: a.clone(),
            distance,
            local_slope,
        });
    }
    let points: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.distance.is_positive() && r.a.is_positive())
        .map(|r| (ln(&r.a), ln(&r.distance)))
        .collect();
    DensityTable {
        k,
        fitted_slope: least_squares_slope(&points),
        rows,
        note: None,
    }
}

fn ln(v: &BigInt) -> f64 {
    // exact enough for values beyond f64 range too
    let bits = v.bits();
    if bits < 1000 {
        v.to_f64().expect("finite").ln()
    } else {
        let shift = bits - 900;
        (v >> shift).to_f64().expect("finite").ln() + shift as f64 * std::f64::consts::LN_2
    }
}

fn slope_between(prev: &DensityRow, a: &BigInt, distance: &BigInt) -> Option<f64> {
    if !(prev.distance.is_positive() && distance.is_positive()) || prev.a == *a {
        return None;
    }
    Some((ln(distance) - ln(&prev.distance)) / (ln(a) - ln(&prev.a)))
}

/// Ordinary least-squares slope; `None` for fewer than two distinct `x`.
pub fn least_squares_slope(points: &[(f64, f64)]) -> Option<f64> {
    let n = points.len() as f64;
    if points.len() < 2 {
        return None;
    }
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub word: String,
    pub m: u64,
    pub cd: CdPolynomial,
    /// Cone coordinates, labelled by [`cd::cone_words`].
    #[serde(with = "decimal::big_vec")]
    pub coordinates: Vec<BigInt>,
    /// l1 distance from the l1-normalized cone coordinates to `e_word`.
    pub cone_distance: f64,
    /// The same distance for the full coefficient vector, `[c^d]` included.
    pub full_distance: f64,
}

/// l1 distance from `v / ||v||_1` to the unit vector at `index`, exactly.
pub fn normalized_distance_to_axis(v: &[BigInt], index: usize) -> BigRational {
    let total: BigInt = v.iter().map(|x| x.abs()).sum();
    if total.is_zero() {
        return BigRational::from_integer(BigInt::from(1));
    }
    v.iter()
        .enumerate()
        .map(|(i, x)| {
            let u = BigRational::new(x.clone(), total.clone());
            let e = BigRational::from_integer(BigInt::from(u8::from(i == index)));
            (u - e).abs()
        })
        .fold(BigRational::zero(), |acc, x| acc + x)
}

fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// One row per `(w, m)`: the cd-index of the Stanley sphere `P_{w,m}` and
/// its distances to the ray of `w`.
pub fn experiment_convergence(words: &[String], ms: &[u64]) -> Result<Vec<ConvergenceRow>, CdError> {
    let mut rows = Vec::new();
    for w in words {
        let degree = cd::word_degree::<cd::Cd>(w).ok_or_else(|| CdError::BadWord {
            word: w.clone(),
            alphabet: *b"cd",
        })?;
        let labels = cd::cone_words(degree);
        let all = cd::cd_words(degree);
        for &m in ms {
            let phi = cd::stanley_product(w, m)?;
            let coordinates = cd::cone_coordinates(&phi)?.coords().to_vec();
            let cone_distance = match labels.iter().position(|l| l == w) {
                Some(i) => to_f64(&normalized_distance_to_axis(&coordinates, i)),
                None => f64::NAN,
            };
            let full: Vec<BigInt> = all.iter().map(|u| phi.coefficient(u)).collect();
            let i = all.iter().position(|u| u == w).expect("w has this degree");
            let full_distance = to_f64(&normalized_distance_to_axis(&full, i));
            rows.push(ConvergenceRow {
                word: w.clone(),
                m,
                cd: phi,
                coordinates,
                cone_distance,
                full_distance,
            });
        }
    }
    Ok(rows)
}
