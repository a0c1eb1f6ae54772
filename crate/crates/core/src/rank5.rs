//! Rank-5 Gorenstein* posets with `[c^4] = [cdc] = 1` and the diophantine
//! system
//!
//! ```text
//! x1 + x2 + x3 = A,   y1 + y2 + y3 = B,   x1 y1 + x2 y2 + x3 y3 = A B - D2
//! ```
//!
//! in nonnegative integers, where `A = [c^2 d]`, `B = [d c^2]`,
//! `D2 = [d^2]`.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::decimal;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Rank5Error {
    #[error("{name} = {value} is negative")]
    Negative { name: &'static str, value: BigInt },
    #[error("A and B must be below 2^62 for the search, got A = {a}, B = {b}")]
    TooLarge { a: BigInt, b: BigInt },
    #[error("the brute-force oracle handles A, B <= {cap}")]
    CapExceeded { cap: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rank5Instance {
    #[serde(with = "decimal::big")]
    pub a: BigInt,
    #[serde(with = "decimal::big")]
    pub b: BigInt,
    #[serde(with = "decimal::big")]
    pub d2: BigInt,
}

impl Rank5Instance {
    pub fn new(a: BigInt, b: BigInt, d2: BigInt) -> Result<Self, Rank5Error> {
        for (name, v) in [("A", &a), ("B", &b), ("D2", &d2)] {
            if v.is_negative() {
                return Err(Rank5Error::Negative {
                    name,
                    value: v.clone(),
                });
            }
        }
        Ok(Rank5Instance { a, b, d2 })
    }

    pub fn from_u64s(a: u64, b: u64, d2: u64) -> Self {
        Rank5Instance::new(a.into(), b.into(), d2.into()).expect("u64 values are nonnegative")
    }

    /// `T = A B - D2`, the value the bilinear form must take.
    pub fn target(&self) -> BigInt {
        &self.a * &self.b - &self.d2
    }

    /// `N = ⌈lg A⌉ + ⌈lg B⌉ + ⌈lg D2⌉`, with `⌈lg 0⌉ = ⌈lg 1⌉ = 0`.
    pub fn bit_size(&self) -> u64 {
        [&self.a, &self.b, &self.d2].iter().map(|v| ceil_lg(v)).sum()
    }

    pub fn swapped(&self) -> Rank5Instance {
        Rank5Instance {
            a: self.b.clone(),
            b: self.a.clone(),
            d2: self.d2.clone(),
        }
    }
}

fn ceil_lg(v: &BigInt) -> u64 {
    if *v <= BigInt::from(1) {
        0
    } else {
        (v - 1u32).bits()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rank5Witness {
    #[serde(with = "decimal::big_vec")]
    pub x: Vec<BigInt>,
    #[serde(with = "decimal::big_vec")]
    pub y: Vec<BigInt>,
}

impl Rank5Witness {
    /// Checks all three equations in exact arithmetic.
    pub fn verifies(&self, inst: &Rank5Instance) -> bool {
        let nonneg = self.x.iter().chain(&self.y).all(|v| !v.is_negative());
        let sx: BigInt = self.x.iter().sum();
        let sy: BigInt = self.y.iter().sum();
        let dot: BigInt = self.x.iter().zip(&self.y).map(|(a, b)| a * b).sum();
        self.x.len() == 3
            && self.y.len() == 3
            && nonneg
            && sx == inst.a
            && sy == inst.b
            && dot == inst.target()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rank5Verdict {
    Feasible(Rank5Witness),
    Infeasible,
}

impl Rank5Verdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Rank5Verdict::Feasible(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rank5Outcome {
    pub verdict: Rank5Verdict,
    /// Sorted `x` triples examined; `None` when `T < 0` settles the instance
    /// before any search.
    pub nodes: Option<u64>,
}

impl Rank5Outcome {
    /// `{"verdict": ..., "witness": {...}, "nodes": "..."}`; fields that do
    /// not apply are left out.
    pub fn to_json(&self) -> serde_json::Value {
        let mut m = serde_json::Map::new();
        match &self.verdict {
            Rank5Verdict::Feasible(w) => {
                m.insert("verdict".into(), "feasible".into());
                m.insert("witness".into(), serde_json::to_value(w).expect("serializable"));
            }
            Rank5Verdict::Infeasible => {
                m.insert("verdict".into(), "infeasible".into());
            }
        }
        if let Some(n) = self.nodes {
            m.insert("nodes".into(), n.to_string().into());
        }
        serde_json::Value::Object(m)
    }
}

/// Searches sorted `x = (x1 >= x2 >= x3)` in lexicographically decreasing
/// order. For fixed `x` the form `Σ x_i y_i` over compositions `y` of `B`
/// covers exactly the integers of the lattice `x3 B + (x1 - x3) y1 + (x2 -
/// x3) y2` inside `[x3 B, x1 B]`, so triples with `T` outside that interval
/// are skipped and the rest are solved by a gcd computation. The reported
/// witness pairs the first feasible `x` with the lexicographically greatest
/// `y` for it.
pub fn decide_rank5(inst: &Rank5Instance) -> Result<Rank5Outcome, Rank5Error> {
    let target = inst.target();
    if target.is_negative() {
        return Ok(Rank5Outcome {
            verdict: Rank5Verdict::Infeasible,
            nodes: None,
        });
    }
    let limit = BigInt::from(1u64 << 62);
    if inst.a >= limit || inst.b >= limit {
        return Err(Rank5Error::TooLarge {
            a: inst.a.clone(),
            b: inst.b.clone(),
        });
    }
    let a = inst.a.to_i128().expect("below 2^62");
    let b = inst.b.to_i128().expect("below 2^62");
    let t = target.to_i128().expect("at most A B < 2^124");
    let mut nodes = 0u64;
    let mut x1 = a;
    while 3 * x1 >= a {
        let rest = a - x1;
        let mut x2 = rest.min(x1);
        while 2 * x2 >= rest {
            let x3 = rest - x2;
            nodes += 1;
            if x3 * b <= t && t <= x1 * b {
                if let Some((y1, y2)) = greatest_y(x1 - x3, x2 - x3, t - x3 * b, b) {
                    let w = Rank5Witness {
                        x: vec![x1.into(), x2.into(), x3.into()],
                        y: vec![y1.into(), y2.into(), (b - y1 - y2).into()],
                    };
                    return Ok(Rank5Outcome {
                        verdict: Rank5Verdict::Feasible(w),
                        nodes: Some(nodes),
                    });
                }
            }
            x2 -= 1;
        }
        x1 -= 1;
    }
    Ok(Rank5Outcome {
        verdict: Rank5Verdict::Infeasible,
        nodes: Some(nodes),
    })
}

/// Lexicographically greatest `(y1, y2)` with `y1, y2 >= 0`, `y1 + y2 <= b`
/// and `p y1 + q y2 = r`, for `p >= q >= 0` and `r >= 0`.
fn greatest_y(p: i128, q: i128, r: i128, b: i128) -> Option<(i128, i128)> {
    if p == 0 {
        return (r == 0).then_some((b, 0));
    }
    if q == 0 {
        if r % p != 0 || r / p > b {
            return None;
        }
        let y1 = r / p;
        return Some((y1, b - y1));
    }
    let e = p.extended_gcd(&q);
    if r % e.gcd != 0 {
        return None;
    }
    // y1 ≡ y1_0 (mod q/g)
    let step = q / e.gcd;
    let y1_0 = (e.x.rem_euclid(step) * (r / e.gcd).rem_euclid(step)).rem_euclid(step);
    let hi = r / p;
    if hi < y1_0 {
        return None;
    }
    let y1 = hi - (hi - y1_0).rem_euclid(step);
    // y1 + y2 <= b  <=>  (p - q) y1 >= r - b q
    let feasible = if p == q {
        r <= b * q
    } else {
        (p - q) * y1 >= r - b * q
    };
    if !feasible {
        return None;
    }
    let y2 = (r - p * y1) / q;
    Some((y1, y2))
}

/// Exhaustive check over all ordered compositions of `A` and `B`.
pub fn brute_oracle_rank5(inst: &Rank5Instance, caps: &Caps) -> Result<bool, Rank5Error> {
    let cap = BigInt::from(caps.rank5_oracle);
    if inst.a > cap || inst.b > cap {
        return Err(Rank5Error::CapExceeded {
            cap: caps.rank5_oracle,
        });
    }
    let a = inst.a.to_i64().expect("capped");
    let b = inst.b.to_i64().expect("capped");
    let t = inst.target();
    if t.is_negative() {
        return Ok(false);
    }
    let t = t.to_i64().expect("capped");
    for x1 in 0..=a {
        for x2 in 0..=a - x1 {
            let x3 = a - x1 - x2;
            for y1 in 0..=b {
                for y2 in 0..=b - y1 {
                    let y3 = b - y1 - y2;
                    if x1 * y1 + x2 * y2 + x3 * y3 == t {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

/// The `[cdc] = 0` facet relation `D2 = A B`.
pub fn cdc_zero_relation(a: &BigInt, b: &BigInt, d2: &BigInt) -> bool {
    *d2 == a * b
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    /// Nominal bit size; `A` and `B` are drawn with `n / 4` bits each.
    pub n: u32,
    /// Mean of the instances' actual `N`.
    pub mean_bit_size: f64,
    pub instances: usize,
    pub feasible: usize,
    pub total_nodes: u64,
    pub seconds: f64,
    /// `seconds` divided by the previous row's `seconds`.
    pub growth: Option<f64>,
}

/// Random instances for nominal bit size `n`: `A` and `B` uniform with
/// exactly `n / 4` bits, `D2` uniform in `[0, A B]`.
pub fn bench_instances(n: u32, count: usize, seed: u64) -> Vec<Rank5Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ u64::from(n));
    let bits = (n / 4).max(1);
    let lo = 1u64 << (bits - 1);
    let hi = (1u64 << bits) - 1;
    (0..count)
        .map(|_| {
            let a = rng.gen_range(lo..=hi);
            let b = rng.gen_range(lo..=hi);
            let d2 = rng.gen_range(0..=a * b);
            Rank5Instance::from_u64s(a, b, d2)
        })
        .collect()
}

/// Times [`decide_rank5`] over seeded random instances for each bit size.
pub fn bench_rank5(sizes: &[u32], count: usize, seed: u64) -> Vec<BenchRow> {
    let mut rows: Vec<BenchRow> = Vec::new();
    for &n in sizes {
        let instances = bench_instances(n, count, seed);
        let mut elapsed = Duration::ZERO;
        let (mut nodes, mut feasible) = (0u64, 0usize);
        for inst in &instances {
            let start = Instant::now();
            let out = decide_rank5(inst).expect("bench instances are small");
            elapsed += start.elapsed();
            nodes += out.nodes.unwrap_or(0);
            feasible += usize::from(out.verdict.is_feasible());
        }
        let seconds = elapsed.as_secs_f64();
        let mean_bit_size = if instances.is_empty() {
            0.0
        } else {
            instances.iter().map(|i| i.bit_size() as f64).sum::<f64>() / instances.len() as f64
        };
        let growth = rows
            .last()
            .filter(|prev| prev.seconds > 0.0)
            .map(|prev| seconds / prev.seconds);
        rows.push(BenchRow {
            n,
            mean_bit_size,
            instances: instances.len(),
            feasible,
            total_nodes: nodes,
            seconds,
            growth,
        });
    }
    rows
}
