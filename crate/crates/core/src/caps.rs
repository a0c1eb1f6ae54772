//! Size limits for the exhaustive procedures.
//!
//! Overridable through `FVLAB_CAPS`, a comma-separated list of `key=value`
//! pairs, e.g. `FVLAB_CAPS=gorenstein_rank=6,flag_level_sum=14`.

use std::env;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest poset rank accepted by the Gorenstein* check.
    pub gorenstein_rank: usize,
    /// Largest number of proper elements accepted by the Gorenstein* check.
    pub gorenstein_proper: usize,
    /// Largest `sum_i f_{i}` searched by the flag-vector decider.
    pub flag_level_sum: usize,
    /// Largest `A` and `B` handled by the brute-force rank-5 oracle.
    pub rank5_oracle: u64,
    /// Largest scale factor tried by the ray-density witness search.
    pub ray_scale: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            gorenstein_rank: 5,
            gorenstein_proper: 64,
            flag_level_sum: 12,
            rank5_oracle: 30,
            ray_scale: 1 << 60,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bad FVLAB_CAPS entry {0:?}")]
pub struct CapsError(pub String);

impl Caps {
    pub fn parse(spec: &str) -> Result<Caps, CapsError> {
        let mut caps = Caps::default();
        for entry in spec.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let (key, value) = entry
                .split_once('=')
                .ok_or_else(|| CapsError(entry.to_string()))?;
            let value: u64 = value.trim().parse().map_err(|_| CapsError(entry.to_string()))?;
            match key.trim() {
                "gorenstein_rank" => caps.gorenstein_rank = value as usize,
                "gorenstein_proper" => caps.gorenstein_proper = value as usize,
                "flag_level_sum" => caps.flag_level_sum = value as usize,
                "rank5_oracle" => caps.rank5_oracle = value,
                "ray_scale" => caps.ray_scale = value,
                _ => return Err(CapsError(entry.to_string())),
            }
        }
        Ok(caps)
    }

    /// Defaults, overridden by `FVLAB_CAPS` when set.
    pub fn from_env() -> Result<Caps, CapsError> {
        match env::var("FVLAB_CAPS") {
            Ok(spec) => Caps::parse(&spec),
            Err(_) => Ok(Caps::default()),
        }
    }
}
