//! Gorenstein* recognition and the exhaustive flag-vector realizability
//! search.
//!
//! A bounded poset is Gorenstein* when the link of every face `F` of its
//! reduced order complex (the empty face included) has dimension
//! `dim - |F|` and the rational homology of a sphere of that dimension.

use num_bigint::BigInt;
use serde::Serialize;

use super::complex::{betti, is_homology_sphere_pattern, HomologyField};
use super::{FlagVector, GradedPoset, PosetError};
use crate::caps::Caps;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum GorensteinCheck {
    Passed,
    /// The first face (a chain of proper elements, by poset index) whose
    /// link is not a homology sphere of the right dimension.
    Failed {
        face: Vec<usize>,
        expected_dim: isize,
        link_dim: Option<isize>,
        betti: Vec<usize>,
    },
}

impl GorensteinCheck {
    pub fn passed(&self) -> bool {
        matches!(self, GorensteinCheck::Passed)
    }
}

/// Checks every face of the order complex, smallest faces first and the
/// empty face before all others.
pub fn is_gorenstein_star(p: &GradedPoset, caps: &Caps) -> Result<GorensteinCheck, PosetError> {
    is_gorenstein_star_with(p, caps, HomologyField::Rational)
}

pub fn is_gorenstein_star_with(
    p: &GradedPoset,
    caps: &Caps,
    field: HomologyField,
) -> Result<GorensteinCheck, PosetError> {
    if p.rank() > caps.gorenstein_rank {
        return Err(PosetError::CapExceeded(format!(
            "rank {} > {}",
            p.rank(),
            caps.gorenstein_rank
        )));
    }
    let proper = p.len() - 2;
    if proper > caps.gorenstein_proper {
        return Err(PosetError::CapExceeded(format!(
            "{proper} proper elements > {}",
            caps.gorenstein_proper
        )));
    }
    let complex = p.order_complex();
    let dim = complex.dim().expect("order complex of a bounded poset is not void");
    for faces in complex.faces_by_size() {
        for face in faces {
            let link = complex.link(&face);
            let expected_dim = dim - face.len() as isize;
            let b = betti(&link, field);
            if link.dim() != Some(expected_dim) || !is_homology_sphere_pattern(&b, expected_dim) {
                return Ok(GorensteinCheck::Failed {
                    face,
                    expected_dim,
                    link_dim: link.dim(),
                    betti: b,
                });
            }
        }
    }
    Ok(GorensteinCheck::Passed)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlagDecision {
    Realizable {
        witness: GradedPoset,
        candidates: u64,
    },
    NotRealizable {
        candidates: u64,
    },
}

impl FlagDecision {
    pub fn is_realizable(&self) -> bool {
        matches!(self, FlagDecision::Realizable { .. })
    }

    pub fn candidates(&self) -> u64 {
        match self {
            FlagDecision::Realizable { candidates, .. } | FlagDecision::NotRealizable { candidates } => {
                *candidates
            }
        }
    }
}

/// Search options for [`decide_flag_gorenstein_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlagSearchOptions {
    /// Skip down-cover sets that break the diamond property of rank-2
    /// intervals. Gorenstein* posets are Eulerian, so this removes only
    /// candidates the final check would reject anyway.
    pub prune_eulerian: bool,
}

impl Default for FlagSearchOptions {
    fn default() -> Self {
        FlagSearchOptions { prune_eulerian: true }
    }
}

/// Decides whether `v` is the flag vector of some Gorenstein* poset by
/// enumerating bounded graded posets with rank sizes `f_{1}, ..., f_{d}`.
pub fn decide_flag_gorenstein(v: &FlagVector, caps: &Caps) -> Result<FlagDecision, PosetError> {
    decide_flag_gorenstein_with(v, caps, FlagSearchOptions::default())
}

/// Search order: ranks bottom-up; within a rank, elements take their sets
/// of lower covers as a nondecreasing sequence of bitmasks, so permuting
/// elements of one rank never yields a second candidate. The first
/// Gorenstein* poset in this order is returned.
pub fn decide_flag_gorenstein_with(
    v: &FlagVector,
    caps: &Caps,
    opts: FlagSearchOptions,
) -> Result<FlagDecision, PosetError> {
    let d = v.d();
    if d + 1 > caps.gorenstein_rank {
        return Err(PosetError::CapExceeded(format!(
            "rank {} > {}",
            d + 1,
            caps.gorenstein_rank
        )));
    }
    let mut sizes = vec![1usize];
    let mut total = BigInt::from(0);
    for r in 1..=d {
        let n = v.get_set(&[r]);
        total += &n;
        if total > BigInt::from(caps.flag_level_sum) {
            return Err(PosetError::CapExceeded(format!(
                "sum of rank sizes {} > {}",
                total, caps.flag_level_sum
            )));
        }
        let n: usize = n.try_into().expect("bounded by the cap");
        if n == 0 {
            return Ok(FlagDecision::NotRealizable { candidates: 0 });
        }
        sizes.push(n);
    }
    if sizes.iter().skip(1).any(|&n| n > 63) {
        return Err(PosetError::CapExceeded("rank level wider than 63".into()));
    }
    let mut search = Search {
        v,
        caps,
        opts,
        sizes,
        downs: vec![Vec::new(); d + 1],
        candidates: 0,
        found: None,
    };
    search.level(2);
    Ok(match search.found {
        Some(witness) => FlagDecision::Realizable {
            witness,
            candidates: search.candidates,
        },
        None => FlagDecision::NotRealizable {
            candidates: search.candidates,
        },
    })
}

struct Search<'a> {
    v: &'a FlagVector,
    caps: &'a Caps,
    opts: FlagSearchOptions,
    /// `sizes[r]` elements at rank `r`, `r = 0..=d`.
    sizes: Vec<usize>,
    /// `downs[r][j]`: lower covers of the `j`-th rank-`r` element, as a
    /// bitmask over rank `r - 1`. Rank 1 covers `0̂` implicitly.
    downs: Vec<Vec<u64>>,
    candidates: u64,
    found: Option<GradedPoset>,
}

impl Search<'_> {
    fn d(&self) -> usize {
        self.sizes.len() - 1
    }

    /// Bitmask over rank `r - 1` of the elements above the `i`-th element of
    /// rank `r - 2`.
    fn above(&self, r: usize, i: usize) -> u64 {
        if r == 2 {
            return full(self.sizes[1]);
        }
        self.downs[r - 1]
            .iter()
            .enumerate()
            .filter(|(_, &m)| m >> i & 1 == 1)
            .fold(0, |acc, (j, _)| acc | 1 << j)
    }

    fn level(&mut self, r: usize) {
        if self.found.is_some() {
            return;
        }
        if r > self.d() {
            self.finish();
            return;
        }
        let below = self.sizes[r - 1];
        let lower_ranks = if r == 2 { 1 } else { self.sizes[r - 2] };
        let aboves: Vec<u64> = (0..lower_ranks).map(|i| self.above(r, i)).collect();
        let prune = self.opts.prune_eulerian;
        let options: Vec<u64> = (1..=full(below))
            .filter(|&s| {
                !prune
                    || aboves.iter().all(|&a| {
                        let c = (s & a).count_ones();
                        c == 0 || c == 2
                    })
            })
            .collect();
        let target: usize = self
            .v
            .get_set(&[r - 1, r])
            .try_into()
            .unwrap_or(usize::MAX);
        self.downs[r].clear();
        self.fill(r, &options, 0, 0, target);
    }

    fn fill(&mut self, r: usize, options: &[u64], from: usize, edges: usize, target: usize) {
        if self.found.is_some() {
            return;
        }
        let placed = self.downs[r].len();
        let remaining = self.sizes[r] - placed;
        if remaining == 0 {
            let union = self.downs[r].iter().fold(0, |a, &m| a | m);
            if edges == target && union == full(self.sizes[r - 1]) {
                self.level(r + 1);
            }
            return;
        }
        if edges + remaining > target || edges + remaining * self.sizes[r - 1] < target {
            return;
        }
        for k in from..options.len() {
            let s = options[k];
            self.downs[r].push(s);
            self.fill(r, options, k, edges + s.count_ones() as usize, target);
            self.downs[r].pop();
            if self.found.is_some() {
                return;
            }
        }
    }

    fn finish(&mut self) {
        let d = self.d();
        if self.opts.prune_eulerian {
            // [x, 1̂] for x of rank d - 1 is a diamond: two upper covers.
            let ok = if d == 0 {
                true
            } else if d == 1 {
                self.sizes[1] == 2
            } else {
                (0..self.sizes[d - 1])
                    .all(|i| self.downs[d].iter().filter(|&&m| m >> i & 1 == 1).count() == 2)
            };
            if !ok {
                return;
            }
        }
        self.candidates += 1;
        let poset = self.build();
        if poset.flag_vector() != *self.v {
            return;
        }
        if let Ok(check) = is_gorenstein_star(&poset, self.caps) {
            if check.passed() {
                self.found = Some(poset);
            }
        }
    }

    fn build(&self) -> GradedPoset {
        let d = self.d();
        let mut offset = vec![0usize; d + 2];
        let mut ranks = vec![0usize];
        for r in 1..=d {
            offset[r] = ranks.len();
            ranks.extend(std::iter::repeat_n(r, self.sizes[r]));
        }
        let top = ranks.len();
        ranks.push(d + 1);
        let mut covers = Vec::new();
        for j in 0..self.sizes[1] {
            covers.push((0, offset[1] + j));
        }
        for r in 2..=d {
            for (j, &m) in self.downs[r].iter().enumerate() {
                for i in 0..self.sizes[r - 1] {
                    if m >> i & 1 == 1 {
                        covers.push((offset[r - 1] + i, offset[r] + j));
                    }
                }
            }
        }
        let last = if d == 0 { 0 } else { offset[d] };
        let width = if d == 0 { 1 } else { self.sizes[d] };
        for j in 0..width {
            covers.push((last + j, top));
        }
        GradedPoset::from_covers(ranks, &covers).expect("search builds bounded graded posets")
    }
}

fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn spheres_pass() {
        for n in 1..=4 {
            let p = GradedPoset::boolean_lattice(n).unwrap();
            assert!(is_gorenstein_star(&p, &caps()).unwrap().passed(), "B_{n}");
        }
        for m in 3..=8 {
            let p = GradedPoset::polygon(m).unwrap();
            assert!(is_gorenstein_star(&p, &caps()).unwrap().passed(), "Q_{m}");
        }
        for d in 1..=3 {
            let p = GradedPoset::dihedral_sphere(d).unwrap();
            assert!(is_gorenstein_star(&p, &caps()).unwrap().passed(), "D^{d}");
        }
    }

    #[test]
    fn path_fails_at_empty_face() {
        let p = GradedPoset::path(2).unwrap();
        match is_gorenstein_star(&p, &caps()).unwrap() {
            GorensteinCheck::Failed { face, betti, .. } => {
                assert!(face.is_empty());
                assert_eq!(betti, vec![0, 0, 0]);
            }
            GorensteinCheck::Passed => panic!("a 1-ball is not a sphere"),
        }
    }

    #[test]
    fn two_circles_fail() {
        // two triangles under one top: right dimension, but b̃_0 = 1
        let mut ranks = vec![0];
        ranks.extend([1; 6]);
        ranks.extend([2; 6]);
        ranks.push(3);
        let mut covers = Vec::new();
        for base in [0, 3] {
            for j in 0..3 {
                let e = 7 + base + j;
                covers.push((0, 1 + base + j));
                covers.push((1 + base + j, e));
                covers.push((1 + base + (j + 1) % 3, e));
                covers.push((e, 13));
            }
        }
        let p = GradedPoset::from_covers(ranks, &covers).unwrap();
        match is_gorenstein_star(&p, &caps()).unwrap() {
            GorensteinCheck::Failed { face, betti, .. } => {
                assert!(face.is_empty());
                assert_eq!(betti, vec![0, 1, 2]);
            }
            GorensteinCheck::Passed => panic!("two circles are not a sphere"),
        }
    }

    #[test]
    fn caps_are_enforced() {
        let p = GradedPoset::boolean_lattice(6).unwrap();
        assert!(matches!(is_gorenstein_star(&p, &caps()), Err(PosetError::CapExceeded(_))));
    }

    #[test]
    fn modular_field_agrees() {
        for p in [
            GradedPoset::boolean_lattice(4).unwrap(),
            GradedPoset::polygon(6).unwrap(),
            GradedPoset::path(3).unwrap(),
        ] {
            assert_eq!(
                is_gorenstein_star_with(&p, &caps(), HomologyField::Rational).unwrap(),
                is_gorenstein_star_with(&p, &caps(), HomologyField::Modular).unwrap()
            );
        }
    }

    #[test]
    fn triangle_is_realized() {
        let v = FlagVector::from_u64s(2, &[1, 3, 3, 6]).unwrap();
        match decide_flag_gorenstein(&v, &caps()).unwrap() {
            FlagDecision::Realizable { witness, .. } => {
                assert_eq!(witness.flag_vector(), v);
                assert!(is_gorenstein_star(&witness, &caps()).unwrap().passed());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn zero_sphere_is_realized() {
        let v = FlagVector::from_u64s(1, &[1, 2]).unwrap();
        assert!(decide_flag_gorenstein(&v, &caps()).unwrap().is_realizable());
        let v = FlagVector::from_u64s(1, &[1, 3]).unwrap();
        assert!(!decide_flag_gorenstein(&v, &caps()).unwrap().is_realizable());
    }

    #[test]
    fn odd_chain_count_is_refuted() {
        let v = FlagVector::from_u64s(2, &[1, 3, 3, 7]).unwrap();
        for prune in [true, false] {
            let opts = FlagSearchOptions { prune_eulerian: prune };
            assert!(!decide_flag_gorenstein_with(&v, &caps(), opts).unwrap().is_realizable());
        }
    }

    #[test]
    fn pruning_does_not_change_verdicts() {
        let cases: Vec<FlagVector> = vec![
            FlagVector::from_u64s(2, &[1, 4, 4, 8]).unwrap(),
            FlagVector::from_u64s(2, &[1, 4, 4, 9]).unwrap(),
            FlagVector::from_u64s(2, &[1, 2, 2, 4]).unwrap(),
            FlagVector::from_u64s(2, &[1, 3, 2, 6]).unwrap(),
            FlagVector::from_u64s(3, &[1, 2, 2, 4, 2, 4, 4, 8]).unwrap(),
        ];
        for v in &cases {
            let a = decide_flag_gorenstein_with(v, &caps(), FlagSearchOptions { prune_eulerian: true })
                .unwrap();
            let b = decide_flag_gorenstein_with(v, &caps(), FlagSearchOptions { prune_eulerian: false })
                .unwrap();
            assert_eq!(a.is_realizable(), b.is_realizable(), "{v:?}");
            assert!(a.candidates() <= b.candidates());
        }
    }

    #[test]
    fn dihedral_three_sphere_flag_is_realized() {
        let p = GradedPoset::dihedral_sphere(3).unwrap();
        let v = p.flag_vector();
        let FlagDecision::Realizable { witness, .. } = decide_flag_gorenstein(&v, &caps()).unwrap()
        else {
            panic!("D^3 realizes its own flag vector");
        };
        assert_eq!(witness.flag_vector(), v);
    }

    #[test]
    fn search_caps() {
        let v = GradedPoset::boolean_lattice(4).unwrap().flag_vector();
        assert!(matches!(
            decide_flag_gorenstein(&v, &caps()),
            Err(PosetError::CapExceeded(_))
        ));
    }
}
