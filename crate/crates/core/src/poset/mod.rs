//! Finite bounded graded posets and their chain statistics.
//!
//! A [`GradedPoset`] has a minimum `0̂` of rank 0 and a maximum `1̂` of rank
//! `d + 1`; every cover raises the rank by exactly one. Elements are plain
//! indices `0..len()`.

mod bitset;
pub mod complex;
pub mod flag;
pub mod gorenstein;

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use bitset::BitSet;
pub use complex::{rational_betti, HomologyField, SimplicialComplexData};
pub use flag::FlagVector;
pub use gorenstein::{decide_flag_gorenstein, is_gorenstein_star, FlagDecision, GorensteinCheck};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PosetError {
    #[error("a bounded poset needs at least two elements")]
    TooSmall,
    #[error("expected exactly one element of rank 0, found {0}")]
    NoUniqueBottom(usize),
    #[error("expected exactly one element of maximal rank, found {0}")]
    NoUniqueTop(usize),
    #[error("cover ({0}, {1}) refers to a missing element")]
    UnknownElement(usize, usize),
    #[error("cover ({lower}, {upper}) does not raise the rank by one")]
    RankJump { lower: usize, upper: usize },
    #[error("cover ({0}, {1}) is listed twice")]
    DuplicateCover(usize, usize),
    #[error("element {0} has no lower cover")]
    NoLowerCover(usize),
    #[error("element {0} has no upper cover")]
    NoUpperCover(usize),
    #[error("element id {0} is listed twice")]
    DuplicateId(u64),
    #[error("{0}")]
    InvalidParameter(String),
    #[error("size cap exceeded: {0}")]
    CapExceeded(String),
}

/// A bounded graded poset given by its cover relation.
#[derive(Debug, Clone)]
pub struct GradedPoset {
    ranks: Vec<usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
    levels: Vec<Vec<usize>>,
    up_sets: OnceLock<Vec<BitSet>>,
    down_sets: OnceLock<Vec<BitSet>>,
}

impl PartialEq for GradedPoset {
    fn eq(&self, other: &Self) -> bool {
        self.ranks == other.ranks && self.up == other.up
    }
}

impl Eq for GradedPoset {}

impl GradedPoset {
    /// Builds and validates a poset from element ranks and cover pairs
    /// `(lower, upper)`.
    pub fn from_covers(ranks: Vec<usize>, covers: &[(usize, usize)]) -> Result<Self, PosetError> {
        let n = ranks.len();
        if n < 2 {
            return Err(PosetError::TooSmall);
        }
        let bottoms: Vec<usize> = (0..n).filter(|&i| ranks[i] == 0).collect();
        if bottoms.len() != 1 {
            return Err(PosetError::NoUniqueBottom(bottoms.len()));
        }
        let max_rank = *ranks.iter().max().expect("nonempty");
        let tops: Vec<usize> = (0..n).filter(|&i| ranks[i] == max_rank).collect();
        if max_rank == 0 || tops.len() != 1 {
            return Err(PosetError::NoUniqueTop(tops.len()));
        }
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(lo, hi) in covers {
            if lo >= n || hi >= n {
                return Err(PosetError::UnknownElement(lo, hi));
            }
            if ranks[hi] != ranks[lo] + 1 {
                return Err(PosetError::RankJump { lower: lo, upper: hi });
            }
            if !seen.insert((lo, hi)) {
                return Err(PosetError::DuplicateCover(lo, hi));
            }
            up[lo].push(hi);
            down[hi].push(lo);
        }
        let (bottom, top) = (bottoms[0], tops[0]);
        for i in 0..n {
            if i != bottom && down[i].is_empty() {
                return Err(PosetError::NoLowerCover(i));
            }
            if i != top && up[i].is_empty() {
                return Err(PosetError::NoUpperCover(i));
            }
            up[i].sort_unstable();
            down[i].sort_unstable();
        }
        let mut levels = vec![Vec::new(); max_rank + 1];
        for (i, &r) in ranks.iter().enumerate() {
            levels[r].push(i);
        }
        Ok(GradedPoset {
            ranks,
            up,
            down,
            bottom,
            top,
            levels,
            up_sets: OnceLock::new(),
            down_sets: OnceLock::new(),
        })
    }

    /// Subsets of `[n]` under inclusion; element `i` is the subset with
    /// bitmask `i`. `boolean_lattice(d + 1)` is the face lattice of the
    /// `d`-simplex.
    pub fn boolean_lattice(n: usize) -> Result<Self, PosetError> {
        if n == 0 || n > 16 {
            return Err(PosetError::InvalidParameter(format!(
                "boolean lattice needs 1 <= n <= 16, got {n}"
            )));
        }
        let size = 1usize << n;
        let ranks = (0..size).map(|m| m.count_ones() as usize).collect();
        let covers: Vec<_> = (0..size)
            .flat_map(|m| (0..n).filter(move |b| m >> b & 1 == 0).map(move |b| (m, m | 1 << b)))
            .collect();
        Self::from_covers(ranks, &covers)
    }

    /// Face poset of the `m`-gon: `0̂`, vertices `1..=m`, edges `m+1..=2m`
    /// (edge `j` joins vertices `j` and `j+1` cyclically), `1̂`.
    pub fn polygon(m: usize) -> Result<Self, PosetError> {
        if m < 3 {
            return Err(PosetError::InvalidParameter(format!(
                "a polygon needs at least 3 vertices, got {m}"
            )));
        }
        let top = 2 * m + 1;
        let mut ranks = vec![0; top + 1];
        let mut covers = Vec::with_capacity(4 * m);
        for j in 0..m {
            let (v, e) = (1 + j, 1 + m + j);
            ranks[v] = 1;
            ranks[e] = 2;
            covers.push((0, v));
            covers.push((v, e));
            covers.push((1 + (j + 1) % m, e));
            covers.push((e, top));
        }
        ranks[top] = 3;
        Self::from_covers(ranks, &covers)
    }

    /// The dihedral `(d-1)`-sphere: two cells of every dimension, each
    /// covering both cells one rank below.
    pub fn dihedral_sphere(d: usize) -> Result<Self, PosetError> {
        if d == 0 {
            return Err(PosetError::InvalidParameter("dihedral sphere needs d >= 1".into()));
        }
        let top = 2 * d + 1;
        let mut ranks = vec![0; top + 1];
        let mut covers = Vec::new();
        let level = |r: usize| [2 * r - 1, 2 * r];
        for r in 1..=d {
            for e in level(r) {
                ranks[e] = r;
                if r == 1 {
                    covers.push((0, e));
                } else {
                    covers.extend(level(r - 1).map(|lo| (lo, e)));
                }
            }
        }
        ranks[top] = d + 1;
        covers.extend(level(d).map(|e| (e, top)));
        Self::from_covers(ranks, &covers)
    }

    /// Face poset of a path with `edges` edges, bounded by `0̂` and `1̂`:
    /// a 1-ball, not a sphere.
    pub fn path(edges: usize) -> Result<Self, PosetError> {
        if edges == 0 {
            return Err(PosetError::InvalidParameter("a path needs an edge".into()));
        }
        let vertices = edges + 1;
        let top = vertices + edges + 1;
        let mut ranks = vec![0; top + 1];
        let mut covers = Vec::new();
        for v in 1..=vertices {
            ranks[v] = 1;
            covers.push((0, v));
        }
        for j in 0..edges {
            let e = 1 + vertices + j;
            ranks[e] = 2;
            covers.push((1 + j, e));
            covers.push((2 + j, e));
            covers.push((e, top));
        }
        ranks[top] = 3;
        Self::from_covers(ranks, &covers)
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Rank of `1̂`, which is `d + 1`.
    pub fn rank(&self) -> usize {
        self.ranks[self.top]
    }

    /// `d`: the degree of the flag polynomials, one less than the rank.
    pub fn d(&self) -> usize {
        self.rank() - 1
    }

    pub fn rank_of(&self, x: usize) -> usize {
        self.ranks[x]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn level(&self, r: usize) -> &[usize] {
        &self.levels[r]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    /// Elements other than `0̂` and `1̂`.
    pub fn proper_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| x != self.bottom && x != self.top).collect()
    }

    /// All cover pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|x| self.up[x].iter().map(move |&y| (x, y)))
            .collect()
    }

    /// Number of elements at each rank `0..=d+1`.
    pub fn rank_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// Rank-level sizes `f_1..f_d`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.levels[1..self.rank()].iter().map(Vec::len).collect()
    }

    fn up_sets(&self) -> &[BitSet] {
        self.up_sets.get_or_init(|| {
            let n = self.len();
            let mut sets = vec![BitSet::new(n); n];
            for r in (0..self.levels.len()).rev() {
                for &x in &self.levels[r] {
                    let mut s = BitSet::new(n);
                    s.insert(x);
                    for &y in &self.up[x] {
                        s.union_with(&sets[y]);
                    }
                    sets[x] = s;
                }
            }
            sets
        })
    }

    fn down_sets(&self) -> &[BitSet] {
        self.down_sets.get_or_init(|| {
            let n = self.len();
            let mut sets = vec![BitSet::new(n); n];
            for level in &self.levels {
                for &x in level {
                    let mut s = BitSet::new(n);
                    s.insert(x);
                    for &y in &self.down[x] {
                        s.union_with(&sets[y]);
                    }
                    sets[x] = s;
                }
            }
            sets
        })
    }

    /// `x <= y`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up_sets()[x].contains(y)
    }

    /// Star product: `P - 1̂` placed entirely below `Q - 0̂`. Degrees add,
    /// `d(P*Q) = d(P) + d(Q)`, and chains split into a chain of `P` followed
    /// by a chain of `Q`, so flag polynomials multiply in order. The order
    /// complex of the proper part is the join of the two order complexes.
    pub fn join(&self, other: &GradedPoset) -> GradedPoset {
        let lower: Vec<usize> = (0..self.len()).filter(|&x| x != self.top).collect();
        let upper: Vec<usize> = (0..other.len()).filter(|&y| y != other.bottom).collect();
        let mut index_p = HashMap::new();
        let mut index_q = HashMap::new();
        let mut ranks = Vec::with_capacity(lower.len() + upper.len());
        for &x in &lower {
            index_p.insert(x, ranks.len());
            ranks.push(self.ranks[x]);
        }
        let shift = self.rank() - 1;
        for &y in &upper {
            index_q.insert(y, ranks.len());
            ranks.push(other.ranks[y] + shift);
        }
        let mut covers = Vec::new();
        for (x, y) in self.covers() {
            if y != self.top {
                covers.push((index_p[&x], index_p[&y]));
            }
        }
        for (x, y) in other.covers() {
            if x != other.bottom {
                covers.push((index_q[&x], index_q[&y]));
            }
        }
        // coatoms of P sit below atoms of Q
        for &x in self.lower_covers(self.top) {
            for &y in other.upper_covers(other.bottom) {
                covers.push((index_p[&x], index_q[&y]));
            }
        }
        GradedPoset::from_covers(ranks, &covers).expect("star product of bounded graded posets")
    }

    /// Number of chains `x_1 < ... < x_k` of proper elements with rank set
    /// exactly `ranks` (strictly increasing, within `1..=d`).
    pub fn count_chains(&self, ranks: &[usize]) -> BigInt {
        let Some((&first, rest)) = ranks.split_first() else {
            return BigInt::one();
        };
        let up = self.up_sets();
        let mut prev_level = first;
        let mut ways: Vec<BigInt> = vec![BigInt::one(); self.levels[first].len()];
        for &r in rest {
            let next: Vec<BigInt> = self.levels[r]
                .iter()
                .map(|&y| {
                    self.levels[prev_level]
                        .iter()
                        .zip(&ways)
                        .filter(|(&x, _)| up[x].contains(y))
                        .fold(BigInt::zero(), |acc, (_, w)| acc + w)
                })
                .collect();
            ways = next;
            prev_level = r;
        }
        ways.into_iter().sum()
    }

    /// Chain counts `f_S` for every `S ⊆ [d]`.
    pub fn flag_vector(&self) -> FlagVector {
        let d = self.d();
        let counts = (0..1usize << d)
            .map(|mask| {
                let ranks: Vec<usize> = (1..=d).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                self.count_chains(&ranks)
            })
            .collect();
        FlagVector::new(d, counts).expect("chain counts are a flag vector")
    }

    /// First interval `[x, y]`, `x < y`, whose elements of even and odd
    /// rank differ in number.
    pub fn eulerian_violation(&self) -> Option<(usize, usize)> {
        let n = self.len();
        let (up, down) = (self.up_sets(), self.down_sets());
        let mut even = BitSet::new(n);
        let mut odd = BitSet::new(n);
        for x in 0..n {
            if self.ranks[x].is_multiple_of(2) {
                even.insert(x);
            } else {
                odd.insert(x);
            }
        }
        for x in 0..n {
            for y in 0..n {
                if x == y || !up[x].contains(y) {
                    continue;
                }
                if even.count_and2(&up[x], &down[y]) != odd.count_and2(&up[x], &down[y]) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// Every nontrivial interval has as many elements of even as of odd rank.
    pub fn is_eulerian(&self) -> bool {
        self.eulerian_violation().is_none()
    }

    /// Reduced order complex: chains of proper elements.
    pub fn order_complex(&self) -> SimplicialComplexData {
        let mut facets = Vec::new();
        let mut chain = Vec::new();
        self.extend_chains(self.bottom, &mut chain, &mut facets);
        SimplicialComplexData::new(facets)
    }

    fn extend_chains(&self, x: usize, chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for &y in &self.up[x] {
            if y == self.top {
                out.push(chain.clone());
                continue;
            }
            chain.push(y);
            self.extend_chains(y, chain, out);
            chain.pop();
        }
    }
}

/// JSON form: elements with ranks, and cover pairs by element id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<ElementJson>,
    pub covers: Vec<(u64, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub id: u64,
    pub rank: usize,
}

impl From<&GradedPoset> for PosetJson {
    fn from(p: &GradedPoset) -> Self {
        PosetJson {
            elements: (0..p.len())
                .map(|i| ElementJson {
                    id: i as u64,
                    rank: p.ranks[i],
                })
                .collect(),
            covers: p.covers().into_iter().map(|(a, b)| (a as u64, b as u64)).collect(),
        }
    }
}

impl TryFrom<PosetJson> for GradedPoset {
    type Error = PosetError;
    fn try_from(j: PosetJson) -> Result<Self, Self::Error> {
        let mut index = HashMap::new();
        for (i, e) in j.elements.iter().enumerate() {
            if index.insert(e.id, i).is_some() {
                return Err(PosetError::DuplicateId(e.id));
            }
        }
        let covers = j
            .covers
            .iter()
            .map(|&(a, b)| match (index.get(&a), index.get(&b)) {
                (Some(&x), Some(&y)) => Ok((x, y)),
                _ => Err(PosetError::UnknownElement(a as usize, b as usize)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        GradedPoset::from_covers(j.elements.iter().map(|e| e.rank).collect(), &covers)
    }
}

impl Serialize for GradedPoset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PosetJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedPoset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = PosetJson::deserialize(d)?;
        GradedPoset::try_from(j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flag(p: &GradedPoset, ranks: &[usize]) -> u64 {
        let mask = ranks.iter().fold(0usize, |m, r| m | 1 << (r - 1));
        p.flag_vector().get(mask).to_string().parse().unwrap()
    }

    /// Independent chain count: enumerate all maximal chains, then count
    /// distinct restrictions to the requested ranks.
    fn brute_chains(p: &GradedPoset, ranks: &[usize]) -> usize {
        let facets = p.order_complex().facets().to_vec();
        let set: BTreeSet<Vec<usize>> = facets
            .iter()
            .map(|c| c.iter().copied().filter(|&x| ranks.contains(&p.rank_of(x))).collect())
            .collect();
        set.len()
    }

    #[test]
    fn boolean_lattice_shapes() {
        let b2 = GradedPoset::boolean_lattice(2).unwrap();
        assert_eq!(b2.len(), 4);
        assert_eq!(b2.rank_sizes(), vec![1, 2, 1]);
        let b3 = GradedPoset::boolean_lattice(3).unwrap();
        assert_eq!((flag(&b3, &[1]), flag(&b3, &[2]), flag(&b3, &[1, 2])), (3, 3, 6));
        let b5 = GradedPoset::boolean_lattice(5).unwrap();
        assert_eq!(b5.f_vector(), vec![5, 10, 10, 5]);
        assert!(GradedPoset::boolean_lattice(0).is_err());
    }

    #[test]
    fn polygon_shapes() {
        let q3 = GradedPoset::polygon(3).unwrap();
        let b3 = GradedPoset::boolean_lattice(3).unwrap();
        assert_eq!(q3.flag_vector(), b3.flag_vector());
        let q4 = GradedPoset::polygon(4).unwrap();
        assert_eq!((flag(&q4, &[1]), flag(&q4, &[2]), flag(&q4, &[1, 2])), (4, 4, 8));
        for m in 3..10 {
            let q = GradedPoset::polygon(m).unwrap();
            assert_eq!(flag(&q, &[1, 2]), 2 * m as u64);
            assert!(q.is_eulerian());
        }
        assert!(GradedPoset::polygon(2).is_err());
    }

    #[test]
    fn dihedral_flags_are_powers_of_two() {
        let d1 = GradedPoset::dihedral_sphere(1).unwrap();
        assert_eq!(flag(&d1, &[1]), 2);
        for d in 1..=5 {
            let p = GradedPoset::dihedral_sphere(d).unwrap();
            let fv = p.flag_vector();
            for mask in 0..1usize << d {
                assert_eq!(fv.get(mask), BigInt::from(1u64 << mask.count_ones()));
            }
        }
    }

    #[test]
    fn chain_counts_match_brute_force() {
        let posets = [
            GradedPoset::boolean_lattice(4).unwrap(),
            GradedPoset::polygon(5).unwrap(),
            GradedPoset::dihedral_sphere(3).unwrap(),
            GradedPoset::path(3).unwrap(),
        ];
        for p in &posets {
            let d = p.d();
            for mask in 1..1usize << d {
                let ranks: Vec<usize> = (1..=d).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                assert_eq!(p.count_chains(&ranks), BigInt::from(brute_chains(p, &ranks)));
            }
        }
    }

    #[test]
    fn eulerian_checks() {
        for n in 1..=5 {
            assert!(GradedPoset::boolean_lattice(n).unwrap().is_eulerian());
        }
        assert!(GradedPoset::dihedral_sphere(4).unwrap().is_eulerian());
        let path = GradedPoset::path(2).unwrap();
        assert!(!path.is_eulerian());
        assert_eq!(path.eulerian_violation().map(|(x, _)| x), Some(path.bottom()));
    }

    #[test]
    fn join_identity_and_degree() {
        let point = GradedPoset::boolean_lattice(1).unwrap();
        let q = GradedPoset::polygon(5).unwrap();
        assert_eq!(point.join(&q).flag_vector(), q.flag_vector());
        assert_eq!(q.join(&point).flag_vector(), q.flag_vector());
        let b2 = GradedPoset::boolean_lattice(2).unwrap();
        let j = b2.join(&q);
        assert_eq!(j.d(), 3);
        assert_eq!(j.f_vector(), vec![2, 5, 5]);
        assert!(j.is_eulerian());
        // B_2 * B_2 is the 2-gon
        assert_eq!(
            b2.join(&b2).flag_vector(),
            GradedPoset::dihedral_sphere(2).unwrap().flag_vector()
        );
    }

    #[test]
    fn order_complex_shapes() {
        let b2 = GradedPoset::boolean_lattice(2).unwrap().order_complex();
        assert_eq!(b2.facets(), &[vec![1], vec![2]]);
        let q = GradedPoset::polygon(6).unwrap().order_complex();
        assert_eq!(q.facets().len(), 12);
        assert_eq!(q.vertices().len(), 12);
        let dh = GradedPoset::dihedral_sphere(2).unwrap().order_complex();
        assert_eq!(dh.facets().len(), 4);
        // a 4-cycle: every vertex in exactly two edges
        for v in dh.vertices() {
            assert_eq!(dh.facets().iter().filter(|f| f.contains(&v)).count(), 2);
        }
    }

    #[test]
    fn malformed_posets_are_rejected() {
        use PosetError::*;
        assert_eq!(GradedPoset::from_covers(vec![0], &[]), Err(TooSmall));
        assert_eq!(
            GradedPoset::from_covers(vec![0, 0, 1], &[(0, 2), (1, 2)]),
            Err(NoUniqueBottom(2))
        );
        assert_eq!(
            GradedPoset::from_covers(vec![0, 1, 1], &[(0, 1), (0, 2)]),
            Err(NoUniqueTop(2))
        );
        assert_eq!(
            GradedPoset::from_covers(vec![0, 2], &[(0, 1)]),
            Err(RankJump { lower: 0, upper: 1 })
        );
        assert_eq!(
            GradedPoset::from_covers(vec![0, 1, 1, 2], &[(0, 1), (1, 3), (2, 3)]),
            Err(NoLowerCover(2))
        );
        assert_eq!(
            GradedPoset::from_covers(vec![0, 1, 1, 2], &[(0, 1), (0, 2), (1, 3)]),
            Err(NoUpperCover(2))
        );
        assert_eq!(
            GradedPoset::from_covers(vec![0, 1], &[(0, 1), (0, 1)]),
            Err(DuplicateCover(0, 1))
        );
        assert_eq!(GradedPoset::from_covers(vec![0, 1], &[(0, 5)]), Err(UnknownElement(0, 5)));
    }

    #[test]
    fn json_round_trip() {
        let p = GradedPoset::polygon(4).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        let q: GradedPoset = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
        let custom = r#"{"elements":[{"id":10,"rank":0},{"id":7,"rank":1}],"covers":[[10,7]]}"#;
        let r: GradedPoset = serde_json::from_str(custom).unwrap();
        assert_eq!(r.rank(), 1);
    }
}
