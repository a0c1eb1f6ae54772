//! Abstract simplicial complexes given by facets, and their reduced
//! homology over a field.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// A simplicial complex listed by its inclusion-maximal faces. No facets at
/// all is the void complex; the single facet `[]` is `{∅}`, the
/// `(-1)`-sphere.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplexData {
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplexData {
    /// Sorts vertices, drops duplicates and faces contained in others.
    pub fn new(facets: Vec<Vec<usize>>) -> Self {
        let mut sorted: BTreeSet<Vec<usize>> = BTreeSet::new();
        for mut f in facets {
            f.sort_unstable();
            f.dedup();
            sorted.insert(f);
        }
        let all: Vec<Vec<usize>> = sorted.into_iter().collect();
        let facets = all
            .iter()
            .filter(|f| {
                !all.iter()
                    .any(|g| g.len() > f.len() && f.iter().all(|v| g.binary_search(v).is_ok()))
            })
            .cloned()
            .collect();
        SimplicialComplexData { facets }
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn vertices(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.facets.iter().flatten().copied().collect();
        set.into_iter().collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        self.facets.iter().any(|f| is_subset(face, f))
    }

    /// `lk(F) = { G : G ∩ F = ∅, G ∪ F ∈ K }`; void if `F ∉ K`.
    pub fn link(&self, face: &[usize]) -> SimplicialComplexData {
        let mut face = face.to_vec();
        face.sort_unstable();
        let facets = self
            .facets
            .iter()
            .filter(|f| is_subset(&face, f))
            .map(|f| f.iter().copied().filter(|v| face.binary_search(v).is_err()).collect())
            .collect();
        SimplicialComplexData::new(facets)
    }

    /// All faces grouped by size: entry `s` holds the faces with `s`
    /// vertices (dimension `s - 1`), each sorted.
    pub fn faces_by_size(&self) -> Vec<Vec<Vec<usize>>> {
        let Some(dim) = self.dim() else {
            return Vec::new();
        };
        let mut by_size: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); (dim + 2) as usize];
        for f in &self.facets {
            let n = f.len();
            for mask in 0u64..1 << n {
                let sub: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                by_size[sub.len()].insert(sub);
            }
        }
        by_size.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    /// Boundary matrix from faces of size `s` to faces of size `s - 1`, as
    /// sparse columns. Removing the `j`-th vertex carries sign `(-1)^j`.
    pub fn boundary_columns(&self, faces: &[Vec<Vec<usize>>], s: usize) -> Vec<Vec<(usize, i64)>> {
        let index: HashMap<&Vec<usize>, usize> =
            faces[s - 1].iter().enumerate().map(|(i, f)| (f, i)).collect();
        faces[s]
            .iter()
            .map(|f| {
                (0..f.len())
                    .map(|j| {
                        let mut sub = f.clone();
                        sub.remove(j);
                        let sign = if j % 2 == 0 { 1 } else { -1 };
                        (index[&sub], sign)
                    })
                    .collect()
            })
            .collect()
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|v| big.binary_search(v).is_ok())
}

/// Coefficient field for homology ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HomologyField {
    /// Exact rational arithmetic.
    #[default]
    Rational,
    /// Arithmetic modulo the prime `2^31 - 1`. Agrees with the rational
    /// answer unless that prime divides a torsion coefficient.
    Modular,
}

pub const MODULAR_PRIME: u64 = (1 << 31) - 1;

trait FieldElem: Clone {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn inv(&self) -> Self;
}

impl FieldElem for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

#[derive(Clone, Copy)]
struct Fp(u64);

impl FieldElem for Fp {
    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(MODULAR_PRIME as i64) as u64)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn mul(&self, o: &Self) -> Self {
        Fp(self.0 * o.0 % MODULAR_PRIME)
    }
    fn sub(&self, o: &Self) -> Self {
        Fp((self.0 + MODULAR_PRIME - o.0) % MODULAR_PRIME)
    }
    fn inv(&self) -> Self {
        // Fermat: a^(p-2)
        let (mut base, mut exp, mut acc) = (self.0, MODULAR_PRIME - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % MODULAR_PRIME;
            }
            base = base * base % MODULAR_PRIME;
            exp >>= 1;
        }
        Fp(acc)
    }
}

/// Rank of a sparse matrix given by columns, by inserting each column into
/// a reduced echelon basis keyed on leading row.
fn sparse_rank<F: FieldElem>(columns: &[Vec<(usize, i64)>]) -> usize {
    let mut basis: HashMap<usize, BTreeMap<usize, F>> = HashMap::new();
    for col in columns {
        let mut v: BTreeMap<usize, F> = BTreeMap::new();
        for &(r, x) in col {
            if x != 0 {
                v.insert(r, F::from_i64(x));
            }
        }
        while let Some((&lead, coef)) = v.iter().next() {
            let coef = coef.clone();
            match basis.get(&lead) {
                Some(pivot) => {
                    for (&r, x) in pivot {
                        let updated = match v.get(&r) {
                            Some(y) => y.sub(&coef.mul(x)),
                            None => F::from_i64(0).sub(&coef.mul(x)),
                        };
                        if updated.is_zero() {
                            v.remove(&r);
                        } else {
                            v.insert(r, updated);
                        }
                    }
                }
                None => {
                    let inv = coef.inv();
                    let normalized = v.into_iter().map(|(r, x)| (r, x.mul(&inv))).collect();
                    basis.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    basis.len()
}

pub(crate) fn matrix_rank(columns: &[Vec<(usize, i64)>], field: HomologyField) -> usize {
    match field {
        HomologyField::Rational => sparse_rank::<BigRational>(columns),
        HomologyField::Modular => sparse_rank::<Fp>(columns),
    }
}

/// Reduced Betti numbers `b̃_{-1}, ..., b̃_{dim}` over the rationals.
/// Empty for the void complex.
pub fn rational_betti(k: &SimplicialComplexData) -> Vec<usize> {
    betti(k, HomologyField::Rational)
}

/// Reduced Betti numbers over the chosen field. The augmented chain complex
/// includes the empty face in degree `-1`.
pub fn betti(k: &SimplicialComplexData, field: HomologyField) -> Vec<usize> {
    let faces = k.faces_by_size();
    if faces.is_empty() {
        return Vec::new();
    }
    let top = faces.len() - 1;
    // ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        ranks[s] = matrix_rank(&k.boundary_columns(&faces, s), field);
    }
    (0..=top)
        .map(|s| faces[s].len() - ranks[s] - ranks[s + 1])
        .collect()
}

/// The reduced Betti pattern of a homology sphere of dimension `dim`:
/// zeros and a single 1 in the top degree.
pub fn is_homology_sphere_pattern(betti: &[usize], dim: isize) -> bool {
    let expected_len = (dim + 2).max(0) as usize;
    betti.len() == expected_len
        && betti.last().is_some_and(|&b| b == 1)
        && betti[..betti.len() - 1].iter().all(|&b| b == 0)
}

/// Euler characteristic check helper: `sum (-1)^s |faces of size s|`
/// equals the alternating sum of reduced Betti numbers, shifted.
pub fn reduced_euler_characteristic(k: &SimplicialComplexData) -> i64 {
    k.faces_by_size()
        .iter()
        .enumerate()
        .map(|(s, f)| if s % 2 == 1 { f.len() as i64 } else { -(f.len() as i64) })
        .sum()
}
