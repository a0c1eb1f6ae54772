use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use fvlab::cd::{self, CdPolynomial};
use fvlab::macaulay::{macaulay_rep, pseudo_power};
use fvlab::poset::complex::betti;
use fvlab::poset::{HomologyField, SimplicialComplexData};
use fvlab::rank5::{decide_rank5, Rank5Instance};
use fvlab::vectors::{f_to_h, g_to_h, h_to_f, h_to_g, FVector, GVector};

fn big_entries(max_len: usize) -> impl Strategy<Value = Vec<BigInt>> {
    prop::collection::vec(any::<u128>().prop_map(BigInt::from), 1..=max_len)
}

fn cd_poly(degree: usize) -> impl Strategy<Value = CdPolynomial> {
    cd_poly_in(degree, -50)
}

fn cd_poly_in(degree: usize, low: i64) -> impl Strategy<Value = CdPolynomial> {
    let words = cd::cd_words(degree);
    prop::collection::vec(low..50, words.len()).prop_map(move |coefs| {
        let terms: Vec<(&str, i64)> = words.iter().map(String::as_str).zip(coefs).collect();
        let mut p = CdPolynomial::zero(degree);
        for (w, c) in terms {
            let mono = CdPolynomial::from_terms(&[(w, c)]).unwrap();
            p = add(&p, &mono);
        }
        p
    })
}

fn add(p: &CdPolynomial, q: &CdPolynomial) -> CdPolynomial {
    let mut terms = p.terms().clone();
    for (w, c) in q.terms() {
        *terms.entry(w.clone()).or_default() += c;
    }
    terms.retain(|_, c| !c.is_zero());
    CdPolynomial::new(p.degree(), terms).unwrap()
}

/// Rank by fraction-exact Gaussian elimination on a dense matrix.
fn dense_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let factor = &m[r][col] / &m[rank][col];
                for c in col..cols {
                    let delta = &factor * &m[rank][c];
                    m[r][c] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced Betti numbers from explicit boundary matrices, empty face included.
fn oracle_betti(facets: &[Vec<usize>]) -> Vec<usize> {
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for f in facets {
        for mask in 0u32..(1 << f.len()) {
            faces.insert((0..f.len()).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect());
        }
    }
    let top = faces.iter().map(Vec::len).max().unwrap();
    let by_size: Vec<Vec<Vec<usize>>> =
        (0..=top).map(|s| faces.iter().filter(|f| f.len() == s).cloned().collect()).collect();
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        let matrix: Vec<Vec<BigRational>> = by_size[s - 1]
            .iter()
            .map(|row| {
                by_size[s]
                    .iter()
                    .map(|col| match (0..col.len()).find(|&j| {
                        let mut c = col.clone();
                        c.remove(j);
                        &c == row
                    }) {
                        Some(j) if j % 2 == 0 => BigRational::one(),
                        Some(_) => -BigRational::one(),
                        None => BigRational::zero(),
                    })
                    .collect()
            })
            .collect();
        ranks[s] = dense_rank(matrix);
    }
    (0..=top).map(|s| by_size[s].len() - ranks[s] - ranks[s + 1]).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn f_h_round_trip(f in big_entries(14)) {
        let v = FVector::new(f).unwrap();
        prop_assert_eq!(h_to_f(&f_to_h(&v)).unwrap(), v);
    }

    #[test]
    fn g_h_round_trip(g in prop::collection::vec(any::<i64>(), 1..6), extra in 0usize..2) {
        let d = 2 * g.len() + extra;
        let g = GVector::from_i64s(&g).unwrap();
        prop_assert_eq!(h_to_g(&g_to_h(&g, d).unwrap()), g);
    }

    #[test]
    fn macaulay_rep_is_well_formed(a in 1u64..10_000_000_000, i in 1usize..9) {
        let rep = macaulay_rep(&BigInt::from(a), i).unwrap();
        let mut prev_top: Option<BigInt> = None;
        let mut sum = BigInt::zero();
        for (n, t) in rep.terms.iter().enumerate() {
            prop_assert_eq!(t.bottom, i - n);
            prop_assert!(t.top >= BigInt::from(t.bottom));
            if let Some(p) = &prev_top {
                prop_assert!(&t.top < p);
            }
            let mut c = BigInt::one();
            for j in 0..t.bottom {
                c = c * (&t.top - j) / (j + 1);
            }
            sum += c;
            prev_top = Some(t.top.clone());
        }
        prop_assert_eq!(sum, BigInt::from(a));
    }

    #[test]
    fn pseudo_power_is_monotone(a in 0u64..1_000_000, i in 1usize..6) {
        let p = pseudo_power(&BigInt::from(a), i).unwrap();
        let q = pseudo_power(&BigInt::from(a + 1), i).unwrap();
        prop_assert!(p < q);
    }

    #[test]
    fn cd_flag_round_trip(p in (1usize..7).prop_flat_map(|d| cd_poly_in(d, 0))) {
        // f_∅ = 1 pins the coefficient of c^d; nonnegative coefficients keep
        // every flag count nonnegative
        let top = "c".repeat(p.degree());
        let mut terms = p.terms().clone();
        terms.insert(top, BigInt::one());
        let p = CdPolynomial::new(p.degree(), terms).unwrap();
        let flag = cd::cd_to_flag(&p).unwrap();
        prop_assert_eq!(cd::flag_to_cd(&flag).unwrap(), p);
    }

    #[test]
    fn cd_expansion_inverts(p in (0usize..8).prop_flat_map(cd_poly)) {
        prop_assert_eq!(cd::ab_to_cd(&cd::cd_expand(&p)).unwrap(), p);
    }

    #[test]
    fn cd_mul_matches_ab_expansion(p in (0usize..4).prop_flat_map(cd_poly), q in (0usize..4).prop_flat_map(cd_poly)) {
        let product = cd::cd_mul(&p, &q);
        prop_assert_eq!(cd::cd_expand(&product), cd::cd_expand(&p).mul(&cd::cd_expand(&q)));
    }

    #[test]
    fn rank5_is_symmetric(a in 0u64..200, b in 0u64..200, d2 in 0u64..40_000) {
        let inst = Rank5Instance::from_u64s(a, b, d2);
        let x = decide_rank5(&inst).unwrap().verdict.is_feasible();
        let y = decide_rank5(&inst.swapped()).unwrap().verdict.is_feasible();
        prop_assert_eq!(x, y);
    }

    #[test]
    fn betti_numbers_match_dense_elimination(
        facets in prop::collection::vec(prop::collection::btree_set(0usize..7, 1..5), 1..7)
    ) {
        let facets: Vec<Vec<usize>> = facets.into_iter().map(|f| f.into_iter().collect()).collect();
        let k = SimplicialComplexData::new(facets.clone());
        let expected = oracle_betti(&facets);
        prop_assert_eq!(betti(&k, HomologyField::Rational), expected.clone());
        prop_assert_eq!(betti(&k, HomologyField::Modular), expected);
    }
}

#[test]
fn join_multiplies_cd_indices() {
    let posets = [
        fvlab::poset::GradedPoset::boolean_lattice(2).unwrap(),
        fvlab::poset::GradedPoset::polygon(5).unwrap(),
        fvlab::poset::GradedPoset::dihedral_sphere(2).unwrap(),
        cd::stanley_poset("d", 4).unwrap(),
    ];
    for p in &posets {
        for q in &posets {
            let joined = cd::cd_index(&p.join(q)).unwrap();
            let direct = cd::cd_mul(&cd::cd_index(p).unwrap(), &cd::cd_index(q).unwrap());
            assert_eq!(joined, direct);
        }
    }
}
