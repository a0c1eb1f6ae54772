//! Noncommutative polynomials in `a, b` and in `c, d`, and the passage from
//! flag vectors to the cd-index.
//!
//! The pipeline is
//! `flag vector -> Γ(a, b) -> Ψ(a, b) = Γ(a - b, b) -> Φ(c, d)` with
//! `c = a + b` and `d = ab + ba`. Letter `i` of an ab-word corresponds to
//! rank `i`; a `b` there means the rank belongs to the chain's rank set.
//!
//! cd-words are ordered lexicographically with `c < d`, which for degree 4
//! gives `cccc, ccd, cdc, dcc, dd`.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize};

use crate::decimal;
use crate::macaulay::OrthantPoint;
use crate::poset::flag::FlagError;
use crate::poset::{FlagVector, GradedPoset, PosetError};

pub trait Alphabet: Clone + fmt::Debug + PartialEq + Eq {
    const LETTERS: [u8; 2];
    /// Degree of each letter, in the order of `LETTERS`.
    const WEIGHTS: [usize; 2];
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ab;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cd;

impl Alphabet for Ab {
    const LETTERS: [u8; 2] = *b"ab";
    const WEIGHTS: [usize; 2] = [1, 1];
}

impl Alphabet for Cd {
    const LETTERS: [u8; 2] = *b"cd";
    const WEIGHTS: [usize; 2] = [1, 2];
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CdError {
    #[error("word {word:?} is not over the alphabet {{{}, {}}}", .alphabet[0] as char, .alphabet[1] as char)]
    BadWord { word: String, alphabet: [u8; 2] },
    #[error("word {word:?} has degree {found}, expected {expected}")]
    WrongDegree {
        word: String,
        expected: usize,
        found: usize,
    },
    #[error("not in the span of c = a + b and d = ab + ba; residual {residual}")]
    Inexpressible { residual: AbPolynomial },
    #[error("the coefficient of c^{d} must be 1, found {found}")]
    LeadingCoefficient { d: usize, found: BigInt },
    #[error("cone coordinates need degree at least 2")]
    DegreeTooSmall,
    #[error("coefficient of {word} is negative")]
    NegativeCoefficient { word: String },
    #[error("Stanley spheres need m >= 3, got {0}")]
    PolygonTooSmall(u64),
    #[error("the poset route gives {poset} but the product route gives {product}")]
    RouteMismatch { poset: CdPolynomial, product: CdPolynomial },
    #[error(transparent)]
    Flag(#[from] FlagError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Decimal(#[from] decimal::DecimalError),
}

/// A homogeneous polynomial in two noncommuting letters with integer
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcPolynomial<A: Alphabet> {
    degree: usize,
    terms: BTreeMap<String, BigInt>,
    _alphabet: PhantomData<A>,
}

/// `Γ` and `Ψ`: polynomials in `a, b`, every word of length `d`.
pub type AbPolynomial = NcPolynomial<Ab>;
/// `Φ`: polynomials in `c, d` with `deg c = 1`, `deg d = 2`.
pub type CdPolynomial = NcPolynomial<Cd>;

pub fn word_degree<A: Alphabet>(word: &str) -> Option<usize> {
    word.bytes()
        .map(|l| A::LETTERS.iter().position(|&x| x == l).map(|i| A::WEIGHTS[i]))
        .sum()
}

impl<A: Alphabet> NcPolynomial<A> {
    pub fn zero(degree: usize) -> Self {
        NcPolynomial {
            degree,
            terms: BTreeMap::new(),
            _alphabet: PhantomData,
        }
    }

    /// Checks every word and drops zero coefficients.
    pub fn new(degree: usize, terms: BTreeMap<String, BigInt>) -> Result<Self, CdError> {
        let mut p = Self::zero(degree);
        for (word, coef) in terms {
            let found = word_degree::<A>(&word).ok_or_else(|| CdError::BadWord {
                word: word.clone(),
                alphabet: A::LETTERS,
            })?;
            if found != degree {
                return Err(CdError::WrongDegree {
                    word,
                    expected: degree,
                    found,
                });
            }
            p.add_term(&word, &coef);
        }
        Ok(p)
    }

    /// Builds from `(word, coefficient)` pairs; the degree is read off the
    /// first word.
    pub fn from_terms(terms: &[(&str, i64)]) -> Result<Self, CdError> {
        let degree = terms
            .first()
            .map(|(w, _)| word_degree::<A>(w).unwrap_or(0))
            .unwrap_or(0);
        Self::new(
            degree,
            terms.iter().map(|(w, c)| (w.to_string(), BigInt::from(*c))).collect(),
        )
    }

    /// The single word `word` with coefficient 1.
    pub fn monomial(word: &str) -> Result<Self, CdError> {
        Self::from_terms(&[(word, 1)])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<String, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, word: &str) -> BigInt {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    fn add_term(&mut self, word: &str, coef: &BigInt) {
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(word.to_string()).or_default();
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(word);
        }
    }

    /// `self - coef * other`.
    fn sub_scaled(&mut self, other: &Self, coef: &BigInt) {
        for (w, c) in &other.terms {
            self.add_term(w, &-(c * coef));
        }
    }

    /// Noncommutative product: words concatenate.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (u, x) in &self.terms {
            for (v, y) in &other.terms {
                out.add_term(&format!("{u}{v}"), &(x * y));
            }
        }
        out
    }

    /// Substitutes a polynomial in `B`-letters for each of the two letters
    /// and expands.
    fn substitute<B: Alphabet>(&self, images: [&NcPolynomial<B>; 2], degree: usize) -> NcPolynomial<B> {
        let mut out = NcPolynomial::<B>::zero(degree);
        for (word, coef) in &self.terms {
            let mut acc = NcPolynomial::<B>::zero(0);
            acc.add_term("", coef);
            for l in word.bytes() {
                let i = if l == A::LETTERS[0] { 0 } else { 1 };
                acc = acc.mul(images[i]);
            }
            for (w, c) in acc.terms {
                out.add_term(&w, &c);
            }
        }
        out
    }
}

impl<A: Alphabet> fmt::Display for NcPolynomial<A> {
    /// `cc + 3*d`; `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let w = if w.is_empty() { "1" } else { w };
            if c.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{c}*{w}")?;
            }
        }
        Ok(())
    }
}

/// `{"word": "coefficient", ...}` in canonical word order.
impl<A: Alphabet> Serialize for NcPolynomial<A> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (w, c) in &self.terms {
            map.serialize_entry(w, &c.to_string())?;
        }
        map.end()
    }
}

/// The degree is read off the words; `{}` is the zero polynomial of degree 0.
impl<'de, A: Alphabet> Deserialize<'de> for NcPolynomial<A> {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, serde_json::Value>::deserialize(de)?;
        let mut terms = BTreeMap::new();
        for (w, v) in &raw {
            terms.insert(w.clone(), decimal::big_from_value(v).map_err(serde::de::Error::custom)?);
        }
        let degree = match raw.keys().next() {
            Some(w) => word_degree::<A>(w).ok_or_else(|| {
                serde::de::Error::custom(CdError::BadWord {
                    word: w.clone(),
                    alphabet: A::LETTERS,
                })
            })?,
            None => 0,
        };
        NcPolynomial::new(degree, terms).map_err(serde::de::Error::custom)
    }
}

fn ab(terms: &[(&str, i64)]) -> AbPolynomial {
    AbPolynomial::from_terms(terms).expect("valid ab-words")
}

/// The ab-word with `b` exactly at the positions of the ranks in `mask`.
pub fn rank_set_word(d: usize, mask: usize) -> String {
    (0..d).map(|i| if mask >> i & 1 == 1 { 'b' } else { 'a' }).collect()
}

/// `Γ = Σ_S f_S w(S)`.
pub fn flag_to_ab(v: &FlagVector) -> AbPolynomial {
    let d = v.d();
    let mut p = AbPolynomial::zero(d);
    for (mask, c) in v.counts().iter().enumerate() {
        p.add_term(&rank_set_word(d, mask), c);
    }
    p
}

/// `Ψ(a, b) = Γ(a - b, b)`.
pub fn ab_index(g: &AbPolynomial) -> AbPolynomial {
    g.substitute([&ab(&[("a", 1), ("b", -1)]), &ab(&[("b", 1)])], g.degree())
}

/// `Γ(a, b) = Ψ(a + b, b)`, the inverse of [`ab_index`].
pub fn ab_unindex(p: &AbPolynomial) -> AbPolynomial {
    p.substitute([&ab(&[("a", 1), ("b", 1)]), &ab(&[("b", 1)])], p.degree())
}

/// Substitutes `c = a + b`, `d = ab + ba`.
pub fn cd_expand(q: &CdPolynomial) -> AbPolynomial {
    q.substitute([&ab(&[("a", 1), ("b", 1)]), &ab(&[("ab", 1), ("ba", 1)])], q.degree())
}

/// The ab-word `c -> a`, `d -> ab` of a cd-word. It occurs with
/// coefficient 1 in the expansion of its own word.
pub fn indicator_word(w: &str) -> String {
    w.chars()
        .map(|l| if l == 'c' { "a" } else { "ab" })
        .collect()
}

/// Solves `cd_expand(Φ) = p`. cd-words are processed by increasing number
/// of `d`s, ties in canonical order. A word with more `d`s expands into
/// ab-words with more `b`s, and among words with equally many `d`s the
/// expansion of a later word never contains the indicator of an earlier
/// one, so each coefficient is read off the residual at its indicator.
pub fn ab_to_cd(p: &AbPolynomial) -> Result<CdPolynomial, CdError> {
    let mut words = cd_words(p.degree());
    words.sort_by_key(|w| w.bytes().filter(|&l| l == b'd').count());
    let mut residual = p.clone();
    let mut phi = CdPolynomial::zero(p.degree());
    for w in words {
        let coef = residual.coefficient(&indicator_word(&w));
        if coef.is_zero() {
            continue;
        }
        let m = CdPolynomial::monomial(&w)?;
        residual.sub_scaled(&cd_expand(&m), &coef);
        phi.add_term(&w, &coef);
    }
    if residual.is_zero() {
        Ok(phi)
    } else {
        Err(CdError::Inexpressible { residual })
    }
}

/// Φ of a flag vector, through `Γ` and `Ψ`.
pub fn flag_to_cd(v: &FlagVector) -> Result<CdPolynomial, CdError> {
    ab_to_cd(&ab_index(&flag_to_ab(v)))
}

/// Φ of a poset by chain counting.
pub fn cd_index(p: &GradedPoset) -> Result<CdPolynomial, CdError> {
    flag_to_cd(&p.flag_vector())
}

/// The flag vector whose cd-index is `q`. Needs `[c^d] = 1`, the value
/// forced by `f_∅ = 1`.
pub fn cd_to_flag(q: &CdPolynomial) -> Result<FlagVector, CdError> {
    let d = q.degree();
    let gamma = ab_unindex(&cd_expand(q));
    let counts = (0..1usize << d)
        .map(|mask| gamma.coefficient(&rank_set_word(d, mask)))
        .collect();
    Ok(FlagVector::new(d, counts)?)
}

pub fn cd_mul(p: &CdPolynomial, q: &CdPolynomial) -> CdPolynomial {
    p.mul(q)
}

/// All cd-words of degree `d`, lexicographic with `c < d`. There are
/// `F_{d+1}` of them (Fibonacci, `F_1 = F_2 = 1`).
pub fn cd_words(d: usize) -> Vec<String> {
    fn go(rest: usize, prefix: &mut String, out: &mut Vec<String>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        prefix.push('c');
        go(rest - 1, prefix, out);
        prefix.pop();
        if rest >= 2 {
            prefix.push('d');
            go(rest - 2, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(d, &mut String::new(), &mut out);
    out
}

/// cd-index of the face poset of an `m`-gon: `c^2 + (m - 2) d`.
pub fn polygon_cd(m: u64) -> CdPolynomial {
    let mut p = CdPolynomial::monomial("cc").expect("valid");
    p.add_term("d", &(BigInt::from(m) - 2));
    p
}

/// The poset `P_{w,m}`: star product of `B_2` for each `c` of `w` and of the
/// `m`-gon `Q_m` for each `d`.
pub fn stanley_poset(w: &str, m: u64) -> Result<GradedPoset, CdError> {
    check_stanley_args(w, m)?;
    let b2 = GradedPoset::boolean_lattice(2)?;
    let qm = GradedPoset::polygon(m as usize)?;
    let mut acc = GradedPoset::boolean_lattice(1)?;
    for l in w.chars() {
        acc = acc.join(if l == 'c' { &b2 } else { &qm });
    }
    Ok(acc)
}

/// Φ of `P_{w,m}` as the product of the factors' cd-indices.
pub fn stanley_product(w: &str, m: u64) -> Result<CdPolynomial, CdError> {
    check_stanley_args(w, m)?;
    let c = CdPolynomial::monomial("c")?;
    let q = polygon_cd(m);
    let mut acc = CdPolynomial::monomial("")?;
    for l in w.chars() {
        acc = cd_mul(&acc, if l == 'c' { &c } else { &q });
    }
    Ok(acc)
}

fn check_stanley_args(w: &str, m: u64) -> Result<(), CdError> {
    if w.is_empty() || word_degree::<Cd>(w).is_none() {
        return Err(CdError::BadWord {
            word: w.to_string(),
            alphabet: Cd::LETTERS,
        });
    }
    if m < 3 {
        return Err(CdError::PolygonTooSmall(m));
    }
    Ok(())
}

/// Builds `P_{w,m}` and its cd-index both by chain counting on the poset and
/// by multiplying factors, and insists that the two agree.
pub fn stanley_sphere(w: &str, m: u64) -> Result<(CdPolynomial, GradedPoset), CdError> {
    let poset = stanley_poset(w, m)?;
    let by_chains = cd_index(&poset)?;
    let product = stanley_product(w, m)?;
    if by_chains != product {
        return Err(CdError::RouteMismatch {
            poset: by_chains,
            product,
        });
    }
    Ok((product, poset))
}

/// Coefficients of `q - c^d` on the non-`c^d` words, in [`cd_words`] order.
pub fn cone_coordinates(q: &CdPolynomial) -> Result<OrthantPoint, CdError> {
    let d = q.degree();
    if d < 2 {
        return Err(CdError::DegreeTooSmall);
    }
    let apex = "c".repeat(d);
    let lead = q.coefficient(&apex);
    if !lead.is_one() {
        return Err(CdError::LeadingCoefficient { d, found: lead });
    }
    let mut coords = Vec::new();
    for w in cd_words(d).into_iter().filter(|w| *w != apex) {
        let c = q.coefficient(&w);
        if c.is_negative() {
            return Err(CdError::NegativeCoefficient { word: w });
        }
        coords.push(c);
    }
    Ok(OrthantPoint::new(coords).expect("d >= 2 gives at least one coordinate"))
}

/// Word labels for [`cone_coordinates`].
pub fn cone_words(d: usize) -> Vec<String> {
    let apex = "c".repeat(d);
    cd_words(d).into_iter().filter(|w| *w != apex).collect()
}

/// `Φ(1, 1)`: the sum of all coefficients.
pub fn coefficient_sum(q: &CdPolynomial) -> BigInt {
    q.terms().values().sum()
}

/// `|[w]_p - [w]_q|` for every word of the common degree, in canonical
/// order.
pub fn coefficient_differences(p: &CdPolynomial, q: &CdPolynomial) -> Vec<(String, BigInt)> {
    cd_words(p.degree().max(q.degree()))
        .into_iter()
        .map(|w| {
            let diff = (p.coefficient(&w) - q.coefficient(&w)).abs();
            (w, diff)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cd(terms: &[(&str, i64)]) -> CdPolynomial {
        CdPolynomial::from_terms(terms).unwrap()
    }

    #[test]
    fn gamma_of_small_posets() {
        let b2 = GradedPoset::boolean_lattice(2).unwrap();
        assert_eq!(flag_to_ab(&b2.flag_vector()), ab(&[("a", 1), ("b", 2)]));
        for m in 3..8 {
            let q = GradedPoset::polygon(m).unwrap();
            let m = m as i64;
            assert_eq!(
                flag_to_ab(&q.flag_vector()),
                ab(&[("aa", 1), ("ba", m), ("ab", m), ("bb", 2 * m)])
            );
        }
        let d3 = GradedPoset::dihedral_sphere(3).unwrap();
        let cube = ab(&[("a", 1), ("b", 2)]);
        assert_eq!(flag_to_ab(&d3.flag_vector()), cube.mul(&cube).mul(&cube));
    }

    #[test]
    fn psi_examples() {
        assert_eq!(ab_index(&ab(&[("a", 1), ("b", 2)])), ab(&[("a", 1), ("b", 1)]));
        assert_eq!(ab_index(&ab(&[("b", 1)])), ab(&[("b", 1)]));
        let q5 = GradedPoset::polygon(5).unwrap();
        assert_eq!(
            ab_index(&flag_to_ab(&q5.flag_vector())),
            ab(&[("aa", 1), ("ab", 4), ("ba", 4), ("bb", 1)])
        );
    }

    #[test]
    fn unindex_inverts_index() {
        let g = ab(&[("aab", 3), ("bba", -2), ("aaa", 1), ("bbb", 7)]);
        assert_eq!(ab_unindex(&ab_index(&g)), g);
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(cd_expand(&cd(&[("cc", 1)])), ab(&[("aa", 1), ("ab", 1), ("ba", 1), ("bb", 1)]));
        assert_eq!(cd_expand(&cd(&[("d", 1)])), ab(&[("ab", 1), ("ba", 1)]));
    }

    #[test]
    fn extraction_examples() {
        assert_eq!(ab_to_cd(&ab(&[("a", 1), ("b", 1)])).unwrap(), cd(&[("c", 1)]));
        for m in 3..10 {
            let q = GradedPoset::polygon(m).unwrap();
            assert_eq!(cd_index(&q).unwrap(), polygon_cd(m as u64));
        }
        for d in 1..=5 {
            let p = GradedPoset::dihedral_sphere(d).unwrap();
            assert_eq!(cd_index(&p).unwrap(), CdPolynomial::monomial(&"c".repeat(d)).unwrap());
        }
    }

    #[test]
    fn every_cd_word_is_recovered() {
        for d in 0..=8 {
            for w in cd_words(d) {
                let m = CdPolynomial::monomial(&w).unwrap();
                assert_eq!(ab_to_cd(&cd_expand(&m)).unwrap(), m, "{w}");
            }
        }
    }

    #[test]
    fn non_eulerian_input_is_inexpressible() {
        let path = GradedPoset::path(2).unwrap();
        match flag_to_cd(&path.flag_vector()) {
            Err(CdError::Inexpressible { residual }) => assert!(!residual.is_zero()),
            other => panic!("{other:?}"),
        }
        assert!(matches!(ab_to_cd(&ab(&[("a", 1)])), Err(CdError::Inexpressible { .. })));
    }

    #[test]
    fn cd_to_flag_round_trips() {
        assert_eq!(
            cd_to_flag(&cd(&[("c", 1)])).unwrap(),
            FlagVector::from_u64s(1, &[1, 2]).unwrap()
        );
        for m in 3..8 {
            let q = GradedPoset::polygon(m).unwrap();
            assert_eq!(cd_to_flag(&polygon_cd(m as u64)).unwrap(), q.flag_vector());
        }
        let d4 = GradedPoset::dihedral_sphere(4).unwrap();
        assert_eq!(cd_to_flag(&cd(&[("cccc", 1)])).unwrap(), d4.flag_vector());
        assert!(matches!(
            cd_to_flag(&cd(&[("cc", 2)])),
            Err(CdError::Flag(FlagError::EmptyChainCount(_)))
        ));
    }

    #[test]
    fn products() {
        assert_eq!(cd_mul(&cd(&[("c", 1)]), &cd(&[("c", 1)])), cd(&[("cc", 1)]));
        assert_eq!(
            cd_mul(&cd(&[("c", 1)]), &polygon_cd(6)),
            cd(&[("ccc", 1), ("cd", 4)])
        );
        let x = cd(&[("cc", 1), ("d", 1)]);
        assert_eq!(
            cd_mul(&x, &x),
            cd(&[("cccc", 1), ("ccd", 1), ("dcc", 1), ("dd", 1)])
        );
    }

    #[test]
    fn stanley_spheres() {
        let (phi, poset) = stanley_sphere("c", 7).unwrap();
        assert_eq!(phi, cd(&[("c", 1)]));
        assert_eq!(poset, GradedPoset::boolean_lattice(2).unwrap());
        assert_eq!(stanley_sphere("d", 5).unwrap().0, cd(&[("cc", 1), ("d", 3)]));
        assert_eq!(stanley_sphere("cd", 4).unwrap().0, cd(&[("ccc", 1), ("cd", 2)]));
        assert!(matches!(stanley_sphere("d", 2), Err(CdError::PolygonTooSmall(2))));
        assert!(stanley_sphere("", 5).is_err());
        assert!(stanley_sphere("cx", 5).is_err());
    }

    #[test]
    fn word_lists() {
        assert_eq!(cd_words(0), vec![""]);
        assert_eq!(cd_words(1), vec!["c"]);
        assert_eq!(cd_words(3), vec!["ccc", "cd", "dc"]);
        assert_eq!(cd_words(4), vec!["cccc", "ccd", "cdc", "dcc", "dd"]);
        let counts: Vec<usize> = (0..=6).map(|d| cd_words(d).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 8, 13]);
    }

    #[test]
    fn cone_coordinate_examples() {
        assert_eq!(
            cone_coordinates(&cd(&[("cccc", 1)])).unwrap(),
            OrthantPoint::from_u64s(&[0, 0, 0, 0]).unwrap()
        );
        assert_eq!(
            cone_coordinates(&polygon_cd(9)).unwrap(),
            OrthantPoint::from_u64s(&[7]).unwrap()
        );
        let m = 7u64;
        let (phi, _) = stanley_sphere("dd", m).unwrap();
        assert_eq!(
            cone_coordinates(&phi).unwrap(),
            OrthantPoint::from_u64s(&[m - 2, 0, m - 2, (m - 2) * (m - 2)]).unwrap()
        );
        assert!(matches!(
            cone_coordinates(&cd(&[("cc", 2)])),
            Err(CdError::LeadingCoefficient { .. })
        ));
        assert!(matches!(cone_coordinates(&cd(&[("c", 1)])), Err(CdError::DegreeTooSmall)));
    }

    #[test]
    fn json_shape() {
        let p = cd(&[("d", 3), ("cc", 1)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"cc":"1","d":"3"}"#);
        assert_eq!(serde_json::from_str::<CdPolynomial>(&s).unwrap(), p);
        assert!(serde_json::from_str::<CdPolynomial>(r#"{"cc":"1","ccc":"1"}"#).is_err());
        assert!(serde_json::from_str::<CdPolynomial>(r#"{"ab":"1"}"#).is_err());
        assert!(serde_json::from_str::<AbPolynomial>(r#"{"ab":"1","ba":1}"#).is_ok());
    }

    #[test]
    fn display() {
        assert_eq!(polygon_cd(5).to_string(), "cc + 3*d");
        assert_eq!(CdPolynomial::zero(3).to_string(), "0");
    }
}
