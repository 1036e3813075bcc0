//! Truncated free associative algebra over d letters with exact
//! coefficients: the ambient space in which Baker–Campbell–Hausdorff
//! products are computed formally and certified Lie via the Dynkin
//! projection before being read back into Hall coordinates.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};

use super::words::HallElement;
use super::EngineError;

/// Exact coefficient ring: big rationals for concrete products, polynomial
/// rings for the precompiled multiplication law.
pub trait Coeff: Clone + PartialEq {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Exact division by a positive integer.
    fn div_u64(&self, n: u64) -> Self;
    fn from_ratio(q: &BigRational) -> Self;
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div_u64(&self, n: u64) -> Self {
        self / BigRational::from_integer(BigInt::from(n))
    }
    fn from_ratio(q: &BigRational) -> Self {
        q.clone()
    }
}

/// Polynomial in the truncated free associative algebra: finite map from
/// words over the generator alphabet to nonzero coefficients. The empty
/// word is the unit.
#[derive(Debug, Clone, PartialEq)]
pub struct AssocPoly<R: Coeff> {
    terms: BTreeMap<Vec<u8>, R>,
}

impl<R: Coeff> AssocPoly<R> {
    pub fn zero() -> Self {
        AssocPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(r: R) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), &r);
        p
    }

    pub fn from_word(word: Vec<u8>, r: R) -> Self {
        let mut p = Self::zero();
        p.add_term(word, &r);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u8>, &R)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &[u8]) -> R {
        self.terms.get(word).cloned().unwrap_or_else(R::zero)
    }

    pub fn add_term(&mut self, word: Vec<u8>, r: &R) {
        if r.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(r.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(r);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (w, r) in &other.terms {
            self.add_term(w.clone(), r);
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (w, r) in &other.terms {
            self.add_term(w.clone(), &r.neg());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, s: &R) {
        if s.is_zero() {
            return;
        }
        for (w, r) in &other.terms {
            self.add_term(w.clone(), &r.mul(s));
        }
    }

    pub fn div_u64_in_place(&mut self, n: u64) {
        for r in self.terms.values_mut() {
            *r = r.div_u64(n);
        }
    }

    /// Product truncated to words of length at most `max_deg`.
    pub fn mul_trunc(&self, other: &Self, max_deg: usize) -> Self {
        let mut out = Self::zero();
        for (w1, r1) in &self.terms {
            if w1.len() > max_deg {
                continue;
            }
            for (w2, r2) in &other.terms {
                if w1.len() + w2.len() > max_deg {
                    continue;
                }
                let mut w = Vec::with_capacity(w1.len() + w2.len());
                w.extend_from_slice(w1);
                w.extend_from_slice(w2);
                out.add_term(w, &r1.mul(r2));
            }
        }
        out
    }

    pub fn constant_term(&self) -> R {
        self.coefficient(&[])
    }

    /// Smallest word with a nonzero coefficient, in the map's
    /// shortlex-within-prefix order.
    pub fn min_term(&self) -> Option<(Vec<u8>, R)> {
        self.terms
            .iter()
            .next()
            .map(|(w, r)| (w.clone(), r.clone()))
    }

    /// Formal exponential of a constant-free polynomial, truncated at
    /// `max_deg`.
    pub fn exp(u: &Self, max_deg: usize) -> Self {
        assert!(
            u.constant_term().is_zero(),
            "exp requires zero constant term"
        );
        let mut out = Self::constant(R::from_ratio(&BigRational::one()));
        let mut power = Self::constant(R::from_ratio(&BigRational::one()));
        for k in 1..=max_deg as u64 {
            power = power.mul_trunc(u, max_deg);
            power.div_u64_in_place(k);
            if power.is_zero() {
                break;
            }
            out.add_assign(&power);
        }
        out
    }

    /// Formal logarithm of a polynomial with constant term 1, truncated at
    /// `max_deg`.
    pub fn log(w: &Self, max_deg: usize) -> Self {
        let one = R::from_ratio(&BigRational::one());
        assert!(w.constant_term() == one, "log requires constant term 1");
        let mut t = w.clone();
        t.add_term(Vec::new(), &one.neg());
        let mut out = Self::zero();
        let mut power = Self::constant(one);
        for k in 1..=max_deg as u64 {
            power = power.mul_trunc(&t, max_deg);
            if power.is_zero() {
                break;
            }
            let mut term = power.clone();
            term.div_u64_in_place(k);
            if k % 2 == 0 {
                out.sub_assign(&term);
            } else {
                out.add_assign(&term);
            }
        }
        out
    }
}

/// Associative expansion of a basic commutator: generators map to
/// one-letter words, brackets to AB - BA.
pub fn expand_hall(e: &HallElement) -> AssocPoly<BigRational> {
    match e {
        HallElement::Generator(i) => AssocPoly::from_word(vec![*i], BigRational::one()),
        HallElement::Bracket(l, r) => {
            let a = expand_hall(l);
            let b = expand_hall(r);
            let deg = e.weight();
            let mut out = a.mul_trunc(&b, deg);
            out.sub_assign(&b.mul_trunc(&a, deg));
            out
        }
    }
}

/// Left-normed bracketing [[…[y1,y2]…],yn] of a word, as an associative
/// polynomial with integer coefficients.
pub fn left_normed_bracket(word: &[u8]) -> AssocPoly<BigRational> {
    assert!(!word.is_empty());
    let mut acc = AssocPoly::from_word(vec![word[0]], BigRational::one());
    for &letter in &word[1..] {
        let y = AssocPoly::from_word(vec![letter], BigRational::one());
        let deg = usize::MAX;
        let mut next = acc.mul_trunc(&y, deg);
        next.sub_assign(&y.mul_trunc(&acc, deg));
        acc = next;
    }
    acc
}

/// Dynkin projection: each degree-n word maps to (1/n) times its
/// left-normed bracketing. The identity on Lie elements; the residual
/// L - P(L) certifies Lie-ness when it vanishes.
pub fn dynkin_project<R: Coeff>(l: &AssocPoly<R>) -> AssocPoly<R> {
    let mut out = AssocPoly::zero();
    for (word, coeff) in l.iter() {
        assert!(!word.is_empty(), "Dynkin projection of a constant term");
        let bracket = left_normed_bracket(word);
        let n = word.len() as u64;
        for (w, q) in bracket.iter() {
            out.add_term(w.clone(), &coeff.mul(&R::from_ratio(q)).div_u64(n));
        }
    }
    out
}

/// Rewrites a Lie element, given as an associative polynomial, in Hall
/// coordinates by triangular elimination against the basis expansions:
/// the expansion of the bracketing of a Lyndon word w is w plus
/// lexicographically larger words, so repeatedly stripping the least
/// remaining word terminates and inverts the expansion exactly.
pub fn to_hall_coords<R: Coeff>(
    poly: &AssocPoly<R>,
    word_index: &HashMap<Vec<u8>, usize>,
    expansions: &[AssocPoly<BigRational>],
) -> Result<BTreeMap<usize, R>, EngineError> {
    let mut rest = poly.clone();
    let mut out = BTreeMap::new();
    while let Some((word, coeff)) = rest.min_term() {
        let Some(&idx) = word_index.get(&word) else {
            return Err(EngineError::NotLieElement);
        };
        let mut scaled = AssocPoly::<R>::zero();
        scaled.add_scaled_ratio(&expansions[idx], &coeff);
        rest.sub_assign(&scaled);
        debug_assert!(rest.coefficient(&word).is_zero());
        out.insert(idx, coeff);
    }
    Ok(out)
}

impl<R: Coeff> AssocPoly<R> {
    /// Adds `scale * other` where `other` has rational coefficients.
    fn add_scaled_ratio(&mut self, other: &AssocPoly<BigRational>, scale: &R) {
        for (w, q) in other.iter() {
            self.add_term(w.clone(), &scale.mul(&R::from_ratio(q)));
        }
    }
}

/// Checks the triangularity certificate for one basis element: its
/// expansion carries its own word with coefficient exactly 1 as the least
/// term.
pub fn expansion_is_triangular(word: &[u8], expansion: &AssocPoly<BigRational>) -> bool {
    match expansion.min_term() {
        Some((w, q)) => w == word && q.is_one() && !q.is_negative(),
        None => false,
    }
}
