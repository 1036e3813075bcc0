//! Concrete realization of G_d^c in Lazard coordinates: elements are
//! coordinate vectors over the Hall basis, the weight-w coordinate living
//! in Z/p^{c+1-w}, and the group law is the truncated BCH product.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use super::assoc::{
    dynkin_project, expand_hall, expansion_is_triangular, to_hall_coords, AssocPoly,
};
use super::law::{build_law, modinv, BracketTable, CompiledLaw};
use super::words::{hall_basis, HallElement};
use super::EngineError;
use crate::invariants::{is_prime, PrimePowerOrder};

/// Hard ceiling on the Hall basis size a context will precompile.
const BASIS_LIMIT: usize = 4096;

/// Immutable per-(p, d, c) data: basis, moduli, compiled law and structure
/// constants. Built once, then shared read-only.
pub struct GroupContext {
    p: u64,
    d: usize,
    c: usize,
    basis: Vec<HallElement>,
    weights: Vec<usize>,
    word_index: HashMap<Vec<u8>, usize>,
    moduli: Vec<u64>,
    expansions: Vec<AssocPoly<BigRational>>,
    law: Option<CompiledLaw>,
    brackets: BracketTable,
    /// Index pairs (i, j) of the weight-2 basis elements [x_{i+1}, x_{j+1}].
    pair_generators: Vec<(usize, u8, u8)>,
    /// Exponent of |G_d^c| derived from the basis weight counts alone.
    order_exponent: u64,
}

impl fmt::Debug for GroupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupContext")
            .field("p", &self.p)
            .field("d", &self.d)
            .field("c", &self.c)
            .field("basis", &self.basis.len())
            .finish()
    }
}

impl GroupContext {
    /// Builds the full Lazard context; requires p prime and p > c, and a
    /// coordinate modulus p^c below 2^31.
    pub fn new(p: u64, d: u64, c: u64) -> Result<Arc<Self>, EngineError> {
        Self::build(p, d, c, true)
    }

    /// Context for the class-2 collection oracle at any prime, including
    /// p = 2 where the Lazard law does not exist. For p > 2 this is the
    /// ordinary context.
    pub fn new_class2(p: u64, d: u64) -> Result<Arc<Self>, EngineError> {
        Self::build(p, d, 2, p > 2)
    }

    fn build(p: u64, d: u64, c: u64, with_law: bool) -> Result<Arc<Self>, EngineError> {
        if !is_prime(p) {
            return Err(EngineError::NotPrime(p));
        }
        if !(1..=255).contains(&d) {
            return Err(EngineError::InvalidRank);
        }
        if c < 1 {
            return Err(EngineError::InvalidClass);
        }
        if with_law && p <= c {
            return Err(EngineError::LazardRange { p, c });
        }
        let top_modulus = (p as u128).checked_pow(c as u32);
        match top_modulus {
            Some(m) if m < (1 << 31) => {}
            _ => return Err(EngineError::CoordinateRange { p, c }),
        }
        let c = c as usize;
        let basis = hall_basis(d as u8, c);
        if basis.len() > BASIS_LIMIT {
            return Err(EngineError::ContextTooLarge {
                basis: basis.len(),
                limit: BASIS_LIMIT,
            });
        }
        let words: Vec<Vec<u8>> = basis.iter().map(|e| e.word()).collect();
        let weights: Vec<usize> = basis.iter().map(|e| e.weight()).collect();
        let word_index: HashMap<Vec<u8>, usize> = words
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        let moduli: Vec<u64> = weights.iter().map(|&w| p.pow((c + 1 - w) as u32)).collect();
        let expansions: Vec<AssocPoly<BigRational>> = basis.iter().map(expand_hall).collect();
        for (w, e) in words.iter().zip(&expansions) {
            assert!(
                expansion_is_triangular(w, e),
                "basis expansion lost triangularity at {w:?}"
            );
        }
        let law = if with_law {
            Some(build_law(p, c, &word_index, &expansions, &moduli)?)
        } else {
            None
        };
        let brackets = super::law::bracket_table(c, &weights, &word_index, &expansions)?;
        assert!(
            super::law::bracket_coeffs_are_integral(&brackets),
            "structure constants are not integral"
        );
        let pair_generators = basis
            .iter()
            .enumerate()
            .filter_map(|(idx, e)| match e {
                HallElement::Bracket(l, r) => match (l.as_ref(), r.as_ref()) {
                    (HallElement::Generator(i), HallElement::Generator(j)) => Some((idx, *i, *j)),
                    _ => None,
                },
                _ => None,
            })
            .collect();
        let mut order_exponent = 0u64;
        for &w in &weights {
            order_exponent += (c + 1 - w) as u64;
        }
        Ok(Arc::new(GroupContext {
            p,
            d: d as usize,
            c,
            basis,
            weights,
            word_index,
            moduli,
            expansions,
            law,
            brackets,
            pair_generators,
            order_exponent,
        }))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn basis(&self) -> &[HallElement] {
        &self.basis
    }

    pub fn basis_len(&self) -> usize {
        self.basis.len()
    }

    pub fn weight(&self, idx: usize) -> usize {
        self.weights[idx]
    }

    pub fn modulus(&self, idx: usize) -> u64 {
        self.moduli[idx]
    }

    /// Exponent e with |G_d^c| = p^e, read off the basis weight counts.
    pub fn order_exponent(&self) -> u64 {
        self.order_exponent
    }

    pub fn group_order(&self) -> PrimePowerOrder {
        PrimePowerOrder {
            prime: self.p,
            exponent: self.order_exponent.into(),
        }
    }

    /// |G_d^c| as a u128 when it fits.
    pub fn group_size(&self) -> Option<u128> {
        let mut size = 1u128;
        for _ in 0..self.order_exponent {
            size = size.checked_mul(self.p as u128)?;
        }
        Some(size)
    }

    pub(crate) fn same_group(&self, other: &GroupContext) -> bool {
        std::ptr::eq(self, other) || (self.p == other.p && self.d == other.d && self.c == other.c)
    }

    pub(crate) fn law(&self) -> Result<&CompiledLaw, EngineError> {
        self.law.as_ref().ok_or(EngineError::LazardRange {
            p: self.p,
            c: self.c as u64,
        })
    }

    pub(crate) fn pair_generators(&self) -> &[(usize, u8, u8)] {
        &self.pair_generators
    }

    pub(crate) fn basis_index(&self, element: &HallElement) -> Result<usize, EngineError> {
        let idx = *self
            .word_index
            .get(&element.word())
            .ok_or(EngineError::NotBasisElement)?;
        if &self.basis[idx] == element {
            Ok(idx)
        } else {
            Err(EngineError::NotBasisElement)
        }
    }
}

/// Element of the ambient free nilpotent Lie ring in Hall coordinates:
/// finite map from basis elements to exact rational coefficients.
#[derive(Debug, Clone)]
pub struct LiePolynomial {
    ctx: Arc<GroupContext>,
    terms: BTreeMap<usize, BigRational>,
}

impl PartialEq for LiePolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_group(&other.ctx) && self.terms == other.terms
    }
}

impl LiePolynomial {
    pub fn zero(ctx: &Arc<GroupContext>) -> Self {
        LiePolynomial {
            ctx: Arc::clone(ctx),
            terms: BTreeMap::new(),
        }
    }

    pub fn generator(ctx: &Arc<GroupContext>, i: usize) -> Result<Self, EngineError> {
        if i >= ctx.d {
            return Err(EngineError::GeneratorIndex { index: i, d: ctx.d });
        }
        let mut poly = Self::zero(ctx);
        poly.terms.insert(i, BigRational::from_integer(1.into()));
        Ok(poly)
    }

    pub fn from_hall_element(
        ctx: &Arc<GroupContext>,
        element: &HallElement,
        coeff: BigRational,
    ) -> Result<Self, EngineError> {
        let idx = ctx.basis_index(element)?;
        let mut poly = Self::zero(ctx);
        if !coeff.is_zero() {
            poly.terms.insert(idx, coeff);
        }
        Ok(poly)
    }

    pub fn context(&self) -> &Arc<GroupContext> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, element: &HallElement) -> BigRational {
        match self.ctx.basis_index(element) {
            Ok(idx) => self.coefficient_at(idx),
            Err(_) => BigRational::zero(),
        }
    }

    pub fn coefficient_at(&self, idx: usize) -> BigRational {
        self.terms
            .get(&idx)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&HallElement, &BigRational)> {
        self.terms.iter().map(|(&i, q)| (&self.ctx.basis[i], q))
    }

    fn insert(&mut self, idx: usize, q: BigRational) {
        if q.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &q;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, EngineError> {
        if !self.ctx.same_group(&other.ctx) {
            return Err(EngineError::ContextMismatch);
        }
        let mut out = self.clone();
        for (&idx, q) in &other.terms {
            out.insert(idx, q.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let mut out = Self::zero(&self.ctx);
        if q.is_zero() {
            return out;
        }
        for (&idx, r) in &self.terms {
            out.terms.insert(idx, r * q);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigRational::from_integer((-1).into()))
    }

    /// Lie bracket, bilinear over the precomputed structure constants;
    /// components of total weight beyond c vanish.
    pub fn bracket(&self, other: &Self) -> Result<Self, EngineError> {
        if !self.ctx.same_group(&other.ctx) {
            return Err(EngineError::ContextMismatch);
        }
        let mut out = Self::zero(&self.ctx);
        for (&k, a) in &self.terms {
            for (&l, b) in &other.terms {
                if let Some(entry) = self.ctx.brackets.get(&(k, l)) {
                    let scale = a * b;
                    for (idx, q) in entry {
                        out.insert(*idx, q * &scale);
                    }
                }
            }
        }
        Ok(out)
    }

    fn to_assoc(&self) -> AssocPoly<BigRational> {
        let mut acc = AssocPoly::zero();
        for (&idx, q) in &self.terms {
            acc.add_scaled(&self.ctx.expansions[idx], q);
        }
        acc
    }
}

/// log(exp(u)·exp(v)) truncated at weight c, computed in the free
/// associative algebra and projected back to the Hall basis. The Dynkin
/// residual of the associative logarithm is asserted to vanish, certifying
/// that the result is a genuine Lie element.
pub fn bch_log_product(u: &LiePolynomial, v: &LiePolynomial) -> Result<LiePolynomial, EngineError> {
    if !u.ctx.same_group(&v.ctx) {
        return Err(EngineError::ContextMismatch);
    }
    let ctx = &u.ctx;
    let c = ctx.c;
    let product = AssocPoly::exp(&u.to_assoc(), c).mul_trunc(&AssocPoly::exp(&v.to_assoc(), c), c);
    let log = AssocPoly::log(&product, c);
    assert!(
        dynkin_project(&log) == log,
        "BCH product failed the Dynkin residual check"
    );
    let coords = to_hall_coords(&log, &ctx.word_index, &ctx.expansions)?;
    let mut out = LiePolynomial::zero(ctx);
    for (idx, q) in coords {
        out.insert(idx, q);
    }
    Ok(out)
}

/// A group element: coordinate vector over the Hall basis, the weight-w
/// coordinate reduced mod p^{c+1-w}.
#[derive(Debug, Clone)]
pub struct GroupElement {
    ctx: Arc<GroupContext>,
    coords: Vec<u32>,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_group(&other.ctx) && self.coords == other.coords
    }
}

impl Eq for GroupElement {}

impl std::hash::Hash for GroupElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl GroupElement {
    pub fn identity(ctx: &Arc<GroupContext>) -> Self {
        GroupElement {
            ctx: Arc::clone(ctx),
            coords: vec![0; ctx.basis.len()],
        }
    }

    pub fn generator(ctx: &Arc<GroupContext>, i: usize) -> Result<Self, EngineError> {
        if i >= ctx.d {
            return Err(EngineError::GeneratorIndex { index: i, d: ctx.d });
        }
        let mut g = Self::identity(ctx);
        g.coords[i] = 1;
        Ok(g)
    }

    pub fn from_coords(ctx: &Arc<GroupContext>, coords: Vec<u32>) -> Result<Self, EngineError> {
        if coords.len() != ctx.basis.len() {
            return Err(EngineError::CoordinateShape {
                got: coords.len(),
                expected: ctx.basis.len(),
            });
        }
        for (idx, &v) in coords.iter().enumerate() {
            if (v as u64) >= ctx.moduli[idx] {
                return Err(EngineError::CoordinateOutOfRange {
                    value: v as u64,
                    modulus: ctx.moduli[idx],
                });
            }
        }
        Ok(GroupElement {
            ctx: Arc::clone(ctx),
            coords,
        })
    }

    pub fn context(&self) -> &Arc<GroupContext> {
        &self.ctx
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(|&v| v == 0)
    }

    /// Canonical lift: coordinates as plain integers in [0, p^{c+1-w}).
    pub fn lift(&self) -> LiePolynomial {
        let mut poly = LiePolynomial::zero(&self.ctx);
        for (idx, &v) in self.coords.iter().enumerate() {
            if v != 0 {
                poly.terms.insert(idx, BigRational::from_integer(v.into()));
            }
        }
        poly
    }

    /// Group product via the compiled BCH law.
    pub fn multiply(&self, other: &Self) -> Result<Self, EngineError> {
        if !self.ctx.same_group(&other.ctx) {
            return Err(EngineError::ContextMismatch);
        }
        let law = self.ctx.law()?;
        let mut coords = vec![0u32; self.coords.len()];
        law.eval(&self.coords, &other.coords, &mut coords);
        Ok(GroupElement {
            ctx: Arc::clone(&self.ctx),
            coords,
        })
    }

    /// Reference product through the per-call BCH route; must agree with
    /// [`GroupElement::multiply`] everywhere.
    pub fn multiply_reference(&self, other: &Self) -> Result<Self, EngineError> {
        if !self.ctx.same_group(&other.ctx) {
            return Err(EngineError::ContextMismatch);
        }
        self.ctx.law()?;
        reduce(&bch_log_product(&self.lift(), &other.lift())?)
    }

    pub fn inverse(&self) -> Self {
        let mut coords = self.coords.clone();
        for (idx, v) in coords.iter_mut().enumerate() {
            if *v != 0 {
                *v = (self.ctx.moduli[idx] - *v as u64) as u32;
            }
        }
        GroupElement {
            ctx: Arc::clone(&self.ctx),
            coords,
        }
    }

    /// g^n by the coordinate rule n·log(g), valid for a single element.
    pub fn power(&self, n: i64) -> Self {
        let mut coords = self.coords.clone();
        for (idx, v) in coords.iter_mut().enumerate() {
            let m = self.ctx.moduli[idx];
            let factor = n.rem_euclid(m as i64) as u64;
            *v = (factor * *v as u64 % m) as u32;
        }
        GroupElement {
            ctx: Arc::clone(&self.ctx),
            coords,
        }
    }

    pub fn commutator(&self, other: &Self) -> Result<Self, EngineError> {
        self.inverse()
            .multiply(&other.inverse())?
            .multiply(&self.multiply(other)?)
    }

    pub fn conjugate_by(&self, k: &Self) -> Result<Self, EngineError> {
        k.inverse().multiply(self)?.multiply(k)
    }

    /// Least p^e with g^(p^e) = 1, by repeated p-th powering; e never
    /// exceeds c.
    pub fn element_order(&self) -> PrimePowerOrder {
        let p = self.ctx.p;
        let mut g = self.clone();
        for e in 0..=self.ctx.c as u64 {
            if g.is_identity() {
                return PrimePowerOrder {
                    prime: p,
                    exponent: e.into(),
                };
            }
            g = g.power(p as i64);
        }
        unreachable!("element order exceeds p^c");
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool, EngineError> {
        Ok(self.multiply(other)? == other.multiply(self)?)
    }
}

/// Projects a Lie polynomial to group coordinates: the weight-w coefficient
/// is carried to Z/p^{c+1-w} by clearing its denominator modulo the
/// coordinate modulus. Denominators must be prime to p, which the Lazard
/// range p > c guarantees for every BCH output.
pub fn reduce(poly: &LiePolynomial) -> Result<GroupElement, EngineError> {
    let ctx = &poly.ctx;
    let p_big = BigInt::from(ctx.p);
    let mut out = GroupElement::identity(ctx);
    for (&idx, q) in &poly.terms {
        let m = ctx.moduli[idx];
        if (q.denom() % &p_big).is_zero() {
            return Err(EngineError::NonInvertibleDenominator { p: ctx.p });
        }
        let m_big = BigInt::from(m);
        let num = q.numer().mod_floor(&m_big).to_u64().unwrap();
        let den = q.denom().mod_floor(&m_big).to_u64().unwrap();
        out.coords[idx] = (num * modinv(den, m) % m) as u32;
    }
    Ok(out)
}

/// Class-2 collection oracle: the closed-form product derived from the
/// identities [x_i^a, x_j^b] = [x_i, x_j]^{ab} of a group of class two.
///
/// For odd p the oracle converts Lazard coordinates to collected normal
/// form x_1^{a_1}…x_d^{a_d}·Π \[x_i,x_j\]^{n_ij}, collects, and converts back,
/// so it agrees pointwise with [`GroupElement::multiply`]. For p = 2, where
/// no Lazard chart exists, coordinates are read directly as collected
/// exponents and the same collection rule applies.
pub fn class2_multiply(g: &GroupElement, h: &GroupElement) -> Result<GroupElement, EngineError> {
    if !g.ctx.same_group(&h.ctx) {
        return Err(EngineError::ContextMismatch);
    }
    let ctx = &g.ctx;
    if ctx.c != 2 {
        return Err(EngineError::Class2Only { c: ctx.c as u64 });
    }
    let p = ctx.p;
    let p2 = p * p;
    let d = ctx.d;
    let inv2 = if p % 2 == 1 { Some(modinv(2, p)) } else { None };

    let to_collected = |coords: &[u32]| -> Vec<u64> {
        ctx.pair_generators()
            .iter()
            .map(|&(idx, i, j)| {
                let z = coords[idx] as u64;
                match inv2 {
                    Some(inv2) => {
                        let ai = coords[i as usize] as u64 % p;
                        let aj = coords[j as usize] as u64 % p;
                        (z + p - inv2 * ai % p * aj % p) % p
                    }
                    None => z,
                }
            })
            .collect()
    };

    let a = &g.coords;
    let b = &h.coords;
    let na = to_collected(a);
    let nb = to_collected(b);

    let mut out = GroupElement::identity(ctx);
    for i in 0..d {
        out.coords[i] = ((a[i] as u64 + b[i] as u64) % p2) as u32;
    }
    for (slot, &(idx, i, j)) in ctx.pair_generators().iter().enumerate() {
        // collecting x_j^{a_j} across x_i^{b_i} contributes [x_i,x_j]^{-a_j b_i}
        let aj = a[j as usize] as u64 % p;
        let bi = b[i as usize] as u64 % p;
        let mut z = (na[slot] + nb[slot] + p * p - aj * bi % p) % p;
        if let Some(inv2) = inv2 {
            let ai = out.coords[i as usize] as u64 % p;
            let ajj = out.coords[j as usize] as u64 % p;
            z = (z + inv2 * ai % p * ajj % p) % p;
        }
        out.coords[idx] = z as u32;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn context_guards() {
        assert!(matches!(
            GroupContext::new(2, 2, 3),
            Err(EngineError::LazardRange { .. })
        ));
        assert!(matches!(
            GroupContext::new(3, 2, 3),
            Err(EngineError::LazardRange { .. })
        ));
        assert!(matches!(
            GroupContext::new(6, 2, 2),
            Err(EngineError::NotPrime(6))
        ));
        assert!(GroupContext::new(5, 2, 3).is_ok());
        assert!(GroupContext::new_class2(2, 2).is_ok());
    }

    #[test]
    fn order_exponent_from_basis() {
        assert_eq!(GroupContext::new(3, 2, 2).unwrap().order_exponent(), 5);
        assert_eq!(GroupContext::new(5, 2, 3).unwrap().order_exponent(), 10);
        assert_eq!(GroupContext::new(5, 2, 4).unwrap().order_exponent(), 18);
        assert_eq!(GroupContext::new(3, 1, 2).unwrap().order_exponent(), 2);
    }

    #[test]
    fn bracket_examples() {
        let ctx = GroupContext::new(5, 2, 3).unwrap();
        let x1 = LiePolynomial::generator(&ctx, 0).unwrap();
        let x2 = LiePolynomial::generator(&ctx, 1).unwrap();
        // [x1, x1] = 0
        assert!(x1.bracket(&x1).unwrap().is_zero());
        // [x2, x1] = -[x1, x2]
        let z = x1.bracket(&x2).unwrap();
        let zr = x2.bracket(&x1).unwrap();
        assert_eq!(zr, z.neg());
        let pair = &ctx.basis()[2];
        assert_eq!(z.coefficient(pair), rat(1, 1));
        // [[x1,x2], x2] is the Hall element abb with coefficient 1
        let w3 = z.bracket(&x2).unwrap();
        assert_eq!(w3.coefficient(&ctx.basis()[4]), rat(1, 1));
        assert_eq!(w3.coefficient(&ctx.basis()[3]), rat(0, 1));
    }

    #[test]
    fn bch_small_cases() {
        let ctx = GroupContext::new(3, 2, 2).unwrap();
        let zero = LiePolynomial::zero(&ctx);
        let x1 = LiePolynomial::generator(&ctx, 0).unwrap();
        let x2 = LiePolynomial::generator(&ctx, 1).unwrap();
        assert_eq!(bch_log_product(&zero, &x2).unwrap(), x2);
        let z = bch_log_product(&x1, &x2).unwrap();
        assert_eq!(z.coefficient_at(0), BigRational::one());
        assert_eq!(z.coefficient_at(1), BigRational::one());
        assert_eq!(z.coefficient_at(2), rat(1, 2));

        let ctx3 = GroupContext::new(5, 2, 3).unwrap();
        let x1 = LiePolynomial::generator(&ctx3, 0).unwrap();
        let x2 = LiePolynomial::generator(&ctx3, 1).unwrap();
        let z = bch_log_product(&x1, &x2).unwrap();
        // x1 + x2 + 1/2 ab + 1/12 aab + 1/12 abb
        assert_eq!(z.coefficient_at(2), rat(1, 2));
        assert_eq!(z.coefficient_at(3), rat(1, 12));
        assert_eq!(z.coefficient_at(4), rat(1, 12));
    }

    #[test]
    fn reduce_examples() {
        let ctx = GroupContext::new(3, 2, 2).unwrap();
        let zero = LiePolynomial::zero(&ctx);
        assert!(reduce(&zero).unwrap().is_identity());
        // 1/2 [x1,x2] has coordinate 2 mod 3
        let half_bracket =
            LiePolynomial::from_hall_element(&ctx, &ctx.basis()[2].clone(), rat(1, 2)).unwrap();
        assert_eq!(reduce(&half_bracket).unwrap().coords(), &[0, 0, 2]);
        // p^c x1 reduces to the identity
        let big = LiePolynomial::generator(&ctx, 0).unwrap().scale(&rat(9, 1));
        assert!(reduce(&big).unwrap().is_identity());
        // denominator divisible by p is rejected
        let bad = LiePolynomial::generator(&ctx, 0).unwrap().scale(&rat(1, 3));
        assert!(matches!(
            reduce(&bad),
            Err(EngineError::NonInvertibleDenominator { .. })
        ));
    }

    #[test]
    fn multiply_example() {
        let ctx = GroupContext::new(3, 2, 2).unwrap();
        let x1 = GroupElement::generator(&ctx, 0).unwrap();
        let x2 = GroupElement::generator(&ctx, 1).unwrap();
        let prod = x1.multiply(&x2).unwrap();
        assert_eq!(prod.coords(), &[1, 1, 2]);
        assert_eq!(
            prod,
            x1.multiply_reference(&x2).unwrap(),
            "compiled law disagrees with the direct BCH route"
        );
        let e = GroupElement::identity(&ctx);
        assert_eq!(x1.multiply(&e).unwrap(), x1);
        assert!(x1.multiply(&x1.inverse()).unwrap().is_identity());
    }

    #[test]
    fn power_and_order() {
        let ctx = GroupContext::new(3, 2, 2).unwrap();
        let x1 = GroupElement::generator(&ctx, 0).unwrap();
        assert_eq!(x1.power(1), x1);
        assert!(x1.power(9).is_identity());
        assert!(!x1.power(3).is_identity());
        assert_eq!(x1.element_order().to_string(), "3^2");
        assert_eq!(
            GroupElement::identity(&ctx).element_order().to_string(),
            "3^0"
        );
        assert_eq!(
            GroupElement::identity(&ctx).inverse(),
            GroupElement::identity(&ctx)
        );
    }

    #[test]
    fn commutator_example() {
        let ctx = GroupContext::new(3, 2, 2).unwrap();
        let x1 = GroupElement::generator(&ctx, 0).unwrap();
        let x2 = GroupElement::generator(&ctx, 1).unwrap();
        assert!(x1.commutator(&x1).unwrap().is_identity());
        assert!(x1
            .commutator(&GroupElement::identity(&ctx))
            .unwrap()
            .is_identity());
        let z = x1.commutator(&x2).unwrap();
        assert_eq!(z.coords(), &[0, 0, 1]);
    }

    #[test]
    fn context_mismatch_rejected() {
        let ctx_a = GroupContext::new(3, 2, 2).unwrap();
        let ctx_b = GroupContext::new(5, 2, 2).unwrap();
        let g = GroupElement::generator(&ctx_a, 0).unwrap();
        let h = GroupElement::generator(&ctx_b, 0).unwrap();
        assert!(matches!(g.multiply(&h), Err(EngineError::ContextMismatch)));
    }

    #[test]
    fn class2_agrees_with_multiply() {
        let ctx = GroupContext::new(3, 2, 2).unwrap();
        let x1 = GroupElement::generator(&ctx, 0).unwrap();
        let x2 = GroupElement::generator(&ctx, 1).unwrap();
        assert_eq!(
            class2_multiply(&x1, &x2).unwrap(),
            x1.multiply(&x2).unwrap()
        );
        assert_eq!(
            class2_multiply(&x2, &x1).unwrap(),
            x2.multiply(&x1).unwrap()
        );
        let g = GroupElement::from_coords(&ctx, vec![7, 2, 1]).unwrap();
        assert_eq!(
            class2_multiply(&g, &GroupElement::identity(&ctx)).unwrap(),
            g
        );
    }

    #[test]
    fn class2_at_p2() {
        let ctx = GroupContext::new_class2(2, 2).unwrap();
        let x1 = GroupElement::generator(&ctx, 0).unwrap();
        let sq = class2_multiply(&x1, &x1).unwrap();
        assert_eq!(sq.coords(), &[2, 0, 0]);
        // multiply is unavailable without the Lazard chart
        assert!(matches!(
            x1.multiply(&x1),
            Err(EngineError::LazardRange { .. })
        ));
        // the collected chart still forms a group of exponent 4
        assert!(class2_multiply(&sq, &sq).unwrap().is_identity());
    }

    #[test]
    fn class2_requires_class_two() {
        let ctx = GroupContext::new(5, 2, 3).unwrap();
        let x1 = GroupElement::generator(&ctx, 0).unwrap();
        assert!(matches!(
            class2_multiply(&x1, &x1),
            Err(EngineError::Class2Only { .. })
        ));
    }
}
