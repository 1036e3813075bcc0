//! Sparse multivariate polynomials over the rationals, used as the
//! coefficient ring when the group law is compiled symbolically: the two
//! operand coordinate vectors become 2B indeterminates and one BCH
//! evaluation yields the whole multiplication table.

use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;

use super::assoc::Coeff;

/// Sorted sparse exponent list (variable, exponent), exponents positive.
pub type Monomial = Vec<(u16, u8)>;

#[derive(Debug, Clone, PartialEq)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl MPoly {
    pub fn var(i: u16) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![(i, 1)], BigRational::from_integer(1.into()));
        MPoly { terms }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    fn insert(&mut self, mono: Monomial, q: BigRational) {
        if Zero::is_zero(&q) {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &q;
                if Zero::is_zero(&sum) {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Drops every term that mentions a variable in `vars`; used for the
    /// identity-law certificates (substituting one operand by zero).
    pub fn without_vars(&self, vars: impl Fn(u16) -> bool) -> Self {
        let mut out = MPoly {
            terms: BTreeMap::new(),
        };
        for (mono, q) in &self.terms {
            if mono.iter().any(|(v, _)| vars(*v)) {
                continue;
            }
            out.insert(mono.clone(), q.clone());
        }
        out
    }
}

fn mul_monomials(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = Monomial::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl Coeff for MPoly {
    fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (mono, q) in &rhs.terms {
            out.insert(mono.clone(), q.clone());
        }
        out
    }

    fn neg(&self) -> Self {
        MPoly {
            terms: self.terms.iter().map(|(m, q)| (m.clone(), -q)).collect(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, q1) in &self.terms {
            for (m2, q2) in &rhs.terms {
                out.insert(mul_monomials(m1, m2), q1 * q2);
            }
        }
        out
    }

    fn div_u64(&self, n: u64) -> Self {
        let divisor = BigRational::from_integer(n.into());
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, q)| (m.clone(), q / &divisor))
                .collect(),
        }
    }

    fn from_ratio(q: &BigRational) -> Self {
        let mut out = Self::zero();
        out.insert(Vec::new(), q.clone());
        out
    }
}
