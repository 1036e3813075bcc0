//! Closed-form order and rank formulas for disposition p-groups G_d^c: the
//! lower central and Lazard series, upper centers, nilpotent and
//! polynilpotent multiplier ranks, and the Jones, Burns–Ellis and
//! Niroomand–Johari–Parvizi literature bounds.
//!
//! Everything here is exact: orders travel as (prime, exponent) pairs and
//! are never expanded to full integers.

use crate::numtheory::{nested_chi, witt, witt_u64, BigNat};
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("rank d must be at least 1")]
    InvalidRank,
    #[error("class c must be at least 1")]
    InvalidClass,
    #[error("{what} index {index} out of range {min}..={max}")]
    IndexOutOfRange {
        what: &'static str,
        index: u64,
        min: u64,
        max: u64,
    },
    #[error("class row must be nonempty with positive entries")]
    InvalidClassRow,
    #[error(
        "class row head m1 = {m1} exceeds the class c = {c}; the rank formula requires m1 <= c"
    )]
    RowHeadExceedsClass { m1: u64, c: u64 },
    #[error("bound domain violated: need n > k >= 1 and m >= 2, got n = {n}, k = {k}, m = {m}")]
    BoundDomain { n: u64, k: u64, m: u64 },
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2u64;
    while q * q <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

/// The triple (p, d, c) identifying the disposition group G_d^c: the largest
/// d-generator p-group of Frattini class c.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupParams {
    p: u64,
    d: u64,
    c: u64,
}

/// An order p^e carried as (prime, exponent).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePowerOrder {
    pub prime: u64,
    pub exponent: BigNat,
}

impl PrimePowerOrder {
    pub fn is_trivial(&self) -> bool {
        self.exponent.is_zero()
    }
}

impl fmt::Display for PrimePowerOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.prime, self.exponent)
    }
}

/// A polynilpotent class row (m_1, …, m_t), t >= 1, every entry positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRow(Vec<u64>);

impl ClassRow {
    pub fn new(entries: Vec<u64>) -> Result<Self, InvariantError> {
        if entries.is_empty() || entries.contains(&0) {
            return Err(InvariantError::InvalidClassRow);
        }
        Ok(ClassRow(entries))
    }

    pub fn head(&self) -> u64 {
        self.0[0]
    }

    pub fn tail(&self) -> &[u64] {
        &self.0[1..]
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl GroupParams {
    /// Validates p prime, d >= 1, c >= 1. Rank d = 1 is accepted everywhere
    /// and degenerates to the cyclic group of order p^c.
    pub fn new(p: u64, d: u64, c: u64) -> Result<Self, InvariantError> {
        if !is_prime(p) {
            return Err(InvariantError::NotPrime(p));
        }
        if d < 1 {
            return Err(InvariantError::InvalidRank);
        }
        if c < 1 {
            return Err(InvariantError::InvalidClass);
        }
        Ok(GroupParams { p, d, c })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    fn chi(&self, k: u64) -> BigNat {
        witt_u64(k, self.d)
    }

    fn order(&self, exponent: BigNat) -> PrimePowerOrder {
        PrimePowerOrder {
            prime: self.p,
            exponent,
        }
    }

    /// E(c, d) = Σ_{k=1}^{c} (c-k+1) χ_k(d), the exponent of |G_d^c|.
    pub fn group_order_exponent(&self) -> BigNat {
        order_exponent(self.c, self.d)
    }

    pub fn group_order(&self) -> PrimePowerOrder {
        self.order(self.group_order_exponent())
    }

    /// Exponent of |γ_i(G_d^c)| = Σ_{k=i}^{c} (c-k+1) χ_k(d); i = c+1 gives
    /// the trivial subgroup.
    pub fn gamma_order_exponent(&self, i: u64) -> Result<BigNat, InvariantError> {
        if i < 1 || i > self.c + 1 {
            return Err(InvariantError::IndexOutOfRange {
                what: "gamma",
                index: i,
                min: 1,
                max: self.c + 1,
            });
        }
        let mut sum = BigNat::zero();
        for k in i..=self.c {
            sum += BigNat::from(self.c - k + 1) * self.chi(k);
        }
        Ok(sum)
    }

    /// Exponent of |λ_j(G_d^c)| = E(c, d) − E(j−1, d), with E(0, d) = 0.
    pub fn lambda_order_exponent(&self, j: u64) -> Result<BigNat, InvariantError> {
        if j < 1 || j > self.c + 1 {
            return Err(InvariantError::IndexOutOfRange {
                what: "lambda",
                index: j,
                min: 1,
                max: self.c + 1,
            });
        }
        Ok(self.group_order_exponent() - order_exponent(j - 1, self.d))
    }

    /// Exponent of |Z_i(G_d^c)|, via Z_i = λ_{c-i+1}; i ranges over 0..=c.
    ///
    /// The identity with the true upper central series holds for the
    /// noncyclic groups (d >= 2); for d = 1 the group is abelian and this
    /// is the λ-series value only, which is what the order-level
    /// capability identity consumes.
    pub fn upper_central_exponent(&self, i: u64) -> Result<BigNat, InvariantError> {
        if i > self.c {
            return Err(InvariantError::IndexOutOfRange {
                what: "upper central",
                index: i,
                min: 0,
                max: self.c,
            });
        }
        if i == 0 {
            return Ok(BigNat::zero());
        }
        self.lambda_order_exponent(self.c - i + 1)
    }

    /// Rank of the m-nilpotent multiplier of G_d^c, elementary abelian of
    /// order p^s.
    ///
    /// For m <= c the exponent is assembled from the layer sums
    /// t_i = χ_{m+1}(d) + … + χ_{c+i}(d), i = 1..m, giving
    /// s = m Σ_{j=m+1}^{c} χ_j(d) + Σ_{i=1}^{m} (m-i+1) χ_{c+i}(d).
    /// For m >= c, s = Σ_{i=1}^{c} (c-i+1) χ_{m+i}(d). The regimes agree at
    /// m = c.
    pub fn nilpotent_multiplier_rank(&self, m: u64) -> BigNat {
        assert!(m >= 1, "multiplier class m must be at least 1");
        if m <= self.c {
            let mut sum = BigNat::zero();
            for j in m + 1..=self.c {
                sum += BigNat::from(m) * self.chi(j);
            }
            for i in 1..=m {
                sum += BigNat::from(m - i + 1) * self.chi(self.c + i);
            }
            sum
        } else {
            let mut sum = BigNat::zero();
            for i in 1..=self.c {
                sum += BigNat::from(self.c - i + 1) * self.chi(m + i);
            }
            sum
        }
    }

    /// Schur multiplier rank s = Σ_{i=1}^{c} χ_{i+1}(d); coincides with the
    /// 1-nilpotent multiplier rank.
    pub fn schur_multiplier_rank(&self) -> BigNat {
        let mut sum = BigNat::zero();
        for i in 1..=self.c {
            sum += self.chi(i + 1);
        }
        sum
    }

    /// Rank of the polynilpotent multiplier of class row (m_1, …, m_t):
    /// nested χ composition of the tail applied to the m_1-nilpotent rank.
    /// Requires m_1 <= c.
    pub fn polynilpotent_multiplier_rank(&self, row: &ClassRow) -> Result<BigNat, InvariantError> {
        let m1 = row.head();
        if m1 > self.c {
            return Err(InvariantError::RowHeadExceedsClass { m1, c: self.c });
        }
        let s = self.nilpotent_multiplier_rank(m1);
        Ok(nested_chi(row.tail(), &s))
    }

    /// k_i with |[φ(G_d^c), _{i-1} G_d^c]| = p^{k_i}: the γ_i order exponent
    /// minus χ_i(d), by Schmid's index |γ_i/γ_i^p γ_{i+1}| = p^{χ_i(d)}.
    pub fn frattini_commutator_exponent(&self, i: u64) -> Result<BigNat, InvariantError> {
        if i < 1 || i > self.c {
            return Err(InvariantError::IndexOutOfRange {
                what: "frattini commutator",
                index: i,
                min: 1,
                max: self.c,
            });
        }
        Ok(self.gamma_order_exponent(i)? - self.chi(i))
    }

    /// Burns–Ellis bound exponent: χ_{m+1}(d) + Σ_{i=1}^{min(m,c)} k_i d^{m-i+1}.
    /// For m > c the missing k_i are zero ([φ(G), _{i-1} G] is trivial past
    /// the class).
    pub fn burns_ellis_bound_exponent(&self, m: u64) -> BigNat {
        assert!(m >= 1, "Burns-Ellis bound requires m >= 1");
        let mut sum = self.chi(m + 1);
        let d = BigNat::from(self.d);
        for i in 1..=m.min(self.c) {
            let k_i = self
                .frattini_commutator_exponent(i)
                .expect("i <= c by construction");
            let power = u32::try_from(m - i + 1).expect("exponent fits u32");
            sum += k_i * d.pow(power);
        }
        sum
    }

    /// Jones generator bound d(M(G)) <= Σ_{i=1}^{c} χ_{i+1}(d); attained by
    /// disposition groups, so this equals the Schur rank.
    pub fn jones_generator_bound(&self) -> BigNat {
        self.schur_multiplier_rank()
    }

    /// Order-level shadow of n-capability: |G_d^{n+c}| / |Z_n(G_d^{n+c})|
    /// equals |G_d^c|. Necessary, not sufficient, for the isomorphism
    /// G_d^{n+c}/Z_n ≅ G_d^c.
    pub fn capability_check(&self, n: u64) -> bool {
        assert!(n >= 1, "capability degree n must be at least 1");
        let big = GroupParams {
            p: self.p,
            d: self.d,
            c: self.c + n,
        };
        let quotient = big.group_order_exponent()
            - big
                .upper_central_exponent(n)
                .expect("n <= c + n by construction");
        quotient == self.group_order_exponent()
    }
}

/// E(c, d) with E(0, d) = 0.
fn order_exponent(c: u64, d: u64) -> BigNat {
    let mut sum = BigNat::zero();
    for k in 1..=c {
        sum += BigNat::from(c - k + 1) * witt_u64(k, d);
    }
    sum
}

/// Exponent s_k = χ_k(d) + … + χ_n(d) of the elementary abelian layer
/// (λ_n ∩ γ_k)/(λ_{n+1} ∩ γ_k) in a free group of rank d.
pub fn lambda_layer_exponent(n: u64, k: u64, d: u64) -> Result<BigNat, InvariantError> {
    if k < 1 || k > n {
        return Err(InvariantError::IndexOutOfRange {
            what: "lambda layer",
            index: k,
            min: 1,
            max: n,
        });
    }
    let mut sum = BigNat::zero();
    for j in k..=n {
        sum += witt_u64(j, d);
    }
    Ok(sum)
}

/// Niroomand–Johari–Parvizi bound exponent for a p-group of order p^n with
/// derived subgroup of order p^k: χ_{m+1}(n−k) + χ_{m+2}(2) + (k−1)(n−k)^m,
/// exactly as published. Requires n > k >= 1 and m >= 2.
pub fn njp_bound_exponent(n: u64, k: u64, m: u64) -> Result<BigNat, InvariantError> {
    if n <= k || k < 1 || m < 2 {
        return Err(InvariantError::BoundDomain { n, k, m });
    }
    let base = BigNat::from(n - k);
    let mut sum = witt(m + 1, &base);
    sum += witt_u64(m + 2, 2);
    let power = u32::try_from(m).expect("m fits u32");
    sum += BigNat::from(k - 1) * base.pow(power);
    Ok(sum)
}
