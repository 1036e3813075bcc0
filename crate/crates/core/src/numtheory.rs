//! Exact arithmetic kernel: Möbius function, Witt's rank formula, the
//! brute-force Lyndon-word counter that serves as its independent oracle,
//! and nested χ composition.
//!
//! All ranks and order exponents in this crate are carried as arbitrary
//! precision naturals ([`BigNat`]); χ_n(d) grows like d^n/n and composed
//! values explode far past machine words.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};
use thiserror::Error;

/// Arbitrary-precision nonnegative integer, the carrier for every rank and
/// order exponent.
pub type BigNat = BigUint;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumTheoryError {
    #[error("mobius is undefined for m = 0")]
    MobiusZero,
    #[error("enumeration guard exceeded: {count} words of length {n} over {d} letters")]
    EnumerationGuard { n: u64, d: u64, count: u128 },
}

/// Möbius function: 1 at 1, 0 when a squared prime divides `m`, otherwise
/// (-1)^s for a product of s distinct primes.
pub fn mobius(m: u64) -> Result<i32, NumTheoryError> {
    if m == 0 {
        return Err(NumTheoryError::MobiusZero);
    }
    let mut rest = m;
    let mut sign = 1i32;
    let mut q = 2u64;
    while q * q <= rest {
        if rest.is_multiple_of(q) {
            rest /= q;
            if rest.is_multiple_of(q) {
                return Ok(0);
            }
            sign = -sign;
        }
        q += 1;
    }
    if rest > 1 {
        sign = -sign;
    }
    Ok(sign)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut q = 1u64;
    while q * q <= n {
        if n.is_multiple_of(q) {
            divs.push(q);
            if q != n / q {
                divs.push(n / q);
            }
        }
        q += 1;
    }
    divs
}

fn witt_memo() -> &'static Mutex<HashMap<(u64, BigUint), BigUint>> {
    static MEMO: OnceLock<Mutex<HashMap<(u64, BigUint), BigUint>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Witt's formula χ_n(d) = (1/n) Σ_{m|n} μ(m) d^{n/m}, the rank of the
/// weight-n layer of a free Lie ring on d generators.
///
/// `d = 0` and `d = 1` are accepted; the formula degenerates to 0 for all
/// n ≥ 2 in the rank-one case. Values are memoized per (n, d); the memo is
/// a pure cache and concurrent idempotent fills are harmless.
pub fn witt(n: u64, d: &BigNat) -> BigNat {
    assert!(n >= 1, "witt requires n >= 1");
    if let Some(v) = witt_memo().lock().unwrap().get(&(n, d.clone())) {
        return v.clone();
    }
    let mut sum = BigInt::zero();
    for m in divisors(n) {
        let mu = mobius(m).expect("divisor is positive");
        if mu == 0 {
            continue;
        }
        let exp = u32::try_from(n / m).expect("exponent fits u32");
        let term = BigInt::from(d.pow(exp));
        if mu > 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    // The necklace-counting sum is divisible by n before division.
    let (quot, rem) = sum.div_rem(&BigInt::from(n));
    assert!(rem.is_zero(), "witt sum not divisible by n = {n}");
    assert!(!quot.is_negative(), "witt value negative for n = {n}");
    let value = quot.to_biguint().unwrap();
    witt_memo()
        .lock()
        .unwrap()
        .insert((n, d.clone()), value.clone());
    value
}

/// Convenience wrapper for machine-word ranks.
pub fn witt_u64(n: u64, d: u64) -> BigNat {
    witt(n, &BigNat::from(d))
}

/// Largest alphabet-size^length product the Lyndon enumerator will attempt.
pub const LYNDON_ENUMERATION_GUARD: u128 = 100_000_000;

/// Counts Lyndon words of length `n` over a `d`-letter alphabet by explicit
/// enumeration: every string is generated and kept iff it is strictly
/// smaller than all of its proper rotations.
///
/// Deliberately brute force — this is the independent oracle for [`witt`],
/// so it must share no machinery with it. Guarded by
/// [`LYNDON_ENUMERATION_GUARD`] on d^n.
pub fn lyndon_count(n: u64, d: u64) -> Result<BigNat, NumTheoryError> {
    assert!(n >= 1, "lyndon_count requires n >= 1");
    assert!(d >= 1, "lyndon_count requires d >= 1");
    let total = (d as u128).checked_pow(u32::try_from(n).unwrap_or(u32::MAX));
    let total = match total {
        Some(t) if t <= LYNDON_ENUMERATION_GUARD => t,
        _ => {
            return Err(NumTheoryError::EnumerationGuard {
                n,
                d,
                count: total.unwrap_or(u128::MAX),
            })
        }
    };
    let n = n as usize;
    let mut word = vec![0u64; n];
    let mut count = 0u64;
    for _ in 0..total {
        if is_strictly_smallest_rotation(&word) {
            count += 1;
        }
        // odometer step
        let mut i = n;
        while i > 0 {
            i -= 1;
            word[i] += 1;
            if word[i] < d {
                break;
            }
            word[i] = 0;
        }
    }
    Ok(BigNat::from(count))
}

fn is_strictly_smallest_rotation(word: &[u64]) -> bool {
    let n = word.len();
    for r in 1..n {
        // compare word against its rotation by r
        let mut strictly_less = false;
        for i in 0..n {
            let a = word[i];
            let b = word[(i + r) % n];
            if a < b {
                strictly_less = true;
                break;
            }
            if a > b {
                break;
            }
        }
        if !strictly_less {
            return false;
        }
    }
    true
}

/// Nested χ composition χ_{m_t+1}(χ_{m_{t-1}+1}(…(χ_{m_2+1}(s))…)) over the
/// tail (m_2, …, m_t) of a class row. The empty tail is the identity.
///
/// Composed values explode quickly: χ_{m+1} of an s-digit input has roughly
/// (m+1)·s digits, so callers should cap the tail length (the CLI caps the
/// full row at four entries by default).
pub fn nested_chi(tail: &[u64], s: &BigNat) -> BigNat {
    let mut acc = s.clone();
    for &m in tail {
        assert!(m >= 1, "class row entries must be positive");
        acc = witt(m + 1, &acc);
    }
    acc
}
