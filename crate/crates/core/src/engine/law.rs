//! Compiled multiplication law. The BCH product is evaluated once,
//! symbolically, with the two operand coordinate vectors as indeterminates;
//! the resulting Hall-coordinate polynomials are certified (Dynkin residual
//! zero, exact identity laws) and then reduced modulo each coordinate's
//! modulus p^{c+1-w} into integer form for fast repeated evaluation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::HashMap;

use super::assoc::{dynkin_project, to_hall_coords, AssocPoly, Coeff};
use super::mpoly::{MPoly, Monomial};
use super::EngineError;

/// One coordinate's law: z_k = Σ coeff · Π vars^exp (mod modulus).
#[derive(Debug)]
pub(crate) struct CompiledPoly {
    pub modulus: u64,
    pub terms: Vec<(u64, Monomial)>,
}

#[derive(Debug)]
pub(crate) struct CompiledLaw {
    /// Number of basis coordinates; variables 0..b are the left operand,
    /// b..2b the right.
    pub basis_len: usize,
    pub polys: Vec<CompiledPoly>,
}

pub(crate) fn modinv(x: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i128, (x % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert!(r0 == 1, "modinv: {x} not invertible mod {m}");
    t0.rem_euclid(m as i128) as u64
}

fn ratio_mod(q: &BigRational, m: u64) -> u64 {
    let m_big = BigInt::from(m);
    let num = q.numer().mod_floor(&m_big).to_u64().unwrap();
    let den = q.denom().mod_floor(&m_big).to_u64().unwrap();
    num * modinv(den, m) % m
}

/// Builds the symbolic BCH product in Hall coordinates and compiles it
/// against the coordinate moduli. `expansions[k]` is the associative
/// expansion of basis element k, `moduli[k]` its coordinate modulus.
pub(crate) fn build_law(
    p: u64,
    c: usize,
    word_index: &HashMap<Vec<u8>, usize>,
    expansions: &[AssocPoly<BigRational>],
    moduli: &[u64],
) -> Result<CompiledLaw, EngineError> {
    let b = expansions.len();
    let embed = |offset: usize| -> AssocPoly<MPoly> {
        let mut acc = AssocPoly::zero();
        for (k, expansion) in expansions.iter().enumerate() {
            let var = MPoly::var((offset + k) as u16);
            for (w, q) in expansion.iter() {
                acc.add_term(w.clone(), &var.mul(&MPoly::from_ratio(q)));
            }
        }
        acc
    };

    let u = embed(0);
    let v = embed(b);
    let product = AssocPoly::exp(&u, c).mul_trunc(&AssocPoly::exp(&v, c), c);
    let log = AssocPoly::log(&product, c);

    // Certificate 1: the symbolic product is a Lie element.
    assert!(
        dynkin_project(&log) == log,
        "BCH template failed the Dynkin projection certificate"
    );

    let coords = to_hall_coords(&log, word_index, expansions)?;
    let mut symbolic: Vec<MPoly> = vec![MPoly::zero(); b];
    for (idx, poly) in coords {
        symbolic[idx] = poly;
    }

    // Certificate 2: substituting either operand by zero yields the other.
    for (k, poly) in symbolic.iter().enumerate() {
        let left_only = poly.without_vars(|v| (v as usize) >= b);
        let right_only = poly.without_vars(|v| (v as usize) < b);
        assert!(
            left_only == MPoly::var(k as u16),
            "law for coordinate {k} does not restrict to the left identity"
        );
        assert!(
            right_only == MPoly::var((b + k) as u16),
            "law for coordinate {k} does not restrict to the right identity"
        );
    }

    let polys = symbolic
        .iter()
        .enumerate()
        .map(|(k, poly)| {
            let modulus = moduli[k];
            let mut terms = Vec::new();
            for (mono, q) in poly.iter() {
                assert!(
                    !(q.denom() % BigInt::from(p)).is_zero(),
                    "BCH denominator divisible by p; Lazard range violated"
                );
                let coeff = ratio_mod(q, modulus);
                if coeff != 0 {
                    terms.push((coeff, mono.clone()));
                }
            }
            CompiledPoly { modulus, terms }
        })
        .collect();

    Ok(CompiledLaw {
        basis_len: b,
        polys,
    })
}

impl CompiledLaw {
    /// Evaluates the law on two canonical coordinate vectors.
    pub fn eval(&self, a: &[u32], bvec: &[u32], out: &mut [u32]) {
        for (k, poly) in self.polys.iter().enumerate() {
            let m = poly.modulus;
            let mut acc = 0u64;
            for (coeff, mono) in &poly.terms {
                let mut t = *coeff;
                for &(var, exp) in mono {
                    let v = var as usize;
                    let val = if v < self.basis_len {
                        a[v] as u64 % m
                    } else {
                        bvec[v - self.basis_len] as u64 % m
                    };
                    for _ in 0..exp {
                        t = t * val % m;
                    }
                }
                acc = (acc + t) % m;
            }
            out[k] = acc as u32;
        }
    }
}

/// Brackets of basis pairs in Hall coordinates, indexed by the pair.
pub(crate) type BracketTable = HashMap<(usize, usize), Vec<(usize, BigRational)>>;

/// Structure constants: brackets of basis pairs in Hall coordinates,
/// truncated past weight c.
pub(crate) fn bracket_table(
    c: usize,
    weights: &[usize],
    word_index: &HashMap<Vec<u8>, usize>,
    expansions: &[AssocPoly<BigRational>],
) -> Result<BracketTable, EngineError> {
    let b = expansions.len();
    let mut table = HashMap::new();
    for k in 0..b {
        for l in 0..b {
            if k == l || weights[k] + weights[l] > c {
                continue;
            }
            let deg = weights[k] + weights[l];
            let mut poly = expansions[k].mul_trunc(&expansions[l], deg);
            poly.sub_assign(&expansions[l].mul_trunc(&expansions[k], deg));
            if poly.is_zero() {
                continue;
            }
            let coords = to_hall_coords(&poly, word_index, expansions)?;
            let entry: Vec<(usize, BigRational)> = coords.into_iter().collect();
            if !entry.is_empty() {
                table.insert((k, l), entry);
            }
        }
    }
    Ok(table)
}

/// Structure constants of the Lyndon basis are plain integers; anything
/// else indicates a broken elimination.
pub(crate) fn bracket_coeffs_are_integral(table: &BracketTable) -> bool {
    table.values().flatten().all(|(_, q)| q.denom().is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modinv_small() {
        assert_eq!(modinv(2, 3), 2);
        assert_eq!(modinv(2, 9), 5);
        assert_eq!(modinv(7, 25), 18);
        for m in [3u64, 5, 7, 9, 25, 121] {
            for x in 1..m {
                if num_integer::gcd(x, m) == 1 {
                    assert_eq!(modinv(x, m) * x % m, 1, "x={x} m={m}");
                }
            }
        }
    }
}
