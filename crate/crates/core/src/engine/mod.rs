//! Concrete realization of disposition p-groups for small parameters with
//! p > c, via the Lazard correspondence: a free nilpotent Lie ring on a
//! Hall basis, truncated BCH multiplication and coordinate reduction,
//! plus brute-force subgroup closure. Serves as the independent oracle for
//! the closed-form formulas in [`crate::invariants`].

mod assoc;
mod closure;
mod group;
mod law;
mod mpoly;
mod words;

pub use closure::{
    center, full_group, gamma_generators, gamma_subgroup, group_generators, lambda_generators,
    lambda_series, lambda_subgroup, lower_central_series, subgroup_closure, SubgroupSet,
};
pub use group::{
    bch_log_product, class2_multiply, reduce, GroupContext, GroupElement, LiePolynomial,
};
pub use words::{hall_basis, lyndon_words, HallElement};

use thiserror::Error;

/// Default ceiling on closure enumerations.
pub const DEFAULT_CLOSURE_CAP: usize = 2_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("the Lazard realization requires p > c, got p = {p}, c = {c}")]
    LazardRange { p: u64, c: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("rank d must be between 1 and 255")]
    InvalidRank,
    #[error("class c must be at least 1")]
    InvalidClass,
    #[error("coordinate modulus {p}^{c} exceeds the 31-bit coordinate range")]
    CoordinateRange { p: u64, c: u64 },
    #[error("Hall basis has {basis} elements, above the context limit {limit}")]
    ContextTooLarge { basis: usize, limit: usize },
    #[error("operands belong to different (p, d, c) contexts")]
    ContextMismatch,
    #[error("generator index {index} out of range for rank {d}")]
    GeneratorIndex { index: usize, d: usize },
    #[error("closure cap exceeded after {size} elements")]
    CapExceeded { size: usize },
    #[error("not a Hall basis element of this context")]
    NotBasisElement,
    #[error("polynomial is not a Lie element")]
    NotLieElement,
    #[error("coefficient denominator is divisible by p = {p}")]
    NonInvertibleDenominator { p: u64 },
    #[error("the class-2 oracle requires c = 2, context has c = {c}")]
    Class2Only { c: u64 },
    #[error("coordinate vector has {got} entries, context expects {expected}")]
    CoordinateShape { got: usize, expected: usize },
    #[error("coordinate {value} out of range for modulus {modulus}")]
    CoordinateOutOfRange { value: u64, modulus: u64 },
}
