//! Exact invariants of disposition p-groups G_d^c.
//!
//! G_d^c is the largest d-generator p-group of Frattini class c, the
//! quotient of a free group of rank d by the (c+1)-st term of its Lazard
//! series. This crate computes its subgroup orders, multiplier ranks and
//! literature bounds in closed form ([`invariants`]), and cross-checks them
//! against a concrete realization of the group built from a free nilpotent
//! Lie ring with truncated Baker–Campbell–Hausdorff multiplication
//! ([`engine`]).

pub mod engine;
pub mod invariants;
pub mod numtheory;
pub mod report;

pub use invariants::{ClassRow, GroupParams, PrimePowerOrder};
pub use numtheory::BigNat;
