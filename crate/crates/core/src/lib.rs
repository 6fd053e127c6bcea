//! Exact element-order statistics of finite groups.
//!
//! For a finite group `G` the sum `psi(G)` and the product `rho(G)` of the
//! orders of its elements give two normalized means,
//! `psi''(G) = psi(G) / |G|^2` and `l(G) = rho(G)^(1/|G|) / |G|`.
//! Lower bounds on these numbers force structure: cyclicity, nilpotency,
//! supersolubility, solubility, p-nilpotency.  This crate computes both
//! means exactly, evaluates the known closed forms without rounding, decides
//! the structural predicates on permutation groups, and checks the
//! threshold statements over a corpus of groups.

pub mod closed_forms;
pub mod dsl;
mod error;
pub mod exact;
pub mod group;
pub mod invariants;
pub mod structure;
pub mod tables;
pub mod verifier;

pub use error::{Error, Result};
