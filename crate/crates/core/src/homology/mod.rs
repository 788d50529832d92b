//! Exact-homology oracle: Stanley-Reisner complexes, reduced homology,
//! Hochster's formula, and the resolution-shape predicates built on it.

mod betti;
mod complex;
mod predicates;
pub mod rank;

pub use betti::{hochster_betti, BettiTable, RegPd, ORACLE_LIMIT};
pub use complex::{FieldTag, ReducedHomology, SimplicialComplex};
pub use predicates::{
    has_linear_resolution, is_cohen_macaulay, is_componentwise_linear, is_sequentially_cm,
};
