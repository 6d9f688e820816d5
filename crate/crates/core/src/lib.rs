//! Iterated sumsets of lattice point sets and the Castelnuovo–Mumford
//! regularity of the simplicial projective toric varieties they define.
//!
//! The entry point is [`GeneratorSet`]: a finite `A ⊂ ℕ^d` containing the
//! origin and every `D·εᵢ`. From it one can
//!
//! * build the sumsets `sA` ([`SumsetTower`]),
//! * decide whether the variety is smooth or has one singular point
//!   ([`classify::classify`]),
//! * compute the sumsets regularity `σ(A)` ([`sumset_reg::sigma`]),
//! * compute `reg` through the reduced homology of the complexes `T_y`
//!   ([`cm_reg::reg`]) and the degree ([`cm_reg::degree`]),
//! * and compare both against the Eisenbud–Goto bound.

pub mod analysis;
pub mod classify;
pub mod cm_reg;
pub mod error;
pub mod generate;
pub mod homology;
pub mod instance;
pub mod lattice;
pub mod linalg;
pub mod oracle;
pub mod plot;
pub mod sumset_reg;

pub use error::{Error, Result};
pub use lattice::{GeneratorSet, HomogenizedGeneratorSet, LatticeVector, SimplexSlice, SumsetLevel, SumsetTower};
