//! Computations around the outer automorphism group of a right-angled Artin
//! group `A_Γ`: an exact word engine, the domination order on vertices and
//! its classes, maximal joins and special subgroups, the standard generators,
//! restriction and projection maps to maximal joins, and the kernels of those
//! maps.

pub mod abelian;
pub mod automorphism;
pub mod dot;
pub mod error;
pub mod graph;
pub mod joins;
pub mod kernel;
pub mod order;
pub mod projection;
pub mod report;
pub mod suites;
pub mod words;

pub use error::{Error, Result};

/// Abelianization vector over machine integers.
pub type IntVector = abelian::ZVector<i64>;
/// Abelianization matrix over machine integers.
pub type IntMatrix = abelian::ZMatrix<i64>;
