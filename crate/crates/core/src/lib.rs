//! Generalized cluster complexes Δ^m_W for W = A_{n-1} and B_n, realized as
//! complexes of m-divisible polygon dissections.
//!
//! - [`polygon`]: labels, chords, diagonals and faces.
//! - [`complex`]: vertex generation and exact face enumeration.
//! - [`counts`]: closed-form face numbers, h-vectors, Narayana numbers.
//! - [`bijection`]: the map from type-B dissections to label multisets and
//!   0/1 vectors, with its inverse.
//! - [`simplicial`]: generic complexes, vertex decompositions and shellings.
//! - [`homology`]: reduced Betti numbers.
//! - [`dissection`]: glue between dissection complexes and the generic engine.

pub mod bijection;
pub mod complex;
pub mod counts;
pub mod dissection;
pub mod error;
pub mod homology;
pub mod params;
pub mod polygon;
pub mod simplicial;

pub use error::{Error, Result};
pub use params::{ComplexParams, Family};
pub use polygon::{Chord, Diagonal, Face, Label};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
