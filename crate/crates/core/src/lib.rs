//! Congruence spreading in finite lattices.
//!
//! The crate builds finite lattices from their covering relations, computes
//! congruences by brute force, and searches for chains of perspectivities,
//! swings and switches that certify when the congruence generated by one
//! prime interval collapses another. The [`verify`] module compares the two
//! sides exhaustively over generated families of planar semimodular
//! lattices.

pub mod congruence;
pub mod constructions;
pub mod error;
pub mod export;
pub mod lattice;
pub mod projectivity;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{Interval, Lattice, PrimeInterval};
