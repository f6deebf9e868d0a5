//! Exact arithmetic for negative-definite ADE root lattices.
//!
//! The crate builds irreducible and composite root lattices, computes their
//! discriminant groups, enumerates small vectors of the dual lattice and
//! sorts them into Weyl orbits, and reduces dual vectors of square at least
//! −2 to duals of simple vertices by a chain of simple reflections. The
//! [`certifier`] module combines these per component to check, for every
//! vector of square −1 or −2 in `R^∨ ∖ R`, that the reduction ends at a
//! vector with only negative coefficients.

pub mod certifier;
pub mod discriminant;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod parse;
pub mod reduction;
pub mod small_vectors;
pub mod tables;
pub mod vector;
pub mod weyl;

pub use discriminant::{Class, DiscriminantGroup};
pub use error::{Error, Result};
pub use lattice::{CompositeLattice, IrreducibleRootLattice, Kind, Lattice};
pub use parse::parse_lattice_spec;
pub use vector::{LatticeVector, Rational};
pub use weyl::OrbitSummary;
