//! Exact max-plus polytopes.
//!
//! Tropical hulls and membership, determinants and Kleene stars, the alcoved
//! triangulation of a tropical lattice polytope, tropical Ehrhart polynomials
//! and lattice-point counts, and the family of tropical volume functionals.
//! All arithmetic is exact over `Q ∪ {-inf}`.

#![allow(clippy::needless_range_loop)]

pub mod cells;
pub mod check;
pub mod combinatorics;
pub mod ehrhart;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod tropical;
pub mod volumes;

pub use cells::{enumerate_triangulation, AlcovedSimplex, CellComplex, Relation};
pub use ehrhart::{ClassicalEhrhartPolynomial, LatticeSpec, TropicalEhrhartPolynomial};

pub use error::{Error, Result};
pub use linalg::{AssignmentResult, Bideterminant, PermutationVolume};
pub use tropical::{Rational, ScaledPermutationMatrix, TropMatrix, TropScalar};
pub use volumes::{Method, VolumeOptions, VolumeReport};
