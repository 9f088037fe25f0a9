//! The alcoved triangulation `T_P` of a tropical lattice polytope.

pub mod alcove;
pub mod complex;

pub use alcove::{canonical_patterns, AlcovedSimplex, Relation};
pub use complex::{
    bounding_box, enumerate_triangulation, integer_rows, CellComplex, CellLabel, CellRecord,
};
