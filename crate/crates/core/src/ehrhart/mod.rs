//! Tropical and classical lattice-point counting, tropical Ehrhart
//! polynomials, their coefficients cell by cell, and the Log map.

pub mod cellwise;
pub mod chain;
pub mod counting;
pub mod logmap;
pub mod polynomial;
pub mod tropical;

pub use cellwise::{
    c_d_direct, c_dminus1_direct, classical_ehrhart_scaled_simplex, closed_scaled_count,
    coeffs_via_formula, count_via_cells, interior_coeffs, open_cell_count, reciprocity_check,
    rvol_scaled_simplex, ClassicalEhrhartPolynomial,
};
pub use counting::{
    count_classical_dilate, count_maxtimes, count_tropical, lattice_point_in, maxtimes_candidates,
    LatticeSpec, DEFAULT_GUARD,
};
pub use logmap::{degree_bound, log_map, log_of};
pub use tropical::{tropical_ehrhart_poly, tropical_ehrhart_poly_cells, TropicalEhrhartPolynomial};
