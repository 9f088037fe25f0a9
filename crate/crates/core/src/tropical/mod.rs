//! Max-plus scalars, matrices, tropical hulls and the projective metric.

pub mod action;
pub mod hull;
pub mod matrix;
pub mod metric;
pub mod scalar;

pub use action::{act, act_scalar, ScaledPermutationMatrix};
pub use hull::{contains, contains_i64, exp_b_point, log_b_point, normalize, residuate};
pub use matrix::{coordinate_sum, is_finite_point, mat_tmul, mat_vec, TropMatrix};
pub use metric::d_tr;
pub use scalar::{
    common_denominator, format_rational, frac, parse_rational, rat, Rational, TropScalar,
};
