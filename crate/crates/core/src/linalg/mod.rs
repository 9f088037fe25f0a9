//! Tropical determinants, assignments, minors, rank and Kleene stars.

pub mod assignment;
pub mod kleene;
pub mod minors;
pub mod permanent;

pub use assignment::{certificate_holds, tdet, AssignmentResult};
pub use kleene::{is_nonsingular_fast, kleene_star, normal_form, NormalForm};
pub use minors::{tminor, tropical_rank, Minor};
pub use permanent::{
    bideterminant, is_nonsingular, is_sign_generic, tdet_brute, tdet_second, tvol_max_sub,
    tvol_square, Bideterminant, BruteForce, PermutationTable, PermutationVolume,
    DEFAULT_BRUTE_BOUND,
};
