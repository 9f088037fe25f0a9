//! Tropical volume functionals: barycentric volume by two algorithms,
//! barycentric `i`-volumes, the dequantized volume, surface areas and products.

pub mod barycenter;
pub mod ivolumes;
pub mod lp;
pub mod product;
pub mod report;
pub mod subsets;

pub use barycenter::{homogenize, simplex_dtrunk_barycenter, tropical_barycenter, SimplexTrunk};
pub use ivolumes::{tlvol_i_minus, tlvol_i_plus, tlvol_triangulation, IVolume, LatticeEmbedding};
pub use lp::{lp_max_min_linear, maximize, sum_largest, sum_smallest, LpSolution};
pub use product::cartesian_product;
pub use report::{
    discrete_surface, qtvol_plus, tlsurf, triangulation_candidates, volume_report, AlcoveWitness,
    Method, VolumeOptions, VolumeReport,
};
pub use subsets::{tlvol_subsets, SubsetWitness};
