//! Seeded workloads shared by the criterion benches and the smoke test.

use rand::SeedableRng;
use tropevol_core::check::gen::{int_matrix, Rng8};
use tropevol_core::TropMatrix;

pub const SEED: u64 = 0x7e55_e1a7;

/// `count` random `d × m` matrices with entries in `0..=hi`, reproducible from [`SEED`].
pub fn instances(d: usize, m: usize, hi: i64, count: usize) -> Vec<TropMatrix> {
    let mut rng = Rng8::seed_from_u64(SEED ^ ((d as u64) << 32) ^ m as u64);
    (0..count)
        .map(|_| int_matrix(&mut rng, d, m, 0, hi))
        .collect()
}
