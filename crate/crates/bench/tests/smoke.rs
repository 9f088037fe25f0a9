//! Runs each benchmark workload once so that the benches cannot rot.

use std::time::{Duration, Instant};

use tropevol_bench::instances;
use tropevol_core::cells::enumerate_triangulation;
use tropevol_core::ehrhart::{coeffs_via_formula, count_tropical, count_via_cells, DEFAULT_GUARD};
use tropevol_core::linalg::{tdet, tminor};
use tropevol_core::volumes::{tlvol_subsets, LatticeEmbedding};

#[test]
fn workloads_finish_quickly() {
    let start = Instant::now();
    for m in instances(5, 12, 20, 4) {
        let (v, _) = tlvol_subsets(&m).unwrap();
        assert!(v <= tminor(&m, 5).unwrap().value);
    }
    for m in instances(3, 5, 4, 4) {
        assert_eq!(
            LatticeEmbedding::new(&m).unwrap().tlvol().0,
            tlvol_subsets(&m).unwrap().0
        );
    }
    for m in instances(12, 12, 100, 4) {
        assert!(tdet(&m).unwrap().value.is_finite());
    }
    for m in instances(2, 4, 4, 4) {
        let t = enumerate_triangulation(&m).unwrap();
        assert_eq!(
            count_tropical(&m, 2, 1, DEFAULT_GUARD).unwrap(),
            count_via_cells(&t, 2, 1, DEFAULT_GUARD).unwrap()
        );
        coeffs_via_formula(&t, 3, DEFAULT_GUARD).unwrap();
    }
    assert!(
        start.elapsed() < Duration::from_secs(60),
        "took {:?}",
        start.elapsed()
    );
}

#[test]
fn instances_are_reproducible() {
    assert_eq!(instances(3, 4, 9, 3), instances(3, 4, 9, 3));
}
