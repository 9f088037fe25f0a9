//! Runs every seeded property suite at its default size.

use tropevol_core::check::{run_suite, SuiteReport, DEFAULT_SEED, SUITES};

fn run(name: &str) -> SuiteReport {
    let start = std::time::Instant::now();
    let r = run_suite(name, DEFAULT_SEED, None).unwrap();
    eprintln!(
        "{name}: {} cases, {} checks, {} failed, {} divergences, {} warnings in {:.1?}",
        r.cases,
        r.checks,
        r.failed,
        r.divergences.len(),
        r.warnings.len(),
        start.elapsed()
    );
    for f in &r.failures {
        eprintln!("  failure: {f}");
    }
    for d in &r.divergences {
        eprintln!("  divergence: {d}");
    }
    for w in &r.warnings {
        eprintln!("  warning: {w}");
    }
    r
}

macro_rules! suite_test {
    ($test:ident, $name:literal) => {
        #[test]
        fn $test() {
            let r = run($name);
            assert!(
                r.checks > 0 || $name == "conjecture",
                "{} ran no checks",
                $name
            );
            assert!(r.passed(), "{} failed: {:?}", $name, r.failures);
        }
    };
}

suite_test!(membership, "membership");
suite_test!(metric, "metric");
suite_test!(rotation_sets, "rotation-sets");
suite_test!(hungarian, "hungarian");
suite_test!(cauchy_binet, "cauchy-binet");
suite_test!(kleene, "kleene");
suite_test!(minor_monotonicity, "minor-monotonicity");
suite_test!(cells, "cells");
suite_test!(cross_volume, "cross-volume");
suite_test!(ehrhart_oracle, "ehrhart-oracle");
suite_test!(ehrhart_props, "ehrhart-props");
suite_test!(theorems, "theorems");
suite_test!(volume_props, "volume-props");
suite_test!(products, "products");
suite_test!(conjecture, "conjecture");

#[test]
fn every_suite_has_a_test() {
    assert_eq!(SUITES.len(), 15);
}

#[test]
fn reports_are_deterministic() {
    let a = run_suite("metric", 7, Some(20)).unwrap();
    let b = run_suite("metric", 7, Some(20)).unwrap();
    assert_eq!(a.checks, b.checks);
    assert_eq!(a.failures, b.failures);
}
