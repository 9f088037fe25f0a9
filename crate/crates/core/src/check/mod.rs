//! Seeded property suites. Every suite is deterministic for a given seed and
//! is shared by the `check` command and the test targets.

pub mod gen;

mod cell_suites;
mod core_suites;
mod ehrhart_suites;
mod linalg_suites;
mod volume_suites;

use rand::SeedableRng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::tropical::TropMatrix;
use gen::Rng8;

pub const DEFAULT_SEED: u64 = 2024;

/// Messages kept per list; the counters keep counting past it.
const MAX_MESSAGES: usize = 20;

/// Outcome of one suite.
#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub checks: u64,
    pub failed: u64,
    /// Violated assertions.
    pub failures: Vec<String>,
    /// Stated properties that are false, with the counterexamples found; the
    /// suite asserts the corrected statement instead.
    pub divergences: Vec<String>,
    /// Findings of non-blocking searches.
    pub warnings: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

/// Running state handed to a suite body.
pub struct Ctx {
    pub rng: Rng8,
    pub cases: usize,
    report: SuiteReport,
}

impl Ctx {
    /// Records one assertion; `msg` is only built on failure.
    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.report.checks += 1;
        if !ok {
            self.report.failed += 1;
            if self.report.failures.len() < MAX_MESSAGES {
                self.report.failures.push(msg());
            }
        }
    }

    /// Records `a == b` for displayable values.
    pub fn check_eq<T: PartialEq + std::fmt::Debug>(
        &mut self,
        a: &T,
        b: &T,
        what: impl FnOnce() -> String,
    ) {
        self.check(a == b, || format!("{}: {a:?} != {b:?}", what()));
    }

    pub fn diverge(&mut self, msg: String) {
        if self.report.divergences.len() < MAX_MESSAGES {
            self.report.divergences.push(msg);
        }
    }

    pub fn warn(&mut self, msg: String) {
        if self.report.warnings.len() < MAX_MESSAGES {
            self.report.warnings.push(msg);
        }
    }

    /// Runs `f`, turning an error into a recorded failure.
    pub fn attempt(&mut self, what: &str, f: impl FnOnce(&mut Ctx) -> Result<()>) {
        if let Err(e) = f(self) {
            self.check(false, || format!("{what}: {e}"));
        }
    }
}

/// A named property suite.
pub struct Suite {
    pub name: &'static str,
    pub about: &'static str,
    pub default_cases: usize,
    body: fn(&mut Ctx) -> Result<()>,
}

pub const SUITES: &[Suite] = &[
    Suite {
        name: "membership",
        about: "hull membership: translation equivariance, coefficient fuzzing, residuation",
        default_cases: 200,
        body: core_suites::membership,
    },
    Suite {
        name: "metric",
        about: "projective metric: symmetry, triangle inequality, projective invariance",
        default_cases: 200,
        body: core_suites::metric,
    },
    Suite {
        name: "rotation-sets",
        about: "membership in R_d and R_{d,i}^± against subset enumeration",
        default_cases: 200,
        body: core_suites::rotation_sets,
    },
    Suite {
        name: "hungarian",
        about: "assignment tdet vs permutation enumeration (r ≤ 6), dual certificates, non-singularity",
        default_cases: 500,
        body: linalg_suites::hungarian,
    },
    Suite {
        name: "cauchy-binet",
        about: "two-sided bideterminant identity for A = B ⊙ C",
        default_cases: 200,
        body: linalg_suites::cauchy_binet,
    },
    Suite {
        name: "kleene",
        about: "Kleene star idempotence and agreement with the power series",
        default_cases: 200,
        body: linalg_suites::kleene,
    },
    Suite {
        name: "minor-monotonicity",
        about: "tminor_i(B ⊙ C) ≤ tminor_i(B) when the maximizing minor is sign-generic",
        default_cases: 100,
        body: linalg_suites::minor_monotonicity,
    },
    Suite {
        name: "cells",
        about: "triangulation: partition, dedup, exhaustive candidate check, trunk nesting and convexity",
        default_cases: 50,
        body: cell_suites::cells,
    },
    Suite {
        name: "cross-volume",
        about: "tlvol by subsets equals tlvol by triangulation",
        default_cases: 100,
        body: volume_suites::cross_volume,
    },
    Suite {
        name: "ehrhart-oracle",
        about: "count_tropical = count_via_cells = interpolated polynomial",
        default_cases: 100,
        body: ehrhart_suites::oracle,
    },
    Suite {
        name: "ehrhart-props",
        about: "coefficient homogeneity and valuation, leading and second coefficient paths, Log of c_d",
        default_cases: 30,
        body: ehrhart_suites::properties,
    },
    Suite {
        name: "theorems",
        about: "tlvol ≤ qtvol+, tlvol_i^- ≤ tminor_i, tlvol_1^+ = tminor_1, Log c_{d-1} bounds, rank bound, reciprocity",
        default_cases: 50,
        body: volume_suites::theorems,
    },
    Suite {
        name: "volume-props",
        about: "monotonicity, idempotency, homogeneity and rotation invariance of tlvol and tlvol_i^±",
        default_cases: 50,
        body: volume_suites::properties,
    },
    Suite {
        name: "products",
        about: "tlvol(M × N) = tlvol(M) + tlvol(N)",
        default_cases: 50,
        body: volume_suites::products,
    },
    Suite {
        name: "conjecture",
        about: "search for Log c_i^b > tminor_i (reported, never asserted)",
        default_cases: 40,
        body: ehrhart_suites::conjecture,
    },
];

pub fn find_suite(name: &str) -> Result<&'static Suite> {
    SUITES.iter().find(|s| s.name == name).ok_or_else(|| {
        let names: Vec<&str> = SUITES.iter().map(|s| s.name).collect();
        Error::Invalid(format!(
            "unknown suite {name:?} (expected one of {})",
            names.join(", ")
        ))
    })
}

/// Runs one suite with `cases` random instances (its default when `None`).
pub fn run_suite(name: &str, seed: u64, cases: Option<usize>) -> Result<SuiteReport> {
    let idx = SUITES.iter().position(|s| s.name == name);
    let suite = find_suite(name)?;
    let stream = idx.expect("found") as u64;
    let mut ctx = Ctx {
        rng: Rng8::seed_from_u64(
            seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
                .wrapping_add(stream),
        ),
        cases: cases.unwrap_or(suite.default_cases),
        report: SuiteReport {
            name: suite.name.to_string(),
            ..Default::default()
        },
    };
    ctx.report.cases = ctx.cases;
    if let Err(e) = (suite.body)(&mut ctx) {
        ctx.check(false, || format!("aborted: {e}"));
    }
    Ok(ctx.report)
}

/// Runs the `theorems` checks on the given canonical lattice matrices (each
/// with at least as many columns as rows).
pub fn theorems_on(matrices: &[TropMatrix]) -> SuiteReport {
    let mut ctx = Ctx {
        rng: Rng8::seed_from_u64(DEFAULT_SEED),
        cases: matrices.len(),
        report: SuiteReport {
            name: "theorems".into(),
            cases: matrices.len(),
            ..Default::default()
        },
    };
    for m in matrices {
        ctx.attempt(&m.to_string(), |ctx| {
            volume_suites::theorem_instance(ctx, m)
        });
    }
    ctx.report
}

/// Runs every suite with its default size.
pub fn run_all(seed: u64) -> Vec<SuiteReport> {
    SUITES
        .iter()
        .map(|s| run_suite(s.name, seed, None).expect("registered"))
        .collect()
}
