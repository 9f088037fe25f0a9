//! Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion.
//!
//! Two criteria state values that the exact computation contradicts:
//! criterion 1 (the second coefficient of the L-shaped polytope) and the
//! `R_{d,i}^±` part of criterion 9 (rotation invariance of `tlvol_i^±` for
//! `i < d`). Those lines print FAIL; the test asserts the exact values and
//! the counterexamples instead, so that any change in either direction is
//! caught.

use num_bigint::BigInt;
use rand::SeedableRng;

use tropevol_core::cells::enumerate_triangulation;
use tropevol_core::check::gen::{self, Rng8};
use tropevol_core::check::{run_suite, theorems_on, SuiteReport, DEFAULT_SEED};
use tropevol_core::ehrhart::{
    c_dminus1_direct, coeffs_via_formula, count_tropical, count_via_cells, degree_bound, log_of,
    tropical_ehrhart_poly, DEFAULT_GUARD,
};
use tropevol_core::fixtures;
use tropevol_core::tropical::{act, frac, rat};
use tropevol_core::volumes::{
    cartesian_product, qtvol_plus, tlvol_subsets, volume_report, LatticeEmbedding,
};
use tropevol_core::{
    Method, Rational, ScaledPermutationMatrix, TropMatrix, TropScalar, VolumeOptions,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn report(n: usize, title: &str, o: &Outcome) {
    println!(
        "criterion {n}: {} {title}: {}",
        if o.pass { "PASS" } else { "FAIL" },
        o.detail
    );
}

fn pow(b: u32, e: u32) -> Rational {
    Rational::from_integer(BigInt::from(b).pow(e))
}

fn int(v: i64) -> TropScalar {
    TropScalar::int(v)
}

fn suite_ok(r: &SuiteReport) -> bool {
    if !r.passed() {
        eprintln!("{} failures: {:#?}", r.name, r.failures);
    }
    r.passed()
}

/// L(4) at b ∈ {2, 3}. The stated coefficients are `(1, ½(b³+2b−3), ½(b−1)²)`;
/// the exact polynomial has `c_1 = b³ + b/2 − 3/2`.
fn criterion_1() -> Outcome {
    let m = fixtures::fix_l(4);
    let mut stated_match = true;
    for b in [2u32, 3] {
        let (p, verified) = tropical_ehrhart_poly(&m, b, DEFAULT_GUARD).unwrap();
        assert!(
            verified || b == 3,
            "prediction at k = 3 not checked for b = {b}"
        );
        let bq = rat(b as i64);
        let c2 = frac(1, 2) * (&bq - rat(1)) * (&bq - rat(1));
        let c1_stated = frac(1, 2) * (pow(b, 3) + rat(2) * &bq - rat(3));
        let c1_exact = pow(b, 3) + &bq / rat(2) - frac(3, 2);
        assert_eq!(p.coefficient(0), rat(1));
        assert_eq!(p.coefficient(2), c2);
        assert_eq!(p.coefficient(1), c1_exact);
        stated_match &= p.coefficient(1) == c1_stated;
        for k in 0..=3u32 {
            if let Ok(n) = count_tropical(&m, b, k, DEFAULT_GUARD) {
                assert_eq!(
                    p.evaluate(k),
                    Rational::from_integer(BigInt::from(n)),
                    "b = {b}, k = {k}"
                );
            } else {
                let t = enumerate_triangulation(&m).unwrap();
                let n = count_via_cells(&t, b, k, DEFAULT_GUARD).unwrap();
                assert_eq!(
                    p.evaluate(k),
                    Rational::from_integer(BigInt::from(n)),
                    "b = {b}, k = {k}"
                );
            }
        }
    }
    // Nine points at k = 0, b = 2: (1,1), (1,2), (2,2) and the diagonal (j,j) for j = 3..=8.
    assert_eq!(count_tropical(&m, 2, 0, DEFAULT_GUARD).unwrap(), 9);
    assert!(
        !stated_match,
        "the stated coefficients now match; update this criterion"
    );
    Outcome {
        pass: stated_match,
        detail: "c_0 and c_2 match and counts k = 0..3 match the interpolated polynomial exactly, \
                 but c_1 = b^3 + b/2 - 3/2 (15/2 at b = 2, 27 at b = 3), not (b^3 + 2b - 3)/2 (9/2, 21); \
                 the brute count at k = 0, b = 2 is 9 while the stated polynomial gives 6"
            .into(),
    }
}

fn criterion_2() -> Outcome {
    let m = fixtures::fix_alcove(&[1, 2]);
    let (p, _) = tropical_ehrhart_poly(&m, 2, DEFAULT_GUARD).unwrap();
    let f = coeffs_via_formula(&enumerate_triangulation(&m).unwrap(), 2, DEFAULT_GUARD).unwrap();
    let want = vec![rat(1), rat(4), rat(4)];
    let pass = p.coeffs == want && f.coeffs == want;
    Outcome {
        pass,
        detail: format!(
            "interpolation {:?}, formula {:?}",
            strings(&p.coeffs),
            strings(&f.coeffs)
        ),
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|q| q.to_string()).collect()
}

fn criterion_3() -> Outcome {
    let mut pass = true;
    let mut seen = Vec::new();
    for (l, k) in [(3i64, 0i64), (3, 1)] {
        let m = fixtures::fix_tri(l, k);
        let t = enumerate_triangulation(&m).unwrap();
        for b in [2u32, 3] {
            let bq = rat(b as i64);
            let tail: Rational = (1..=k as u32).map(|j| pow(b, j)).sum();
            let want = frac(1, 2) * (&bq - rat(1)) * (pow(b, l as u32 - 1) + rat(2))
                + (&bq - rat(1)) * tail;
            let formula = coeffs_via_formula(&t, b, DEFAULT_GUARD)
                .unwrap()
                .coefficient(1);
            let (p, _) = tropical_ehrhart_poly(&m, b, DEFAULT_GUARD).unwrap();
            pass &= formula == want && p.coefficient(1) == want;
            seen.push(format!("(l={l},k={k},b={b}) c_1 = {want}"));
        }
    }
    Outcome {
        pass,
        detail: seen.join(", "),
    }
}

fn criterion_4() -> Outcome {
    let mut pass = true;
    let both = VolumeOptions {
        method: Method::Both,
        ..Default::default()
    };
    let l = volume_report(&fixtures::fix_l(4), &both).unwrap();
    pass &= l.tlvol == int(2) && l.qtvol_plus.value == int(4);
    pass &= l.verify_witnesses(&fixtures::fix_l(4)).unwrap();
    for d in [2, 3] {
        let cube = fixtures::fix_cube(d);
        pass &= volume_report(&cube, &VolumeOptions::default())
            .unwrap()
            .tlvol
            == int(0);
    }
    let m = fixtures::fix_4d();
    let r = volume_report(&m, &both).unwrap();
    let got = [
        r.tlvol_plus(2),
        r.tlvol_minus(2),
        r.tlvol_plus(1),
        r.tlvol_minus(1),
    ];
    pass &= got == [Some(&int(18)), Some(&int(2)), Some(&int(9)), Some(&int(9))];
    for i in [3, 4] {
        pass &= r.tlvol_plus(i) == Some(&TropScalar::NegInf)
            && r.tlvol_minus(i) == Some(&TropScalar::NegInf);
    }
    pass &= r.verify_witnesses(&m).unwrap();
    Outcome {
        pass,
        detail: format!(
            "L(4): tlvol {} qtvol+ {}; cubes 0; 4D (tlvol_2^+, tlvol_2^-, tlvol_1^+, tlvol_1^-) = ({}, {}, {}, {}), i = 3, 4: -inf",
            l.tlvol, l.qtvol_plus.value, got[0].unwrap(), got[1].unwrap(), got[2].unwrap(), got[3].unwrap()
        ),
    }
}

fn criterion_5() -> Outcome {
    let mut pass = true;
    let mut seen = Vec::new();
    for (l, k) in [(3i64, 0i64), (3, 1), (2, 2)] {
        let m = fixtures::fix_tri(l, k);
        let e = LatticeEmbedding::new(&m).unwrap();
        let lo = e.tlvol_i_minus(1).unwrap().value;
        let hi = e.tlvol_i_plus(1).unwrap().value;
        let log = log_of(degree_bound(&m), |b| Ok(c_dminus1_direct(&e.complex, b))).unwrap();
        // The same Log from the full coefficient formula at every sample base.
        let log_formula = log_of(degree_bound(&m), |b| {
            Ok(coeffs_via_formula(&e.complex, b, DEFAULT_GUARD)?.coefficient(1))
        })
        .unwrap();
        let want = (int(k + 1), int(l.max(k + 1)), int(k + l));
        pass &= (lo.clone(), log.clone(), hi.clone()) == want && log_formula == log;
        seen.push(format!("TRI({l},{k}) -> ({lo}, {log}, {hi})"));
    }
    Outcome {
        pass,
        detail: seen.join(", "),
    }
}

fn criterion_6() -> Outcome {
    let products = run_suite("products", DEFAULT_SEED, Some(50)).unwrap();
    let (m, n) = fixtures::fix_prod(3);
    let p = cartesian_product(&m, &n).unwrap();
    let triple = (
        qtvol_plus(&m).unwrap().value,
        qtvol_plus(&n).unwrap().value,
        qtvol_plus(&p).unwrap().value,
    );
    let tl = (
        tlvol_subsets(&m).unwrap().0,
        tlvol_subsets(&n).unwrap().0,
        tlvol_subsets(&p).unwrap().0,
    );
    let pass =
        suite_ok(&products) && triple == (int(4), int(1), int(7)) && tl.2 == tl.0.otimes(&tl.1);
    Outcome {
        pass,
        detail: format!(
            "multiplicativity on {} random products ({} checks, {} failed); prod(3) qtvol+ = ({}, {}, {}), tlvol = ({}, {}, {})",
            products.cases, products.checks, products.failed, triple.0, triple.1, triple.2, tl.0, tl.1, tl.2
        ),
    }
}

fn criterion_7() -> Outcome {
    let mut rng = Rng8::seed_from_u64(DEFAULT_SEED);
    let mut mismatches = Vec::new();
    for _ in 0..100 {
        let m = gen::small_canonical(&mut rng);
        let d = m.rows();
        let (sub, _) = tlvol_subsets(&m).unwrap();
        let e = LatticeEmbedding::new(&m).unwrap();
        if sub != e.tlvol().0 {
            mismatches.push(format!("tlvol of {m}"));
        }
        let (p, _) = tropical_ehrhart_poly(&m, 2, DEFAULT_GUARD).unwrap();
        for k in 0..=d as u32 {
            let brute = count_tropical(&m, 2, k, DEFAULT_GUARD).unwrap();
            let cells = count_via_cells(&e.complex, 2, k, DEFAULT_GUARD).unwrap();
            if brute != cells || p.evaluate(k) != Rational::from_integer(BigInt::from(brute)) {
                mismatches.push(format!("counts at k = {k} for {m}"));
            }
        }
    }
    Outcome {
        pass: mismatches.is_empty(),
        detail: format!("100 seeded instances, mismatches: {mismatches:?}"),
    }
}

fn criterion_8() -> Outcome {
    let (pm, pn) = fixtures::fix_prod(3);
    let fixtures = vec![
        fixtures::fix_l(4),
        fixtures::fix_tri(3, 0),
        fixtures::fix_tri(3, 1),
        fixtures::fix_tri(2, 2),
        fixtures::fix_4d(),
        fixtures::fix_alcove(&[1, 2]),
        fixtures::fix_alcove(&[0, 1, 1]),
        cartesian_product(&pm, &pn).unwrap(),
    ];
    let fixed = theorems_on(&fixtures);
    let random = run_suite("theorems", DEFAULT_SEED, Some(50)).unwrap();
    Outcome {
        pass: suite_ok(&fixed) && suite_ok(&random),
        detail: format!(
            "{} fixtures ({} checks, {} failed), {} random instances ({} checks, {} failed)",
            fixed.cases, fixed.checks, fixed.failed, random.cases, random.checks, random.failed
        ),
    }
}

/// Coefficient homogeneity on fixtures: `c_i(λ ⊙ P) = b^{λ i} c_i(P)`.
fn fixture_homogeneity() -> bool {
    let mut ok = true;
    for m in [
        fixtures::fix_l(4),
        fixtures::fix_tri(3, 1),
        fixtures::fix_alcove(&[1, 2]),
    ] {
        for b in [2u32, 3] {
            let base = coeffs_via_formula(&enumerate_triangulation(&m).unwrap(), b, DEFAULT_GUARD)
                .unwrap();
            for lambda in [1i64, 2] {
                let moved = m.map(|x| x.shift(&rat(lambda)));
                let c =
                    coeffs_via_formula(&enumerate_triangulation(&moved).unwrap(), b, DEFAULT_GUARD)
                        .unwrap();
                for i in 0..=m.rows() {
                    ok &=
                        c.coefficient(i) == base.coefficient(i) * pow(b, lambda as u32 * i as u32);
                }
            }
        }
    }
    ok
}

/// `tlvol_1^-(tconv{(3,0),(4,1)}) = 1`, and the rotation by `z = (0, 5) ∈ R^-_{2,1}`
/// moves it to `4`.
fn rotation_counterexample() -> (TropScalar, TropScalar) {
    let m = TropMatrix::from_i64_rows(&[[3, 4], [0, 1]]).unwrap();
    let s = ScaledPermutationMatrix::new(vec![0, 1], vec![rat(0), rat(5)]).unwrap();
    assert!(s.in_r_minus(1));
    let before = LatticeEmbedding::new(&m)
        .unwrap()
        .tlvol_i_minus(1)
        .unwrap()
        .value;
    let after = LatticeEmbedding::new(&act(&s, &m).unwrap())
        .unwrap()
        .tlvol_i_minus(1)
        .unwrap()
        .value;
    (before, after)
}

fn criterion_9() -> Outcome {
    let names = [
        "ehrhart-props",
        "volume-props",
        "cauchy-binet",
        "kleene",
        "hungarian",
    ];
    let reports: Vec<SuiteReport> = names
        .iter()
        .map(|n| run_suite(n, DEFAULT_SEED, None).unwrap())
        .collect();
    let suites_pass = reports.iter().all(suite_ok);
    let homogeneity = fixture_homogeneity();
    let divergences: usize = reports.iter().map(|r| r.divergences.len()).sum();
    let (before, after) = rotation_counterexample();
    assert_eq!((before.clone(), after.clone()), (int(1), int(4)));
    // Everything except the R_{d,i}^± invariance (i < d) must hold.
    assert!(suites_pass && homogeneity, "a property suite failed");
    let summary: Vec<String> = reports
        .iter()
        .map(|r| format!("{} {}/{} checks ok", r.name, r.checks - r.failed, r.checks))
        .collect();
    Outcome {
        pass: false,
        detail: format!(
            "{}; fixture homogeneity ok; rotation invariance holds for R_d and i = d, \
             but fails for R_{{d,i}}^± with i < d ({divergences} random counterexamples, e.g. \
             tlvol_1^- of tconv{{(3,0),(4,1)}} goes {before} -> {after} under z = (0,5) in R^-_{{2,1}}); \
             the one-sided bounds tlvol_i^- non-decreasing, tlvol_i^+ non-increasing hold",
            summary.join(", ")
        ),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("Ehrhart golden values L(4)", criterion_1),
        ("Pick example", criterion_2),
        ("triangle with edge", criterion_3),
        ("volume golden values", criterion_4),
        ("remark triple", criterion_5),
        ("product laws", criterion_6),
        ("cross-algorithm oracles", criterion_7),
        ("theorem suites", criterion_8),
        ("property suites", criterion_9),
    ];
    let mut failed = Vec::new();
    for (n, (title, f)) in criteria.iter().enumerate() {
        let o = f();
        report(n + 1, title, &o);
        if !o.pass {
            failed.push(n + 1);
        }
    }
    // Criteria 1 and 9 fail on stated claims that are false; their exact
    // behavior is asserted inside the criterion functions.
    assert_eq!(failed, vec![1, 9], "unexpected criterion outcome");
}
