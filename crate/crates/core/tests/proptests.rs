//! Property-based tests on randomly shrunk inputs.
//!
//! The seeded suites in `tests/suites.rs` cover the theorem-level properties;
//! these tests target the algebraic building blocks, where shrinking gives
//! readable counterexamples.

use proptest::prelude::*;

use tropevol_core::cells::enumerate_triangulation;
use tropevol_core::ehrhart::{count_tropical, count_via_cells, DEFAULT_GUARD};
use tropevol_core::linalg::{certificate_holds, kleene_star, tdet, BruteForce};
use tropevol_core::tropical::{contains, d_tr, mat_tmul, mat_vec, parse_rational, rat, Rational};
use tropevol_core::volumes::{lp_max_min_linear, sum_smallest, tlvol_subsets, LatticeEmbedding};
use tropevol_core::{TropMatrix, TropScalar};

fn scalar(lo: i64, hi: i64) -> impl Strategy<Value = TropScalar> {
    prop_oneof![
        1 => Just(TropScalar::NegInf),
        5 => (lo..=hi).prop_map(TropScalar::int),
    ]
}

fn int_matrix(
    d: std::ops::RangeInclusive<usize>,
    m: std::ops::RangeInclusive<usize>,
    hi: i64,
) -> impl Strategy<Value = TropMatrix> {
    (d, m).prop_flat_map(move |(d, m)| {
        prop::collection::vec(prop::collection::vec(0..=hi, m), d)
            .prop_map(|rows| TropMatrix::from_i64_rows(&rows).unwrap())
    })
}

fn square(r: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = TropMatrix> {
    r.prop_flat_map(|r| {
        prop::collection::vec(scalar(-6, 6), r * r)
            .prop_map(move |e| TropMatrix::allowing_empty_columns(r, r, e).unwrap())
    })
}

fn point(d: usize) -> impl Strategy<Value = Vec<TropScalar>> {
    prop::collection::vec(
        (-12i64..=12, 1i64..=4)
            .prop_map(|(n, q)| TropScalar::Finite(Rational::new(n.into(), q.into()))),
        d,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_text_round_trips(n in -1000i64..1000, q in 1i64..50) {
        let x = Rational::new(n.into(), q.into());
        let s = TropScalar::Finite(x.clone()).to_string();
        prop_assert_eq!(parse_rational(&s).unwrap(), x);
    }

    #[test]
    fn semiring_laws(a in scalar(-9, 9), b in scalar(-9, 9), c in scalar(-9, 9)) {
        prop_assert_eq!(a.oplus(&b), b.oplus(&a));
        prop_assert_eq!(a.otimes(&b.oplus(&c)), a.otimes(&b).oplus(&a.otimes(&c)));
        prop_assert_eq!(a.otimes(&TropScalar::one()), a.clone());
        prop_assert_eq!(a.oplus(&TropScalar::NegInf), a);
    }

    #[test]
    fn product_is_associative(a in square(1..=3), b in square(1..=3), c in square(1..=3)) {
        prop_assume!(a.cols() == b.rows() && b.cols() == c.rows());
        let left = mat_tmul(&mat_tmul(&a, &b).unwrap(), &c).unwrap();
        let right = mat_tmul(&a, &mat_tmul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left.entries(), right.entries());
    }

    #[test]
    fn generated_points_are_contained(m in int_matrix(1..=3, 1..=4, 5), seed in prop::collection::vec(0i64..=4, 4), pick in 0usize..4) {
        let cols = m.cols();
        let mut lambda: Vec<TropScalar> = (0..cols).map(|j| TropScalar::int(-seed[j % 4])).collect();
        lambda[pick % cols] = TropScalar::one();
        let x = mat_vec(&m, &lambda).unwrap();
        prop_assert!(contains(&m, &x).unwrap());
    }

    #[test]
    fn hilbert_metric_is_a_pseudometric(u in point(3), v in point(3), w in point(3)) {
        let uv = d_tr(&u, &v).unwrap();
        prop_assert!(uv >= rat(0));
        prop_assert_eq!(&uv, &d_tr(&v, &u).unwrap());
        prop_assert!(uv <= d_tr(&u, &w).unwrap() + d_tr(&w, &v).unwrap());
    }

    #[test]
    fn assignment_matches_permutations(a in square(1..=5)) {
        let fast = tdet(&a).unwrap();
        prop_assert_eq!(&fast.value, &BruteForce::default().table(&a).unwrap().tdet());
        if fast.value.is_finite() {
            prop_assert!(certificate_holds(&a, &fast));
        }
    }

    #[test]
    fn kleene_star_is_idempotent(a in square(1..=4)) {
        // Entries at most -1, so every cycle has negative weight.
        let shifted = a.map(|x| x.shift(&rat(-7)));
        let star = kleene_star(&shifted).unwrap();
        let again = kleene_star(&star).unwrap();
        prop_assert_eq!(again.entries(), star.entries());
    }

    #[test]
    fn lp_value_is_attained_at_its_point(
        verts in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 1..=4),
        i in 1usize..=3,
    ) {
        let verts: Vec<Vec<Rational>> = verts.iter().map(|v| v.iter().map(|&x| rat(x)).collect()).collect();
        let sol = lp_max_min_linear(&verts, i).unwrap();
        prop_assert_eq!(sum_smallest(&sol.x, i), sol.value.clone());
        // The optimum dominates every vertex.
        for v in &verts {
            prop_assert!(sum_smallest(v, i) <= sol.value);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cell_counts_match_brute_force(m in int_matrix(1..=2, 1..=4, 3), k in 0u32..=1) {
        let t = enumerate_triangulation(&m).unwrap();
        prop_assert_eq!(count_via_cells(&t, 2, k, DEFAULT_GUARD).unwrap(), count_tropical(&m, 2, k, DEFAULT_GUARD).unwrap());
    }

    #[test]
    fn tlvol_algorithms_agree(m in int_matrix(1..=3, 1..=4, 4)) {
        let (sub, _) = tlvol_subsets(&m).unwrap();
        let (tri, _) = LatticeEmbedding::new(&m).unwrap().tlvol();
        prop_assert_eq!(sub, tri);
    }
}
