//! Seeded random instances for the property suites.

use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::tropical::{frac, rat, Rational, ScaledPermutationMatrix, TropMatrix, TropScalar};

pub type Rng8 = ChaCha8Rng;

/// `d × m` integer matrix with entries in `lo..=hi`.
pub fn int_matrix(rng: &mut Rng8, d: usize, m: usize, lo: i64, hi: i64) -> TropMatrix {
    let rows: Vec<Vec<i64>> = (0..d)
        .map(|_| (0..m).map(|_| rng.gen_range(lo..=hi)).collect())
        .collect();
    TropMatrix::from_i64_rows(&rows).expect("non-empty")
}

/// The standard random family: `d ≤ 3`, `m ≤ 5`, entries `0..=4`.
pub fn small_canonical(rng: &mut Rng8) -> TropMatrix {
    let d = rng.gen_range(1..=3);
    let m = rng.gen_range(1..=5);
    int_matrix(rng, d, m, 0, 4)
}

/// Square matrix with entries in `lo..=hi` and `-inf` with probability `p_inf`.
pub fn square_with_inf(rng: &mut Rng8, r: usize, lo: i64, hi: i64, p_inf: f64) -> TropMatrix {
    let entries = (0..r * r)
        .map(|_| {
            if rng.gen_bool(p_inf) {
                TropScalar::NegInf
            } else {
                TropScalar::int(rng.gen_range(lo..=hi))
            }
        })
        .collect();
    TropMatrix::allowing_empty_columns(r, r, entries).expect("square")
}

/// Rectangular matrix like [`square_with_inf`].
pub fn rect_with_inf(
    rng: &mut Rng8,
    r: usize,
    c: usize,
    lo: i64,
    hi: i64,
    p_inf: f64,
) -> TropMatrix {
    let entries = (0..r * c)
        .map(|_| {
            if rng.gen_bool(p_inf) {
                TropScalar::NegInf
            } else {
                TropScalar::int(rng.gen_range(lo..=hi))
            }
        })
        .collect();
    TropMatrix::allowing_empty_columns(r, c, entries).expect("non-empty")
}

/// A small rational in `[-n, n]` with denominator at most 3.
pub fn small_rational(rng: &mut Rng8, n: i64) -> Rational {
    let q = rng.gen_range(1..=3);
    frac(rng.gen_range(-n * q..=n * q), q)
}

/// Coefficients with `max = 0` (one forced zero, the rest in `-n..=0` or `-inf`).
pub fn tropical_coefficients(rng: &mut Rng8, m: usize, n: i64, p_inf: f64) -> Vec<TropScalar> {
    let zero = rng.gen_range(0..m);
    (0..m)
        .map(|j| {
            if j == zero {
                TropScalar::one()
            } else if rng.gen_bool(p_inf) {
                TropScalar::NegInf
            } else {
                TropScalar::Finite(-small_rational(rng, n).abs())
            }
        })
        .collect()
}

/// `m × n` matrix whose columns are tropical coefficient vectors (non-positive
/// entries, a zero in every column), so `B ⊙ C` has columns in `tconv(B)`.
pub fn stochastic(rng: &mut Rng8, m: usize, n: usize, depth: i64) -> TropMatrix {
    let columns: Vec<Vec<TropScalar>> = (0..n)
        .map(|_| {
            let zero = rng.gen_range(0..m);
            (0..m)
                .map(|k| {
                    if k == zero {
                        TropScalar::one()
                    } else if rng.gen_bool(0.3) {
                        TropScalar::NegInf
                    } else {
                        TropScalar::int(-rng.gen_range(0..=depth))
                    }
                })
                .collect()
        })
        .collect();
    TropMatrix::from_columns(&columns).expect("every column has a zero")
}

pub fn permutation(rng: &mut Rng8, d: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..d).collect();
    p.shuffle(rng);
    p
}

/// A random scaled permutation matrix with integer shifts whose `i` largest
/// (`largest = true`) or `i` smallest shifts sum to `0`.
pub fn rotation(rng: &mut Rng8, d: usize, i: usize, largest: bool) -> ScaledPermutationMatrix {
    loop {
        let z: Vec<i64> = (0..d).map(|_| rng.gen_range(-3..=3)).collect();
        let mut sorted = z.clone();
        sorted.sort();
        let s: i64 = if largest {
            sorted[d - i..].iter().sum()
        } else {
            sorted[..i].iter().sum()
        };
        // Shifting every entry by c moves the i-sum by i·c.
        if s % i as i64 == 0 {
            let c = s / i as i64;
            let z = z.into_iter().map(|x| rat(x - c)).collect();
            return ScaledPermutationMatrix::new(permutation(rng, d), z).expect("permutation");
        }
    }
}
