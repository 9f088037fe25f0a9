//! Named example polytopes, parameterized where the family is.

use crate::error::{Error, Result};
use crate::tropical::{TropMatrix, TropScalar};

/// Tropical unit cube `[-inf, 0]^d`: the all-`-inf` column and the points
/// with a single `0` coordinate (permissive empty-column flag set).
pub fn fix_cube(d: usize) -> TropMatrix {
    let cols = d + 1;
    let mut entries = vec![TropScalar::NegInf; d * cols];
    for j in 1..=d {
        let row = d - j;
        entries[row * cols + j] = TropScalar::one();
    }
    TropMatrix::allowing_empty_columns(d, cols, entries).expect("well-formed cube")
}

/// `[[0, 0, ℓ−1], [0, 1, ℓ−1]]`.
pub fn fix_l(l: i64) -> TropMatrix {
    TropMatrix::from_i64_rows(&[[0, 0, l - 1], [0, 1, l - 1]]).expect("well-formed")
}

/// Triangle with an attached edge: `[[ℓ−1, ℓ, k+ℓ], [0, 0, k+1]]`.
pub fn fix_tri(l: i64, k: i64) -> TropMatrix {
    TropMatrix::from_i64_rows(&[[l - 1, l, k + l], [0, 0, k + 1]]).expect("well-formed")
}

/// The 4 × 6 matrix whose 2-trunk is four disjoint triangles.
pub fn fix_4d() -> TropMatrix {
    TropMatrix::from_i64_rows(&[
        [0, 1, 0, 9, 9, 9],
        [0, 0, 1, 9, 9, 9],
        [9, 9, 9, 0, 1, 0],
        [9, 9, 9, 0, 0, 1],
    ])
    .expect("well-formed")
}

/// The standard tropical triangle `[[1, 0, −1], [1, −1, 0]]` (negative entries).
pub fn fix_delta2() -> TropMatrix {
    TropMatrix::from_i64_rows(&[[1, 0, -1], [1, -1, 0]]).expect("well-formed")
}

/// The pair `M = [[0, 1, ℓ], [0, 0, ℓ]]`, `N = [[0, 1]]`.
pub fn fix_prod(l: i64) -> (TropMatrix, TropMatrix) {
    (
        TropMatrix::from_i64_rows(&[[0, 1, l], [0, 0, l]]).expect("well-formed"),
        TropMatrix::from_i64_rows(&[[0, 1]]).expect("well-formed"),
    )
}

/// A single full alcove at `a`: columns `a + e_[0], …, a + e_[d]`.
pub fn fix_alcove(a: &[i64]) -> TropMatrix {
    let d = a.len();
    let rows: Vec<Vec<i64>> = (0..d)
        .map(|i| (0..=d).map(|j| a[i] + i64::from(i < j)).collect())
        .collect();
    TropMatrix::from_i64_rows(&rows).expect("well-formed")
}

/// Look up a fixture by its command-line name.
pub fn by_name(name: &str, l: i64, k: i64, d: usize, a: &[i64]) -> Result<TropMatrix> {
    match name.to_ascii_lowercase().as_str() {
        "l" => Ok(fix_l(l)),
        "4d" => Ok(fix_4d()),
        "cube" => Ok(fix_cube(d)),
        "tri" => Ok(fix_tri(l, k)),
        "alcove" => {
            if a.is_empty() {
                return Err(Error::Invalid("the alcove fixture needs --a".into()));
            }
            Ok(fix_alcove(a))
        }
        "delta2" => Ok(fix_delta2()),
        "prod" => {
            let (m, n) = fix_prod(l);
            crate::volumes::cartesian_product(&m, &n)
        }
        other => Err(Error::Invalid(format!(
            "unknown fixture {other:?} (expected L, 4D, cube, tri, alcove, delta2, prod)"
        ))),
    }
}
