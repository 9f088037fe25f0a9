//! Brute-force lattice-point counting in max-times dilates and classical dilates.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cells::integer_rows;
use crate::error::{Error, Result};
use crate::tropical::{contains_i64, TropMatrix, TropScalar};

/// Default cap on the number of candidate points examined by one count.
pub const DEFAULT_GUARD: u64 = 10_000_000;

/// The tropical `b`-lattice `Γ_b^d = log_b(Z_{≥0}^d)`, given by its base.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSpec {
    pub b: u32,
}

impl LatticeSpec {
    pub fn new(b: u32) -> Result<Self> {
        if b < 2 {
            return Err(Error::Invalid(format!("base b = {b} must be at least 2")));
        }
        Ok(LatticeSpec { b })
    }
}

fn require_canonical(m: &TropMatrix) -> Result<()> {
    if let Some(bad) = m.entries().iter().find(|x| match x {
        TropScalar::NegInf => false,
        TropScalar::Finite(q) => !q.is_integer() || *q < num_rational::BigRational::default(),
    }) {
        return Err(Error::NotCanonical(format!(
            "entry {bad}: counting needs entries in Z>=0 or -inf; other entries lead to quasi-polynomials"
        )));
    }
    m.validate_generators()
}

/// `t · b^{M_ij}` with `b^{-inf} = 0`, as `u128` rows; errors when a value
/// exceeds `u64` (so that pairwise products stay exact in `u128`).
fn maxtimes_generators(m: &TropMatrix, b: u32, t: u128) -> Result<Vec<Vec<u128>>> {
    let overflow = || Error::Guard {
        needed: u128::MAX,
        guard: u64::MAX,
    };
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| match x.to_i64() {
                    None => Ok(0),
                    Some(e) => {
                        let e = u32::try_from(e).map_err(|_| overflow())?;
                        let p = u128::from(b).checked_pow(e).ok_or_else(overflow)?;
                        let v = p.checked_mul(t).ok_or_else(overflow)?;
                        if v > u128::from(u64::MAX) {
                            return Err(overflow());
                        }
                        Ok(v)
                    }
                })
                .collect()
        })
        .collect()
}

fn row_ranges(g: &[Vec<u128>]) -> Vec<(u128, u128)> {
    g.iter()
        .map(|row| {
            let hi = *row.iter().max().unwrap();
            let lo = if row.contains(&0) {
                0
            } else {
                *row.iter().min().unwrap()
            };
            (lo, hi)
        })
        .collect()
}

fn candidates(ranges: &[(u128, u128)]) -> u128 {
    ranges
        .iter()
        .try_fold(1u128, |acc, &(lo, hi)| acc.checked_mul(hi - lo + 1))
        .unwrap_or(u128::MAX)
}

/// Number of candidate points [`count_maxtimes`] would examine.
pub fn maxtimes_candidates(m: &TropMatrix, b: u32, t: u128) -> Result<u128> {
    require_canonical(m)?;
    Ok(candidates(&row_ranges(&maxtimes_generators(m, b, t)?)))
}

/// Exact test `z ∈ max-cone hull` of the columns of `g` with coefficients in
/// `[0, 1]` attaining `1` (max-times residuation).
fn in_maxtimes_hull(g: &[Vec<u128>], z: &[u128]) -> bool {
    let cols = g[0].len();
    let mut attained = false;
    // Clamped coefficient μ'_j = min(μ_j, 1) as a fraction (num, den).
    let mut mu = Vec::with_capacity(cols);
    for j in 0..cols {
        let mut best: Option<(u128, u128)> = None;
        for (row, &zi) in g.iter().zip(z) {
            let gij = row[j];
            if gij == 0 {
                continue;
            }
            if best.is_none_or(|(n, d)| zi * d < n * gij) {
                best = Some((zi, gij));
            }
        }
        let clamped = match best {
            None => (1, 1),
            Some((n, d)) if n >= d => (1, 1),
            Some(f) => f,
        };
        attained |= clamped == (1, 1);
        mu.push(clamped);
    }
    attained
        && g.iter()
            .zip(z)
            .all(|(row, &zk)| row.iter().zip(&mu).any(|(&gkj, &(n, d))| n * gkj == zk * d))
}

/// `#(t · exp_b(P) ∩ Z_{≥0}^d)` by enumerating the integer box of the dilate.
pub fn count_maxtimes(m: &TropMatrix, b: u32, t: u128, guard: u64) -> Result<u128> {
    require_canonical(m)?;
    LatticeSpec::new(b)?;
    let g = maxtimes_generators(m, b, t)?;
    let ranges = row_ranges(&g);
    let total = candidates(&ranges);
    if total > u128::from(guard) {
        return Err(Error::Guard {
            needed: total,
            guard,
        });
    }
    let total = total as u64;
    let count = (0..total)
        .into_par_iter()
        .filter(|&idx| {
            let mut rest = u128::from(idx);
            let z: Vec<u128> = ranges
                .iter()
                .map(|&(lo, hi)| {
                    let span = hi - lo + 1;
                    let v = lo + rest % span;
                    rest /= span;
                    v
                })
                .collect();
            in_maxtimes_hull(&g, &z)
        })
        .count();
    Ok(count as u128)
}

/// Whether the point `log_b(z)` of `Γ_b^d` lies in `tconv(M)`, for `z ∈ Z_{≥0}^d`.
pub fn lattice_point_in(m: &TropMatrix, b: u32, z: &[u128]) -> Result<bool> {
    require_canonical(m)?;
    LatticeSpec::new(b)?;
    if z.len() != m.rows() {
        return Err(Error::Dimension(format!(
            "point has {} coordinates, expected {}",
            z.len(),
            m.rows()
        )));
    }
    Ok(in_maxtimes_hull(&maxtimes_generators(m, b, 1)?, z))
}

/// `#((k ⊙ P) ∩ Γ_b^d) = count_maxtimes(M, b, b^k)`.
pub fn count_tropical(m: &TropMatrix, b: u32, k: u32, guard: u64) -> Result<u128> {
    let t = u128::from(b).checked_pow(k).ok_or(Error::Guard {
        needed: u128::MAX,
        guard,
    })?;
    count_maxtimes(m, b, t, guard)
}

/// `#(k·P ∩ Z^d)` for the classical dilate, by testing `x ∈ tconv(k·M)`.
pub fn count_classical_dilate(m: &TropMatrix, k: u64, guard: u64) -> Result<u128> {
    let rows = integer_rows(m)?;
    if rows.iter().flatten().any(|&x| x < 0) {
        return Err(Error::NotCanonical(
            "negative entry: counting needs entries in Z>=0".into(),
        ));
    }
    if k == 0 {
        return Ok(1);
    }
    let k = i64::try_from(k).map_err(|_| Error::Invalid("dilation factor too large".into()))?;
    let scaled: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x * k).collect())
        .collect();
    let ranges: Vec<(i64, i64)> = scaled
        .iter()
        .map(|r| (*r.iter().min().unwrap(), *r.iter().max().unwrap()))
        .collect();
    let total = ranges
        .iter()
        .try_fold(1u128, |acc, &(lo, hi)| {
            acc.checked_mul((hi - lo + 1) as u128)
        })
        .unwrap_or(u128::MAX);
    if total > u128::from(guard) {
        return Err(Error::Guard {
            needed: total,
            guard,
        });
    }
    let count = (0..total as u64)
        .into_par_iter()
        .filter(|&idx| {
            let mut rest = idx as i64;
            let x: Vec<i64> = ranges
                .iter()
                .map(|&(lo, hi)| {
                    let span = hi - lo + 1;
                    let v = lo + rest % span;
                    rest /= span;
                    v
                })
                .collect();
            contains_i64(&scaled, &x)
        })
        .count();
    Ok(count as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn unit_cube() {
        let cube = fixtures::fix_cube(2);
        for (b, k) in [(2u32, 0u32), (2, 2), (3, 1)] {
            let t = u128::from(b).pow(k);
            assert_eq!(
                count_tropical(&cube, b, k, DEFAULT_GUARD).unwrap(),
                (t + 1) * (t + 1)
            );
        }
    }

    #[test]
    fn single_point() {
        let p = TropMatrix::from_i64_rows(&[[0]]).unwrap();
        assert_eq!(count_maxtimes(&p, 2, 4, DEFAULT_GUARD).unwrap(), 1);
        let q = TropMatrix::from_i64_rows(&[[2], [5]]).unwrap();
        assert_eq!(count_tropical(&q, 3, 0, DEFAULT_GUARD).unwrap(), 1);
    }

    #[test]
    fn l_shape_matches_polynomial() {
        let l4 = fixtures::fix_l(4);
        for k in 0..4u32 {
            let x = 2u128.pow(k);
            // (1/2) x^2 + (15/2) x + 1: the triangle contributes (3/2) x and the
            // diagonal tail from (1,1) to (3,3) contributes (2^3 - 2) x.
            let expected = (x * x + 15 * x + 2) / 2;
            assert_eq!(count_tropical(&l4, 2, k, DEFAULT_GUARD).unwrap(), expected);
        }
    }

    #[test]
    fn classical_dilates() {
        let p = TropMatrix::from_i64_rows(&[[3], [1]]).unwrap();
        assert_eq!(count_classical_dilate(&p, 4, DEFAULT_GUARD).unwrap(), 1);
        let tri = fixtures::fix_tri(3, 0);
        assert_eq!(count_classical_dilate(&tri, 1, DEFAULT_GUARD).unwrap(), 3);
        assert_eq!(count_classical_dilate(&tri, 2, DEFAULT_GUARD).unwrap(), 6);
    }

    #[test]
    fn rejects_negative_entries_and_guard() {
        assert!(matches!(
            count_tropical(&fixtures::fix_delta2(), 2, 0, DEFAULT_GUARD),
            Err(Error::NotCanonical(_))
        ));
        assert!(matches!(
            count_tropical(&fixtures::fix_l(4), 2, 3, 10),
            Err(Error::Guard { .. })
        ));
    }
}
