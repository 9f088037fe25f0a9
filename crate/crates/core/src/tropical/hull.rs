//! Tropical convex hulls: residuation, membership and base-`b` transport.

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use super::matrix::{mat_vec, TropMatrix};
use super::scalar::{Rational, TropScalar};
use crate::error::{Error, Result};

/// Greatest coefficient vector `λ*` with `M ⊙ λ* ≤ x`.
///
/// `λ*_j = min_{i : M_ij finite} (x_i − M_ij)`, which is `-inf` as soon as one
/// of those `x_i` is `-inf`. A permitted all-`-inf` column reports `-inf`.
pub fn residuate(m: &TropMatrix, x: &[TropScalar]) -> Result<Vec<TropScalar>> {
    check_point(m, x)?;
    m.validate_generators()?;
    Ok((0..m.cols()).map(|j| residuate_column(m, x, j)).collect())
}

fn residuate_column(m: &TropMatrix, x: &[TropScalar], j: usize) -> TropScalar {
    let mut best: Option<Rational> = None;
    for (i, xi) in x.iter().enumerate() {
        let TropScalar::Finite(mij) = m.get(i, j) else {
            continue;
        };
        let TropScalar::Finite(xi) = xi else {
            return TropScalar::NegInf;
        };
        let diff = xi - mij;
        if best.as_ref().is_none_or(|b| diff < *b) {
            best = Some(diff);
        }
    }
    best.map_or(TropScalar::NegInf, TropScalar::Finite)
}

/// Clamp a coefficient vector to `λ'_j = min(λ_j, 0)`.
///
/// Applied to `residuate(M, x)` this gives the largest admissible coefficient
/// vector for the hull, and `M ⊙ λ' ≤ x` always holds.
pub fn normalize(lambda: &[TropScalar]) -> Vec<TropScalar> {
    let zero = TropScalar::one();
    lambda
        .iter()
        .map(|l| if *l > zero { zero.clone() } else { l.clone() })
        .collect()
}

/// Membership `x ∈ tconv(M)`, i.e. `x = ⊕_j λ_j ⊙ M_j` for some `λ` with
/// `⊕_j λ_j = 0`.
///
/// With `λ' = normalize(residuate(M, x))` this holds iff `M ⊙ λ' = x` and
/// `max λ' = 0`. A permitted all-`-inf` column can always carry the
/// coefficient `0`, which waives the second condition.
pub fn contains(m: &TropMatrix, x: &[TropScalar]) -> Result<bool> {
    let lambda = normalize(&residuate(m, x)?);
    let has_empty = (0..m.cols()).any(|j| m.is_empty_column(j));
    let attained = has_empty || lambda.iter().any(|l| *l == TropScalar::one());
    Ok(attained && mat_vec(m, &lambda)? == x)
}

fn check_point(m: &TropMatrix, x: &[TropScalar]) -> Result<()> {
    if x.len() != m.rows() {
        return Err(Error::Dimension(format!(
            "point of length {} for a matrix with {} rows",
            x.len(),
            m.rows()
        )));
    }
    Ok(())
}

/// Integer membership test for a finite integer generator matrix given as
/// row slices; `x ∈ tconv(M)` with the same criterion as [`contains`].
///
/// Since positive scaling is a semiring automorphism, a rational point `p/n`
/// can be tested as `contains_i64(n·M, p)`.
pub fn contains_i64(rows: &[Vec<i64>], x: &[i64]) -> bool {
    let cols = rows.first().map_or(0, Vec::len);
    let mut lambda = vec![0i64; cols];
    for (j, l) in lambda.iter_mut().enumerate() {
        let r = rows
            .iter()
            .zip(x)
            .map(|(row, &xi)| xi - row[j])
            .min()
            .unwrap_or(0);
        *l = r.min(0);
    }
    if !lambda.contains(&0) {
        return false;
    }
    rows.iter()
        .zip(x)
        .all(|(row, &xi)| row.iter().zip(&lambda).map(|(&mij, &l)| mij + l).max() == Some(xi))
}

/// Coordinatewise `b^{x_i}` with `b^{-inf} = 0`.
pub fn exp_b_point(x: &[TropScalar], b: u32) -> Result<Vec<Rational>> {
    if b < 2 {
        return Err(Error::Invalid(format!("base b = {b} must be at least 2")));
    }
    x.iter()
        .map(|xi| match xi {
            TropScalar::NegInf => Ok(Rational::zero()),
            TropScalar::Finite(q) if q.is_integer() => {
                let e = q.to_integer();
                let base = Rational::from_integer(BigInt::from(b));
                let mag: u32 = e
                    .abs()
                    .try_into()
                    .map_err(|_| Error::Invalid(format!("exponent {e} too large")))?;
                let p: Rational = Pow::pow(&base, mag);
                Ok(if e.is_negative() { p.recip() } else { p })
            }
            TropScalar::Finite(q) => Err(Error::NotIntegral(q.to_string())),
        })
        .collect()
}

/// Inverse of [`exp_b_point`] on exact powers of `b` (and `0 ↦ -inf`);
/// `None` if some coordinate is not an exact power.
pub fn log_b_point(z: &[Rational], b: u32) -> Option<Vec<TropScalar>> {
    if b < 2 {
        return None;
    }
    z.iter().map(|zi| log_b(zi, b)).collect()
}

fn log_b(z: &Rational, b: u32) -> Option<TropScalar> {
    if z.is_zero() {
        return Some(TropScalar::NegInf);
    }
    if z.is_negative() {
        return None;
    }
    let (mut v, sign) = if *z >= Rational::one() {
        (z.clone(), 1)
    } else {
        (z.recip(), -1)
    };
    let base = Rational::from_integer(BigInt::from(b));
    let mut e: i64 = 0;
    while v > Rational::one() {
        v /= &base;
        e += 1;
    }
    (v == Rational::one()).then(|| TropScalar::int(sign * e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::tropical::scalar::frac;

    fn pt(xs: &[i64]) -> Vec<TropScalar> {
        xs.iter().map(|&x| TropScalar::int(x)).collect()
    }

    #[test]
    fn residuate_examples() {
        let id = TropMatrix::identity(2);
        assert_eq!(residuate(&id, &pt(&[3, 5])).unwrap(), pt(&[3, 5]));
        let l4 = fixtures::fix_l(4);
        assert_eq!(residuate(&l4, &pt(&[0, 1])).unwrap(), pt(&[0, 0, -3]));
        let cube = fixtures::fix_cube(2);
        let x = vec![TropScalar::NegInf, TropScalar::int(0)];
        let lam = residuate(&cube, &x).unwrap();
        assert_eq!(
            lam,
            vec![TropScalar::NegInf, TropScalar::int(0), TropScalar::NegInf]
        );
    }

    #[test]
    fn contains_examples() {
        let l4 = fixtures::fix_l(4);
        for c in l4.columns() {
            assert!(contains(&l4, &c).unwrap());
        }
        assert!(contains(&l4, &pt(&[1, 1])).unwrap());
        assert!(!contains(&l4, &pt(&[0, 2])).unwrap());
        assert!(!contains(&l4, &pt(&[4, 4])).unwrap());
        let cube = fixtures::fix_cube(2);
        let half = TropScalar::Finite(frac(-1, 2));
        assert!(contains(&cube, &[half.clone(), half]).unwrap());
        assert!(!contains(&cube, &pt(&[1, 0])).unwrap());
    }

    #[test]
    fn single_generator_hull_is_a_point() {
        let m = TropMatrix::from_i64_rows(&[[0], [0]]).unwrap();
        assert!(contains(&m, &pt(&[0, 0])).unwrap());
        assert!(!contains(&m, &pt(&[1, 1])).unwrap());
        assert!(!contains(&m, &pt(&[-1, -1])).unwrap());
    }

    #[test]
    fn empty_column_requires_flag() {
        let e = vec![
            TropScalar::NegInf,
            TropScalar::int(0),
            TropScalar::NegInf,
            TropScalar::int(1),
        ];
        let m = TropMatrix::allowing_empty_columns(2, 2, e.clone()).unwrap();
        assert!(residuate(&m, &pt(&[0, 0])).is_ok());
        let json = serde_json::to_string(&m).unwrap();
        let strict: TropMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(residuate(&strict, &pt(&[0, 0])), Err(Error::EmptyColumn(0)));
    }

    #[test]
    fn integer_path_agrees() {
        let rows = vec![vec![0, 0, 3], vec![0, 1, 3]];
        let m = fixtures::fix_l(4);
        for x in -1..5 {
            for y in -1..5 {
                assert_eq!(
                    contains_i64(&rows, &[x, y]),
                    contains(&m, &pt(&[x, y])).unwrap()
                );
            }
        }
    }

    #[test]
    fn exp_and_log() {
        assert_eq!(
            exp_b_point(&pt(&[0, 0]), 2).unwrap(),
            vec![Rational::one(), Rational::one()]
        );
        let z = exp_b_point(&pt(&[1, 3]), 7).unwrap();
        assert_eq!(
            z,
            vec![
                Rational::from_integer(7.into()),
                Rational::from_integer(343.into())
            ]
        );
        let z = exp_b_point(&[TropScalar::NegInf, TropScalar::int(2)], 3).unwrap();
        assert_eq!(z, vec![Rational::zero(), Rational::from_integer(9.into())]);
        assert_eq!(
            log_b_point(&z, 3).unwrap(),
            vec![TropScalar::NegInf, TropScalar::int(2)]
        );
        assert_eq!(
            log_b_point(&exp_b_point(&pt(&[-2]), 5).unwrap(), 5).unwrap(),
            pt(&[-2])
        );
        assert!(log_b_point(&[Rational::from_integer(6.into())], 2).is_none());
        assert!(matches!(
            exp_b_point(&[TropScalar::Finite(frac(1, 2))], 2),
            Err(Error::NotIntegral(_))
        ));
    }
}
