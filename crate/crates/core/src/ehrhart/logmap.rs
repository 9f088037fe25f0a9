//! The Log map: the degree in `b` of a quantity that is polynomial in `b`.

use num_bigint::BigInt;

use super::polynomial::{degree, evaluate, interpolate};
use crate::error::{Error, Result};
use crate::tropical::{Rational, TropMatrix, TropScalar};

/// Degree of the interpolating polynomial through `samples`, or `None` for the
/// zero polynomial. The first `max_degree + 1` samples determine the
/// polynomial; every further sample must lie on it.
pub fn log_map(samples: &[(u32, Rational)], max_degree: usize) -> Result<Option<usize>> {
    if samples.len() < max_degree + 1 {
        return Err(Error::TooFewSamples {
            needed: max_degree + 1,
            got: samples.len(),
        });
    }
    let (fit, rest) = samples.split_at(max_degree + 1);
    let xs: Vec<Rational> = fit
        .iter()
        .map(|(b, _)| Rational::from_integer(BigInt::from(*b)))
        .collect();
    let ys: Vec<Rational> = fit.iter().map(|(_, v)| v.clone()).collect();
    let coeffs = interpolate(&xs, &ys)?;
    for (b, v) in rest {
        if evaluate(&coeffs, &Rational::from_integer(BigInt::from(*b))) != *v {
            return Err(Error::NotPolynomial(max_degree));
        }
    }
    Ok(degree(&coeffs))
}

/// `d · (1 + max entry)`, an upper bound on the degree in `b` of every
/// tropical Ehrhart coefficient of a canonical lattice polytope.
pub fn degree_bound(m: &TropMatrix) -> usize {
    let max = m.max_entry().to_i64().unwrap_or(0).max(0) as usize;
    m.rows() * (1 + max)
}

/// Log of `f` sampled at `b = 2..=max_degree + 3`: one sample more than the
/// interpolation needs, so that the degree bound is checked as a residual.
pub fn log_of(max_degree: usize, f: impl Fn(u32) -> Result<Rational>) -> Result<TropScalar> {
    let samples = (2..=max_degree as u32 + 3)
        .map(|b| f(b).map(|v| (b, v)))
        .collect::<Result<Vec<_>>>()?;
    Ok(match log_map(&samples, max_degree)? {
        Some(n) => TropScalar::int(n as i64),
        None => TropScalar::NegInf,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropical::{frac, rat};

    #[test]
    fn constants_and_zero() {
        let one: Vec<(u32, Rational)> = (2..6).map(|b| (b, rat(1))).collect();
        assert_eq!(log_map(&one, 3).unwrap(), Some(0));
        let zero: Vec<(u32, Rational)> = (2..6).map(|b| (b, rat(0))).collect();
        assert_eq!(log_map(&zero, 3).unwrap(), None);
    }

    #[test]
    fn quadratic() {
        let s: Vec<(u32, Rational)> = (2..=5)
            .map(|b| (b, frac(1, 2) * rat(b as i64 - 1) * rat(b as i64 - 1)))
            .collect();
        assert_eq!(log_map(&s, 3).unwrap(), Some(2));
        assert_eq!(log_map(&s, 2).unwrap(), Some(2));
    }

    #[test]
    fn residual_detects_wrong_bound() {
        let s: Vec<(u32, Rational)> = (2..=6).map(|b| (b, rat(2i64.pow(b)))).collect();
        assert_eq!(log_map(&s, 3), Err(Error::NotPolynomial(3)));
        assert!(matches!(
            log_map(&s[..2], 3),
            Err(Error::TooFewSamples { .. })
        ));
    }
}
