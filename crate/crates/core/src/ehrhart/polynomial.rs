//! Exact univariate polynomials over the rationals: interpolation and evaluation.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::tropical::Rational;

/// Solve `A x = y` by Gaussian elimination over the rationals.
pub fn solve_linear(mut a: Vec<Vec<Rational>>, mut y: Vec<Rational>) -> Result<Vec<Rational>> {
    let n = a.len();
    if y.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension("linear system is not square".into()));
    }
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Invalid("singular linear system".into()))?;
        a.swap(col, pivot);
        y.swap(col, pivot);
        let inv = a[col][col].recip();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            for c in col..n {
                let delta = &f * &a[col][c];
                a[r][c] -= delta;
            }
            let delta = &f * &y[col];
            y[r] -= delta;
        }
    }
    Ok((0..n).map(|i| &y[i] / &a[i][i]).collect())
}

/// Coefficients `c_0..c_n` of the unique polynomial of degree `≤ n` through
/// `n + 1` points with distinct nodes (Vandermonde solve).
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Result<Vec<Rational>> {
    if xs.len() != ys.len() {
        return Err(Error::Dimension(format!(
            "{} nodes and {} values",
            xs.len(),
            ys.len()
        )));
    }
    let rows = xs
        .iter()
        .map(|x| {
            let mut row = Vec::with_capacity(xs.len());
            let mut p = Rational::one();
            for _ in 0..xs.len() {
                row.push(p.clone());
                p *= x;
            }
            row
        })
        .collect();
    solve_linear(rows, ys.to_vec())
}

/// Horner evaluation of `Σ c_i x^i`.
pub fn evaluate(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Degree of the polynomial, `None` for the zero polynomial.
pub fn degree(coeffs: &[Rational]) -> Option<usize> {
    coeffs.iter().rposition(|c| !c.is_zero())
}
