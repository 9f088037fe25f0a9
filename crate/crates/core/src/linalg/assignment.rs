//! Optimal assignment (tropical determinant) by the Hungarian method.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tropical::{Rational, TropMatrix, TropScalar};

/// Value, maximizing permutation and dual certificate of `tdet(A)`.
///
/// When `value` is finite, `A_ij − row_duals[i] − col_duals[j] ≤ 0` for all
/// `i, j`, with equality on every `(i, sigma[i])`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssignmentResult {
    pub value: TropScalar,
    pub sigma: Vec<usize>,
    #[serde(with = "crate::tropical::scalar::rational_serde::option_vec")]
    pub row_duals: Option<Vec<Rational>>,
    #[serde(with = "crate::tropical::scalar::rational_serde::option_vec")]
    pub col_duals: Option<Vec<Rational>>,
}

/// `tdet(A) = max_σ Σ_i A_{i,σ(i)}` with duals, in `O(r³)` exact operations.
///
/// `-inf` entries are forbidden cells; if no perfect assignment avoids them
/// the value is `-inf` and no duals are returned.
pub fn tdet(a: &TropMatrix) -> Result<AssignmentResult> {
    let n = a.rows();
    if a.cols() != n {
        return Err(Error::Dimension(format!(
            "tdet of a {}x{} matrix",
            n,
            a.cols()
        )));
    }
    match hungarian(a) {
        Some((sigma, u, v)) => {
            let value = TropScalar::product((0..n).map(|i| a.get(i, sigma[i])).collect::<Vec<_>>());
            Ok(AssignmentResult {
                value,
                sigma,
                row_duals: Some(u),
                col_duals: Some(v),
            })
        }
        None => Ok(AssignmentResult {
            value: TropScalar::NegInf,
            sigma: (0..n).collect(),
            row_duals: None,
            col_duals: None,
        }),
    }
}

/// Minimizes `Σ c_{i,σ(i)}` for `c = −A` with potentials `u, v`
/// (`u_i + v_j ≤ c_ij`). Returns the maximizing `σ` and the duals of the
/// max problem, `(−u, −v)`.
fn hungarian(a: &TropMatrix) -> Option<(Vec<usize>, Vec<Rational>, Vec<Rational>)> {
    let n = a.rows();
    let cost = |i: usize, j: usize| a.get(i - 1, j - 1).finite().map(|q| -q.clone());
    let zero = Rational::default();
    let mut u = vec![zero.clone(); n + 1];
    let mut v = vec![zero.clone(); n + 1];
    // p[j]: row matched to column j (1-based, 0 = none); way[j]: previous column on the path.
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0usize;
        // `None` stands for +infinity.
        let mut minv: Vec<Option<Rational>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta: Option<Rational> = None;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                if let Some(c) = cost(i0, j) {
                    let cur = c - &u[i0] - &v[j];
                    if minv[j].as_ref().is_none_or(|m| cur < *m) {
                        minv[j] = Some(cur);
                        way[j] = j0;
                    }
                }
                if let Some(m) = &minv[j] {
                    if delta.as_ref().is_none_or(|d| m < d) {
                        delta = Some(m.clone());
                        j1 = j;
                    }
                }
            }
            let delta = delta?;
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += &delta;
                    v[j] -= &delta;
                } else if let Some(m) = minv[j].as_mut() {
                    *m -= &delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut sigma = vec![0usize; n];
    for j in 1..=n {
        sigma[p[j] - 1] = j - 1;
    }
    let row = u[1..].iter().map(|x| -x.clone()).collect();
    let col = v[1..].iter().map(|x| -x.clone()).collect();
    Some((sigma, row, col))
}

/// Checks the dual certificate of an [`AssignmentResult`] against `A`.
pub fn certificate_holds(a: &TropMatrix, r: &AssignmentResult) -> bool {
    let (Some(u), Some(v)) = (&r.row_duals, &r.col_duals) else {
        return r.value.is_neg_inf();
    };
    let n = a.rows();
    (0..n).all(|i| {
        (0..n).all(|j| match a.get(i, j).finite() {
            None => true,
            Some(x) => {
                let slack = x - &u[i] - &v[j];
                if r.sigma[i] == j {
                    slack == Rational::default()
                } else {
                    slack <= Rational::default()
                }
            }
        })
    })
}
