//! Scaled permutation matrices and tropical scalar multiplication.

use serde::{Deserialize, Serialize};

use super::matrix::TropMatrix;
use super::scalar::{Rational, TropScalar};
use crate::error::{Error, Result};

/// The tropical matrix `diag(z) ⊙ Σ`, where `Σ` has `0` at `(i, σ(i))`.
///
/// Acting on `M` it moves row `σ(i)` to position `i` and then adds `z_i` to it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScaledPermutationMatrix {
    pub sigma: Vec<usize>,
    #[serde(with = "crate::tropical::scalar::rational_serde::vec")]
    pub z: Vec<Rational>,
}

impl ScaledPermutationMatrix {
    pub fn new(sigma: Vec<usize>, z: Vec<Rational>) -> Result<Self> {
        let d = sigma.len();
        if z.len() != d {
            return Err(Error::Dimension(format!(
                "{} shifts for a permutation of {d}",
                z.len()
            )));
        }
        let mut seen = vec![false; d];
        for &s in &sigma {
            if s >= d || std::mem::replace(&mut seen[s], true) {
                return Err(Error::Invalid(format!("{sigma:?} is not a permutation")));
            }
        }
        Ok(ScaledPermutationMatrix { sigma, z })
    }

    pub fn dim(&self) -> usize {
        self.sigma.len()
    }

    /// The shifts in increasing order.
    fn sorted_z(&self) -> Vec<Rational> {
        let mut z = self.z.clone();
        z.sort();
        z
    }

    /// Membership in `R_d`: `Σ z_i = 0`.
    pub fn in_r(&self) -> bool {
        self.z.iter().sum::<Rational>() == Rational::default()
    }

    /// Membership in `R_{d,i}^+`: the largest `i`-subset sum of `z` is `0`.
    pub fn in_r_plus(&self, i: usize) -> bool {
        i >= 1
            && i <= self.dim()
            && self.sorted_z().iter().rev().take(i).sum::<Rational>() == Rational::default()
    }

    /// Membership in `R_{d,i}^-`: the smallest `i`-subset sum of `z` is `0`.
    pub fn in_r_minus(&self, i: usize) -> bool {
        i >= 1
            && i <= self.dim()
            && self.sorted_z().iter().take(i).sum::<Rational>() == Rational::default()
    }

    /// As a `d × d` tropical matrix.
    pub fn to_matrix(&self) -> TropMatrix {
        let d = self.dim();
        let mut m = TropMatrix::identity(d);
        for i in 0..d {
            m.set(i, i, TropScalar::NegInf);
        }
        for i in 0..d {
            m.set(i, self.sigma[i], TropScalar::Finite(self.z[i].clone()));
        }
        m
    }
}

/// `diag(z) ⊙ Σ ⊙ M`.
pub fn act(s: &ScaledPermutationMatrix, m: &TropMatrix) -> Result<TropMatrix> {
    if s.dim() != m.rows() {
        return Err(Error::Dimension(format!(
            "{}x{} action on a matrix with {} rows",
            s.dim(),
            s.dim(),
            m.rows()
        )));
    }
    let mut out = m.clone();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.set(i, j, m.get(s.sigma[i], j).shift(&s.z[i]));
        }
    }
    Ok(out)
}

/// `λ ⊙ M`: add `λ` to every entry.
pub fn act_scalar(lambda: &Rational, m: &TropMatrix) -> TropMatrix {
    m.map(|x| x.shift(lambda))
}
