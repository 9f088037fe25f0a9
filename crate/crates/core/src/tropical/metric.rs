//! The tropical projective (Hilbert) metric.

use super::scalar::{Rational, TropScalar};
use crate::error::{Error, Result};

/// `d_tr(v, w) = max_{i,j} |v_i − w_i − v_j + w_j|`, i.e. the spread of `v − w`.
pub fn d_tr(v: &[TropScalar], w: &[TropScalar]) -> Result<Rational> {
    if v.len() != w.len() {
        return Err(Error::Dimension(format!(
            "points of length {} and {}",
            v.len(),
            w.len()
        )));
    }
    let diffs = v
        .iter()
        .zip(w)
        .map(|(a, b)| match (a, b) {
            (TropScalar::Finite(a), TropScalar::Finite(b)) => Ok(a - b),
            _ => Err(Error::InfiniteCoordinate),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(match (diffs.iter().max(), diffs.iter().min()) {
        (Some(hi), Some(lo)) => hi - lo,
        _ => Rational::default(),
    })
}
