//! Maximal tropical `i`-minors and tropical rank.

use rayon::prelude::*;
use serde::Serialize;

use super::assignment::tdet;
use super::permanent::{BruteForce, DEFAULT_BRUTE_BOUND};
use crate::combinatorics::subsets;
use crate::error::{Error, Result};
use crate::tropical::{TropMatrix, TropScalar};

/// A maximal tropical minor together with the row and column subsets attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Minor {
    pub value: TropScalar,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

/// `tminor_i(M) = max_{I, J} tdet(M_{I,J})` over `i`-subsets of rows and
/// columns; the lexicographically smallest `(I, J)` is reported on ties.
pub fn tminor(m: &TropMatrix, i: usize) -> Result<Minor> {
    let hi = m.rows().min(m.cols());
    if i < 1 || i > hi {
        return Err(Error::OutOfRange {
            index: i,
            lo: 1,
            hi,
        });
    }
    let row_sets = subsets(m.rows(), i);
    let col_sets = subsets(m.cols(), i);
    let pairs: Vec<(&Vec<usize>, &Vec<usize>)> = row_sets
        .iter()
        .flat_map(|r| col_sets.iter().map(move |c| (r, c)))
        .collect();
    let values = pairs
        .par_iter()
        .map(|(r, c)| tdet(&m.submatrix(r, c)).map(|a| a.value))
        .collect::<Result<Vec<_>>>()?;
    let mut best = 0;
    for k in 1..values.len() {
        if values[k] > values[best] {
            best = k;
        }
    }
    Ok(Minor {
        value: values[best].clone(),
        rows: pairs[best].0.clone(),
        cols: pairs[best].1.clone(),
    })
}

/// Largest `r` such that some `r × r` submatrix is tropically non-singular
/// (`0` if none is).
pub fn tropical_rank(m: &TropMatrix) -> Result<usize> {
    tropical_rank_bounded(m, DEFAULT_BRUTE_BOUND)
}

pub fn tropical_rank_bounded(m: &TropMatrix, bound: usize) -> Result<usize> {
    let hi = m.rows().min(m.cols());
    if hi > bound {
        return Err(Error::SizeBound { size: hi, bound });
    }
    let brute = BruteForce { bound };
    for r in (1..=hi).rev() {
        let rows = subsets(m.rows(), r);
        let cols = subsets(m.cols(), r);
        let found = rows.par_iter().any(|ri| {
            cols.iter()
                .any(|ci| brute.is_nonsingular(&m.submatrix(ri, ci)).unwrap_or(false))
        });
        if found {
            return Ok(r);
        }
    }
    Ok(0)
}
