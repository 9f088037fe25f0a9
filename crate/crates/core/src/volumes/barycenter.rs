//! Tropical barycenters and the `d`-trunk of a tropical simplex.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{kleene_star, normal_form};
use crate::tropical::{coordinate_sum, TropMatrix, TropScalar};

/// Componentwise maximum of the columns, the tropical barycenter of `tconv(M)`.
pub fn tropical_barycenter(m: &TropMatrix) -> Vec<TropScalar> {
    (0..m.rows()).map(|i| TropScalar::sum(m.row(i))).collect()
}

/// The `d`-trunk of a tropical simplex: a polytrope with its generators and
/// barycenter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplexTrunk {
    pub generators: Vec<Vec<TropScalar>>,
    pub barycenter: Vec<TropScalar>,
}

impl SimplexTrunk {
    pub fn volume(&self) -> TropScalar {
        coordinate_sum(&self.barycenter)
    }
}

/// `A` with a zero-th row of tropical ones prepended.
pub fn homogenize(a: &TropMatrix) -> TropMatrix {
    let mut rows = vec![vec![TropScalar::one(); a.cols()]];
    rows.extend(a.to_rows());
    TropMatrix::from_rows(rows).expect("the zero-th row makes every column finite somewhere")
}

/// The `d`-trunk of `tconv(A)` for a `d × (d+1)` matrix `A`, or `None` when
/// `Ā` is singular (the simplex is not full-dimensional).
///
/// `Ā` is brought into normal form (identity assignment, zero diagonal,
/// non-positive entries) by the Hungarian duals; the columns of its Kleene
/// star, shifted back by the row duals and dehomogenized, generate the trunk.
pub fn simplex_dtrunk_barycenter(a: &TropMatrix) -> Result<Option<SimplexTrunk>> {
    let d = a.rows();
    if a.cols() != d + 1 {
        return Err(Error::Dimension(format!(
            "a tropical simplex in dimension {d} needs {} columns",
            d + 1
        )));
    }
    let bar = homogenize(a);
    let nf = match normal_form(&bar) {
        Ok(nf) => nf,
        Err(Error::SingularDeterminant) => return Ok(None),
        Err(e) => return Err(e),
    };
    if !nf.has_unique_assignment() {
        return Ok(None);
    }
    let star = kleene_star(&nf.matrix)?;
    let generators: Vec<Vec<TropScalar>> = (0..=d)
        .map(|j| {
            let g: Vec<TropScalar> = (0..=d)
                .map(|i| star.get(i, j).shift(&nf.row_shift[i]))
                .collect();
            let base = g[0]
                .finite()
                .expect("row zero of the star is finite")
                .clone();
            g[1..].iter().map(|x| x.minus(&base)).collect()
        })
        .collect();
    let barycenter = (0..d)
        .map(|i| TropScalar::sum(generators.iter().map(|g| &g[i])))
        .collect();
    Ok(Some(SimplexTrunk {
        generators,
        barycenter,
    }))
}
