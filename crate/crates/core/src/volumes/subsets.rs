//! `tlvol` as the best `d`-trunk barycenter over the tropical simplices
//! spanned by `d + 1` columns (tropical Carathéodory).

use rayon::prelude::*;
use serde::Serialize;

use super::barycenter::{simplex_dtrunk_barycenter, SimplexTrunk};
use crate::combinatorics::subsets;
use crate::error::Result;
use crate::tropical::{TropMatrix, TropScalar};

/// The maximizing column subset and the trunk barycenter it yields.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetWitness {
    pub columns: Vec<usize>,
    pub barycenter: Vec<TropScalar>,
}

/// `max_J Σ bt(tconv(M_J))` over `(d+1)`-subsets `J` with non-singular `Ā_J`;
/// `-inf` without a witness when every subset is singular. Ties go to the
/// lexicographically smallest `J`.
pub fn tlvol_subsets(m: &TropMatrix) -> Result<(TropScalar, Option<SubsetWitness>)> {
    let d = m.rows();
    let js = subsets(m.cols(), d + 1);
    let trunks = js
        .par_iter()
        .map(|j| simplex_dtrunk_barycenter(&m.select_columns(j)))
        .collect::<Result<Vec<Option<SimplexTrunk>>>>()?;
    let mut best: Option<(TropScalar, usize)> = None;
    for (k, t) in trunks.iter().enumerate() {
        if let Some(t) = t {
            let v = t.volume();
            if best.as_ref().is_none_or(|(b, _)| v > *b) {
                best = Some((v, k));
            }
        }
    }
    Ok(match best {
        None => (TropScalar::NegInf, None),
        Some((v, k)) => (
            v,
            Some(SubsetWitness {
                columns: js[k].clone(),
                barycenter: trunks[k].as_ref().expect("selected").barycenter.clone(),
            }),
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn golden() {
        assert_eq!(
            tlvol_subsets(&fixtures::fix_l(4)).unwrap().0,
            TropScalar::int(2)
        );
        assert_eq!(
            tlvol_subsets(&fixtures::fix_cube(2)).unwrap().0,
            TropScalar::int(0)
        );
        assert_eq!(
            tlvol_subsets(&fixtures::fix_cube(3)).unwrap().0,
            TropScalar::int(0)
        );
        let (v, w) = tlvol_subsets(&fixtures::fix_4d()).unwrap();
        assert_eq!(v, TropScalar::NegInf);
        assert!(w.is_none());
        assert_eq!(
            tlvol_subsets(&fixtures::fix_tri(3, 0)).unwrap().0,
            TropScalar::int(4)
        );
        let p = TropMatrix::from_i64_rows(&[[1], [2]]).unwrap();
        assert_eq!(tlvol_subsets(&p).unwrap().0, TropScalar::NegInf);
    }
}
