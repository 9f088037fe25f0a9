//! Kleene star (max-plus transitive closure) and the normal form it needs.

use super::assignment::tdet;
use crate::error::{Error, Result};
use crate::tropical::{Rational, TropMatrix, TropScalar};

/// `A* = I ⊕ A ⊕ A^2 ⊕ …` by a Floyd–Warshall max-plus closure.
///
/// Requires every cycle to have weight `≤ 0`; a positive diagonal entry in
/// the closure is reported as [`Error::PositiveCycle`].
pub fn kleene_star(a: &TropMatrix) -> Result<TropMatrix> {
    let n = a.rows();
    if a.cols() != n {
        return Err(Error::Dimension(format!(
            "Kleene star of a {}x{} matrix",
            n,
            a.cols()
        )));
    }
    let mut s = a.clone().with_empty_columns_allowed();
    for i in 0..n {
        if *s.get(i, i) < TropScalar::one() {
            s.set(i, i, TropScalar::one());
        }
    }
    for k in 0..n {
        for i in 0..n {
            let ik = s.get(i, k).clone();
            if ik.is_neg_inf() {
                continue;
            }
            for j in 0..n {
                let via = ik.otimes(s.get(k, j));
                if via > *s.get(i, j) {
                    s.set(i, j, via);
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| *s.get(i, i) > TropScalar::one()) {
            return Err(Error::PositiveCycle(i));
        }
    }
    Ok(s)
}

/// `A` with columns reordered by an optimal assignment and shifted by its
/// duals: `C_ij = A_{i,σ(j)} − u_i − v_{σ(j)}`, so `C` has a zero diagonal and
/// non-positive entries.
#[derive(Clone, Debug)]
pub struct NormalForm {
    pub matrix: TropMatrix,
    pub sigma: Vec<usize>,
    pub row_shift: Vec<Rational>,
    pub col_shift: Vec<Rational>,
}

/// Brings `A` into the normal form required by [`kleene_star`]; errors on a
/// `-inf` determinant.
pub fn normal_form(a: &TropMatrix) -> Result<NormalForm> {
    let r = tdet(a)?;
    let (Some(u), Some(v)) = (r.row_duals, r.col_duals) else {
        return Err(Error::SingularDeterminant);
    };
    let n = a.rows();
    let rows: Vec<usize> = (0..n).collect();
    let reordered = a.submatrix(&rows, &r.sigma);
    let col_shift: Vec<Rational> = r.sigma.iter().map(|&j| v[j].clone()).collect();
    let mut c = reordered;
    for i in 0..n {
        for j in 0..n {
            let x = c.get(i, j).minus(&(&u[i] + &col_shift[j]));
            c.set(i, j, x);
        }
    }
    Ok(NormalForm {
        matrix: c,
        sigma: r.sigma,
        row_shift: u,
        col_shift,
    })
}

impl NormalForm {
    /// The identity is the only optimal assignment of the normal form, i.e.
    /// no cycle of off-diagonal entries has weight `0`. All cycles have
    /// weight `≤ 0` here, so a max-plus closure of the off-diagonal part
    /// decides it in `O(n^3)`.
    pub fn has_unique_assignment(&self) -> bool {
        let n = self.matrix.rows();
        let mut w: Vec<Vec<TropScalar>> = self.matrix.to_rows();
        for (i, row) in w.iter_mut().enumerate() {
            row[i] = TropScalar::NegInf;
        }
        for k in 0..n {
            for i in 0..n {
                if w[i][k].is_neg_inf() {
                    continue;
                }
                for j in 0..n {
                    let via = w[i][k].otimes(&w[k][j]);
                    if via > w[i][j] {
                        w[i][j] = via;
                    }
                }
            }
        }
        (0..n).all(|i| w[i][i] < TropScalar::one())
    }
}

/// Tropical non-singularity via the Hungarian normal form: the determinant is
/// finite and attained by exactly one permutation.
pub fn is_nonsingular_fast(a: &TropMatrix) -> Result<bool> {
    match normal_form(a) {
        Ok(nf) => Ok(nf.has_unique_assignment()),
        Err(Error::SingularDeterminant) => Ok(false),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<Option<i64>>]) -> TropMatrix {
        TropMatrix::from_opt_rows(rows).unwrap()
    }

    #[test]
    fn examples() {
        let id = TropMatrix::identity(3);
        assert_eq!(
            kleene_star(&id).unwrap(),
            id.clone().with_empty_columns_allowed()
        );
        let a = TropMatrix::from_i64_rows(&[[0, -1], [-2, 0]]).unwrap();
        assert_eq!(kleene_star(&a).unwrap().entries(), a.entries());
        let a = m(&[
            vec![Some(0), Some(-1), None],
            vec![None, Some(0), Some(-1)],
            vec![Some(-3), None, Some(0)],
        ]);
        let s = kleene_star(&a).unwrap();
        assert_eq!(s.get(0, 2), &TropScalar::int(-2));
        assert_eq!(kleene_star(&s).unwrap(), s);
    }

    #[test]
    fn positive_cycle() {
        let a = TropMatrix::from_i64_rows(&[[0, 1], [0, 0]]).unwrap();
        assert!(matches!(kleene_star(&a), Err(Error::PositiveCycle(_))));
    }

    #[test]
    fn fast_nonsingularity_matches_brute_force() {
        use crate::linalg::is_nonsingular;
        let cases = [
            vec![vec![Some(0), Some(0)], vec![Some(0), Some(0)]],
            vec![vec![Some(0), Some(0)], vec![Some(0), Some(1)]],
            vec![vec![Some(0), None], vec![None, Some(0)]],
            vec![vec![None, None], vec![Some(1), Some(0)]],
            vec![
                vec![Some(0), Some(0), Some(0)],
                vec![Some(0), Some(0), Some(3)],
                vec![Some(0), Some(1), Some(3)],
            ],
            vec![
                vec![Some(0), Some(1), Some(2)],
                vec![Some(2), Some(0), Some(1)],
                vec![Some(1), Some(2), Some(0)],
            ],
        ];
        for rows in cases {
            let a = m(&rows);
            assert_eq!(
                is_nonsingular_fast(&a).unwrap(),
                is_nonsingular(&a).unwrap(),
                "{a}"
            );
        }
    }

    #[test]
    fn normal_form_shape() {
        let a = TropMatrix::from_i64_rows(&[[0, 0, 0], [0, 0, 3], [0, 1, 3]]).unwrap();
        let nf = normal_form(&a).unwrap();
        for i in 0..3 {
            assert_eq!(nf.matrix.get(i, i), &TropScalar::one());
            for j in 0..3 {
                assert!(*nf.matrix.get(i, j) <= TropScalar::one());
            }
        }
    }
}
