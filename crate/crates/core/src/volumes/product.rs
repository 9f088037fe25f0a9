//! Cartesian products of tropical polytopes.

use crate::error::Result;
use crate::tropical::{TropMatrix, TropScalar};

/// Generators of `tconv(M) × tconv(N)`: every stacked pair of a column of `M`
/// over a column of `N`, with the column of `N` varying slowest.
pub fn cartesian_product(m: &TropMatrix, n: &TropMatrix) -> Result<TropMatrix> {
    let mut columns = Vec::with_capacity(m.cols() * n.cols());
    for b in n.columns() {
        for a in m.columns() {
            let mut c: Vec<TropScalar> = a.clone();
            c.extend(b.iter().cloned());
            columns.push(c);
        }
    }
    if m.empty_columns_allowed() && n.empty_columns_allowed() {
        let rows = m.rows() + n.rows();
        let entries = (0..rows)
            .flat_map(|i| columns.iter().map(move |c| c[i].clone()))
            .collect();
        return TropMatrix::allowing_empty_columns(rows, columns.len(), entries);
    }
    TropMatrix::from_columns(&columns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn displayed_product() {
        let (m, n) = fixtures::fix_prod(3);
        let p = cartesian_product(&m, &n).unwrap();
        assert_eq!(
            p,
            TropMatrix::from_i64_rows(&[
                [0, 1, 3, 0, 1, 3],
                [0, 0, 3, 0, 0, 3],
                [0, 0, 0, 1, 1, 1]
            ])
            .unwrap()
        );
    }

    #[test]
    fn product_with_a_point() {
        let m = fixtures::fix_l(4);
        let pt = TropMatrix::from_i64_rows(&[[7]]).unwrap();
        let p = cartesian_product(&m, &pt).unwrap();
        assert_eq!(p.rows(), 3);
        assert!(p.row(2).iter().all(|x| *x == TropScalar::int(7)));
    }
}
