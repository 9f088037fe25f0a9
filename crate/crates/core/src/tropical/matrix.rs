use std::fmt;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::scalar::{Rational, TropScalar};
use crate::error::{Error, Result};

/// Dense `rows × cols` max-plus matrix stored row-major.
///
/// Read as a generator matrix, its columns span the tropical polytope
/// `tconv(M)`. Columns that are entirely `-inf` generate nothing and are
/// rejected unless the matrix was built with [`TropMatrix::allowing_empty_columns`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<TropScalar>,
    empty_columns_ok: bool,
}

impl TropMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<TropScalar>) -> Result<Self> {
        let m = Self::new_unchecked(rows, cols, entries)?;
        m.check_columns()?;
        Ok(m)
    }

    /// Same as [`TropMatrix::new`] but accepts all-`-inf` columns.
    pub fn allowing_empty_columns(
        rows: usize,
        cols: usize,
        entries: Vec<TropScalar>,
    ) -> Result<Self> {
        let mut m = Self::new_unchecked(rows, cols, entries)?;
        m.empty_columns_ok = true;
        Ok(m)
    }

    fn new_unchecked(rows: usize, cols: usize, entries: Vec<TropScalar>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension(format!("empty matrix {rows}x{cols}")));
        }
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(TropMatrix {
            rows,
            cols,
            entries,
            empty_columns_ok: false,
        })
    }

    pub fn from_rows(rows: Vec<Vec<TropScalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Integer matrix from row slices, `None` meaning `-inf`.
    pub fn from_opt_rows(rows: &[Vec<Option<i64>>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let entries = rows
            .iter()
            .flatten()
            .map(|x| x.map_or(TropScalar::NegInf, TropScalar::int))
            .collect();
        Self::allowing_empty_columns(r, c, entries).and_then(|mut m| {
            m.empty_columns_ok = false;
            m.check_columns()?;
            Ok(m)
        })
    }

    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.as_ref().len());
        if rows.iter().any(|row| row.as_ref().len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let entries = rows
            .iter()
            .flat_map(|row| row.as_ref().iter().map(|&x| TropScalar::int(x)))
            .collect();
        Self::new(r, c, entries)
    }

    /// The tropical identity: `0` on the diagonal, `-inf` elsewhere.
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![TropScalar::NegInf; n * n];
        for i in 0..n {
            entries[i * n + i] = TropScalar::one();
        }
        TropMatrix {
            rows: n,
            cols: n,
            entries,
            empty_columns_ok: false,
        }
    }

    /// Matrix with one column per point.
    pub fn from_columns(columns: &[Vec<TropScalar>]) -> Result<Self> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::Dimension("columns of different lengths".into()));
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for c in columns {
                entries.push(c[i].clone());
            }
        }
        Self::new(rows, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn empty_columns_allowed(&self) -> bool {
        self.empty_columns_ok
    }

    pub fn with_empty_columns_allowed(mut self) -> Self {
        self.empty_columns_ok = true;
        self
    }

    pub fn get(&self, i: usize, j: usize) -> &TropScalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: TropScalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[TropScalar] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[TropScalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<TropScalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> impl Iterator<Item = Vec<TropScalar>> + '_ {
        (0..self.cols).map(move |j| self.column(j))
    }

    pub fn to_rows(&self) -> Vec<Vec<TropScalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_empty_column(&self, j: usize) -> bool {
        (0..self.rows).all(|i| self.get(i, j).is_neg_inf())
    }

    fn check_columns(&self) -> Result<()> {
        if self.empty_columns_ok {
            return Ok(());
        }
        match (0..self.cols).find(|&j| self.is_empty_column(j)) {
            Some(j) => Err(Error::EmptyColumn(j)),
            None => Ok(()),
        }
    }

    /// Error unless every column has a finite entry (or the flag is set).
    pub fn validate_generators(&self) -> Result<()> {
        self.check_columns()
    }

    /// All finite entries are integers.
    pub fn is_integer(&self) -> bool {
        self.entries
            .iter()
            .all(|x| x.finite().is_none_or(|q| q.is_integer()))
    }

    /// Entries in `Z>=0 ∪ {-inf}`.
    pub fn is_canonical_lattice(&self) -> bool {
        self.entries.iter().all(|x| match x {
            TropScalar::NegInf => true,
            TropScalar::Finite(q) => q.is_integer() && !q.is_negative(),
        })
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(TropScalar::is_finite)
    }

    /// Largest entry, i.e. the maximal tropical 1-minor.
    pub fn max_entry(&self) -> TropScalar {
        TropScalar::sum(&self.entries)
    }

    pub fn min_finite_entry(&self) -> Option<Rational> {
        self.entries
            .iter()
            .filter_map(TropScalar::finite)
            .min()
            .cloned()
    }

    /// Submatrix with the given rows and columns (in the given order).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> TropMatrix {
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        TropMatrix {
            rows: rows.len(),
            cols: cols.len(),
            entries,
            empty_columns_ok: true,
        }
    }

    /// Columns selected by `cols`, all rows.
    pub fn select_columns(&self, cols: &[usize]) -> TropMatrix {
        let rows: Vec<usize> = (0..self.rows).collect();
        let mut m = self.submatrix(&rows, cols);
        m.empty_columns_ok = self.empty_columns_ok;
        m
    }

    /// Entrywise map (the flag is kept).
    pub fn map(&self, f: impl Fn(&TropScalar) -> TropScalar) -> TropMatrix {
        TropMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
            empty_columns_ok: self.empty_columns_ok,
        }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hconcat(&self, other: &TropMatrix) -> Result<TropMatrix> {
        if self.rows != other.rows {
            return Err(Error::Dimension(format!(
                "cannot concatenate {} rows with {} rows",
                self.rows, other.rows
            )));
        }
        let mut entries = Vec::with_capacity(self.entries.len() + other.entries.len());
        for i in 0..self.rows {
            entries.extend_from_slice(self.row(i));
            entries.extend_from_slice(other.row(i));
        }
        Ok(TropMatrix {
            rows: self.rows,
            cols: self.cols + other.cols,
            entries,
            empty_columns_ok: self.empty_columns_ok || other.empty_columns_ok,
        })
    }

    /// Max-plus product `self ⊙ rhs`.
    pub fn tmul(&self, rhs: &TropMatrix) -> Result<TropMatrix> {
        mat_tmul(self, rhs)
    }
}

/// Max-plus product `(A⊙B)_{ik} = max_j (A_ij + B_jk)`.
///
/// The result may contain all-`-inf` columns, so it carries the permissive flag.
pub fn mat_tmul(a: &TropMatrix, b: &TropMatrix) -> Result<TropMatrix> {
    if a.cols != b.rows {
        return Err(Error::Dimension(format!(
            "{}x{} times {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut entries = Vec::with_capacity(a.rows * b.cols);
    for i in 0..a.rows {
        for k in 0..b.cols {
            let mut acc = TropScalar::NegInf;
            for j in 0..a.cols {
                let t = a.get(i, j).otimes(b.get(j, k));
                if t > acc {
                    acc = t;
                }
            }
            entries.push(acc);
        }
    }
    Ok(TropMatrix {
        rows: a.rows,
        cols: b.cols,
        entries,
        empty_columns_ok: true,
    })
}

/// Max-plus matrix-vector product `M ⊙ λ`.
pub fn mat_vec(m: &TropMatrix, lambda: &[TropScalar]) -> Result<Vec<TropScalar>> {
    if lambda.len() != m.cols {
        return Err(Error::Dimension(format!(
            "vector of length {} for {} columns",
            lambda.len(),
            m.cols
        )));
    }
    Ok((0..m.rows)
        .map(|i| {
            (0..m.cols)
                .map(|j| m.get(i, j).otimes(&lambda[j]))
                .max()
                .unwrap_or(TropScalar::NegInf)
        })
        .collect())
}

impl fmt::Display for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// JSON shape `{"rows": d, "cols": m, "entries": [[...], ...]}`.
#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<TropScalar>>,
}

impl Serialize for TropMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: self.to_rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TropMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = MatrixJson::deserialize(d)?;
        if raw.entries.len() != raw.rows || raw.entries.iter().any(|r| r.len() != raw.cols) {
            return Err(D::Error::custom(format!(
                "entries do not match the declared {}x{} shape",
                raw.rows, raw.cols
            )));
        }
        // All-`-inf` columns are validated by the consumer, which knows
        // whether the flag applies.
        TropMatrix::allowing_empty_columns(raw.rows, raw.cols, raw.entries.concat())
            .map(|mut m| {
                m.empty_columns_ok = false;
                m
            })
            .map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// `true` when every entry of the vector is finite.
pub fn is_finite_point(x: &[TropScalar]) -> bool {
    x.iter().all(TropScalar::is_finite)
}

/// Coordinate sum of a point (`-inf` if any coordinate is).
pub fn coordinate_sum(x: &[TropScalar]) -> TropScalar {
    TropScalar::product(x)
}
