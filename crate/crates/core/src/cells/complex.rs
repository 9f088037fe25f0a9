//! The alcoved triangulation of a tropical lattice polytope, with face
//! relations, trunks and boundary labels.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::alcove::{canonical_patterns, AlcovedSimplex};
use crate::error::{Error, Result};
use crate::tropical::{contains_i64, TropMatrix};

/// Per-coordinate integer interval `[min_j M_ij, max_j M_ij]`; the tropical
/// hull lies inside it.
pub fn bounding_box(m: &TropMatrix) -> Result<Vec<(i64, i64)>> {
    let rows = integer_rows(m)?;
    Ok(rows
        .iter()
        .map(|r| (*r.iter().min().unwrap(), *r.iter().max().unwrap()))
        .collect())
}

/// The matrix as `i64` rows; errors on `-inf` or non-integral entries.
pub fn integer_rows(m: &TropMatrix) -> Result<Vec<Vec<i64>>> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| match x.finite() {
                    None => Err(Error::NotCanonical(
                        "entry -inf: the triangulation needs finite entries".into(),
                    )),
                    Some(_) => x.to_i64().ok_or_else(|| Error::NotIntegral(x.to_string())),
                })
                .collect()
        })
        .collect()
}

/// Labels derived from face incidences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CellLabel {
    /// Not a proper face of any stored cell.
    pub maximal: bool,
    /// Lies in the boundary: under a `(d−1)`-cell that is not shared by exactly
    /// two `d`-cells, or outside the closure of every `d`-cell.
    pub boundary: bool,
}

/// Deduplicated set of open alcoved simplices partitioning `tconv(M)`.
#[derive(Clone, Debug)]
pub struct CellComplex {
    d: usize,
    generators: TropMatrix,
    cells: Vec<AlcovedSimplex>,
    index: HashMap<Vec<Vec<i64>>, usize>,
    faces: Vec<Vec<usize>>,
    cofaces: Vec<Vec<usize>>,
    labels: Vec<CellLabel>,
}

/// Serialized view of one cell.
#[derive(Clone, Debug, Serialize)]
pub struct CellRecord {
    pub vertices: Vec<Vec<i64>>,
    pub dim: usize,
    pub label: &'static str,
    pub maximal: bool,
}

/// Enumerate all open alcoved simplices `Δ_π^s(a)` in `tconv(M)`.
///
/// Every cell has a representative whose base `a` is its minimal vertex, so
/// `a` runs over the lattice points of the bounding box that lie in `P`, `π`
/// over `S_d` and `s` over the patterns with `s[0] = <`. A candidate is kept
/// when its relative-interior point is in `P`.
pub fn enumerate_triangulation(m: &TropMatrix) -> Result<CellComplex> {
    let rows = integer_rows(m)?;
    if rows.iter().flatten().any(|&x| x < 0) {
        return Err(Error::NotCanonical(
            "negative entry: the triangulation needs entries in Z>=0".into(),
        ));
    }
    let d = m.rows();
    let bbox = bounding_box(m)?;
    let scaled: Vec<Vec<Vec<i64>>> = (1..=d as i64 + 1)
        .map(|n| {
            rows.iter()
                .map(|r| r.iter().map(|x| x * n).collect())
                .collect()
        })
        .collect();
    let bases: Vec<Vec<i64>> = bbox
        .iter()
        .map(|&(lo, hi)| lo..=hi)
        .multi_cartesian_product()
        .filter(|a| contains_i64(&rows, a))
        .collect();
    let perms: Vec<Vec<usize>> = (0..d).permutations(d).collect();
    let patterns = canonical_patterns(d);
    let mut vertex_sets: Vec<Vec<Vec<i64>>> = bases
        .par_iter()
        .flat_map_iter(|a| {
            let mut found: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
            for pi in &perms {
                for s in &patterns {
                    let cell = AlcovedSimplex::new(a.clone(), pi.clone(), s.clone())
                        .expect("valid by construction");
                    if found.contains(cell.vertices()) {
                        continue;
                    }
                    let (sum, n) = cell.interior_numerators();
                    if contains_i64(&scaled[n as usize - 1], &sum) {
                        found.insert(cell.vertices().to_vec());
                    }
                }
            }
            found.into_iter()
        })
        .collect();
    vertex_sets.sort();
    vertex_sets.dedup();
    let cells = vertex_sets
        .into_iter()
        .map(AlcovedSimplex::from_vertices)
        .collect::<Result<Vec<_>>>()?;
    Ok(CellComplex::from_cells(m.clone(), d, cells))
}

impl CellComplex {
    /// Builds face relations and labels for a set of cells closed under faces.
    pub fn from_cells(generators: TropMatrix, d: usize, mut cells: Vec<AlcovedSimplex>) -> Self {
        cells.sort_by(|x, y| x.vertices().cmp(y.vertices()));
        let index: HashMap<Vec<Vec<i64>>, usize> = cells
            .iter()
            .enumerate()
            .map(|(k, c)| (c.vertices().to_vec(), k))
            .collect();
        let mut faces = vec![Vec::new(); cells.len()];
        let mut cofaces = vec![Vec::new(); cells.len()];
        for (k, c) in cells.iter().enumerate() {
            let n = c.vertices().len();
            for size in 1..n {
                for sub in c.vertices().iter().cloned().combinations(size) {
                    if let Some(&f) = index.get(&sub) {
                        faces[k].push(f);
                        cofaces[f].push(k);
                    }
                }
            }
        }
        let mut complex = CellComplex {
            d,
            generators,
            cells,
            index,
            faces,
            cofaces,
            labels: Vec::new(),
        };
        complex.labels = complex.compute_labels();
        complex
    }

    fn compute_labels(&self) -> Vec<CellLabel> {
        let n = self.cells.len();
        let mut boundary = vec![false; n];
        for k in 0..n {
            if self.cells[k].dim() < self.d && self.top_cofaces(k) == 0 {
                boundary[k] = true;
            }
            if self.d >= 1 && self.cells[k].dim() == self.d - 1 && self.top_cofaces(k) != 2 {
                boundary[k] = true;
                for &f in &self.faces[k] {
                    boundary[f] = true;
                }
            }
        }
        (0..n)
            .map(|k| CellLabel {
                maximal: self.cofaces[k].is_empty(),
                boundary: boundary[k],
            })
            .collect()
    }

    pub fn ambient_dim(&self) -> usize {
        self.d
    }

    pub fn generators(&self) -> &TropMatrix {
        &self.generators
    }

    pub fn cells(&self) -> &[AlcovedSimplex] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn label(&self, k: usize) -> CellLabel {
        self.labels[k]
    }

    pub fn find(&self, vertices: &[Vec<i64>]) -> Option<usize> {
        let mut key = vertices.to_vec();
        key.sort();
        self.index.get(&key).copied()
    }

    /// Indices of the proper faces of cell `k`.
    pub fn faces(&self, k: usize) -> &[usize] {
        &self.faces[k]
    }

    /// Indices of the cells having cell `k` as a proper face.
    pub fn cofaces(&self, k: usize) -> &[usize] {
        &self.cofaces[k]
    }

    /// Number of full-dimensional cells having cell `k` as a face.
    pub fn top_cofaces(&self, k: usize) -> usize {
        self.cofaces[k]
            .iter()
            .filter(|&&c| self.cells[c].dim() == self.d)
            .count()
    }

    /// Weight `δ ∈ {1, 1/2, 0}` of a `(d−1)`-cell: `1, 1/2, 0` for `0, 1, ≥ 2`
    /// full-dimensional cofaces.
    pub fn facet_weight(&self, k: usize) -> (u32, u32) {
        match self.top_cofaces(k) {
            0 => (1, 1),
            1 => (1, 2),
            _ => (0, 1),
        }
    }

    /// Indices of `Tr_i`: every cell of dimension `≥ i` and all their faces.
    /// `Tr_1` is all of `P`, including the case where `P` is a single point.
    pub fn trunk(&self, i: usize) -> Result<Vec<usize>> {
        if i < 1 || i > self.d {
            return Err(Error::OutOfRange {
                index: i,
                lo: 1,
                hi: self.d,
            });
        }
        let mut keep = vec![false; self.cells.len()];
        for (k, c) in self.cells.iter().enumerate() {
            if c.dim() >= i || i == 1 {
                keep[k] = true;
                for &f in &self.faces[k] {
                    keep[f] = true;
                }
            }
        }
        Ok((0..self.cells.len()).filter(|&k| keep[k]).collect())
    }

    /// Closure vertices of `Tr_i` (0-cells of the trunk).
    pub fn trunk_vertices(&self, i: usize) -> Result<Vec<Vec<i64>>> {
        Ok(self
            .trunk(i)?
            .into_iter()
            .filter(|&k| self.cells[k].dim() == 0)
            .map(|k| self.cells[k].a.clone())
            .collect())
    }

    /// Cells of dimension `≥ i` (any dimension for `i = 1`) that are not
    /// proper faces of other cells; their closures cover `Tr_i`.
    pub fn trunk_maximal_cells(&self, i: usize) -> Result<Vec<usize>> {
        if i < 1 || i > self.d {
            return Err(Error::OutOfRange {
                index: i,
                lo: 1,
                hi: self.d,
            });
        }
        Ok((0..self.cells.len())
            .filter(|&k| (self.cells[k].dim() >= i || i == 1) && self.cofaces[k].is_empty())
            .collect())
    }

    /// Every cell lies in the closure of a full-dimensional cell.
    pub fn is_pure(&self) -> bool {
        !self.cells.is_empty()
            && (0..self.cells.len())
                .all(|k| self.cells[k].dim() == self.d || self.top_cofaces(k) > 0)
    }

    pub fn records(&self) -> Vec<CellRecord> {
        self.cells
            .iter()
            .zip(&self.labels)
            .map(|(c, l)| CellRecord {
                vertices: c.vertices().to_vec(),
                dim: c.dim(),
                label: if l.boundary { "boundary" } else { "interior" },
                maximal: l.maximal,
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::tropical::{contains, Rational, TropScalar};

    #[test]
    fn boxes() {
        assert_eq!(
            bounding_box(&fixtures::fix_l(4)).unwrap(),
            vec![(0, 3), (0, 3)]
        );
        assert_eq!(
            bounding_box(&fixtures::fix_tri(3, 1)).unwrap(),
            vec![(2, 4), (0, 2)]
        );
        let c = TropMatrix::from_i64_rows(&[[5], [7]]).unwrap();
        assert_eq!(bounding_box(&c).unwrap(), vec![(5, 5), (7, 7)]);
        assert!(bounding_box(&fixtures::fix_cube(2)).is_err());
    }

    #[test]
    fn single_point() {
        let c = TropMatrix::from_i64_rows(&[[5], [7]]).unwrap();
        let t = enumerate_triangulation(&c).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.cells()[0].vertices(), &[vec![5, 7]]);
    }

    #[test]
    fn l_shape() {
        let t = enumerate_triangulation(&fixtures::fix_l(4)).unwrap();
        let tops: Vec<_> = t.cells().iter().filter(|c| c.dim() == 2).collect();
        assert_eq!(tops.len(), 1);
        assert_eq!(tops[0].vertices(), &[vec![0, 0], vec![0, 1], vec![1, 1]]);
        // Triangle (7 cells) plus the diagonal tail (1,1)..(3,3): 2 vertices, 2 edges.
        assert_eq!(t.len(), 11);
        assert!(!t.is_pure());
    }

    #[test]
    fn triangle_and_tentacle() {
        let t = enumerate_triangulation(&fixtures::fix_tri(3, 0)).unwrap();
        let top: Vec<_> = t.cells().iter().filter(|c| c.dim() == 2).collect();
        assert_eq!(top.len(), 1);
        assert_eq!(top[0].vertices(), &[vec![2, 0], vec![3, 0], vec![3, 1]]);
        assert!(t.is_pure());
        let edge = t.find(&[vec![2, 0], vec![3, 1]]).unwrap();
        assert!(t.label(edge).boundary);
        assert_eq!(t.facet_weight(edge), (1, 2));

        let t = enumerate_triangulation(&fixtures::fix_tri(3, 1)).unwrap();
        let tr2 = t.trunk(2).unwrap();
        let covered: Vec<Vec<Vec<i64>>> = tr2
            .iter()
            .map(|&k| t.cells()[k].vertices().to_vec())
            .collect();
        assert!(covered.iter().all(|v| v.iter().all(|p| p[0] <= 3)));
        assert_eq!(tr2.len(), 7);
        assert!(!t.is_pure());
    }

    #[test]
    fn four_dimensional_trunks() {
        let t = enumerate_triangulation(&fixtures::fix_4d()).unwrap();
        assert_eq!(t.cells().iter().filter(|c| c.dim() > 2).count(), 0);
        let tops: Vec<_> = t.cells().iter().filter(|c| c.dim() == 2).collect();
        assert_eq!(tops.len(), 4);
        // Two unit squares, each cut by its diagonal into two triangles.
        assert_eq!(t.trunk(2).unwrap().len(), 2 * (4 + 5 + 2));
        let t1 = t.trunk(1).unwrap();
        assert_eq!(t1.len(), t.len());
    }

    #[test]
    fn cells_partition_samples() {
        let m = fixtures::fix_tri(3, 1);
        let t = enumerate_triangulation(&m).unwrap();
        for c in t.cells() {
            let p: Vec<TropScalar> = c
                .relative_interior_point()
                .into_iter()
                .map(TropScalar::Finite)
                .collect();
            assert!(contains(&m, &p).unwrap());
        }
        let pts: BTreeSet<Vec<Rational>> = t
            .cells()
            .iter()
            .map(|c| c.relative_interior_point())
            .collect();
        assert_eq!(pts.len(), t.len());
    }
}
