//! Alcoved simplices `Δ_π^s(a)`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tropical::Rational;

/// One comparison symbol of a pattern `s ∈ {=, <}^{d+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Strict,
    #[serde(rename = "=")]
    Equal,
}

impl Relation {
    pub fn symbol(self) -> char {
        match self {
            Relation::Strict => '<',
            Relation::Equal => '=',
        }
    }
}

/// The open simplex
/// `a + {0 ≺_{d+1} x_{π(d)} ≺_d … ≺_2 x_{π(1)} ≺_1 1}`, `≺_j = s[j−1]`.
///
/// Its closure has the vertices `a + e^π_[j]` (the first `j` coordinates in
/// `π`-order set to one) for every `j ∈ 0..=d` with `s[j] = <`, so its
/// dimension is the number of strict symbols minus one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlcovedSimplex {
    pub a: Vec<i64>,
    pub pi: Vec<usize>,
    pub s: Vec<Relation>,
    vertices: Vec<Vec<i64>>,
}

impl AlcovedSimplex {
    pub fn new(a: Vec<i64>, pi: Vec<usize>, s: Vec<Relation>) -> Result<Self> {
        let d = a.len();
        if pi.len() != d || s.len() != d + 1 {
            return Err(Error::Dimension(format!(
                "alcoved simplex with |a| = {d}, |π| = {}, |s| = {}",
                pi.len(),
                s.len()
            )));
        }
        let mut seen = vec![false; d];
        for &p in &pi {
            if p >= d || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Invalid(format!("{pi:?} is not a permutation")));
            }
        }
        if !s.contains(&Relation::Strict) {
            return Err(Error::Invalid(
                "a pattern without '<' describes the empty set".into(),
            ));
        }
        let vertices = closure_vertices(&a, &pi, &s);
        Ok(AlcovedSimplex { a, pi, s, vertices })
    }

    /// The canonical representative of the simplex with the given closure
    /// vertices: `a` is the coordinatewise minimal vertex, `π` lists
    /// coordinates by the step at which they switch on (ties ascending) and
    /// `s[0] = <`.
    pub fn from_vertices(mut vertices: Vec<Vec<i64>>) -> Result<Self> {
        vertices.sort_by_key(|v| v.iter().sum::<i64>());
        let first = vertices
            .first()
            .ok_or_else(|| Error::Invalid("no vertices".into()))?;
        let d = first.len();
        let a = first.clone();
        let mut pi = Vec::with_capacity(d);
        let mut steps = vec![0usize];
        for w in vertices.windows(2) {
            let mut block: Vec<usize> = Vec::new();
            for i in 0..d {
                match w[1][i] - w[0][i] {
                    0 => {}
                    1 => block.push(i),
                    _ => {
                        return Err(Error::Invalid(format!(
                            "{:?} is not an alcoved chain",
                            vertices
                        )))
                    }
                }
            }
            if block.is_empty() || block.iter().any(|i| pi.contains(i)) {
                return Err(Error::Invalid(format!(
                    "{:?} is not an alcoved chain",
                    vertices
                )));
            }
            pi.extend(block);
            steps.push(pi.len());
        }
        pi.extend((0..d).filter(|i| !pi.contains(i)).collect::<Vec<_>>());
        let s = (0..=d)
            .map(|j| {
                if steps.contains(&j) {
                    Relation::Strict
                } else {
                    Relation::Equal
                }
            })
            .collect();
        AlcovedSimplex::new(a, pi, s)
    }

    pub fn ambient_dim(&self) -> usize {
        self.a.len()
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Closure vertices in lexicographic order.
    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    /// `j` values with `s[j] = <` (the kept prefix lengths).
    pub fn kept_steps(&self) -> Vec<usize> {
        (0..self.s.len())
            .filter(|&j| self.s[j] == Relation::Strict)
            .collect()
    }

    /// Mean of the closure vertices, which lies in the open simplex.
    pub fn relative_interior_point(&self) -> Vec<Rational> {
        let (sum, n) = self.interior_numerators();
        sum.into_iter()
            .map(|x| Rational::new(BigInt::from(x), BigInt::from(n)))
            .collect()
    }

    /// `(Σ vertices, number of vertices)`, the interior point before division.
    pub fn interior_numerators(&self) -> (Vec<i64>, i64) {
        let d = self.ambient_dim();
        let mut sum = vec![0i64; d];
        for v in &self.vertices {
            for (s, x) in sum.iter_mut().zip(v) {
                *s += x;
            }
        }
        (sum, self.vertices.len() as i64)
    }

    /// `true` if the closure of `self` is a face of the closure of `other`.
    pub fn is_face_of(&self, other: &AlcovedSimplex) -> bool {
        self.vertices
            .iter()
            .all(|v| other.vertices.binary_search(v).is_ok())
    }

    pub fn pattern_string(&self) -> String {
        self.s.iter().map(|r| r.symbol()).collect()
    }
}

fn closure_vertices(a: &[i64], pi: &[usize], s: &[Relation]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut v = a.to_vec();
    for j in 0..s.len() {
        if j > 0 {
            v[pi[j - 1]] += 1;
        }
        if s[j] == Relation::Strict {
            out.push(v.clone());
        }
    }
    out.sort();
    out
}

impl fmt::Display for AlcovedSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ_{:?}^{}({:?})", self.pi, self.pattern_string(), self.a)
    }
}

/// Every pattern `s` with `s[0] = <` in dimension `d`.
pub fn canonical_patterns(d: usize) -> Vec<Vec<Relation>> {
    (0u32..(1 << d))
        .map(|mask| {
            std::iter::once(Relation::Strict)
                .chain((0..d).map(|j| {
                    if mask >> j & 1 == 1 {
                        Relation::Strict
                    } else {
                        Relation::Equal
                    }
                }))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropical::frac;
    use Relation::{Equal as E, Strict as S};

    #[test]
    fn vertices_and_dimension() {
        let full = AlcovedSimplex::new(vec![0, 0], vec![0, 1], vec![S, S, S]).unwrap();
        assert_eq!(full.vertices(), &[vec![0, 0], vec![1, 0], vec![1, 1]]);
        assert_eq!(full.dim(), 2);
        assert_eq!(full.relative_interior_point(), vec![frac(2, 3), frac(1, 3)]);
        let diag = AlcovedSimplex::new(vec![0, 0], vec![0, 1], vec![S, E, S]).unwrap();
        assert_eq!(diag.vertices(), &[vec![0, 0], vec![1, 1]]);
        assert_eq!(diag.relative_interior_point(), vec![frac(1, 2), frac(1, 2)]);
        let point = AlcovedSimplex::new(vec![3, 4], vec![1, 0], vec![S, E, E]).unwrap();
        assert_eq!(point.dim(), 0);
        assert_eq!(
            point.relative_interior_point(),
            vec![frac(3, 1), frac(4, 1)]
        );
        assert!(AlcovedSimplex::new(vec![0], vec![0], vec![E, E]).is_err());
    }

    #[test]
    fn canonical_form_round_trip() {
        let x = AlcovedSimplex::new(vec![1, 2, 0], vec![2, 0, 1], vec![E, S, E, S]).unwrap();
        let c = AlcovedSimplex::from_vertices(x.vertices().to_vec()).unwrap();
        assert_eq!(c.vertices(), x.vertices());
        assert_eq!(c.s[0], S);
        assert_eq!(c.a, vec![1, 2, 1]);
        assert!(AlcovedSimplex::from_vertices(vec![vec![0, 0], vec![2, 0]]).is_err());
        assert!(AlcovedSimplex::from_vertices(vec![vec![0, 1], vec![1, 0]]).is_err());
    }

    #[test]
    fn faces() {
        let full = AlcovedSimplex::new(vec![0, 0], vec![0, 1], vec![S, S, S]).unwrap();
        let edge = AlcovedSimplex::from_vertices(vec![vec![0, 0], vec![1, 1]]).unwrap();
        assert!(edge.is_face_of(&full));
        assert!(!full.is_face_of(&edge));
        assert_eq!(canonical_patterns(2).len(), 4);
    }
}
