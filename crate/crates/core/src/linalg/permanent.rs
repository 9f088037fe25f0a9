//! Brute-force permutation enumeration: second-best assignment, bideterminant,
//! non-singularity, sign-genericity and the permutation volume.

use std::fmt;

use serde::Serialize;

use crate::combinatorics::{signed_permutations, subsets};
use crate::error::{Error, Result};
use crate::tropical::{format_rational, Rational, TropMatrix, TropScalar};

/// Default largest matrix size for permutation enumeration.
pub const DEFAULT_BRUTE_BOUND: usize = 8;

/// The pair `(|A|^+, |A|^-)`: best even and best odd permutation values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bideterminant {
    pub plus: TropScalar,
    pub minus: TropScalar,
}

impl Bideterminant {
    pub fn tdet(&self) -> TropScalar {
        self.plus.oplus(&self.minus)
    }
}

/// Permutation volume of a square matrix: the gap between the best and the
/// second-best permutation, or `Unbounded` when only one permutation is finite.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum PermutationVolume {
    Gap(#[serde(with = "crate::tropical::scalar::rational_serde")] Rational),
    Unbounded,
}

impl fmt::Display for PermutationVolume {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermutationVolume::Gap(g) => f.write_str(&format_rational(g)),
            PermutationVolume::Unbounded => f.write_str("inf"),
        }
    }
}

/// Every permutation's tropical diagonal product, with its parity.
#[derive(Clone, Debug)]
pub struct PermutationTable {
    pub entries: Vec<(Vec<usize>, bool, TropScalar)>,
}

impl PermutationTable {
    pub fn new(a: &TropMatrix, bound: usize) -> Result<Self> {
        let n = a.rows();
        if a.cols() != n {
            return Err(Error::Dimension(format!(
                "expected a square matrix, got {}x{}",
                n,
                a.cols()
            )));
        }
        if n > bound {
            return Err(Error::SizeBound { size: n, bound });
        }
        let entries = signed_permutations(n)
            .into_iter()
            .map(|(p, even)| {
                let v = TropScalar::product(
                    p.iter()
                        .enumerate()
                        .map(|(i, &j)| a.get(i, j))
                        .collect::<Vec<_>>(),
                );
                (p, even, v)
            })
            .collect();
        Ok(PermutationTable { entries })
    }

    pub fn tdet(&self) -> TropScalar {
        TropScalar::sum(self.entries.iter().map(|e| &e.2))
    }

    /// Permutations attaining `tdet`; every permutation when `tdet = -inf`.
    pub fn maximizers(&self) -> Vec<&(Vec<usize>, bool, TropScalar)> {
        let best = self.tdet();
        self.entries.iter().filter(|e| e.2 == best).collect()
    }

    /// Best value over all permutations except the first maximizer.
    pub fn second(&self) -> TropScalar {
        let best = self.tdet();
        let skip = self.entries.iter().position(|e| e.2 == best);
        TropScalar::sum(
            self.entries
                .iter()
                .enumerate()
                .filter(|(k, _)| Some(*k) != skip)
                .map(|(_, e)| &e.2),
        )
    }

    pub fn bideterminant(&self) -> Bideterminant {
        Bideterminant {
            plus: TropScalar::sum(self.entries.iter().filter(|e| e.1).map(|e| &e.2)),
            minus: TropScalar::sum(self.entries.iter().filter(|e| !e.1).map(|e| &e.2)),
        }
    }
}

/// Configurable brute-force size bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteForce {
    pub bound: usize,
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce {
            bound: DEFAULT_BRUTE_BOUND,
        }
    }
}

impl BruteForce {
    pub fn table(&self, a: &TropMatrix) -> Result<PermutationTable> {
        PermutationTable::new(a, self.bound)
    }

    pub fn tdet(&self, a: &TropMatrix) -> Result<TropScalar> {
        Ok(self.table(a)?.tdet())
    }

    pub fn tdet_second(&self, a: &TropMatrix) -> Result<TropScalar> {
        Ok(self.table(a)?.second())
    }

    pub fn bideterminant(&self, a: &TropMatrix) -> Result<Bideterminant> {
        Ok(self.table(a)?.bideterminant())
    }

    /// Exactly one permutation attains a finite `tdet`.
    pub fn is_nonsingular(&self, a: &TropMatrix) -> Result<bool> {
        let t = self.table(a)?;
        Ok(t.tdet().is_finite() && t.maximizers().len() == 1)
    }

    pub fn tvol_square(&self, a: &TropMatrix) -> Result<PermutationVolume> {
        let t = self.table(a)?;
        match (t.tdet(), t.second()) {
            (TropScalar::NegInf, _) => Err(Error::SingularDeterminant),
            (_, TropScalar::NegInf) => Ok(PermutationVolume::Unbounded),
            (TropScalar::Finite(x), TropScalar::Finite(y)) => Ok(PermutationVolume::Gap(x - y)),
        }
    }

    /// Largest permutation volume over the `d`-column submatrices with a
    /// finite determinant.
    pub fn tvol_max_sub(&self, m: &TropMatrix) -> Result<PermutationVolume> {
        let d = m.rows();
        if m.cols() < d {
            return Err(Error::Dimension(format!(
                "need at least {d} columns, got {}",
                m.cols()
            )));
        }
        let mut best = None;
        for j in subsets(m.cols(), d) {
            match self.tvol_square(&m.select_columns(&j)) {
                Ok(v) => best = best.max(Some(v)),
                Err(Error::SingularDeterminant) => {}
                Err(e) => return Err(e),
            }
        }
        best.ok_or(Error::SingularDeterminant)
    }

    /// For every `d`-column subset `J`, all maximizers of `tdet(M_J)` share a
    /// sign (a `-inf` determinant counts as attained by every permutation).
    pub fn is_sign_generic(&self, m: &TropMatrix) -> Result<bool> {
        let d = m.rows();
        if m.cols() < d {
            return Err(Error::Dimension(format!(
                "need at least {d} columns, got {}",
                m.cols()
            )));
        }
        for j in subsets(m.cols(), d) {
            if !self.square_sign_generic(&m.select_columns(&j))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn square_sign_generic(&self, a: &TropMatrix) -> Result<bool> {
        let t = self.table(a)?;
        let maxs = t.maximizers();
        Ok(maxs.iter().all(|e| e.1 == maxs[0].1))
    }
}

pub fn tdet_brute(a: &TropMatrix) -> Result<TropScalar> {
    BruteForce::default().tdet(a)
}

pub fn tdet_second(a: &TropMatrix) -> Result<TropScalar> {
    BruteForce::default().tdet_second(a)
}

pub fn bideterminant(a: &TropMatrix) -> Result<Bideterminant> {
    BruteForce::default().bideterminant(a)
}

pub fn is_nonsingular(a: &TropMatrix) -> Result<bool> {
    BruteForce::default().is_nonsingular(a)
}

pub fn is_sign_generic(m: &TropMatrix) -> Result<bool> {
    BruteForce::default().is_sign_generic(m)
}

pub fn tvol_square(a: &TropMatrix) -> Result<PermutationVolume> {
    BruteForce::default().tvol_square(a)
}

pub fn tvol_max_sub(m: &TropMatrix) -> Result<PermutationVolume> {
    BruteForce::default().tvol_max_sub(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropical::rat;

    fn m(rows: &[&[i64]]) -> TropMatrix {
        TropMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn second_best() {
        assert_eq!(
            tdet_second(&TropMatrix::identity(2)).unwrap(),
            TropScalar::NegInf
        );
        assert_eq!(
            tdet_second(&m(&[&[0, 3], &[1, 3]])).unwrap(),
            TropScalar::int(3)
        );
        assert_eq!(
            tdet_second(&m(&[&[1, 1], &[1, 1]])).unwrap(),
            TropScalar::int(2)
        );
    }

    #[test]
    fn permutation_volume() {
        assert_eq!(
            tvol_square(&m(&[&[0, 3], &[1, 3]])).unwrap(),
            PermutationVolume::Gap(rat(1))
        );
        assert_eq!(
            tvol_square(&TropMatrix::identity(3)).unwrap(),
            PermutationVolume::Unbounded
        );
        let a = m(&[&[0, 3], &[1, 3]]);
        assert_eq!(tvol_max_sub(&a).unwrap(), tvol_square(&a).unwrap());
        let e = vec![
            TropScalar::NegInf,
            TropScalar::int(0),
            TropScalar::NegInf,
            TropScalar::NegInf,
        ];
        let s = TropMatrix::allowing_empty_columns(2, 2, e).unwrap();
        assert_eq!(tvol_square(&s), Err(Error::SingularDeterminant));
    }

    #[test]
    fn bideterminants() {
        let b = bideterminant(&TropMatrix::identity(2)).unwrap();
        assert_eq!(
            b,
            Bideterminant {
                plus: TropScalar::int(0),
                minus: TropScalar::NegInf
            }
        );
        let b = bideterminant(&m(&[&[0, 3], &[1, 3]])).unwrap();
        assert_eq!(
            (b.plus.clone(), b.minus.clone()),
            (TropScalar::int(3), TropScalar::int(4))
        );
        assert_eq!(b.tdet(), TropScalar::int(4));
    }

    #[test]
    fn singularity() {
        assert!(is_nonsingular(&TropMatrix::identity(3)).unwrap());
        assert!(!is_nonsingular(&m(&[&[0, 0], &[0, 0]])).unwrap());
        assert!(is_sign_generic(&TropMatrix::identity(3)).unwrap());
        assert!(!is_sign_generic(&m(&[&[0, 0], &[0, 0]])).unwrap());
        let big = TropMatrix::identity(9);
        assert_eq!(
            is_nonsingular(&big),
            Err(Error::SizeBound { size: 9, bound: 8 })
        );
    }
}
