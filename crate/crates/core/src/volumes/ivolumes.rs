//! Volumes read off the alcoved triangulation: `tlvol` and the upper and
//! lower barycentric `i`-volumes.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::lp::{lp_max_min_linear, sum_largest};
use crate::cells::{enumerate_triangulation, AlcovedSimplex, CellComplex};
use crate::error::{Error, Result};
use crate::tropical::{common_denominator, Rational, TropMatrix, TropScalar};

/// An `i`-volume together with a point of the trunk attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IVolume {
    pub i: usize,
    pub value: TropScalar,
    #[serde(with = "crate::tropical::scalar::rational_serde::option_vec")]
    pub witness: Option<Vec<Rational>>,
}

fn int_point(v: &[i64]) -> Vec<Rational> {
    v.iter()
        .map(|&x| Rational::from_integer(x.into()))
        .collect()
}

/// `max (Σ a_i + d)` over the full-dimensional alcoves `Δ_π(a)`; `-inf` when
/// there are none.
pub fn tlvol_triangulation(t: &CellComplex) -> (TropScalar, Option<AlcovedSimplex>) {
    let d = t.ambient_dim();
    t.cells()
        .iter()
        .filter(|c| c.dim() == d)
        .map(|c| (c.a.iter().sum::<i64>() + d as i64, c))
        .fold(None::<(i64, &AlcovedSimplex)>, |best, (v, c)| match best {
            Some((b, _)) if b >= v => best,
            _ => Some((v, c)),
        })
        .map_or((TropScalar::NegInf, None), |(v, c)| {
            (TropScalar::int(v), Some(c.clone()))
        })
}

/// Maximum over the vertices of `Tr_i` of the sum of the `i` largest coordinates.
pub fn tlvol_i_plus(t: &CellComplex, i: usize) -> Result<IVolume> {
    let best = t
        .trunk_vertices(i)?
        .into_iter()
        .map(|v| {
            let p = int_point(&v);
            (sum_largest(&p, i), p)
        })
        .fold(
            None::<(Rational, Vec<Rational>)>,
            |best, (v, p)| match best {
                Some((b, q)) if b >= v => Some((b, q)),
                _ => Some((v, p)),
            },
        );
    Ok(match best {
        None => IVolume {
            i,
            value: TropScalar::NegInf,
            witness: None,
        },
        Some((v, p)) => IVolume {
            i,
            value: TropScalar::Finite(v),
            witness: Some(p),
        },
    })
}

/// Maximum over the closed maximal cells of `Tr_i` of the largest possible
/// sum of the `i` smallest coordinates, each cell solved as an exact LP.
pub fn tlvol_i_minus(t: &CellComplex, i: usize) -> Result<IVolume> {
    let cells = t.trunk_maximal_cells(i)?;
    let sols = cells
        .par_iter()
        .map(|&k| {
            let verts: Vec<Vec<Rational>> = t.cells()[k]
                .vertices()
                .iter()
                .map(|v| int_point(v))
                .collect();
            lp_max_min_linear(&verts, i)
        })
        .collect::<Result<Vec<_>>>()?;
    let best = sols
        .into_iter()
        .fold(None::<super::lp::LpSolution>, |best, s| match best {
            Some(b) if b.value >= s.value => Some(b),
            _ => Some(s),
        });
    Ok(match best {
        None => IVolume {
            i,
            value: TropScalar::NegInf,
            witness: None,
        },
        Some(s) => IVolume {
            i,
            value: TropScalar::Finite(s.value),
            witness: Some(s.x),
        },
    })
}

/// The alcoved triangulation of `n · M + c` for a matrix with finite rational
/// entries, chosen so that the image is a canonical lattice matrix. Volumes
/// of `M` follow from `f_i(M) = (f_i(n · M + c) − i · c) / n`.
#[derive(Clone, Debug)]
pub struct LatticeEmbedding {
    pub complex: CellComplex,
    pub scale: BigInt,
    pub shift: BigInt,
}

impl LatticeEmbedding {
    /// Fails with [`Error::NotCanonical`] on `-inf` entries.
    pub fn new(m: &TropMatrix) -> Result<Self> {
        let (scaled, scale, shift) = Self::lattice_image(m)?;
        Ok(LatticeEmbedding {
            complex: enumerate_triangulation(&scaled)?,
            scale,
            shift,
        })
    }

    /// `(n · M + c, n, c)` with the least such `n` and `c ≥ 0`.
    pub fn lattice_image(m: &TropMatrix) -> Result<(TropMatrix, BigInt, BigInt)> {
        if m.entries().iter().any(TropScalar::is_neg_inf) {
            return Err(Error::NotCanonical(
                "entry -inf: volumes from the triangulation need finite entries".into(),
            ));
        }
        let n = common_denominator(m.entries());
        let nq = Rational::from_integer(n.clone());
        let min = m
            .entries()
            .iter()
            .filter_map(|x| x.finite())
            .map(|q| q * &nq)
            .min()
            .expect("non-empty");
        let c = if min.is_negative() {
            -min.to_integer()
        } else {
            BigInt::zero()
        };
        let cq = Rational::from_integer(c.clone());
        let scaled = m.map(|x| x.scale(&nq).shift(&cq));
        Ok((scaled, n, c))
    }

    pub fn is_identity(&self) -> bool {
        self.scale.is_one() && self.shift.is_zero()
    }

    fn unscale_value(&self, v: TropScalar, i: usize) -> TropScalar {
        let shift = Rational::from_integer(&self.shift * BigInt::from(i));
        v.minus(&shift)
            .scale(&Rational::new(BigInt::one(), self.scale.clone()))
    }

    fn unscale_point(&self, p: Vec<Rational>) -> Vec<Rational> {
        let c = Rational::from_integer(self.shift.clone());
        let n = Rational::from_integer(self.scale.clone());
        p.into_iter().map(|x| (x - &c) / &n).collect()
    }

    /// `tlvol` with the base point of a maximizing alcove (in original coordinates).
    pub fn tlvol(&self) -> (TropScalar, Option<Vec<Rational>>) {
        let d = self.complex.ambient_dim();
        let (v, cell) = tlvol_triangulation(&self.complex);
        (
            self.unscale_value(v, d),
            cell.map(|c| self.unscale_point(int_point(&c.a))),
        )
    }

    pub fn tlvol_i_plus(&self, i: usize) -> Result<IVolume> {
        let r = tlvol_i_plus(&self.complex, i)?;
        Ok(IVolume {
            i,
            value: self.unscale_value(r.value, i),
            witness: r.witness.map(|p| self.unscale_point(p)),
        })
    }

    pub fn tlvol_i_minus(&self, i: usize) -> Result<IVolume> {
        let r = tlvol_i_minus(&self.complex, i)?;
        Ok(IVolume {
            i,
            value: self.unscale_value(r.value, i),
            witness: r.witness.map(|p| self.unscale_point(p)),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::tropical::rat;

    #[test]
    fn tlvol_golden() {
        let t = enumerate_triangulation(&fixtures::fix_l(4)).unwrap();
        let (v, c) = tlvol_triangulation(&t);
        assert_eq!(v, TropScalar::int(2));
        assert_eq!(c.unwrap().a, vec![0, 0]);
        for k in 0..3 {
            let t = enumerate_triangulation(&fixtures::fix_tri(3, k)).unwrap();
            assert_eq!(tlvol_triangulation(&t).0, TropScalar::int(4));
        }
        let p = enumerate_triangulation(&TropMatrix::from_i64_rows(&[[1], [2]]).unwrap()).unwrap();
        assert_eq!(tlvol_triangulation(&p).0, TropScalar::NegInf);
    }

    #[test]
    fn four_dimensional_example() {
        let t = enumerate_triangulation(&fixtures::fix_4d()).unwrap();
        let p2 = tlvol_i_plus(&t, 2).unwrap();
        assert_eq!(p2.value, TropScalar::int(18));
        assert_eq!(tlvol_i_minus(&t, 2).unwrap().value, TropScalar::int(2));
        assert_eq!(tlvol_i_plus(&t, 1).unwrap().value, TropScalar::int(9));
        assert_eq!(tlvol_i_minus(&t, 1).unwrap().value, TropScalar::int(9));
        for i in [3, 4] {
            assert_eq!(tlvol_i_plus(&t, i).unwrap().value, TropScalar::NegInf);
            assert_eq!(tlvol_i_minus(&t, i).unwrap().value, TropScalar::NegInf);
        }
    }

    #[test]
    fn remark_triples() {
        for (l, k) in [(3, 0), (3, 1), (2, 2)] {
            let t = enumerate_triangulation(&fixtures::fix_tri(l, k)).unwrap();
            assert_eq!(tlvol_i_minus(&t, 1).unwrap().value, TropScalar::int(k + 1));
            assert_eq!(tlvol_i_plus(&t, 1).unwrap().value, TropScalar::int(k + l));
        }
    }

    #[test]
    fn top_volumes_agree_with_tlvol() {
        let t = enumerate_triangulation(&fixtures::fix_l(4)).unwrap();
        assert_eq!(tlvol_i_plus(&t, 2).unwrap().value, TropScalar::int(2));
        assert_eq!(tlvol_i_minus(&t, 2).unwrap().value, TropScalar::int(2));
    }

    #[test]
    fn embedding_of_negative_entries() {
        let e = LatticeEmbedding::new(&fixtures::fix_delta2()).unwrap();
        assert_eq!(e.shift, BigInt::from(1));
        let r = e.tlvol_i_minus(1).unwrap();
        assert_eq!(r.value, TropScalar::int(1));
        assert_eq!(e.tlvol().0, TropScalar::NegInf);
        let half = TropMatrix::from_rows(vec![
            vec![
                rat(0).into(),
                rat(0).into(),
                crate::tropical::frac(3, 2).into(),
            ],
            vec![
                rat(0).into(),
                rat(1).into(),
                crate::tropical::frac(3, 2).into(),
            ],
        ])
        .unwrap();
        let e = LatticeEmbedding::new(&half).unwrap();
        assert_eq!(e.scale, BigInt::from(2));
        assert!(LatticeEmbedding::new(&fixtures::fix_cube(2)).is_err());
    }
}
