//! The tropical Ehrhart polynomial `k ↦ #((k ⊙ P) ∩ Γ_b^d)`, a polynomial in `b^k`.

use num_bigint::BigInt;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use super::cellwise::count_via_cells;
use super::counting::{count_tropical, LatticeSpec};
use super::polynomial::{degree, evaluate, interpolate};
use crate::cells::CellComplex;
use crate::error::{Error, Result};
use crate::tropical::{format_rational, Rational, TropMatrix};

/// Coefficients `c_0..c_d` of `Σ c_i^b (b^k)^i`, together with the counts they
/// were recovered from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalEhrhartPolynomial {
    pub b: u32,
    pub coeffs: Vec<Rational>,
    /// `(k, #((k ⊙ P) ∩ Γ_b^d))` pairs backing the coefficients.
    pub counts: Vec<(u32, u128)>,
}

impl TropicalEhrhartPolynomial {
    /// Value of the polynomial at the dilation `k`.
    pub fn evaluate(&self, k: u32) -> Rational {
        let x = Rational::from_integer(BigInt::from(self.b).pow(k));
        evaluate(&self.coeffs, &x)
    }

    pub fn degree(&self) -> Option<usize> {
        degree(&self.coeffs)
    }

    pub fn coefficient(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }
}

impl Serialize for TropicalEhrhartPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Count {
            k: u32,
            value: u128,
        }
        let coeffs: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        let counts: Vec<Count> = self
            .counts
            .iter()
            .map(|&(k, value)| Count { k, value })
            .collect();
        let mut st = s.serialize_struct("TropicalEhrhartPolynomial", 3)?;
        st.serialize_field("b", &self.b)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.serialize_field("counts", &counts)?;
        st.end()
    }
}

fn from_counts(b: u32, counts: Vec<(u32, u128)>) -> Result<TropicalEhrhartPolynomial> {
    let xs: Vec<Rational> = counts
        .iter()
        .map(|&(k, _)| Rational::from_integer(BigInt::from(b).pow(k)))
        .collect();
    let ys: Vec<Rational> = counts
        .iter()
        .map(|&(_, n)| Rational::from_integer(BigInt::from(n)))
        .collect();
    Ok(TropicalEhrhartPolynomial {
        b,
        coeffs: interpolate(&xs, &ys)?,
        counts,
    })
}

/// Checks the prediction at `k = d + 1` against `count`, unless the count
/// exceeds the guard.
fn verify_next(
    poly: &mut TropicalEhrhartPolynomial,
    d: usize,
    count: impl FnOnce(u32) -> Result<u128>,
) -> Result<bool> {
    let k = d as u32 + 1;
    match count(k) {
        Ok(n) => {
            if poly.evaluate(k) != Rational::from_integer(BigInt::from(n)) {
                return Err(Error::NotPolynomial(d));
            }
            poly.counts.push((k, n));
            Ok(true)
        }
        Err(Error::Guard { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Interpolates the counts for `k = 0..=d` (nodes `b^0..b^d`) from the
/// brute-force max-times enumeration, and checks `k = d + 1` when it fits the
/// guard. The returned flag tells whether that check ran.
pub fn tropical_ehrhart_poly(
    m: &TropMatrix,
    b: u32,
    guard: u64,
) -> Result<(TropicalEhrhartPolynomial, bool)> {
    LatticeSpec::new(b)?;
    let d = m.rows();
    let counts = (0..=d as u32)
        .map(|k| count_tropical(m, b, k, guard).map(|n| (k, n)))
        .collect::<Result<Vec<_>>>()?;
    let mut poly = from_counts(b, counts)?;
    let verified = verify_next(&mut poly, d, |k| count_tropical(m, b, k, guard))?;
    Ok((poly, verified))
}

/// Same as [`tropical_ehrhart_poly`] with the counts summed cell by cell.
pub fn tropical_ehrhart_poly_cells(
    complex: &CellComplex,
    b: u32,
    guard: u64,
) -> Result<(TropicalEhrhartPolynomial, bool)> {
    LatticeSpec::new(b)?;
    let d = complex.ambient_dim();
    let counts = (0..=d as u32)
        .map(|k| count_via_cells(complex, b, k, guard).map(|n| (k, n)))
        .collect::<Result<Vec<_>>>()?;
    let mut poly = from_counts(b, counts)?;
    let verified = verify_next(&mut poly, d, |k| count_via_cells(complex, b, k, guard))?;
    Ok((poly, verified))
}
