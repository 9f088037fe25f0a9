//! Counting and Ehrhart data cell by cell over the alcoved triangulation.
//!
//! The points of `Γ_b^d` in the open cell `k ⊙ Δ_π^s(a)` correspond, via
//! `y_i = b^{x_i} − b^{a_i+k}`, to the lattice points of
//! `(b^{k+1} − b^k) · D_b^a · Δ_π^s(0)` with `D_b^a = diag(b^{a_i})`; the map
//! is monotone in every coordinate, so the defining chain is preserved.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::chain::{count_chain, ChainRel};
use super::polynomial::{evaluate, interpolate};
use super::TropicalEhrhartPolynomial;
use crate::cells::{AlcovedSimplex, CellComplex, Relation};
use crate::error::{Error, Result};
use crate::tropical::Rational;

/// Shape of a cell up to translation by a multiple of `(1, …, 1)`: `(a − min a, π, s)`.
type ShapeKey = (Vec<i64>, Vec<usize>, Vec<Relation>);

/// Classical Ehrhart polynomial `c_0 + c_1 t + … + c_m t^m` of a lattice
/// polytope of dimension `m`; `c_m` is its relative volume.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicalEhrhartPolynomial {
    pub dim: usize,
    #[serde(with = "crate::tropical::scalar::rational_serde::vec")]
    pub coeffs: Vec<Rational>,
}

impl ClassicalEhrhartPolynomial {
    pub fn leading(&self) -> &Rational {
        &self.coeffs[self.dim]
    }

    pub fn evaluate(&self, t: u64) -> Rational {
        evaluate(&self.coeffs, &Rational::from_integer(BigInt::from(t)))
    }
}

fn pow_u128(b: u32, e: i64) -> Result<u128> {
    let e = u32::try_from(e)
        .map_err(|_| Error::NotCanonical(format!("entry {e}: exponents must lie in Z>=0")))?;
    u128::from(b).checked_pow(e).ok_or(Error::Guard {
        needed: u128::MAX,
        guard: u64::MAX,
    })
}

fn scaled_weights(cell: &AlcovedSimplex, b: u32, t: u128) -> Result<Vec<u128>> {
    cell.a
        .iter()
        .map(|&ai| {
            pow_u128(b, ai)?.checked_mul(t).ok_or(Error::Guard {
                needed: u128::MAX,
                guard: u64::MAX,
            })
        })
        .collect()
}

/// `#((b^{k+1} − b^k) · D_b^a · Δ_π^s(0) ∩ Z^d)`, the number of `Γ_b^d`
/// points in the open cell `k ⊙ Δ_π^s(a)`.
pub fn open_cell_count(cell: &AlcovedSimplex, b: u32, k: u32, guard: u64) -> Result<u128> {
    let bk = pow_u128(b, i64::from(k))?;
    let t = bk * (u128::from(b) - 1);
    let rel: Vec<ChainRel> = cell
        .s
        .iter()
        .map(|r| match r {
            Relation::Strict => ChainRel::Less,
            Relation::Equal => ChainRel::Equal,
        })
        .collect();
    count_chain(&scaled_weights(cell, b, t)?, &cell.pi, &rel, guard)
}

/// `#(t · D_b^a · cl(Δ_π^s(0)) ∩ Z^d)`.
pub fn closed_scaled_count(cell: &AlcovedSimplex, b: u32, t: u64, guard: u64) -> Result<u128> {
    if t == 0 {
        return Ok(1);
    }
    let rel: Vec<ChainRel> = cell
        .s
        .iter()
        .map(|r| match r {
            Relation::Strict => ChainRel::LessEq,
            Relation::Equal => ChainRel::Equal,
        })
        .collect();
    count_chain(
        &scaled_weights(cell, b, u128::from(t))?,
        &cell.pi,
        &rel,
        guard,
    )
}

/// Ehrhart polynomial of the closed lattice simplex `D_b^a · cl(Δ_π^s(0))`,
/// interpolated from its dilates `t = 0..=dim`.
pub fn classical_ehrhart_scaled_simplex(
    cell: &AlcovedSimplex,
    b: u32,
    guard: u64,
) -> Result<ClassicalEhrhartPolynomial> {
    let m = cell.dim();
    let xs: Vec<Rational> = (0..=m as i64)
        .map(|t| Rational::from_integer(t.into()))
        .collect();
    let ys = (0..=m as u64)
        .map(|t| {
            closed_scaled_count(cell, b, t, guard).map(|n| Rational::from_integer(BigInt::from(n)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassicalEhrhartPolynomial {
        dim: m,
        coeffs: interpolate(&xs, &ys)?,
    })
}

/// Relative volume of `D_b^a · cl(Δ_π^s(0))`.
///
/// Consecutive vertices differ by `D_b^a` applied to a 0/1 block vector; the
/// blocks are disjoint, so the gcd of the maximal minors of the edge matrix is
/// `∏_blocks b^{min a}`, and the relative volume is that over `m!`.
pub fn rvol_scaled_simplex(cell: &AlcovedSimplex, b: u32) -> Rational {
    let steps = cell.kept_steps();
    let mut num = BigInt::one();
    for w in steps.windows(2) {
        let min_a = cell.pi[w[0]..w[1]]
            .iter()
            .map(|&i| cell.a[i])
            .min()
            .expect("non-empty block");
        num *= BigInt::from(b).pow(min_a as u32);
    }
    let fact: BigInt = (1..=steps.len().saturating_sub(1) as u64)
        .map(BigInt::from)
        .product();
    Rational::new(num, fact)
}

/// `Σ` over open cells of [`open_cell_count`]; equals the tropical count.
pub fn count_via_cells(complex: &CellComplex, b: u32, k: u32, guard: u64) -> Result<u128> {
    complex
        .cells()
        .iter()
        .map(|c| open_cell_count(c, b, k, guard))
        .sum()
}

fn signed_pow(b: u32, i: usize) -> Rational {
    Rational::from_integer(BigInt::from(b - 1).pow(i as u32))
}

/// Contribution `Σ_{i ≤ m} (−1)^{m−i} (b−1)^i c_i(cl) (b^k)^i` of every cell,
/// accumulated over the cells selected by `keep`.
fn formula_sum(
    complex: &CellComplex,
    b: u32,
    guard: u64,
    keep: impl Fn(usize) -> bool,
) -> Result<Vec<Rational>> {
    let d = complex.ambient_dim();
    let mut coeffs = vec![Rational::zero(); d + 1];
    let mut cache: HashMap<ShapeKey, ClassicalEhrhartPolynomial> = HashMap::new();
    for (k, cell) in complex.cells().iter().enumerate() {
        if !keep(k) {
            continue;
        }
        // The polynomial only depends on the shape, not the position, so
        // normalize `a` by its minimum.
        let shift = cell.a.iter().copied().min().unwrap_or(0);
        let rel_a: Vec<i64> = cell.a.iter().map(|x| x - shift).collect();
        let key = (rel_a.clone(), cell.pi.clone(), cell.s.clone());
        let poly = match cache.get(&key) {
            Some(p) => p.clone(),
            None => {
                let base = AlcovedSimplex::new(rel_a, cell.pi.clone(), cell.s.clone())?;
                let p = classical_ehrhart_scaled_simplex(&base, b, guard)?;
                cache.insert(key, p.clone());
                p
            }
        };
        let m = cell.dim();
        // Shifting `a` by `c` scales the simplex by `b^c`: c_i scales by b^{c i}.
        let scale = Rational::from_integer(BigInt::from(b).pow(shift as u32));
        let mut factor = Rational::one();
        for i in 0..=m {
            let sign = if (m - i) % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            coeffs[i] += sign * signed_pow(b, i) * &poly.coeffs[i] * &factor;
            factor *= &scale;
        }
    }
    Ok(coeffs)
}

/// Tropical Ehrhart coefficients from the signed, weighted sum of classical
/// Ehrhart coefficients of the scaled closed cells.
pub fn coeffs_via_formula(
    complex: &CellComplex,
    b: u32,
    guard: u64,
) -> Result<TropicalEhrhartPolynomial> {
    Ok(TropicalEhrhartPolynomial {
        b,
        coeffs: formula_sum(complex, b, guard, |_| true)?,
        counts: Vec::new(),
    })
}

/// Coefficients of the counting polynomial of the interior `P°`: the same sum
/// restricted to cells off the boundary.
pub fn interior_coeffs(complex: &CellComplex, b: u32, guard: u64) -> Result<Vec<Rational>> {
    formula_sum(complex, b, guard, |k| !complex.label(k).boundary)
}

/// Checks `c_i^b(P°) = (−1)^{d−i} c_i^b(P)` for every `i`; requires a pure complex.
pub fn reciprocity_check(complex: &CellComplex, b: u32, guard: u64) -> Result<bool> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    let d = complex.ambient_dim();
    let all = formula_sum(complex, b, guard, |_| true)?;
    let inner = interior_coeffs(complex, b, guard)?;
    Ok((0..=d).all(|i| {
        let sign = if (d - i).is_multiple_of(2) {
            Rational::one()
        } else {
            -Rational::one()
        };
        inner[i] == sign * &all[i]
    }))
}

/// `c_d^b(P) = (b−1)^d Σ_{full cells} rvol(D_b^a Δ_π(0))`.
pub fn c_d_direct(complex: &CellComplex, b: u32) -> Rational {
    let d = complex.ambient_dim();
    complex
        .cells()
        .iter()
        .filter(|c| c.dim() == d)
        .map(|c| rvol_scaled_simplex(c, b))
        .sum::<Rational>()
        * signed_pow(b, d)
}

/// `c_{d−1}^b(P) = (b−1)^{d−1} Σ_{(d−1)-cells} δ · rvol`, with `δ = 1, 1/2, 0`
/// for cells with `0, 1, 2` full-dimensional cofaces.
pub fn c_dminus1_direct(complex: &CellComplex, b: u32) -> Rational {
    let d = complex.ambient_dim();
    if d == 0 {
        return Rational::zero();
    }
    let mut sum = Rational::zero();
    for (k, c) in complex.cells().iter().enumerate() {
        if c.dim() + 1 != d {
            continue;
        }
        let (n, q) = complex.facet_weight(k);
        if n == 0 {
            continue;
        }
        sum += rvol_scaled_simplex(c, b) * Rational::new(BigInt::from(n), BigInt::from(q));
    }
    sum * signed_pow(b, d - 1)
}
