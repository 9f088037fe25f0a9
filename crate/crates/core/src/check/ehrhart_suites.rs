use num_bigint::BigInt;
use rand::Rng;

use super::gen;
use super::Ctx;
use crate::cells::enumerate_triangulation;
use crate::ehrhart::{
    c_d_direct, c_dminus1_direct, coeffs_via_formula, count_tropical, count_via_cells,
    degree_bound, log_of, tropical_ehrhart_poly, DEFAULT_GUARD,
};
use crate::error::Result;
use crate::linalg::tminor;
use crate::tropical::{rat, Rational, TropMatrix};
use crate::volumes::tlvol_triangulation;

/// `tconv{l, l + (u_i − l_i) e_i}`, the box `[l, u]`.
fn box_matrix(l: &[i64], u: &[i64]) -> TropMatrix {
    let d = l.len();
    let rows: Vec<Vec<i64>> = (0..d)
        .map(|r| {
            let mut row = vec![l[r]];
            row.extend((0..d).map(|c| if c == r { u[r] } else { l[r] }));
            row
        })
        .collect();
    TropMatrix::from_i64_rows(&rows).expect("non-empty")
}

fn random_box(ctx: &mut Ctx, d: usize, hi: i64) -> (Vec<i64>, Vec<i64>) {
    let l: Vec<i64> = (0..d).map(|_| ctx.rng.gen_range(0..=hi - 1)).collect();
    let u: Vec<i64> = l.iter().map(|&x| ctx.rng.gen_range(x..=hi)).collect();
    (l, u)
}

fn shifted(m: &TropMatrix, lambda: i64) -> TropMatrix {
    m.map(|x| x.shift(&rat(lambda)))
}

fn b_pow(b: u32, e: usize) -> Rational {
    Rational::from_integer(BigInt::from(b).pow(e as u32))
}

pub fn oracle(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.cases {
        let m = gen::small_canonical(&mut ctx.rng);
        let d = m.rows();
        let t = enumerate_triangulation(&m)?;
        let (poly, verified) = tropical_ehrhart_poly(&m, 2, DEFAULT_GUARD)?;
        for k in 0..=d as u32 {
            let brute = count_tropical(&m, 2, k, DEFAULT_GUARD)?;
            let cells = count_via_cells(&t, 2, k, DEFAULT_GUARD)?;
            ctx.check_eq(&cells, &brute, || format!("cell count at k = {k} for {m}"));
            ctx.check_eq(
                &poly.evaluate(k),
                &Rational::from_integer(BigInt::from(brute)),
                || format!("polynomial at k = {k} for {m}"),
            );
        }
        if !verified {
            let k = d as u32 + 1;
            let cells = count_via_cells(&t, 2, k, DEFAULT_GUARD)?;
            ctx.check_eq(
                &poly.evaluate(k),
                &Rational::from_integer(BigInt::from(cells)),
                || format!("polynomial prediction at k = {k} for {m}"),
            );
        }
        let formula = coeffs_via_formula(&t, 2, DEFAULT_GUARD)?;
        ctx.check_eq(&formula.coeffs, &poly.coeffs, || {
            format!("coefficient formula for {m}")
        });
    }
    Ok(())
}

pub fn properties(ctx: &mut Ctx) -> Result<()> {
    for case in 0..ctx.cases {
        let m = gen::small_canonical(&mut ctx.rng);
        let d = m.rows();
        let t = enumerate_triangulation(&m)?;
        for b in [2u32, 3] {
            let base = coeffs_via_formula(&t, b, DEFAULT_GUARD)?;
            // Homogeneity: c_i(λ ⊙ P) = b^{λ i} c_i(P).
            for lambda in [1i64, 2] {
                let moved = enumerate_triangulation(&shifted(&m, lambda))?;
                let c = coeffs_via_formula(&moved, b, DEFAULT_GUARD)?;
                for i in 0..=d {
                    let want = base.coefficient(i) * b_pow(b, lambda as usize * i);
                    ctx.check_eq(&c.coefficient(i), &want, || {
                        format!("homogeneity λ = {lambda}, i = {i}, b = {b} for {m}")
                    });
                }
            }
            let cd = c_d_direct(&t, b);
            ctx.check_eq(&cd, &base.coefficient(d), || {
                format!("leading coefficient at b = {b} for {m}")
            });
            ctx.check_eq(&c_dminus1_direct(&t, b), &base.coefficient(d - 1), || {
                format!("second coefficient at b = {b} for {m}")
            });
        }
        let (poly, _) = tropical_ehrhart_poly(&m, 2, DEFAULT_GUARD)?;
        ctx.check_eq(&c_d_direct(&t, 2), &poly.coefficient(d), || {
            format!("leading coefficient by interpolation for {m}")
        });
        let log = log_of(degree_bound(&m), |b| Ok(c_d_direct(&t, b)))?;
        ctx.check_eq(&log, &tlvol_triangulation(&t).0, || {
            format!("Log c_d = tlvol for {m}")
        });

        // Valuation on a box split along one coordinate.
        let d = 1 + case % 3;
        let (l, u) = random_box(ctx, d, 3);
        let Some(axis) = (0..d).find(|&i| u[i] - l[i] >= 2) else {
            continue;
        };
        let cut = ctx.rng.gen_range(l[axis] + 1..u[axis]);
        let (mut u1, mut l2) = (u.clone(), l.clone());
        u1[axis] = cut;
        l2[axis] = cut;
        let mut lo = l.clone();
        lo[axis] = cut;
        let mut hi = u.clone();
        hi[axis] = cut;
        let b = ctx.rng.gen_range(2..=3u32);
        let coeffs = |l: &[i64], u: &[i64]| -> Result<Vec<Rational>> {
            let t = enumerate_triangulation(&box_matrix(l, u))?;
            let c = coeffs_via_formula(&t, b, DEFAULT_GUARD)?;
            Ok((0..=d).map(|i| c.coefficient(i)).collect())
        };
        let whole = coeffs(&l, &u)?;
        let left = coeffs(&l, &u1)?;
        let right = coeffs(&l2, &u)?;
        let middle = coeffs(&lo, &hi)?;
        for i in 0..=d {
            let lhs = &whole[i] + &middle[i];
            let rhs = &left[i] + &right[i];
            ctx.check_eq(&lhs, &rhs, || {
                format!("valuation of [{l:?}, {u:?}] cut at x_{axis} = {cut}, i = {i}, b = {b}")
            });
        }
    }
    Ok(())
}

/// Searches for `Log c_i^b(P) > tminor_i(M)`; findings are warnings.
pub fn conjecture(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.cases {
        let d = ctx.rng.gen_range(1..=3);
        let cols = ctx.rng.gen_range(1..=4);
        let m = gen::int_matrix(&mut ctx.rng, d, cols, 0, 2);
        let t = enumerate_triangulation(&m)?;
        let bound = degree_bound(&m);
        for i in 1..=d.min(cols) {
            let log = log_of(bound, |b| {
                Ok(coeffs_via_formula(&t, b, DEFAULT_GUARD)?.coefficient(i))
            })?;
            let minor = tminor(&m, i)?.value;
            if log > minor {
                ctx.warn(format!("Log c_{i} = {log} > tminor_{i} = {minor} for {m}"));
            }
        }
    }
    Ok(())
}
