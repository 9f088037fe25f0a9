use rand::Rng;

use super::gen::{self, Rng8};
use super::Ctx;
use crate::combinatorics::subsets;
use crate::error::Result;
use crate::tropical::{
    act_scalar, contains, d_tr, mat_vec, normalize, residuate, Rational, TropMatrix, TropScalar,
};

fn random_point(rng: &mut Rng8, d: usize, n: i64) -> Vec<TropScalar> {
    (0..d)
        .map(|_| TropScalar::Finite(gen::small_rational(rng, n)))
        .collect()
}

fn shift_point(x: &[TropScalar], c: &Rational) -> Vec<TropScalar> {
    x.iter().map(|v| v.shift(c)).collect()
}

pub fn membership(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.cases {
        let d = ctx.rng.gen_range(1..=3);
        let m = ctx.rng.gen_range(1..=4);
        let p_inf = if ctx.rng.gen_bool(0.3) { 0.2 } else { 0.0 };
        let mut mat = gen::rect_with_inf(&mut ctx.rng, d, m, -3, 3, p_inf);
        if (0..m).any(|j| mat.is_empty_column(j)) {
            mat = gen::int_matrix(&mut ctx.rng, d, m, -3, 3);
        }
        let mat = TropMatrix::from_rows(mat.to_rows())?;
        // Points generated from coefficients with max 0 are inside.
        let gamma = gen::tropical_coefficients(&mut ctx.rng, m, 3, 0.2);
        let inside = mat_vec(&mat, &gamma)?;
        ctx.check(contains(&mat, &inside)?, || {
            format!("M ⊙ γ not contained: M = {mat}, γ = {gamma:?}")
        });
        // Translation equivariance and residuation on arbitrary points.
        let x = random_point(&mut ctx.rng, d, 4);
        let lam = gen::small_rational(&mut ctx.rng, 3);
        let shifted = act_scalar(&lam, &mat);
        let a = contains(&mat, &x)?;
        let b = contains(&shifted, &shift_point(&x, &lam))?;
        ctx.check(a == b, || {
            format!("translation by {lam} changes membership of {x:?} in {mat}")
        });
        for p in [&x, &inside] {
            let lambda = normalize(&residuate(&mat, p)?);
            let back = mat_vec(&mat, &lambda)?;
            let below = back.iter().zip(p.iter()).all(|(u, v)| u <= v);
            let attained = lambda.iter().any(|l| *l == TropScalar::one());
            let inside = contains(&mat, p)?;
            ctx.check(below && ((back == *p && attained) == inside), || {
                format!(
                    "residuation recomposition {back:?} vs {p:?} (contained: {inside}) for {mat}"
                )
            });
        }
    }
    Ok(())
}

pub fn metric(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.cases {
        let d = ctx.rng.gen_range(1..=4);
        let u = random_point(&mut ctx.rng, d, 5);
        let v = random_point(&mut ctx.rng, d, 5);
        let w = random_point(&mut ctx.rng, d, 5);
        let c = gen::small_rational(&mut ctx.rng, 5);
        let uv = d_tr(&u, &v)?;
        ctx.check_eq(&uv, &d_tr(&v, &u)?, || "symmetry".into());
        ctx.check(uv <= d_tr(&u, &w)? + d_tr(&w, &v)?, || {
            format!("triangle inequality at {u:?} {v:?} {w:?}")
        });
        ctx.check_eq(&d_tr(&shift_point(&u, &c), &v)?, &uv, || {
            "projective invariance".into()
        });
        ctx.check_eq(&d_tr(&u, &u)?, &Rational::default(), || {
            "d(u, u) = 0".into()
        });
    }
    Ok(())
}

pub fn rotation_sets(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.cases {
        let d = ctx.rng.gen_range(1..=4);
        let i = ctx.rng.gen_range(1..=d);
        let s = if ctx.rng.gen_bool(0.5) {
            let largest = ctx.rng.gen_bool(0.5);
            gen::rotation(&mut ctx.rng, d, i, largest)
        } else {
            let sigma = gen::permutation(&mut ctx.rng, d);
            let z = (0..d)
                .map(|_| Rational::from_integer(ctx.rng.gen_range(-2..=2i64).into()))
                .collect();
            crate::tropical::ScaledPermutationMatrix::new(sigma, z)?
        };
        let sums: Vec<Rational> = subsets(d, i)
            .iter()
            .map(|t| t.iter().map(|&k| &s.z[k]).sum())
            .collect();
        let zero = Rational::default();
        let max_zero = sums.iter().max() == Some(&zero);
        let min_zero = sums.iter().min() == Some(&zero);
        ctx.check_eq(&s.in_r_plus(i), &max_zero, || {
            format!("R^+_{{d,{i}}} membership of {:?}", s.z)
        });
        ctx.check_eq(&s.in_r_minus(i), &min_zero, || {
            format!("R^-_{{d,{i}}} membership of {:?}", s.z)
        });
        let total: Rational = s.z.iter().sum();
        ctx.check_eq(&s.in_r(), &(total == zero), || {
            format!("R_d membership of {:?}", s.z)
        });
    }
    Ok(())
}
