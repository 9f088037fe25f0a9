use rand::Rng;

use super::gen;
use super::Ctx;
use crate::combinatorics::subsets;
use crate::error::Result;
use crate::linalg::{
    certificate_holds, is_nonsingular_fast, kleene_star, tdet, tminor, Bideterminant, BruteForce,
};
use crate::tropical::{mat_tmul, TropMatrix, TropScalar};

pub fn hungarian(ctx: &mut Ctx) -> Result<()> {
    let brute = BruteForce { bound: 6 };
    for _ in 0..ctx.cases {
        let r = ctx.rng.gen_range(1..=6);
        let p_inf = [0.0, 0.2, 0.5][ctx.rng.gen_range(0..3)];
        let a = gen::square_with_inf(&mut ctx.rng, r, -5, 5, p_inf);
        let fast = tdet(&a)?;
        let table = brute.table(&a)?;
        ctx.check_eq(&fast.value, &table.tdet(), || format!("tdet of {a}"));
        if fast.value.is_finite() {
            ctx.check(certificate_holds(&a, &fast), || {
                format!("dual certificate for {a}")
            });
            let attained = TropScalar::product(
                fast.sigma
                    .iter()
                    .enumerate()
                    .map(|(i, &j)| a.get(i, j))
                    .collect::<Vec<_>>(),
            );
            ctx.check_eq(&attained, &fast.value, || {
                format!("assignment value for {a}")
            });
        }
        let single = table.tdet().is_finite() && table.maximizers().len() == 1;
        ctx.check_eq(&is_nonsingular_fast(&a)?, &single, || {
            format!("non-singularity of {a}")
        });
    }
    Ok(())
}

fn bidet(brute: &BruteForce, m: &TropMatrix) -> Result<Bideterminant> {
    brute.bideterminant(m)
}

pub fn cauchy_binet(ctx: &mut Ctx) -> Result<()> {
    let brute = BruteForce::default();
    for _ in 0..ctx.cases {
        let i = ctx.rng.gen_range(1..=3);
        let n = ctx.rng.gen_range(1..=4);
        let p_inf = if ctx.rng.gen_bool(0.3) { 0.2 } else { 0.0 };
        let b = gen::rect_with_inf(&mut ctx.rng, i, n, -4, 4, p_inf);
        let c = gen::rect_with_inf(&mut ctx.rng, n, i, -4, 4, p_inf);
        let a = mat_tmul(&b, &c)?;
        let ba = bidet(&brute, &a)?;
        let mut cross = TropScalar::NegInf;
        let mut straight = TropScalar::NegInf;
        let rows: Vec<usize> = (0..i).collect();
        for k in subsets(n, i) {
            let bk = bidet(&brute, &b.submatrix(&rows, &k))?;
            let ck = bidet(&brute, &c.submatrix(&k, &rows))?;
            cross = cross
                .oplus(&bk.plus.otimes(&ck.minus))
                .oplus(&bk.minus.otimes(&ck.plus));
            straight = straight
                .oplus(&bk.plus.otimes(&ck.plus))
                .oplus(&bk.minus.otimes(&ck.minus));
        }
        let lhs = ba.plus.oplus(&cross);
        let rhs = ba.minus.oplus(&straight);
        ctx.check_eq(&lhs, &rhs, || format!("Cauchy–Binet for B = {b}, C = {c}"));
        ctx.check_eq(&ba.tdet(), &tdet(&a)?.value, || {
            "bideterminant max equals tdet".into()
        });
    }
    Ok(())
}

/// `A ⊕ A^2 ⊕ … ⊕ A^n` by repeated products, with the diagonal raised to 0.
fn power_series(a: &TropMatrix) -> Result<TropMatrix> {
    let n = a.rows();
    let mut acc = a.clone().with_empty_columns_allowed();
    let mut p = acc.clone();
    for _ in 1..n {
        p = mat_tmul(&p, a)?;
        for i in 0..n {
            for j in 0..n {
                let v = acc.get(i, j).oplus(p.get(i, j));
                acc.set(i, j, v);
            }
        }
    }
    for i in 0..n {
        let v = acc.get(i, i).oplus(&TropScalar::one());
        acc.set(i, i, v);
    }
    Ok(acc)
}

pub fn kleene(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.cases {
        let r = ctx.rng.gen_range(1..=6);
        let mut a = gen::square_with_inf(&mut ctx.rng, r, -6, 0, 0.3);
        for i in 0..r {
            a.set(i, i, TropScalar::one());
        }
        let s = kleene_star(&a)?;
        ctx.check_eq(&kleene_star(&s)?, &s, || format!("idempotence for {a}"));
        ctx.check_eq(
            &power_series(&a)?.entries().to_vec(),
            &s.entries().to_vec(),
            || format!("power series for {a}"),
        );
    }
    Ok(())
}

pub fn minor_monotonicity(ctx: &mut Ctx) -> Result<()> {
    let brute = BruteForce::default();
    let mut applicable = 0;
    for _ in 0..ctx.cases {
        let d = ctx.rng.gen_range(1..=3);
        let n = ctx.rng.gen_range(1..=4);
        let m = ctx.rng.gen_range(1..=4);
        let b = gen::int_matrix(&mut ctx.rng, d, n, 0, 5);
        let c = gen::stochastic(&mut ctx.rng, n, m, 4);
        let a = mat_tmul(&b, &c)?;
        for i in 1..=d.min(m).min(n) {
            let ma = tminor(&a, i)?;
            let sub = a.submatrix(&ma.rows, &ma.cols);
            if !brute.square_sign_generic(&sub)? {
                continue;
            }
            applicable += 1;
            let mb = tminor(&b, i)?;
            ctx.check(ma.value <= mb.value, || {
                format!(
                    "tminor_{i}: {} > {} for B = {b}, C = {c}",
                    ma.value, mb.value
                )
            });
        }
    }
    ctx.check(applicable > 0, || {
        "no sign-generic instance generated".into()
    });
    Ok(())
}
