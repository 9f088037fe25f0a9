use rand::Rng;

use super::cell_suites::in_dtrunk;
use super::gen;
use super::Ctx;
use crate::cells::enumerate_triangulation;
use crate::ehrhart::{
    c_dminus1_direct, coeffs_via_formula, degree_bound, log_of, reciprocity_check, DEFAULT_GUARD,
};
use crate::error::Result;
use crate::linalg::{tminor, tropical_rank};
use crate::tropical::{act, mat_tmul, rat, Rational, TropMatrix, TropScalar};
use crate::volumes::{
    cartesian_product, qtvol_plus, tlvol_subsets, tropical_barycenter, LatticeEmbedding,
};

/// `tlvol` followed by `tlvol_i^±` for `i = 1..=d`, all through the triangulation.
struct Functionals {
    tlvol: TropScalar,
    plus: Vec<TropScalar>,
    minus: Vec<TropScalar>,
}

impl Functionals {
    fn of(m: &TropMatrix) -> Result<Self> {
        let e = LatticeEmbedding::new(m)?;
        let d = m.rows();
        let mut plus = Vec::with_capacity(d);
        let mut minus = Vec::with_capacity(d);
        for i in 1..=d {
            plus.push(e.tlvol_i_plus(i)?.value);
            minus.push(e.tlvol_i_minus(i)?.value);
        }
        Ok(Functionals {
            tlvol: e.tlvol().0,
            plus,
            minus,
        })
    }

    /// `(name, value)` pairs for messages and pairwise comparisons.
    fn named(&self) -> Vec<(String, &TropScalar)> {
        let mut out = vec![("tlvol".to_string(), &self.tlvol)];
        for (k, (p, q)) in self.plus.iter().zip(&self.minus).enumerate() {
            out.push((format!("tlvol_{}^+", k + 1), p));
            out.push((format!("tlvol_{}^-", k + 1), q));
        }
        out
    }
}

fn shift_by(v: &TropScalar, c: i64) -> TropScalar {
    v.shift(&rat(c))
}

pub fn cross_volume(ctx: &mut Ctx) -> Result<()> {
    for case in 0..ctx.cases {
        let d = ctx.rng.gen_range(1..=3);
        let cols = ctx.rng.gen_range(1..=5);
        // Every fourth instance has negative or fractional entries.
        let m = if case % 4 == 3 {
            let entries = (0..d * cols)
                .map(|_| TropScalar::Finite(gen::small_rational(&mut ctx.rng, 2)))
                .collect();
            TropMatrix::new(d, cols, entries)?
        } else {
            gen::int_matrix(&mut ctx.rng, d, cols, 0, 4)
        };
        let (sub, _) = tlvol_subsets(&m)?;
        let (tri, _) = LatticeEmbedding::new(&m)?.tlvol();
        ctx.check_eq(&sub, &tri, || {
            format!("tlvol by subsets vs triangulation for {m}")
        });
    }
    Ok(())
}

pub fn theorems(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.cases {
        let d = ctx.rng.gen_range(1..=3);
        let cols = ctx.rng.gen_range(d..=5);
        let m = gen::int_matrix(&mut ctx.rng, d, cols, 0, 4);
        theorem_instance(ctx, &m)?;
    }
    Ok(())
}

/// The theorem checks on one canonical lattice matrix with at least `d` columns.
pub(super) fn theorem_instance(ctx: &mut Ctx, m: &TropMatrix) -> Result<()> {
    let d = m.rows();
    let t = enumerate_triangulation(m)?;
    let f = Functionals::of(m)?;
    let q = qtvol_plus(m)?.value;
    ctx.check(f.tlvol <= q, || {
        format!("tlvol {} > qtvol+ {q} for {m}", f.tlvol)
    });
    let bary: Vec<Rational> = tropical_barycenter(m)
        .into_iter()
        .map(|x| x.into_finite().expect("finite"))
        .collect();
    let in_trunk = in_dtrunk(&t, &bary);
    ctx.check((f.tlvol == q) == in_trunk, || {
        format!(
            "tlvol = qtvol+ is {} but barycenter in Tr_d is {in_trunk} for {m}",
            f.tlvol == q
        )
    });
    if t.is_pure() {
        ctx.check_eq(&f.tlvol, &q, || format!("pure instance {m}"));
        let mut ok = true;
        for b in [2u32, 3] {
            ok &= reciprocity_check(&t, b, DEFAULT_GUARD)?;
        }
        ctx.check(ok, || format!("reciprocity for {m}"));
    }
    for i in 1..=d {
        let minor = tminor(m, i)?.value;
        ctx.check(f.minus[i - 1] <= minor, || {
            format!(
                "tlvol_{i}^- {} > tminor_{i} {minor} for {m}",
                f.minus[i - 1]
            )
        });
    }
    ctx.check_eq(&f.plus[0], &tminor(m, 1)?.value, || {
        format!("tlvol_1^+ = tminor_1 for {m}")
    });
    if d >= 2 {
        let log = log_of(degree_bound(m), |b| Ok(c_dminus1_direct(&t, b)))?;
        let (lo, hi) = (&f.minus[d - 2], &f.plus[d - 2]);
        ctx.check(*lo <= log && log <= *hi, || {
            format!("Log c_(d-1) = {log} outside [{lo}, {hi}] for {m}")
        });
    }
    let rank = tropical_rank(m)?;
    for b in [2u32, 3] {
        let c = coeffs_via_formula(&t, b, DEFAULT_GUARD)?;
        let top = c.degree().unwrap_or(0);
        ctx.check(rank >= top, || {
            format!("trk {rank} < degree {top} at b = {b} for {m}")
        });
    }
    Ok(())
}

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

pub fn properties(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.cases {
        let d = ctx.rng.gen_range(1..=3);
        let cols = ctx.rng.gen_range(1..=4);
        let b = gen::int_matrix(&mut ctx.rng, d, cols, 0, 4);
        let fb = Functionals::of(&b)?;

        // Monotonicity: tconv(B ⊙ C) ⊆ tconv(B).
        let n = ctx.rng.gen_range(1..=4);
        let c = gen::stochastic(&mut ctx.rng, cols, n, 3);
        let a = mat_tmul(&b, &c)?;
        let fa = Functionals::of(&a)?;
        for ((name, x), (_, y)) in fa.named().into_iter().zip(fb.named()) {
            ctx.check(x <= y, || {
                format!("monotonicity of {name}: {x} > {y} for A = {a}, B = {b}")
            });
        }
        // Idempotency, nested case: tconv(B | A) = tconv(B).
        let joined = Functionals::of(&b.hconcat(&a)?)?;
        for ((name, x), (_, y)) in joined.named().into_iter().zip(fb.named()) {
            ctx.check_eq(x, y, || {
                format!("idempotency (nested) of {name} for {b} ∪ {a}")
            });
        }

        // Homogeneity: f_i(λ ⊙ P) = λ i + f_i(P).
        let lambda = ctx.rng.gen_range(-2..=3i64);
        let moved = Functionals::of(&b.map(|x| x.shift(&rat(lambda))))?;
        ctx.check_eq(
            &moved.tlvol,
            &shift_by(&fb.tlvol, lambda * d as i64),
            || format!("homogeneity of tlvol for {b}"),
        );
        for i in 1..=d {
            let s = lambda * i as i64;
            ctx.check_eq(&moved.plus[i - 1], &shift_by(&fb.plus[i - 1], s), || {
                format!("homogeneity of tlvol_{i}^+ for {b}")
            });
            ctx.check_eq(&moved.minus[i - 1], &shift_by(&fb.minus[i - 1], s), || {
                format!("homogeneity of tlvol_{i}^- for {b}")
            });
        }

        // Rotation by R_d: tlvol and the d-volumes are invariant.
        let r = gen::rotation(&mut ctx.rng, d, d, true);
        let rotated = Functionals::of(&act(&r, &b)?)?;
        ctx.check_eq(&rotated.tlvol, &fb.tlvol, || {
            format!("R_d invariance of tlvol, z = {:?}, for {b}", r.z)
        });
        ctx.check_eq(&rotated.plus[d - 1], &fb.plus[d - 1], || {
            format!("R_d invariance of tlvol_d^+ for {b}")
        });
        ctx.check_eq(&rotated.minus[d - 1], &fb.minus[d - 1], || {
            format!("R_d invariance of tlvol_d^- for {b}")
        });
        // Rotation by R_{d,i}^±: only one inequality holds for i < d.
        let i = ctx.rng.gen_range(1..=d);
        let rp = gen::rotation(&mut ctx.rng, d, i, true);
        let plus = Functionals::of(&act(&rp, &b)?)?.plus[i - 1].clone();
        let before = &fb.plus[i - 1];
        ctx.check(plus <= *before, || {
            format!("tlvol_{i}^+ grew under R^+ rotation z = {:?} for {b}", rp.z)
        });
        if plus != *before {
            ctx.diverge(format!(
                "tlvol_{i}^+ not invariant under R^+_{{{d},{i}}}: {before} -> {plus}, σ = {:?}, z = {:?}, M = {b}",
                rp.sigma, rp.z
            ));
        }
        let rm = gen::rotation(&mut ctx.rng, d, i, false);
        let minus = Functionals::of(&act(&rm, &b)?)?.minus[i - 1].clone();
        let before = &fb.minus[i - 1];
        ctx.check(minus >= *before, || {
            format!(
                "tlvol_{i}^- shrank under R^- rotation z = {:?} for {b}",
                rm.z
            )
        });
        if minus != *before {
            ctx.diverge(format!(
                "tlvol_{i}^- not invariant under R^-_{{{d},{i}}}: {before} -> {minus}, σ = {:?}, z = {:?}, M = {b}",
                rm.sigma, rm.z
            ));
        }

        // Idempotency on a box split: the union is generated by the concatenation.
        let l: Vec<i64> = (0..d).map(|_| ctx.rng.gen_range(0..=2)).collect();
        let u: Vec<i64> = l.iter().map(|&x| x + ctx.rng.gen_range(2..=3)).collect();
        let axis = ctx.rng.gen_range(0..d);
        let cut = ctx.rng.gen_range(l[axis] + 1..u[axis]);
        let (mut u1, mut l2) = (u.clone(), l.clone());
        u1[axis] = cut;
        l2[axis] = cut;
        let (p, q) = (box_matrix(&l, &u1), box_matrix(&l2, &u));
        let (fp, fq) = (Functionals::of(&p)?, Functionals::of(&q)?);
        let whole = Functionals::of(&box_matrix(&l, &u))?;
        let union = Functionals::of(&p.hconcat(&q)?)?;
        for (((name, w), (_, x)), ((_, y), (_, z))) in whole
            .named()
            .into_iter()
            .zip(union.named())
            .zip(fp.named().into_iter().zip(fq.named()))
        {
            ctx.check_eq(w, x, || {
                format!("box [{l:?}, {u:?}] vs concatenated halves, {name}")
            });
            let max = if y >= z { y } else { z };
            ctx.check_eq(x, max, || {
                format!("idempotency of {name} for the split of [{l:?}, {u:?}] at x_{axis} = {cut}")
            });
        }
    }
    Ok(())
}

pub fn products(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.cases {
        let (d, e) = (ctx.rng.gen_range(1..=2), ctx.rng.gen_range(1..=2));
        let (cm, cn) = (ctx.rng.gen_range(1..=3), ctx.rng.gen_range(1..=3));
        let m = gen::int_matrix(&mut ctx.rng, d, cm, 0, 3);
        let n = gen::int_matrix(&mut ctx.rng, e, cn, 0, 3);
        let prod = cartesian_product(&m, &n)?;
        let (vm, _) = tlvol_subsets(&m)?;
        let (vn, _) = tlvol_subsets(&n)?;
        let (vp, _) = tlvol_subsets(&prod)?;
        ctx.check_eq(&vp, &vm.otimes(&vn), || format!("tlvol({m} × {n})"));
        let (tri, _) = LatticeEmbedding::new(&prod)?.tlvol();
        ctx.check_eq(&tri, &vp, || {
            format!("tlvol of the product {prod} by triangulation")
        });
    }
    Ok(())
}
