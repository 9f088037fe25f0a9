use std::collections::HashSet;

use itertools::Itertools;
use rand::Rng;

use super::gen;
use super::Ctx;
use crate::cells::{
    bounding_box, canonical_patterns, enumerate_triangulation, AlcovedSimplex, CellComplex,
};
use crate::ehrhart::{count_tropical, count_via_cells, DEFAULT_GUARD};
use crate::error::Result;
use crate::tropical::{contains, frac, rat, Rational, TropScalar};

/// `x` lies in the closure of the full-dimensional cell `c`:
/// `1 ≥ y_π(0) ≥ … ≥ y_π(d−1) ≥ 0` for `y = x − a`.
fn in_full_closure(c: &AlcovedSimplex, x: &[Rational]) -> bool {
    let y: Vec<Rational> = x.iter().zip(&c.a).map(|(v, &a)| v - rat(a)).collect();
    let mut prev = rat(1);
    for &p in &c.pi {
        if y[p] > prev {
            return false;
        }
        prev = y[p].clone();
    }
    prev >= rat(0)
}

pub(super) fn in_dtrunk(t: &CellComplex, x: &[Rational]) -> bool {
    let d = t.ambient_dim();
    t.cells()
        .iter()
        .filter(|c| c.dim() == d)
        .any(|c| in_full_closure(c, x))
}

/// `max(λ + u, v)` for `λ ≤ 0`: a point of the tropical segment `[u, v]`.
fn segment_point(u: &[i64], v: &[i64], lambda: &Rational) -> Vec<Rational> {
    u.iter()
        .zip(v)
        .map(|(&a, &b)| {
            let l = lambda + rat(a);
            let r = rat(b);
            if l > r {
                l
            } else {
                r
            }
        })
        .collect()
}

pub fn cells(ctx: &mut Ctx) -> Result<()> {
    for _ in 0..ctx.cases {
        let m = gen::small_canonical(&mut ctx.rng);
        let d = m.rows();
        let t = enumerate_triangulation(&m)?;
        for k in 0..=1 {
            let brute = count_tropical(&m, 2, k, DEFAULT_GUARD)?;
            let cellwise = count_via_cells(&t, 2, k, DEFAULT_GUARD)?;
            ctx.check_eq(&cellwise, &brute, || {
                format!("cell partition count at b = 2, k = {k} for {m}")
            });
        }
        let distinct: HashSet<&[Vec<i64>]> = t.cells().iter().map(|c| c.vertices()).collect();
        ctx.check_eq(&distinct.len(), &t.len(), || {
            format!("duplicate cells for {m}")
        });
        // Every candidate in the bounding box is stored iff its interior point is in P.
        let perms: Vec<Vec<usize>> = (0..d).permutations(d).collect();
        let patterns = canonical_patterns(d);
        for a in bounding_box(&m)?
            .iter()
            .map(|&(lo, hi)| lo..=hi)
            .multi_cartesian_product()
        {
            for pi in &perms {
                for s in &patterns {
                    let cell = AlcovedSimplex::new(a.clone(), pi.clone(), s.clone())?;
                    let x: Vec<TropScalar> = cell
                        .relative_interior_point()
                        .into_iter()
                        .map(TropScalar::Finite)
                        .collect();
                    let inside = contains(&m, &x)?;
                    let stored = t.find(cell.vertices()).is_some();
                    ctx.check(inside == stored, || {
                        format!("{cell}: inside {inside}, stored {stored} for {m}")
                    });
                }
            }
        }
        let mut previous: Option<HashSet<usize>> = None;
        for i in 1..=d {
            let tr: HashSet<usize> = t.trunk(i)?.into_iter().collect();
            if i == 1 {
                ctx.check(tr.len() == t.len(), || format!("Tr_1 misses a cell of {m}"));
            }
            if let Some(p) = &previous {
                ctx.check(tr.is_subset(p), || format!("Tr_{i} ⊄ Tr_{} for {m}", i - 1));
            }
            previous = Some(tr);
        }
        let w = t.trunk_vertices(d)?;
        if w.len() >= 2 {
            for _ in 0..4 {
                let u = &w[ctx.rng.gen_range(0..w.len())];
                let v = &w[ctx.rng.gen_range(0..w.len())];
                let span = 2 * (u.iter().chain(v).map(|x| x.abs()).max().unwrap_or(0) + 1);
                let lambda = -frac(ctx.rng.gen_range(0..=6 * span), 6);
                for (p, q) in [(u, v), (v, u)] {
                    let x = segment_point(p, q, &lambda);
                    ctx.check(in_dtrunk(&t, &x), || {
                        format!("{x:?} on [{p:?}, {q:?}] leaves Tr_{d} of {m}")
                    });
                }
            }
        }
    }
    Ok(())
}
