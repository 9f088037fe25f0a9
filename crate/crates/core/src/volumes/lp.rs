//! A small exact simplex method, used to maximize the sum of the `i`
//! smallest coordinates over a simplex.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::combinatorics::subsets;
use crate::error::{Error, Result};
use crate::tropical::Rational;

/// An optimal value and a point attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LpSolution {
    #[serde(with = "crate::tropical::scalar::rational_serde")]
    pub value: Rational,
    #[serde(with = "crate::tropical::scalar::rational_serde::vec")]
    pub x: Vec<Rational>,
}

/// `max cᵀx` subject to `Ax ≤ b`, `x ≥ 0`, for `b ≥ 0` (so the origin is a
/// feasible basis). Bland's rule guarantees termination.
pub fn maximize(c: &[Rational], a: &[Vec<Rational>], b: &[Rational]) -> Result<LpSolution> {
    let n = c.len();
    let m = a.len();
    if b.len() != m || a.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension("inconsistent linear program".into()));
    }
    if b.iter().any(Signed::is_negative) {
        return Err(Error::Invalid(
            "right-hand side must be non-negative".into(),
        ));
    }
    // Tableau rows [A | I | b]; objective row holds reduced costs −c.
    let width = n + m + 1;
    let mut t: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row = a[i].clone();
            row.extend((0..m).map(|k| {
                if k == i {
                    Rational::from_integer(1.into())
                } else {
                    Rational::zero()
                }
            }));
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut obj: Vec<Rational> = c.iter().map(|x| -x).collect();
    obj.resize(width, Rational::zero());
    let mut basis: Vec<usize> = (n..n + m).collect();
    while let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            let better = match leave {
                None => true,
                Some(l) => {
                    let lhs = &t[i][width - 1] * &t[l][enter];
                    let rhs = &t[l][width - 1] * &t[i][enter];
                    lhs < rhs || (lhs == rhs && basis[i] < basis[l])
                }
            };
            if better {
                leave = Some(i);
            }
        }
        let Some(r) = leave else {
            return Err(Error::Invalid("linear program is unbounded".into()));
        };
        let piv = t[r][enter].clone();
        for v in t[r].iter_mut() {
            *v /= &piv;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        let f = obj[enter].clone();
        for (v, p) in obj.iter_mut().zip(&pivot_row) {
            *v -= &f * p;
        }
        basis[r] = enter;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][width - 1].clone();
        }
    }
    Ok(LpSolution {
        value: obj[width - 1].clone(),
        x,
    })
}

/// Sum of the `i` smallest entries.
pub fn sum_smallest(x: &[Rational], i: usize) -> Rational {
    let mut v = x.to_vec();
    v.sort();
    v[..i].iter().sum()
}

/// Sum of the `i` largest entries.
pub fn sum_largest(x: &[Rational], i: usize) -> Rational {
    let mut v = x.to_vec();
    v.sort();
    v[v.len() - i..].iter().sum()
}

/// `max_{x ∈ conv(V)} min_{|S| = i} Σ_{s ∈ S} x_s` with a point attaining it.
///
/// With `x = V_0 + Σ_{u ≥ 1} λ_u (V_u − V_0)` the problem is the LP
/// `max t` subject to `t ≤ f_S(x)` for every `i`-subset `S`, `λ ≥ 0`,
/// `Σ λ_u ≤ 1`. The objective is shifted by `t_0 = min_S f_S(V_0)` so that
/// the origin is feasible.
pub fn lp_max_min_linear(vertices: &[Vec<Rational>], i: usize) -> Result<LpSolution> {
    let Some(v0) = vertices.first() else {
        return Err(Error::Invalid("empty simplex".into()));
    };
    let d = v0.len();
    if i < 1 || i > d {
        return Err(Error::OutOfRange {
            index: i,
            lo: 1,
            hi: d,
        });
    }
    let n = vertices.len() - 1;
    let f = |v: &[Rational], s: &[usize]| -> Rational { s.iter().map(|&k| &v[k]).sum() };
    let ss = subsets(d, i);
    let t0 = ss
        .iter()
        .map(|s| f(v0, s))
        .min()
        .expect("at least one subset");
    // Variables: λ_1..λ_n, then t' = t − t_0.
    let mut a = Vec::with_capacity(ss.len() + 1);
    let mut b = Vec::with_capacity(ss.len() + 1);
    for s in &ss {
        let base = f(v0, s);
        let mut row: Vec<Rational> = vertices[1..].iter().map(|vu| &base - f(vu, s)).collect();
        row.push(Rational::from_integer(1.into()));
        a.push(row);
        b.push(&base - &t0);
    }
    let mut sum_row = vec![Rational::from_integer(1.into()); n];
    sum_row.push(Rational::zero());
    a.push(sum_row);
    b.push(Rational::from_integer(1.into()));
    let mut c = vec![Rational::zero(); n];
    c.push(Rational::from_integer(1.into()));
    let sol = maximize(&c, &a, &b)?;
    let mut x = v0.clone();
    for (u, lam) in sol.x[..n].iter().enumerate() {
        for k in 0..d {
            x[k] += lam * (&vertices[u + 1][k] - &v0[k]);
        }
    }
    Ok(LpSolution {
        value: sol.value + t0,
        x,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropical::{frac, rat};

    fn pts(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter()
            .map(|p| p.iter().map(|&x| rat(x)).collect())
            .collect()
    }

    #[test]
    fn point() {
        let s = lp_max_min_linear(&pts(&[&[3, 1, 2]]), 2).unwrap();
        assert_eq!(s.value, rat(3));
    }

    #[test]
    fn segment() {
        let s = lp_max_min_linear(&pts(&[&[9, 9, 0, 1], &[9, 9, 1, 1]]), 2).unwrap();
        assert_eq!(s.value, rat(2));
        assert_eq!(s.x, vec![rat(9), rat(9), rat(1), rat(1)]);
    }

    #[test]
    fn alcove() {
        let s = lp_max_min_linear(&pts(&[&[0, 0], &[1, 0], &[1, 1]]), 1).unwrap();
        assert_eq!(s.value, rat(1));
        assert_eq!(s.x, vec![rat(1), rat(1)]);
    }

    #[test]
    fn optimum_off_the_vertices() {
        // min(x, y) on the segment (2,0)–(0,2) peaks at (1,1).
        let s = lp_max_min_linear(&pts(&[&[2, 0], &[0, 2]]), 1).unwrap();
        assert_eq!(s.value, rat(1));
        assert_eq!(s.x, vec![rat(1), rat(1)]);
        let s = lp_max_min_linear(&pts(&[&[3, 0], &[0, 1]]), 1).unwrap();
        assert_eq!(s.value, frac(3, 4));
        assert_eq!(sum_smallest(&s.x, 1), s.value);
    }

    #[test]
    fn plain_lp() {
        // max x + y, x + 2y ≤ 4, 3x + y ≤ 6 → (8/5, 6/5).
        let s = maximize(
            &[rat(1), rat(1)],
            &[vec![rat(1), rat(2)], vec![rat(3), rat(1)]],
            &[rat(4), rat(6)],
        )
        .unwrap();
        assert_eq!(s.value, frac(14, 5));
        assert_eq!(s.x, vec![frac(8, 5), frac(6, 5)]);
        assert!(maximize(&[rat(1)], &[vec![rat(-1)]], &[rat(1)]).is_err());
    }
}
