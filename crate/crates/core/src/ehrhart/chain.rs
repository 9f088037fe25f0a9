//! Counting lattice points of scaled order simplices by dynamic programming.
//!
//! The region is `{y ∈ Z^d : 1 ≻_1 u_1 ≻_2 u_2 ≻_3 … ≻_d u_d ≻_{d+1} 0}` with
//! `u_j = y_{π(j)} / w_{π(j)}` and each `≻_j` one of `>`, `≥`, `=`. Walking
//! down the chain, the number of completions is a function of the current
//! value only, so prefix sums make each step linear in the weight.

use crate::error::{Error, Result};

/// Comparison between consecutive chain values, read as `u_j rel u_{j−1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainRel {
    Less,
    LessEq,
    Equal,
}

/// Number of integer points `y` with `0 ≤ y_{π(j)} ≤ w_{π(j)}` satisfying the
/// chain `u_j rel[j] u_{j−1}` for `j = 1..=d+1`, where `u_0 = 1`,
/// `u_{d+1} = 0`. All weights must be positive. `guard` bounds the total
/// number of DP states.
pub fn count_chain(w: &[u128], pi: &[usize], rel: &[ChainRel], guard: u64) -> Result<u128> {
    let d = w.len();
    if pi.len() != d || rel.len() != d + 1 {
        return Err(Error::Dimension(
            "chain description of inconsistent length".into(),
        ));
    }
    if w.contains(&0) {
        return Err(Error::Invalid("chain weights must be positive".into()));
    }
    let states: u128 = w.iter().map(|x| x + 1).sum();
    if states > u128::from(guard) {
        return Err(Error::Guard {
            needed: states,
            guard,
        });
    }
    // Chain weights including the fixed endpoints u_0 = 1/1 and u_{d+1} = 0/1.
    let mut weights = vec![1u128];
    weights.extend(pi.iter().map(|&p| w[p]));
    weights.push(1);
    // f[y] = number of ways to reach value y/W at the current position.
    let mut f = vec![0u128, 1u128];
    for j in 1..=d + 1 {
        let prev_w = weights[j - 1];
        let cur_w = weights[j];
        // suffix[y'] = Σ_{z ≥ y'} f[z]
        let mut suffix = vec![0u128; f.len() + 1];
        for y in (0..f.len()).rev() {
            suffix[y] = suffix[y + 1] + f[y];
        }
        let range = if j == d + 1 { 1 } else { cur_w as usize + 1 };
        let mut g = vec![0u128; range];
        for (y, slot) in g.iter_mut().enumerate() {
            // Compare y/cur_w with y'/prev_w via y·prev_w vs y'·cur_w.
            let num = y as u128 * prev_w;
            *slot = match rel[j - 1] {
                ChainRel::Less => {
                    let lo = num / cur_w + 1;
                    suffix.get(lo as usize).copied().unwrap_or(0)
                }
                ChainRel::LessEq => {
                    let lo = num.div_ceil(cur_w);
                    suffix.get(lo as usize).copied().unwrap_or(0)
                }
                ChainRel::Equal => {
                    if num.is_multiple_of(cur_w) {
                        f.get((num / cur_w) as usize).copied().unwrap_or(0)
                    } else {
                        0
                    }
                }
            };
        }
        f = g;
    }
    Ok(f[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use ChainRel::*;

    fn brute(w: &[u128], pi: &[usize], rel: &[ChainRel]) -> u128 {
        let d = w.len();
        let mut count = 0;
        let total: u128 = w.iter().map(|x| x + 1).product();
        for mut idx in 0..total {
            let mut y = vec![0u128; d];
            for i in 0..d {
                y[i] = idx % (w[i] + 1);
                idx /= w[i] + 1;
            }
            // Chain values as fractions (num, den).
            let mut chain = vec![(1u128, 1u128)];
            chain.extend(pi.iter().map(|&p| (y[p], w[p])));
            chain.push((0, 1));
            let ok = (1..chain.len()).all(|j| {
                let (a, b) = chain[j];
                let (c, e) = chain[j - 1];
                let l = a * e;
                let r = c * b;
                match rel[j - 1] {
                    Less => l < r,
                    LessEq => l <= r,
                    Equal => l == r,
                }
            });
            count += u128::from(ok);
        }
        count
    }

    #[test]
    fn matches_brute_force() {
        let cases: Vec<(Vec<u128>, Vec<usize>, Vec<ChainRel>)> = vec![
            (vec![4, 8], vec![0, 1], vec![Less, Less, Less]),
            (vec![4, 8], vec![1, 0], vec![LessEq, LessEq, LessEq]),
            (vec![6, 3], vec![0, 1], vec![Less, Equal, Less]),
            (
                vec![2, 4, 8],
                vec![2, 0, 1],
                vec![LessEq, Less, Equal, LessEq],
            ),
            (
                vec![3, 9, 27],
                vec![1, 2, 0],
                vec![Less, Less, LessEq, Less],
            ),
            (vec![5], vec![0], vec![Equal, Less]),
        ];
        for (w, pi, rel) in cases {
            assert_eq!(
                count_chain(&w, &pi, &rel, 1_000_000).unwrap(),
                brute(&w, &pi, &rel),
                "{w:?} {pi:?} {rel:?}"
            );
        }
    }

    #[test]
    fn closed_unit_triangle_dilates() {
        // t·conv{(0,0),(1,0),(1,1)} has (t+1)(t+2)/2 lattice points.
        for t in 1..6u128 {
            let n = count_chain(&[t, t], &[0, 1], &[LessEq, LessEq, LessEq], 1000).unwrap();
            assert_eq!(n, (t + 1) * (t + 2) / 2);
        }
    }

    #[test]
    fn guard() {
        assert!(matches!(
            count_chain(&[100], &[0], &[Less, Less], 10),
            Err(Error::Guard { .. })
        ));
    }
}
