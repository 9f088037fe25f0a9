//! Permutations with parity and lexicographic subsets.

use itertools::Itertools;

/// `true` for even permutations (inversion-count parity).
pub fn is_even(perm: &[usize]) -> bool {
    let inversions = perm
        .iter()
        .enumerate()
        .map(|(i, a)| perm[i + 1..].iter().filter(|b| *b < a).count())
        .sum::<usize>();
    inversions % 2 == 0
}

/// All permutations of `0..n` in lexicographic order, paired with their parity.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    (0..n)
        .permutations(n)
        .map(|p| {
            let even = is_even(&p);
            (p, even)
        })
        .collect()
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(k).collect()
}

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}
