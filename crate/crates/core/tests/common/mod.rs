//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Leibniz expansion over all permutations.
pub fn leibniz(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = BigInt::zero();
    permute(&mut perm, 0, m, &mut total);
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, m: &[Vec<i64>], total: &mut BigInt) {
    let n = perm.len();
    if k == n {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let mut prod = BigInt::one();
        for (i, &p) in perm.iter().enumerate() {
            prod *= m[i][p];
        }
        if inversions % 2 == 1 {
            prod = -prod;
        }
        *total += prod;
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(perm, k + 1, m, total);
        perm.swap(k, i);
    }
}

/// Delete row `r` and column `c`.
pub fn minor(m: &[Vec<i64>], r: usize, c: usize) -> Vec<Vec<i64>> {
    m.iter()
        .enumerate()
        .filter(|&(i, _)| i != r)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|&(j, _)| j != c)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect()
}

/// `p(0..=n)` by the parts-bounded table `p(n, k) = p(n, k-1) + p(n-k, k)`.
pub fn partitions_by_parts(n: usize) -> Vec<BigInt> {
    let mut ways = vec![BigInt::zero(); n + 1];
    ways[0] = BigInt::one();
    for part in 1..=n {
        for m in part..=n {
            let add = ways[m - part].clone();
            ways[m] += add;
        }
    }
    ways
}

/// Direct enumeration of two-color partitions: each part size `k` gets one
/// color, or two when `r | k`. Counted as a product of "coins".
pub fn two_color_by_coins(r: usize, n: usize) -> Vec<u64> {
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        let colors = if part % r == 0 { 2 } else { 1 };
        for _ in 0..colors {
            for m in part..=n {
                ways[m] += ways[m - part];
            }
        }
    }
    ways
}

/// Count two-color partitions of `n` by explicit enumeration of multisets of
/// `(part, color)` kinds, kinds taken in non-increasing order.
pub fn two_color_brute(r: usize, n: usize) -> u64 {
    let mut kinds: Vec<(usize, u8)> = Vec::new();
    for part in (1..=n).rev() {
        if part % r == 0 {
            kinds.push((part, 1));
        }
        kinds.push((part, 0));
    }
    fn go(kinds: &[(usize, u8)], start: usize, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        (start..kinds.len())
            .filter(|&i| kinds[i].0 <= left)
            .map(|i| go(kinds, i, left - kinds[i].0))
            .sum()
    }
    go(&kinds, 0, n)
}
