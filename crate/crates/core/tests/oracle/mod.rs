//! Plain reimplementations used as independent oracles by the integration
//! tests. Nothing here calls into the library's linear algebra.
#![allow(dead_code)]

use std::collections::HashSet;

pub type Mat = Vec<Vec<i64>>;

pub fn rank(g: usize, b: usize) -> usize {
    2 * g + b.saturating_sub(1)
}

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect()
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let m = b[0].len();
    let mut c = vec![vec![0i64; m]; n];
    for i in 0..n {
        for k in 0..b.len() {
            if a[i][k] != 0 {
                for j in 0..m {
                    c[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    c
}

pub fn transpose(a: &Mat) -> Mat {
    (0..a[0].len())
        .map(|j| a.iter().map(|r| r[j]).collect())
        .collect()
}

pub fn omega(g: usize, b: usize) -> Mat {
    let n = rank(g, b);
    let mut w = vec![vec![0; n]; n];
    for i in 0..g {
        w[i][g + i] = 1;
        w[g + i][i] = -1;
    }
    w
}

pub fn pair(g: usize, b: usize, u: &[i64], v: &[i64]) -> i64 {
    let w = omega(g, b);
    (0..u.len())
        .map(|i| (0..v.len()).map(|j| u[i] * w[i][j] * v[j]).sum::<i64>())
        .sum()
}

/// `v -> v + <v, c> c`.
pub fn twist(g: usize, b: usize, c: &[i64]) -> Mat {
    let n = rank(g, b);
    let mut t = identity(n);
    for j in 0..n {
        let mut e = vec![0; n];
        e[j] = 1;
        let s = pair(g, b, &e, c);
        for i in 0..n {
            t[i][j] += s * c[i];
        }
    }
    t
}

pub fn twist_inv(g: usize, b: usize, c: &[i64]) -> Mat {
    let n = rank(g, b);
    let mut t = identity(n);
    for j in 0..n {
        let mut e = vec![0; n];
        e[j] = 1;
        let s = pair(g, b, &e, c);
        for i in 0..n {
            t[i][j] -= s * c[i];
        }
    }
    t
}

pub fn a(g: usize, b: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; rank(g, b)];
    v[(i - 1) % g] = 1;
    v
}

pub fn bb(g: usize, b: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; rank(g, b)];
    v[g + (i - 1) % g] = 1;
    v
}

/// `a_i - a_{i+1}`, cyclic.
pub fn gamma(g: usize, b: usize, i: usize) -> Vec<i64> {
    let x = a(g, b, i);
    let y = a(g, b, i % g + 1);
    x.iter().zip(&y).map(|(p, q)| p - q).collect()
}

/// `c_j`, with `c_b = -(c_1 + .. + c_{b-1})`.
pub fn c(g: usize, b: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; rank(g, b)];
    if j < b {
        v[2 * g + j - 1] = 1;
    } else {
        for k in 1..b {
            v[2 * g + k - 1] = -1;
        }
    }
    v
}

pub fn apply(m: &Mat, v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|r| r.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn is_symplectic(g: usize, b: usize, m: &Mat) -> bool {
    let w = omega(g, b);
    mul(&mul(&transpose(m), &w), m) == w
}

/// `M c_j = c_{pi(j)}` with `perm` 1-based.
pub fn is_compatible(g: usize, b: usize, m: &Mat, perm: &[usize]) -> bool {
    (1..=b).all(|j| apply(m, &c(g, b, j)) == c(g, b, perm[j - 1]))
}

/// Order of the permutation group generated by `gens` (1-based images), by
/// closure.
pub fn perm_group_order(gens: &[Vec<usize>]) -> usize {
    let n = gens.first().map_or(0, Vec::len);
    let id: Vec<usize> = (1..=n).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        for s in gens {
            let y: Vec<usize> = x.iter().map(|&i| s[i - 1]).collect();
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen.len()
}

/// `p^(g^2) prod (p^(2i) - 1)`, in u128.
pub fn sp_order(g: u32, p: u128) -> u128 {
    (1..=g).fold(p.pow(g * g), |acc, i| acc * (p.pow(2 * i) - 1))
}
