//! Integer row reduction: Hermite normal form, integral linear solves,
//! kernels and unimodular basis completion.

use super::matrix::{add, axpy, mul, IntMatrix};

/// Row Hermite normal form.
///
/// Returns `(h, u, rank)` with `u` unimodular and `u * a == h`. The nonzero
/// rows of `h` come first, pivots are positive and entries above each pivot
/// are reduced into `[0, pivot)`.
pub fn row_hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix, usize) {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.to_rows();
    let mut u = IntMatrix::identity(m).to_rows();
    let mut r = 0;
    for j in 0..n {
        if r == m {
            break;
        }
        loop {
            let pick = (r..m)
                .filter(|&i| h[i][j] != 0)
                .min_by_key(|&i| (h[i][j].abs(), i));
            let Some(p) = pick else { break };
            h.swap(r, p);
            u.swap(r, p);
            let mut done = true;
            for i in r + 1..m {
                if h[i][j] != 0 {
                    let q = h[i][j].div_euclid(h[r][j]);
                    let (hr, ur) = (h[r].clone(), u[r].clone());
                    axpy(&mut h[i], -q, &hr);
                    axpy(&mut u[i], -q, &ur);
                    if h[i][j] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if h[r][j] == 0 {
            continue;
        }
        if h[r][j] < 0 {
            h[r].iter_mut().for_each(|x| *x = -*x);
            u[r].iter_mut().for_each(|x| *x = -*x);
        }
        let (hr, ur) = (h[r].clone(), u[r].clone());
        for i in 0..r {
            let q = h[i][j].div_euclid(hr[j]);
            if q != 0 {
                axpy(&mut h[i], -q, &hr);
                axpy(&mut u[i], -q, &ur);
            }
        }
        r += 1;
    }
    (IntMatrix::from_rows(&h), IntMatrix::from_rows(&u), r)
}

/// Column echelon form: `(h, u, rank)` with `u` unimodular and `a * u == h`.
fn col_hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix, usize) {
    let (ht, ut, r) = row_hnf(&a.transpose());
    (ht.transpose(), ut.transpose(), r)
}

/// Leading (pivot) column of each of the first `rank` rows of a row echelon matrix.
fn pivots(h: &IntMatrix, rank: usize) -> Vec<usize> {
    (0..rank)
        .map(|i| {
            h.row(i)
                .iter()
                .position(|&x| x != 0)
                .expect("pivot row is nonzero")
        })
        .collect()
}

/// An integer solution of `a * x == b`, or `None` when none exists.
///
/// Free variables are set to zero whenever back-substitution on the row
/// echelon form stays integral, which makes solutions of coordinate-aligned
/// systems come out as coordinate vectors.
pub fn solve(a: &IntMatrix, b: &[i64]) -> Option<Vec<i64>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let n = a.cols();
    let (h, u, rank) = row_hnf(a);
    let c = u.apply(b);
    if c[rank..].iter().any(|&x| x != 0) {
        return None;
    }
    let piv = pivots(&h, rank);
    let mut x = vec![0i64; n];
    let mut integral = true;
    for i in (0..rank).rev() {
        let p = piv[i];
        let mut rhs = c[i];
        for j in p + 1..n {
            rhs = add(rhs, -mul(h[(i, j)], x[j]));
        }
        if rhs % h[(i, p)] != 0 {
            integral = false;
            break;
        }
        x[p] = rhs / h[(i, p)];
    }
    if integral {
        debug_assert_eq!(a.apply(&x), b);
        return Some(x);
    }

    // General route: a * u = l in column echelon form, solve l * y = b.
    let (l, u, rank) = col_hnf(a);
    let lt = l.transpose();
    let piv = pivots(&lt, rank);
    let mut y = vec![0i64; n];
    for k in 0..rank {
        let p = piv[k];
        let mut rhs = b[p];
        for (t, &yt) in y.iter().enumerate().take(k) {
            rhs = add(rhs, -mul(l[(p, t)], yt));
        }
        if rhs % l[(p, k)] != 0 {
            return None;
        }
        y[k] = rhs / l[(p, k)];
    }
    if l.apply(&y) != b {
        return None;
    }
    let x = u.apply(&y);
    debug_assert_eq!(a.apply(&x), b);
    Some(x)
}

/// Basis (as rows, in Hermite form) of the integer kernel `{x : a x = 0}`.
pub fn kernel(a: &IntMatrix) -> IntMatrix {
    let n = a.cols();
    let (_, u, rank) = col_hnf(a);
    let rows: Vec<Vec<i64>> = (rank..n).map(|j| u.column(j)).collect();
    if rows.is_empty() {
        return IntMatrix::zeros(0, n);
    }
    let (h, _, r) = row_hnf(&IntMatrix::from_rows(&rows));
    IntMatrix::from_rows(&h.to_rows()[..r])
}

/// Row basis (Hermite form) of the lattice spanned by the rows of `a`.
pub fn row_basis(a: &IntMatrix) -> IntMatrix {
    let (h, _, r) = row_hnf(a);
    IntMatrix::from_rows(&h.to_rows()[..r])
}

/// Whether the rows of `a` (assumed independent) span a primitive sublattice.
pub fn is_primitive(a: &IntMatrix) -> bool {
    if a.rows() == 0 {
        return true;
    }
    let (l, _, rank) = col_hnf(a);
    rank == a.rows()
        && (0..rank).all(|k| {
            let col = l.column(k);
            col.iter().find(|&&x| x != 0).is_some_and(|&x| x.abs() == 1)
        })
}

/// Extends independent primitive rows `k` to a unimodular matrix whose
/// leading rows are exactly `k`.
pub fn complete_basis(k: &IntMatrix) -> Option<IntMatrix> {
    let (s, n) = (k.rows(), k.cols());
    if !is_primitive(k) {
        return None;
    }
    let (_, u, _) = col_hnf(k);
    let uinv = u.inverse()?;
    let mut rows = k.to_rows();
    rows.extend((s..n).map(|i| uinv.row(i).to_vec()));
    let out = IntMatrix::from_rows(&rows);
    Some(out)
}

/// Coordinates of `v` in the basis given by the rows of `basis`, if `v`
/// lies in their integer span.
pub fn coordinates(basis: &IntMatrix, v: &[i64]) -> Option<Vec<i64>> {
    solve(&basis.transpose(), v)
}
