//! Completion of a partial involution to a full integral involution of the
//! homology lattice that preserves the intersection form.
//!
//! The constrained vectors span a sublattice `V` of the handle block. Its
//! radical `N` is split off with a complement `H`, an isotropic dual `N'` of
//! `N` is chosen inside `H^perp`, and the partial map is extended to
//! `W = N + H + N'` by solving for the images of `N'`. Outside `W` the
//! completion is the identity. The puncture block is the permutation action
//! and the mixed (handle to puncture) block is zero unless a constraint
//! forces it, in which case it is solved for.

use super::intlin::{self, complete_basis, coordinates, kernel, row_basis};
use super::lattice::{pair_coords, HClass, HomologyLattice};
use super::matrix::{add, IntMatrix};
use crate::error::{Error, Result};
use crate::permgrp::Perm;

fn no_completion(msg: impl Into<String>) -> Error {
    Error::NoCompletion(msg.into())
}

/// Completes the partial assignment to an Ω-preserving integral involution.
///
/// Each pair `(u, v)` imposes `u -> v` and `v -> u`; each `(w, s)` in `fixed`
/// imposes `w -> s w` with `s = ±1`. The puncture classes are permuted by
/// `puncture_perm`.
pub fn complete_partial_involution(
    lattice: &HomologyLattice,
    pairs: &[(HClass, HClass)],
    fixed: &[(HClass, i64)],
    puncture_perm: &Perm,
) -> Result<IntMatrix> {
    let n = lattice.rank();
    let g = lattice.genus();
    let h = 2 * g;
    if puncture_perm.degree() != lattice.punctures() {
        return Err(Error::DimensionMismatch {
            expected: lattice.punctures(),
            found: puncture_perm.degree(),
        });
    }
    if !puncture_perm.is_involution() {
        return Err(Error::InvalidPermutation(format!(
            "{puncture_perm} is not an involution"
        )));
    }

    let mut constraints: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    for (u, v) in pairs {
        for c in [u, v] {
            if c.coords.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: c.coords.len(),
                });
            }
        }
        constraints.push((u.coords.clone(), v.coords.clone()));
        constraints.push((v.coords.clone(), u.coords.clone()));
    }
    for (w, s) in fixed {
        if w.coords.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: w.coords.len(),
            });
        }
        if s.abs() != 1 {
            return Err(Error::InvalidArgument(format!(
                "fixed-class sign must be ±1, got {s}"
            )));
        }
        constraints.push((w.coords.clone(), w.scaled(*s).coords));
    }

    let handle_pairs: Vec<(Vec<i64>, Vec<i64>)> = constraints
        .iter()
        .map(|(s, d)| (s[..h].to_vec(), d[..h].to_vec()))
        .collect();
    let handle = complete_handle_block(g, &handle_pairs)?;

    let punct = lattice.puncture_block(puncture_perm)?;
    let mixed = solve_mixed_block(g, n, &handle, &punct, &constraints)?;

    let mut m = IntMatrix::zeros(n, n);
    for i in 0..h {
        for j in 0..h {
            m[(i, j)] = handle[(i, j)];
        }
    }
    for i in h..n {
        for j in 0..h {
            m[(i, j)] = mixed[(i - h, j)];
        }
        for j in h..n {
            m[(i, j)] = punct[(i - h, j - h)];
        }
    }

    if !lattice.is_symplectic(&m) || !super::is_involution(&m) {
        return Err(no_completion(
            "assembled matrix failed the involution/form checks",
        ));
    }
    for (s, d) in &constraints {
        if m.apply(s) != *d {
            return Err(no_completion("assembled matrix violates a constraint"));
        }
    }
    Ok(m)
}

/// Lower-left block `X` with `X s_h = d_c - P s_c` for every constraint and
/// `X H + P X = 0`; zero whenever the constraints allow it.
fn solve_mixed_block(
    g: usize,
    n: usize,
    handle: &IntMatrix,
    punct: &IntMatrix,
    constraints: &[(Vec<i64>, Vec<i64>)],
) -> Result<IntMatrix> {
    let h = 2 * g;
    let p = n - h;
    let residuals: Vec<(Vec<i64>, Vec<i64>)> = constraints
        .iter()
        .map(|(s, d)| {
            let ps = punct.apply(&s[h..]);
            let r: Vec<i64> = d[h..].iter().zip(&ps).map(|(&a, &b)| a - b).collect();
            (s[..h].to_vec(), r)
        })
        .collect();
    if p == 0 || residuals.iter().all(|(_, r)| r.iter().all(|&x| x == 0)) {
        return Ok(IntMatrix::zeros(p, h));
    }

    // Unknown X[i][j] is variable i * h + j.
    let vars = p * h;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut rhs: Vec<i64> = Vec::new();
    for (s, r) in &residuals {
        for i in 0..p {
            let mut row = vec![0; vars];
            for j in 0..h {
                row[i * h + j] = s[j];
            }
            rows.push(row);
            rhs.push(r[i]);
        }
    }
    // (X H + P X)[i][j] = sum_k X[i][k] H[k][j] + sum_l P[i][l] X[l][j] = 0
    for i in 0..p {
        for j in 0..h {
            let mut row = vec![0; vars];
            for k in 0..h {
                row[i * h + k] = add(row[i * h + k], handle[(k, j)]);
            }
            for l in 0..p {
                row[l * h + j] = add(row[l * h + j], punct[(i, l)]);
            }
            rows.push(row);
            rhs.push(0);
        }
    }
    let x = intlin::solve(&IntMatrix::from_rows(&rows), &rhs).ok_or_else(|| {
        no_completion("puncture-class components admit no compatible mixed block")
    })?;
    Ok(IntMatrix::from_rows(
        &x.chunks(h).map(<[i64]>::to_vec).collect::<Vec<_>>(),
    ))
}

/// Pairing functional rows `<v, .>` for each row `v`.
fn functionals(g: usize, vectors: &[Vec<i64>]) -> IntMatrix {
    let dim = 2 * g;
    let rows: Vec<Vec<i64>> = vectors
        .iter()
        .map(|v| {
            (0..dim)
                .map(|k| {
                    let mut e = vec![0; dim];
                    e[k] = 1;
                    pair_coords(g, v, &e)
                })
                .collect()
        })
        .collect();
    if rows.is_empty() {
        IntMatrix::zeros(0, dim)
    } else {
        IntMatrix::from_rows(&rows)
    }
}

fn gram(g: usize, vectors: &[Vec<i64>]) -> IntMatrix {
    let rows: Vec<Vec<i64>> = vectors
        .iter()
        .map(|u| vectors.iter().map(|v| pair_coords(g, u, v)).collect())
        .collect();
    IntMatrix::from_rows(&rows)
}

fn combine(coeffs: &[i64], vectors: &[Vec<i64>], dim: usize) -> Vec<i64> {
    let mut out = vec![0; dim];
    for (&c, v) in coeffs.iter().zip(vectors) {
        if c != 0 {
            super::matrix::axpy(&mut out, c, v);
        }
    }
    out
}

/// Images of the dual vectors `w_j` under the extension.
///
/// Writing `f(w_j) = base_j + sum_l nu_jl n_l`, the `w`- and `h`-parts of
/// `base_j` are forced by the pairing with `V`; the radical part `nu` then
/// solves the linear isotropy and involution conditions.
fn dual_images(
    g: usize,
    n_vecs: &[Vec<i64>],
    h_vecs: &[Vec<i64>],
    w_vecs: &[Vec<i64>],
    fn_vecs: &[Vec<i64>],
    fh_vecs: &[Vec<i64>],
    image: &dyn Fn(&[i64]) -> Vec<i64>,
) -> Result<Vec<Vec<i64>>> {
    let (s, dim) = (n_vecs.len(), 2 * g);
    if s == 0 {
        return Ok(Vec::new());
    }
    let v_vecs: Vec<&Vec<i64>> = n_vecs.iter().chain(h_vecs).collect();
    let fv_vecs: Vec<&Vec<i64>> = fn_vecs.iter().chain(fh_vecs).collect();
    let mut wh: Vec<Vec<i64>> = w_vecs.to_vec();
    wh.extend(h_vecs.iter().cloned());
    let system = IntMatrix::from_rows(
        &fv_vecs
            .iter()
            .map(|fx| wh.iter().map(|y| pair_coords(g, fx, y)).collect())
            .collect::<Vec<Vec<i64>>>(),
    );
    let mut base = Vec::with_capacity(s);
    for w in w_vecs {
        let rhs: Vec<i64> = v_vecs.iter().map(|x| pair_coords(g, x, w)).collect();
        let z = intlin::solve(&system, &rhs)
            .ok_or_else(|| no_completion("dual of the radical has no compatible image"))?;
        base.push(combine(&z, &wh, dim));
    }

    // base_j = sum_k A_jk w_k + eta_j with eta_j in H; A is read off by pairing with N.
    let a: Vec<Vec<i64>> = base
        .iter()
        .map(|b| n_vecs.iter().map(|n| pair_coords(g, n, b)).collect())
        .collect();
    let eta: Vec<Vec<i64>> = (0..s)
        .map(|j| {
            let mut e = base[j].clone();
            for k in 0..s {
                if a[j][k] != 0 {
                    super::matrix::axpy(&mut e, -a[j][k], &w_vecs[k]);
                }
            }
            e
        })
        .collect();

    let vars = s * s;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut rhs: Vec<i64> = Vec::new();
    // f(f(w_j)) = w_j, coordinate by coordinate.
    for j in 0..s {
        let mut constant = image(&eta[j]);
        for k in 0..s {
            if a[j][k] != 0 {
                super::matrix::axpy(&mut constant, a[j][k], &base[k]);
            }
        }
        for c in 0..dim {
            let mut row = vec![0i64; vars];
            for k in 0..s {
                for l in 0..s {
                    // A_jk nu_kl n_l
                    row[k * s + l] = add(row[k * s + l], a[j][k] * n_vecs[l][c]);
                }
            }
            for k in 0..s {
                // nu_jk f(n_k)
                row[j * s + k] = add(row[j * s + k], fn_vecs[k][c]);
            }
            rows.push(row);
            rhs.push(add(w_vecs[j][c], -constant[c]));
        }
    }
    // <f(w_i), f(w_j)> = 0 for i < j.
    for i in 0..s {
        for j in i + 1..s {
            let mut row = vec![0i64; vars];
            for l in 0..s {
                row[j * s + l] = add(row[j * s + l], pair_coords(g, &base[i], &n_vecs[l]));
                row[i * s + l] = add(row[i * s + l], pair_coords(g, &n_vecs[l], &base[j]));
            }
            rows.push(row);
            rhs.push(-pair_coords(g, &base[i], &base[j]));
        }
    }
    let nu = intlin::solve(&IntMatrix::from_rows(&rows), &rhs)
        .ok_or_else(|| no_completion("no involutive isotropic extension across the radical"))?;
    Ok((0..s)
        .map(|j| {
            let mut v = base[j].clone();
            for l in 0..s {
                if nu[j * s + l] != 0 {
                    super::matrix::axpy(&mut v, nu[j * s + l], &n_vecs[l]);
                }
            }
            v
        })
        .collect())
}

/// Completion on the closed-surface block `Z^{2g}`.
fn complete_handle_block(g: usize, constraints: &[(Vec<i64>, Vec<i64>)]) -> Result<IntMatrix> {
    let dim = 2 * g;
    let nonzero: Vec<&(Vec<i64>, Vec<i64>)> = constraints
        .iter()
        .filter(|(s, d)| s.iter().any(|&x| x != 0) || d.iter().any(|&x| x != 0))
        .collect();
    if nonzero.is_empty() {
        return Ok(IntMatrix::identity(dim));
    }
    for (s, d) in &nonzero {
        if s.iter().all(|&x| x == 0) != d.iter().all(|&x| x == 0) {
            return Err(no_completion(
                "a zero handle vector is mapped to a nonzero one",
            ));
        }
    }
    let sources: Vec<Vec<i64>> = nonzero.iter().map(|(s, _)| s.clone()).collect();
    let targets: Vec<Vec<i64>> = nonzero.iter().map(|(_, d)| d.clone()).collect();
    let mut all = sources.clone();
    all.extend(targets.iter().cloned());

    let basis = row_basis(&IntMatrix::from_rows(&all));
    let r = basis.rows();
    if !intlin::is_primitive(&basis) {
        return Err(no_completion("constrained sublattice is not primitive"));
    }
    let basis_rows = basis.to_rows();

    // f on the basis, written in basis coordinates: f(v_i) = sum_k F[i][k] v_k.
    let src_t = IntMatrix::from_rows(&sources).transpose();
    let mut f_rows = Vec::with_capacity(r);
    for v in &basis_rows {
        let c = intlin::solve(&src_t, v)
            .ok_or_else(|| no_completion("constraint sources do not span their image"))?;
        let image = combine(&c, &targets, dim);
        let coords = coordinates(&basis, &image)
            .ok_or_else(|| no_completion("constraint images leave the constrained sublattice"))?;
        f_rows.push(coords);
    }
    let f = IntMatrix::from_rows(&f_rows);
    for (s, d) in sources.iter().zip(&targets) {
        let cs = coordinates(&basis, s).expect("source lies in its own span");
        let image = combine(&f.transpose().apply(&cs), &basis_rows, dim);
        if &image != d {
            return Err(no_completion("constraints are not linearly consistent"));
        }
    }
    if !f.mul(&f).is_identity() {
        return Err(no_completion("the partial map is not involutive"));
    }
    let gv = gram(g, &basis_rows);
    if f.mul(&gv).mul(&f.transpose()) != gv {
        return Err(no_completion(
            "the partial map does not preserve the pairing",
        ));
    }

    // Split V = N + H with N the radical and H any complement.
    let nk = kernel(&gv);
    let s = nk.rows();
    let u = if s == 0 {
        IntMatrix::identity(r)
    } else {
        complete_basis(&nk).ok_or_else(|| no_completion("radical is not a direct summand"))?
    };
    let t = r - s;
    let ambient = |coeffs: &[i64]| combine(coeffs, &basis_rows, dim);
    let n_vecs: Vec<Vec<i64>> = (0..s).map(|k| ambient(u.row(k))).collect();
    let h_vecs: Vec<Vec<i64>> = (0..t).map(|i| ambient(u.row(s + i))).collect();
    let image = |v: &[i64]| {
        let c = coordinates(&basis, v).expect("vector lies in the constrained sublattice");
        combine(&f.transpose().apply(&c), &basis_rows, dim)
    };
    let fn_vecs: Vec<Vec<i64>> = n_vecs.iter().map(|v| image(v)).collect();
    let fh_vecs: Vec<Vec<i64>> = h_vecs.iter().map(|v| image(v)).collect();

    if t > 0 && gram(g, &h_vecs).inverse().is_none() {
        return Err(no_completion(
            "nondegenerate part of the constraints is not unimodular",
        ));
    }

    // Isotropic dual of N inside H^perp: <n_i, w_j> = delta_ij.
    let mut w_vecs: Vec<Vec<i64>> = Vec::with_capacity(s);
    if s > 0 {
        let mut fvecs = n_vecs.clone();
        fvecs.extend(h_vecs.iter().cloned());
        let fun = functionals(g, &fvecs);
        for j in 0..s {
            let mut e = vec![0; s + t];
            e[j] = 1;
            let w = intlin::solve(&fun, &e)
                .ok_or_else(|| no_completion("radical has no integral dual"))?;
            w_vecs.push(w);
        }
        for j in 0..s {
            for i in 0..j {
                let c = pair_coords(g, &w_vecs[i], &w_vecs[j]);
                if c != 0 {
                    let ni = n_vecs[i].clone();
                    super::matrix::axpy(&mut w_vecs[j], c, &ni);
                }
            }
        }
    }
    let fw_vecs = dual_images(g, &n_vecs, &h_vecs, &w_vecs, &fn_vecs, &fh_vecs, &image)?;

    let mut e_vecs: Vec<Vec<i64>> = Vec::with_capacity(2 * s + t);
    let mut f_vecs: Vec<Vec<i64>> = Vec::with_capacity(2 * s + t);
    e_vecs.extend(n_vecs.iter().cloned());
    f_vecs.extend(fn_vecs);
    e_vecs.extend(h_vecs.iter().cloned());
    f_vecs.extend(fh_vecs);
    e_vecs.extend(w_vecs.iter().cloned());
    f_vecs.extend(fw_vecs);

    let gw = gram(g, &e_vecs);
    let gw_inv = gw
        .inverse()
        .ok_or_else(|| no_completion("extended sublattice is not unimodular"))?;
    let fun_w = functionals(g, &e_vecs);

    let mut columns = Vec::with_capacity(dim);
    for k in 0..dim {
        let mut x = vec![0; dim];
        x[k] = 1;
        let y = gw_inv.apply(&fun_w.apply(&x));
        let proj = combine(&y, &e_vecs, dim);
        let img = combine(&y, &f_vecs, dim);
        let col: Vec<i64> = (0..dim).map(|i| add(add(x[i], -proj[i]), img[i])).collect();
        columns.push(col);
    }
    let m = IntMatrix::from_columns(&columns);

    for (s, d) in &nonzero {
        if m.apply(s) != *d {
            return Err(no_completion("handle completion violates a constraint"));
        }
    }
    debug_assert!(m.mul(&m).is_identity());
    Ok(m)
}
