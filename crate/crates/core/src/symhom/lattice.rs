use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::matrix::{self, IntMatrix};
use crate::error::{Error, Result};
use crate::permgrp::Perm;

/// First homology of a genus `g` surface with `b` punctures.
///
/// Basis order is `a_1..a_g, b_1..b_g, c_1..c_{b-1}`; the last puncture class
/// `c_b` is never a basis vector and always stands for `-(c_1 + .. + c_{b-1})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyLattice {
    genus: usize,
    punctures: usize,
}

impl HomologyLattice {
    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn punctures(&self) -> usize {
        self.punctures
    }

    /// Handle block dimension `2g`.
    pub fn handle_rank(&self) -> usize {
        2 * self.genus
    }

    pub fn rank(&self) -> usize {
        2 * self.genus + self.punctures.saturating_sub(1)
    }

    fn check(&self, v: &[i64]) -> Result<()> {
        if v.len() == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: v.len(),
            })
        }
    }

    fn unit(&self, idx: usize, label: String) -> HClass {
        let mut coords = vec![0; self.rank()];
        coords[idx] = 1;
        HClass::labeled(coords, label)
    }

    /// `a_i`, 1-based.
    pub fn a(&self, i: usize) -> HClass {
        assert!((1..=self.genus).contains(&i), "a-index {i} out of range");
        self.unit(i - 1, format!("a{i}"))
    }

    /// `b_i`, 1-based.
    pub fn b(&self, i: usize) -> HClass {
        assert!((1..=self.genus).contains(&i), "b-index {i} out of range");
        self.unit(self.genus + i - 1, format!("b{i}"))
    }

    /// Puncture class `c_j` for `1 <= j <= b`, with `c_b` expanded.
    pub fn c(&self, j: usize) -> HClass {
        assert!(
            (1..=self.punctures).contains(&j),
            "puncture {j} out of range"
        );
        if j < self.punctures {
            self.unit(2 * self.genus + j - 1, format!("c{j}"))
        } else {
            let mut coords = vec![0; self.rank()];
            coords[2 * self.genus..].iter_mut().for_each(|x| *x = -1);
            HClass::labeled(coords, format!("c{j}"))
        }
    }

    pub fn zero(&self) -> HClass {
        HClass::new(vec![0; self.rank()])
    }

    /// The intersection form as a `rank x rank` matrix.
    pub fn pairing_matrix(&self) -> IntMatrix {
        let n = self.rank();
        let g = self.genus;
        let mut omega = IntMatrix::zeros(n, n);
        for i in 0..g {
            omega[(i, g + i)] = 1;
            omega[(g + i, i)] = -1;
        }
        omega
    }

    pub fn pairing(&self, u: &HClass, v: &HClass) -> Result<i64> {
        self.check(&u.coords)?;
        self.check(&v.coords)?;
        Ok(pair_coords(self.genus, &u.coords, &v.coords))
    }

    /// Homology action of the Dehn twist about a curve of class `c`:
    /// `v -> v + <v, c> c`.
    pub fn transvection(&self, c: &HClass) -> Result<IntMatrix> {
        self.check(&c.coords)?;
        if c.is_zero() {
            return Err(Error::DegenerateTwist);
        }
        let n = self.rank();
        let mut m = IntMatrix::identity(n);
        // column j is e_j + <e_j, c> c
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            let t = pair_coords(self.genus, &e, &c.coords);
            if t != 0 {
                for i in 0..n {
                    m[(i, j)] = matrix::add(m[(i, j)], matrix::mul(t, c.coords[i]));
                }
            }
        }
        Ok(m)
    }

    /// Action of a puncture permutation on the `c`-block: column `j` holds the
    /// coordinates of `c_{pi(j)}` (with `c_b` expanded).
    pub fn puncture_block(&self, perm: &Perm) -> Result<IntMatrix> {
        if perm.degree() != self.punctures {
            return Err(Error::DimensionMismatch {
                expected: self.punctures,
                found: perm.degree(),
            });
        }
        let n = self.punctures.saturating_sub(1);
        let off = 2 * self.genus;
        let columns: Vec<Vec<i64>> = (0..n)
            .map(|j| self.c(perm.image(j) + 1).coords[off..].to_vec())
            .collect();
        Ok(if n == 0 {
            IntMatrix::zeros(0, 0)
        } else {
            IntMatrix::from_columns(&columns)
        })
    }

    /// `M^T Omega M == Omega` on the full (degenerate) form.
    pub fn is_symplectic(&self, m: &IntMatrix) -> bool {
        if m.rows() != self.rank() || m.cols() != self.rank() {
            return false;
        }
        let omega = self.pairing_matrix();
        m.transpose().mul(&omega).mul(m) == omega
    }
}

/// Builds the lattice for genus `g >= 1` and `b >= 0` punctures.
pub fn make_lattice(g: usize, b: usize) -> Result<HomologyLattice> {
    if g < 1 {
        return Err(Error::InvalidGenus(g));
    }
    Ok(HomologyLattice {
        genus: g,
        punctures: b,
    })
}

pub fn is_involution(m: &IntMatrix) -> bool {
    m.is_square() && m.mul(m).is_identity()
}

pub(crate) fn pair_coords(genus: usize, u: &[i64], v: &[i64]) -> i64 {
    (0..genus).fold(0, |acc, i| {
        let t = matrix::sub(
            matrix::mul(u[i], v[genus + i]),
            matrix::mul(u[genus + i], v[i]),
        );
        matrix::add(acc, t)
    })
}

/// A homology class with an optional curve label.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HClass {
    pub coords: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub label: Option<String>,
}

impl HClass {
    pub fn new(coords: Vec<i64>) -> Self {
        HClass {
            coords,
            label: None,
        }
    }

    pub fn labeled(coords: Vec<i64>, label: impl Into<String>) -> Self {
        HClass {
            coords,
            label: Some(label.into()),
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&x| x == 0)
    }

    /// Equal up to sign, ignoring labels.
    pub fn same_up_to_sign(&self, other: &HClass) -> bool {
        self.coords == other.coords
            || self
                .coords
                .iter()
                .zip(&other.coords)
                .all(|(a, b)| *a == -*b)
    }

    /// gcd of the handle coordinates (the first `2g` entries).
    pub fn handle_content(&self, genus: usize) -> i64 {
        self.coords[..2 * genus]
            .iter()
            .fold(0, |g, &x| matrix::gcd(g, x))
    }

    pub fn scaled(&self, t: i64) -> HClass {
        HClass::new(matrix::scaled(&self.coords, t))
    }
}

impl fmt::Debug for HClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(l) => write!(f, "{l}{:?}", self.coords),
            None => write!(f, "{:?}", self.coords),
        }
    }
}

impl Add for &HClass {
    type Output = HClass;

    fn add(self, rhs: &HClass) -> HClass {
        assert_eq!(self.coords.len(), rhs.coords.len());
        HClass::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(&a, &b)| matrix::add(a, b))
                .collect(),
        )
    }
}

impl Sub for &HClass {
    type Output = HClass;

    fn sub(self, rhs: &HClass) -> HClass {
        assert_eq!(self.coords.len(), rhs.coords.len());
        HClass::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(&a, &b)| matrix::sub(a, b))
                .collect(),
        )
    }
}

impl Neg for &HClass {
    type Output = HClass;

    fn neg(self) -> HClass {
        self.scaled(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_ranks() {
        let l = make_lattice(1, 0).unwrap();
        assert_eq!(l.rank(), 2);
        assert_eq!(
            l.pairing_matrix(),
            IntMatrix::from_rows(&[vec![0, 1], vec![-1, 0]])
        );
        assert_eq!(make_lattice(3, 0).unwrap().rank(), 6);
        assert_eq!(make_lattice(3, 5).unwrap().rank(), 10);
        assert_eq!(make_lattice(0, 2), Err(Error::InvalidGenus(0)));
    }

    #[test]
    fn pairing_convention() {
        let l = make_lattice(2, 0).unwrap();
        assert_eq!(l.pairing(&l.a(1), &l.b(1)), Ok(1));
        assert_eq!(l.pairing(&l.b(1), &l.a(1)), Ok(-1));
        assert_eq!(l.pairing(&(&l.a(1) - &l.a(2)), &l.b(2)), Ok(-1));
        let short = HClass::new(vec![1, 0]);
        assert!(matches!(
            l.pairing(&short, &l.a(1)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn transvection_examples() {
        let l = make_lattice(1, 0).unwrap();
        let t = l.transvection(&l.a(1)).unwrap();
        // a1 -> a1, b1 -> b1 - a1
        assert_eq!(t.column(0), vec![1, 0]);
        assert_eq!(t.column(1), vec![-1, 1]);
        assert_eq!(l.transvection(&l.zero()), Err(Error::DegenerateTwist));

        // pure puncture class twists trivially
        let l = make_lattice(2, 3).unwrap();
        assert!(l.transvection(&l.c(1)).unwrap().is_identity());
        assert!(l.transvection(&l.c(3)).unwrap().is_identity());
    }

    #[test]
    fn transvection_with_puncture_content() {
        // g = 1, b = 2: c = a1 + c1 sends b1 to b1 - (a1 + c1)
        let l = make_lattice(1, 2).unwrap();
        let c = &l.a(1) + &l.c(1);
        let t = l.transvection(&c).unwrap();
        assert_eq!(t.apply(&l.b(1).coords), vec![-1, 1, -1]);
        assert_eq!(t.apply(&l.a(1).coords), l.a(1).coords);
        assert_eq!(t.apply(&l.c(1).coords), l.c(1).coords);
    }

    #[test]
    fn symplectic_and_involution_checks() {
        let l = make_lattice(1, 0).unwrap();
        let id = IntMatrix::identity(2);
        assert!(l.is_symplectic(&id) && is_involution(&id));
        let t = l.transvection(&l.a(1)).unwrap();
        assert!(l.is_symplectic(&t) && !is_involution(&t));
        let minus = id.neg();
        assert!(l.is_symplectic(&minus) && is_involution(&minus));
    }
}
