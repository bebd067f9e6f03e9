//! Images of mapping classes in `H_1 ⋊ Sym_b`: an integer matrix together
//! with the induced permutation of the punctures.

mod builders;
mod relations;

use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

pub use builders::{
    build_i, build_i12, build_i12_modified, build_i13, build_i_indexed, build_j,
    factor_orientation, involution_set, lantern_factor, pivot, rho1, rho2, rho3, rotation,
    FactorOrder, FixedPointBudget,
};
pub use relations::{check_relations, CheckEntry, CheckReport};

use crate::error::{Error, Result};
use crate::permgrp::Perm;
use crate::symhom::{HClass, HomologyLattice, IntMatrix};

/// Generator names, in the order used for tie-breaking shortest words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Generator {
    #[serde(rename = "rho1")]
    Rho1,
    #[serde(rename = "rho2")]
    Rho2,
    #[serde(rename = "rho3")]
    Rho3,
    I12,
    I13,
    I,
    J,
}

impl Generator {
    pub const ALL: [Generator; 7] = [
        Generator::Rho1,
        Generator::Rho2,
        Generator::Rho3,
        Generator::I12,
        Generator::I13,
        Generator::I,
        Generator::J,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Generator::Rho1 => "rho1",
            Generator::Rho2 => "rho2",
            Generator::Rho3 => "rho3",
            Generator::I12 => "I12",
            Generator::I13 => "I13",
            Generator::I => "I",
            Generator::J => "J",
        }
    }

    pub fn parse(s: &str) -> Option<Generator> {
        Self::ALL.into_iter().find(|g| g.name() == s)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The three word-certificate constructions, named by involution count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    FourInv,
    FiveInv,
    SixInv,
}

impl Flavor {
    pub fn count(self) -> usize {
        match self {
            Flavor::FourInv => 4,
            Flavor::FiveInv => 5,
            Flavor::SixInv => 6,
        }
    }

    pub fn generators(self) -> &'static [Generator] {
        use Generator::*;
        match self {
            Flavor::FourInv => &[Rho1, Rho2, Rho3, J],
            Flavor::FiveInv => &[Rho1, Rho2, Rho3, I12, I13],
            Flavor::SixInv => &[Rho1, Rho2, Rho3, I12, I13, I],
        }
    }
}

/// A matrix on the punctured homology lattice plus a puncture permutation,
/// with `M c_j = c_{pi(j)}` for every puncture.
#[derive(Clone, Serialize)]
pub struct RepElement {
    #[serde(skip)]
    lattice: HomologyLattice,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(serialize_with = "serialize_rows")]
    matrix: IntMatrix,
    perm: Perm,
}

fn serialize_rows<S: serde::Serializer>(
    m: &IntMatrix,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    m.to_rows().serialize(s)
}

impl PartialEq for RepElement {
    fn eq(&self, other: &Self) -> bool {
        self.lattice == other.lattice && self.matrix == other.matrix && self.perm == other.perm
    }
}

impl Eq for RepElement {}

impl Hash for RepElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
        self.perm.hash(state);
    }
}

impl fmt::Debug for RepElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RepElement({}, perm {}) {:?}",
            self.name.as_deref().unwrap_or("-"),
            self.perm,
            self.matrix
        )
    }
}

impl RepElement {
    /// Checks shape and the puncture compatibility law.
    pub fn new(lattice: HomologyLattice, matrix: IntMatrix, perm: Perm) -> Result<Self> {
        let n = lattice.rank();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: matrix.rows(),
            });
        }
        if perm.degree() != lattice.punctures() {
            return Err(Error::DimensionMismatch {
                expected: lattice.punctures(),
                found: perm.degree(),
            });
        }
        let e = RepElement {
            lattice,
            name: None,
            matrix,
            perm,
        };
        if !e.is_symplectic() {
            return Err(Error::VerificationFailed(
                "matrix does not preserve the intersection form".into(),
            ));
        }
        if !e.is_compatible() {
            return Err(Error::VerificationFailed(format!(
                "matrix does not permute the puncture classes as {}",
                e.perm
            )));
        }
        Ok(e)
    }

    pub fn identity(lattice: HomologyLattice) -> Self {
        RepElement {
            lattice,
            name: Some("id".into()),
            matrix: IntMatrix::identity(lattice.rank()),
            perm: Perm::identity(lattice.punctures()),
        }
    }

    /// The image of the Dehn twist about a curve of class `c`.
    pub fn twist(lattice: HomologyLattice, c: &HClass) -> Result<Self> {
        let m = lattice.transvection(c)?;
        let name = c.label.as_ref().map(|l| format!("T_{l}"));
        Ok(RepElement {
            lattice,
            name,
            matrix: m,
            perm: Perm::identity(lattice.punctures()),
        })
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn lattice(&self) -> HomologyLattice {
        self.lattice
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    fn same_lattice(&self, other: &RepElement) -> Result<()> {
        if self.lattice == other.lattice {
            Ok(())
        } else {
            Err(Error::LatticeMismatch(
                self.lattice.genus(),
                self.lattice.punctures(),
                other.lattice.genus(),
                other.lattice.punctures(),
            ))
        }
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &RepElement) -> Result<RepElement> {
        self.same_lattice(other)?;
        Ok(RepElement {
            lattice: self.lattice,
            name: None,
            matrix: self.matrix.mul(&other.matrix),
            perm: self.perm.compose(&other.perm),
        })
    }

    /// Exact inverse, using the block structure `[[H, 0], [X, P]]` with `H`
    /// symplectic: `H^-1 = -Ω H^T Ω`, `P^-1` from the inverse permutation.
    pub fn inverse(&self) -> RepElement {
        let l = self.lattice;
        let g = l.genus();
        let h = 2 * g;
        let n = l.rank();
        let hb = self.matrix.leading_block(h);
        let omega = make_omega(g);
        let h_inv = omega.mul(&hb.transpose()).mul(&omega).neg();
        let perm_inv = self.perm.inverse();
        let p_inv = l
            .puncture_block(&perm_inv)
            .expect("degree matches the lattice");
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..h {
            for j in 0..h {
                m[(i, j)] = h_inv[(i, j)];
            }
        }
        if n > h {
            let p = n - h;
            // X' = -P^-1 X H^-1
            let mut x = IntMatrix::zeros(p, h);
            for i in 0..p {
                for j in 0..h {
                    x[(i, j)] = self.matrix[(h + i, j)];
                }
            }
            let x_inv = p_inv.mul(&x).mul(&h_inv).neg();
            for i in 0..p {
                for j in 0..h {
                    m[(h + i, j)] = x_inv[(i, j)];
                }
                for j in 0..p {
                    m[(h + i, h + j)] = p_inv[(i, j)];
                }
            }
        }
        let out = RepElement {
            lattice: l,
            name: self.name.as_ref().map(|s| format!("{s}^-1")),
            matrix: m,
            perm: perm_inv,
        };
        debug_assert!(
            self.matrix.mul(&out.matrix).is_identity(),
            "inverse of a non-symplectic handle block"
        );
        out
    }

    /// Exact equality of matrix and permutation; names are ignored.
    pub fn equal(&self, other: &RepElement) -> Result<bool> {
        self.same_lattice(other)?;
        Ok(self == other)
    }

    /// `self · x · self^-1`.
    pub fn conjugate(&self, x: &RepElement) -> Result<RepElement> {
        self.compose(x)?.compose(&self.inverse())
    }

    pub fn apply(&self, c: &HClass) -> HClass {
        HClass::new(self.matrix.apply(&c.coords))
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity() && self.perm.is_identity()
    }

    pub fn is_involution(&self) -> bool {
        self.matrix.mul(&self.matrix).is_identity() && self.perm.compose(&self.perm).is_identity()
    }

    pub fn is_symplectic(&self) -> bool {
        self.lattice.is_symplectic(&self.matrix)
    }

    /// `M c_j = c_{pi(j)}` for `1 <= j <= b`, with `c_b` expanded.
    pub fn is_compatible(&self) -> bool {
        let l = self.lattice;
        (1..=l.punctures())
            .all(|j| self.matrix.apply(&l.c(j).coords) == l.c(self.perm.image(j - 1) + 1).coords)
    }

    /// Whether the handle-to-puncture block vanishes.
    pub fn mixed_block_is_zero(&self) -> bool {
        let h = self.lattice.handle_rank();
        (h..self.lattice.rank()).all(|i| (0..h).all(|j| self.matrix[(i, j)] == 0))
    }
}

fn make_omega(g: usize) -> IntMatrix {
    let mut o = IntMatrix::zeros(2 * g, 2 * g);
    for i in 0..g {
        o[(i, g + i)] = 1;
        o[(g + i, i)] = -1;
    }
    o
}
