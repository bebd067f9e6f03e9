//! Reduction of the closed-surface block mod p and brute-force enumeration of
//! the generated subgroup of `Sp(2g, F_p)`.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rep::RepElement;
use crate::surface::{build_registry, SurfaceParams};
use crate::symhom::IntMatrix;

/// Largest genus enumerated in full.
pub const MAX_ENUMERATION_GENUS: usize = 3;
/// Default state cap, a little above `|Sp(6, F_2)|`.
pub const DEFAULT_CAP: usize = 2_000_000;

const MAX_DIM: usize = 2 * MAX_ENUMERATION_GENUS;
type Cells = [u8; MAX_DIM * MAX_DIM];

/// `p^(g^2) · prod_{i=1..g} (p^(2i) - 1)`.
pub fn sp_order(g: usize, p: u64) -> BigUint {
    let p = BigUint::from(p);
    let mut order = Pow::pow(&p, g * g);
    for i in 1..=g {
        order *= Pow::pow(&p, 2 * i) - BigUint::one();
    }
    order
}

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// A `2g x 2g` matrix over `F_p`, `g <= 3`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModPMatrix {
    p: u8,
    n: usize,
    cells: Cells,
}

impl ModPMatrix {
    pub fn identity(g: usize, p: u64) -> Result<Self> {
        let (n, p) = check_shape(g, p)?;
        let mut cells = [0; MAX_DIM * MAX_DIM];
        for i in 0..n {
            cells[i * n + i] = 1;
        }
        Ok(ModPMatrix { p, n, cells })
    }

    /// Reduces a square integer matrix of even size.
    pub fn from_int(m: &IntMatrix, p: u64) -> Result<Self> {
        if m.rows() != m.cols() || !m.rows().is_multiple_of(2) {
            return Err(Error::DimensionMismatch {
                expected: m.rows() + m.rows() % 2,
                found: m.cols(),
            });
        }
        let (n, pp) = check_shape(m.rows() / 2, p)?;
        let mut cells = [0; MAX_DIM * MAX_DIM];
        for i in 0..n {
            for j in 0..n {
                cells[i * n + j] = m[(i, j)].rem_euclid(p as i64) as u8;
            }
        }
        Ok(ModPMatrix { p: pp, n, cells })
    }

    /// The closed-surface block of a representation element, reduced mod `p`.
    pub fn from_rep(e: &RepElement, p: u64) -> Result<Self> {
        let n = e.lattice().handle_rank();
        let m = e.matrix();
        let mut block = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                block[(i, j)] = m[(i, j)];
            }
        }
        Self::from_int(&block, p)
    }

    pub fn prime(&self) -> u64 {
        self.p as u64
    }

    pub fn genus(&self) -> usize {
        self.n / 2
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.cells[i * self.n + j]
    }

    pub fn mul(&self, other: &ModPMatrix) -> ModPMatrix {
        ModPMatrix {
            p: self.p,
            n: self.n,
            cells: mul_cells(&self.cells, &other.cells, self.n, self.p),
        }
    }

    /// `M^T Omega M = Omega` with `Omega` pairing `a_i` with `b_i`.
    pub fn is_symplectic(&self) -> bool {
        let (n, g, p) = (self.n, self.n / 2, self.p as i64);
        let omega = |i: usize, j: usize| -> i64 {
            if j == i + g && i < g {
                1
            } else if i == j + g && j < g {
                -1
            } else {
                0
            }
        };
        for r in 0..n {
            for s in 0..n {
                let mut acc = 0i64;
                for i in 0..n {
                    for j in 0..n {
                        acc += self.get(i, r) as i64 * omega(i, j) * self.get(j, s) as i64;
                    }
                }
                if (acc - omega(r, s)).rem_euclid(p) != 0 {
                    return false;
                }
            }
        }
        true
    }

    fn key(&self) -> u128 {
        pack(&self.cells, self.n, self.p)
    }
}

impl fmt::Debug for ModPMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ModPMatrix mod {} [", self.p)?;
        for i in 0..self.n {
            writeln!(f, "  {:?}", &self.cells[i * self.n..(i + 1) * self.n])?;
        }
        write!(f, "]")
    }
}

fn bits(p: u8) -> u32 {
    u8::BITS - (p - 1).leading_zeros()
}

fn check_shape(g: usize, p: u64) -> Result<(usize, u8)> {
    if g == 0 || g > MAX_ENUMERATION_GENUS {
        return Err(Error::InvalidArgument(format!(
            "quotient enumeration supports genus 1..={MAX_ENUMERATION_GENUS}, got {g}"
        )));
    }
    if !is_prime(p) || p > u8::MAX as u64 {
        return Err(Error::InvalidArgument(format!(
            "{p} is not a supported prime"
        )));
    }
    let n = 2 * g;
    let p = p as u8;
    if bits(p) as usize * n * n > 128 {
        return Err(Error::InvalidArgument(format!(
            "matrices of size {n} mod {p} do not fit a 128-bit key"
        )));
    }
    Ok((n, p))
}

fn mul_cells(a: &Cells, b: &Cells, n: usize, p: u8) -> Cells {
    let mut c = [0u8; MAX_DIM * MAX_DIM];
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0u32;
            for k in 0..n {
                acc += a[i * n + k] as u32 * b[k * n + j] as u32;
            }
            c[i * n + j] = (acc % p as u32) as u8;
        }
    }
    c
}

fn pack(cells: &Cells, n: usize, p: u8) -> u128 {
    let w = bits(p);
    cells[..n * n]
        .iter()
        .fold(0u128, |k, &x| (k << w) | x as u128)
}

/// Twists about `alpha_i`, `beta_i`, `gamma_i` on the closed surface, mod `p`.
pub fn lickorish_generators(g: usize, p: u64) -> Result<Vec<ModPMatrix>> {
    let params = SurfaceParams::new(g, 0)?;
    let reg = build_registry(&params);
    let l = params.lattice();
    reg.lickorish_targets()
        .iter()
        .map(|id| ModPMatrix::from_rep(&RepElement::twist(l, reg.class(id))?, p))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Enumeration {
    Order(u64),
    CapExceeded { cap: usize },
}

impl Enumeration {
    pub fn order(&self) -> Option<u64> {
        match self {
            Enumeration::Order(n) => Some(*n),
            Enumeration::CapExceeded { .. } => None,
        }
    }
}

/// Order of the group generated by `gens`, by closure under right
/// multiplication. An empty list generates the trivial group.
pub fn enumerate_generated(gens: &[ModPMatrix], cap: usize) -> Result<Enumeration> {
    let Some(first) = gens.first() else {
        return Ok(Enumeration::Order(1));
    };
    let (n, p) = (first.n, first.p);
    for g in gens {
        if g.n != n || g.p != p {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: g.n,
            });
        }
        if !g.is_symplectic() {
            return Err(Error::NonSymplectic(p as u64));
        }
    }
    let id = ModPMatrix::identity(n / 2, p as u64)?;
    let mut seen: HashSet<u128> = HashSet::new();
    seen.insert(id.key());
    let mut frontier = vec![id.cells];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = mul_cells(x, &g.cells, n, p);
                if seen.insert(pack(&y, n, p)) {
                    if seen.len() > cap {
                        return Ok(Enumeration::CapExceeded { cap });
                    }
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    Ok(Enumeration::Order(seen.len() as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symhom::make_lattice;

    // Built directly from the lattice, independently of the curve registry.
    fn transvections(g: usize, p: u64) -> Vec<ModPMatrix> {
        let l = make_lattice(g, 0).unwrap();
        let mut classes: Vec<_> = (1..=g).flat_map(|i| [l.a(i), l.b(i)]).collect();
        classes.extend((1..g).map(|i| &l.a(i) - &l.a(i + 1)));
        classes
            .iter()
            .map(|c| ModPMatrix::from_int(&l.transvection(c).unwrap(), p).unwrap())
            .collect()
    }

    #[test]
    fn lickorish_twists_match_direct_transvections() {
        let mut a = lickorish_generators(2, 2).unwrap();
        let mut b = transvections(2, 2);
        a.sort_by_key(ModPMatrix::key);
        b.sort_by_key(ModPMatrix::key);
        assert_eq!(a, b);
    }

    #[test]
    fn order_formula() {
        assert_eq!(sp_order(1, 2), BigUint::from(6u32));
        assert_eq!(sp_order(2, 2), BigUint::from(720u32));
        assert_eq!(sp_order(3, 2), BigUint::from(1_451_520u32));
        assert_eq!(sp_order(1, 3), BigUint::from(24u32));
    }

    #[test]
    fn small_closures() {
        assert_eq!(enumerate_generated(&[], 10).unwrap(), Enumeration::Order(1));
        let id = ModPMatrix::identity(1, 2).unwrap();
        assert_eq!(
            enumerate_generated(&[id], 10).unwrap(),
            Enumeration::Order(1)
        );
        assert_eq!(
            enumerate_generated(&transvections(1, 2), 100).unwrap(),
            Enumeration::Order(6)
        );
        assert_eq!(
            enumerate_generated(&transvections(1, 3), 100).unwrap(),
            Enumeration::Order(24)
        );
        assert_eq!(
            enumerate_generated(&transvections(2, 2), 1000).unwrap(),
            Enumeration::Order(720)
        );
        assert_eq!(
            enumerate_generated(&transvections(2, 2), 100).unwrap(),
            Enumeration::CapExceeded { cap: 100 }
        );
    }

    #[test]
    fn rejects_non_symplectic() {
        let mut m = IntMatrix::identity(2);
        m[(0, 0)] = 0;
        let x = ModPMatrix::from_int(&m, 2).unwrap();
        assert_eq!(enumerate_generated(&[x], 10), Err(Error::NonSymplectic(2)));
    }

    #[test]
    fn shape_limits() {
        assert!(ModPMatrix::identity(4, 2).is_err());
        assert!(ModPMatrix::identity(1, 4).is_err());
        assert!(ModPMatrix::identity(3, 7).is_ok());
        assert!(ModPMatrix::identity(3, 11).is_err());
    }
}
