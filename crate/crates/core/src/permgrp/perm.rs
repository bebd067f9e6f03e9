use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of the punctures `1..=b`, stored 0-based as an image array.
///
/// Composition follows function notation: `p.compose(&q)` applies `q` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection"
                )));
            }
        }
        Ok(Perm { images })
    }

    /// From a 1-based image list, e.g. `[5, 4, 3, 2, 1]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(
                "0 in a 1-based image list".into(),
            ));
        }
        Self::from_images(images.iter().map(|&i| i - 1).collect())
    }

    /// From disjoint 1-based cycles on `n` points.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                if x == 0 || y == 0 || x > n || y > n {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle {cycle:?} leaves 1..={n}"
                    )));
                }
                images[x - 1] = y - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image.
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "permutation degree mismatch");
        Perm {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| self.images[j] == i)
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i == j)
            .count()
    }

    /// Sign as `+1` / `-1`.
    pub fn sign(&self) -> i8 {
        let even_cycles = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Nontrivial cycles, 1-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Perm {
    type Error = Error;

    fn try_from(one_based: Vec<usize>) -> Result<Self> {
        Perm::from_one_based(&one_based)
    }
}

impl From<Perm> for Vec<usize> {
    fn from(p: Perm) -> Vec<usize> {
        p.images.iter().map(|&i| i + 1).collect()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_first() {
        let p = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        let q = Perm::from_cycles(3, &[&[2, 3]]).unwrap();
        // p(q(2)) = p(3) = 3, p(q(1)) = p(1) = 2
        let pq = p.compose(&q);
        assert_eq!(pq.image(1), 2);
        assert_eq!(pq.image(0), 1);
        assert!(pq.compose(&pq.inverse()).is_identity());
    }

    #[test]
    fn display_and_parity() {
        let p = Perm::from_one_based(&[5, 4, 3, 2, 1]).unwrap();
        assert_eq!(p.to_string(), "(1,5)(2,4)");
        assert_eq!(p.fixed_points(), 1);
        assert_eq!(p.sign(), 1);
        assert!(p.is_involution());
        assert!(Perm::from_one_based(&[1, 1]).is_err());
    }

    #[test]
    fn serde_is_one_based() {
        let p = Perm::from_one_based(&[2, 1, 3]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, "[2,1,3]");
        let back: Perm = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
