//! Permutation groups on the punctures: deterministic Schreier–Sims, the
//! reflections `r1`, `r2`, `r3` of the puncture disk, and the exhaustive
//! search for involutions completing `<r1, r2>` to the full symmetric group.

mod perm;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

pub use perm::Perm;

use crate::error::{Error, Result};

/// A permutation group with a base and strong generating set.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    base: Vec<usize>,
    strong: Vec<Perm>,
    transversals: Vec<Vec<Option<Perm>>>,
}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Base points, 1-based.
    pub fn base(&self) -> Vec<usize> {
        self.base.iter().map(|&p| p + 1).collect()
    }

    pub fn strong_generators(&self) -> &[Perm] {
        &self.strong
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.transversals
            .iter()
            .map(|t| t.iter().filter(|u| u.is_some()).count())
            .collect()
    }

    pub fn order(&self) -> BigUint {
        self.orbit_lengths()
            .into_iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l))
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree && {
            let (residue, _) = strip(&self.base, &self.transversals, p, 0);
            residue.is_identity()
        }
    }

    /// Whether the group is the whole symmetric group on its points.
    pub fn is_full_symmetric(&self) -> bool {
        self.order() == factorial(self.degree)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

fn fixes_prefix(p: &Perm, base: &[usize], upto: usize) -> bool {
    base[..upto].iter().all(|&b| p.image(b) == b)
}

fn build_transversal(degree: usize, point: usize, gens: &[&Perm]) -> Vec<Option<Perm>> {
    let mut trans: Vec<Option<Perm>> = vec![None; degree];
    trans[point] = Some(Perm::identity(degree));
    let mut queue = vec![point];
    let mut head = 0;
    while head < queue.len() {
        let beta = queue[head];
        head += 1;
        let u = trans[beta]
            .clone()
            .expect("queued points have representatives");
        for s in gens {
            let gamma = s.image(beta);
            if trans[gamma].is_none() {
                trans[gamma] = Some(s.compose(&u));
                queue.push(gamma);
            }
        }
    }
    trans
}

fn build_transversals(degree: usize, base: &[usize], strong: &[Perm]) -> Vec<Vec<Option<Perm>>> {
    (0..base.len())
        .map(|i| {
            let gens: Vec<&Perm> = strong.iter().filter(|s| fixes_prefix(s, base, i)).collect();
            build_transversal(degree, base[i], &gens)
        })
        .collect()
}

/// Sifts `g` through the stabilizer chain from `level`; returns the residue
/// and the level at which sifting stopped.
fn strip(base: &[usize], trans: &[Vec<Option<Perm>>], g: &Perm, level: usize) -> (Perm, usize) {
    let mut h = g.clone();
    for (i, &point) in base.iter().enumerate().skip(level) {
        let beta = h.image(point);
        match &trans[i][beta] {
            None => return (h, i),
            Some(u) => h = u.inverse().compose(&h),
        }
    }
    (h, base.len())
}

fn first_moved_point(p: &Perm, base: &[usize]) -> usize {
    (0..p.degree())
        .find(|&i| p.image(i) != i && !base.contains(&i))
        .expect("a non-identity element fixing the base moves a non-base point")
}

/// Deterministic Schreier–Sims on `gens` acting on `1..=degree`.
pub fn schreier_sims(gens: &[Perm], degree: usize) -> Result<PermGroup> {
    for g in gens {
        if g.degree() != degree {
            return Err(Error::InvalidPermutation(format!(
                "generator {g} has degree {} instead of {degree}",
                g.degree()
            )));
        }
    }
    let mut strong: Vec<Perm> = Vec::new();
    for g in gens {
        if !g.is_identity() && !strong.contains(g) {
            strong.push(g.clone());
        }
    }
    let mut base: Vec<usize> = Vec::new();
    for s in &strong {
        if fixes_prefix(s, &base, base.len()) {
            base.push(first_moved_point(s, &base));
        }
    }
    let mut trans = build_transversals(degree, &base, &strong);

    let mut level = base.len();
    while level > 0 {
        let i = level - 1;
        let mut restart = None;
        'scan: for beta in 0..degree {
            let Some(u_beta) = trans[i][beta].clone() else {
                continue;
            };
            let level_gens: Vec<Perm> = strong
                .iter()
                .filter(|s| fixes_prefix(s, &base, i))
                .cloned()
                .collect();
            for s in &level_gens {
                let s_beta = s.image(beta);
                let u_sb = trans[i][s_beta].as_ref().expect("orbits are closed");
                let schreier = u_sb.inverse().compose(&s.compose(&u_beta));
                let (h, j) = strip(&base, &trans, &schreier, i + 1);
                if !h.is_identity() {
                    if j == base.len() {
                        base.push(first_moved_point(&h, &base));
                    }
                    strong.push(h);
                    trans = build_transversals(degree, &base, &strong);
                    restart = Some(j + 1);
                    break 'scan;
                }
            }
        }
        match restart {
            Some(l) => level = l,
            None => level -= 1,
        }
    }

    Ok(PermGroup {
        degree,
        generators: gens.to_vec(),
        base,
        strong,
        transversals: trans,
    })
}

/// The three puncture reflections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reflection {
    /// `i -> b + 1 - i`
    R1,
    /// `i -> b - i`, fixing `b`
    R2,
    /// `i -> b + 1 - i` on `2..b-1`, fixing `1` and `b`
    R3,
}

pub fn canonical_r(b: usize, which: Reflection) -> Perm {
    let images: Vec<usize> = (1..=b)
        .map(|i| match which {
            Reflection::R1 => b + 1 - i,
            Reflection::R2 if i < b => b - i,
            Reflection::R2 => b,
            Reflection::R3 if i == 1 || i == b => i,
            Reflection::R3 => b + 1 - i,
        })
        .collect();
    Perm::from_one_based(&images).expect("reflections are bijections")
}

/// Largest puncture count for which [`complement_search`] runs exhaustively.
pub const COMPLEMENT_SEARCH_LIMIT: usize = 11;

/// Searches, in lexicographic order of pairings, for an involution with
/// exactly `fixed_points` fixed points that generates the symmetric group
/// together with `r1` and `r2`. `Ok(None)` means the search was exhaustive.
pub fn complement_search(b: usize, fixed_points: usize) -> Result<Option<Perm>> {
    if b > COMPLEMENT_SEARCH_LIMIT {
        return Err(Error::SearchBudgetExceeded(format!(
            "complement search is exhaustive only up to b = {COMPLEMENT_SEARCH_LIMIT}, got {b}"
        )));
    }
    if fixed_points > b || !(b - fixed_points).is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "no involution of {b} points has exactly {fixed_points} fixed points"
        )));
    }
    let r1 = canonical_r(b, Reflection::R1);
    let r2 = canonical_r(b, Reflection::R2);
    let target = factorial(b);
    let mut found = None;
    for_each_involution(b, fixed_points, &mut |s| {
        let group = schreier_sims(&[r1.clone(), r2.clone(), s.clone()], b).expect("degrees agree");
        if group.order() == target {
            found = Some(s.clone());
            false
        } else {
            true
        }
    });
    Ok(found)
}

/// Visits every involution of `1..=n` with exactly `fixed` fixed points until
/// the callback returns `false`.
pub fn for_each_involution(n: usize, fixed: usize, visit: &mut dyn FnMut(&Perm) -> bool) {
    fn rec(
        images: &mut Vec<Option<usize>>,
        fixed_left: usize,
        visit: &mut dyn FnMut(&Perm) -> bool,
    ) -> bool {
        let Some(i) = images.iter().position(Option::is_none) else {
            if fixed_left != 0 {
                return true;
            }
            let p = Perm::from_images(images.iter().map(|x| x.expect("assigned")).collect())
                .expect("pairing is a bijection");
            return visit(&p);
        };
        if fixed_left > 0 {
            images[i] = Some(i);
            let go_on = rec(images, fixed_left - 1, visit);
            images[i] = None;
            if !go_on {
                return false;
            }
        }
        for j in i + 1..images.len() {
            if images[j].is_none() {
                images[i] = Some(j);
                images[j] = Some(i);
                let go_on = rec(images, fixed_left, visit);
                images[i] = None;
                images[j] = None;
                if !go_on {
                    return false;
                }
            }
        }
        true
    }
    if fixed > n || !(n - fixed).is_multiple_of(2) {
        return;
    }
    let mut images = vec![None; n];
    rec(&mut images, fixed, visit);
}
