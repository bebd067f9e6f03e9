//! Breadth-first search for shortest words.

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, HashSet};
use std::hash::{Hash, Hasher};

use super::{Alphabet, Letter, Word};
use crate::error::{Error, Result};
use crate::rep::RepElement;

pub const DEFAULT_DEPTH: usize = 12;
pub const DEFAULT_STATE_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    /// One entry per target: the shortest, lexicographically least word.
    pub words: Vec<Option<Word>>,
    pub states: usize,
    pub depth_reached: usize,
    /// Stopped at the state cap before exhausting the depth.
    pub truncated: bool,
}

impl SearchResult {
    pub fn all_found(&self) -> bool {
        self.words.iter().all(Option::is_some)
    }
}

pub fn bfs_search(
    targets: &[RepElement],
    alphabet: &Alphabet,
    depth: usize,
) -> Result<SearchResult> {
    bfs_search_capped(targets, alphabet, depth, DEFAULT_STATE_CAP)
}

/// Expands reduced words level by level. Parents are visited in lex order and
/// letters appended in generator order, so each level is lex sorted and the
/// first word to reach an element is its least shortest word.
///
/// Visited states are kept as 64-bit fingerprints and only the current level
/// is held in full. A collision can prune a branch but never yields a wrong
/// word: target hits are confirmed by exact comparison.
pub fn bfs_search_capped(
    targets: &[RepElement],
    alphabet: &Alphabet,
    depth: usize,
    state_cap: usize,
) -> Result<SearchResult> {
    let lat = alphabet.lattice();
    for t in targets {
        if t.lattice() != lat {
            return Err(Error::LatticeMismatch(
                lat.genus(),
                lat.punctures(),
                t.lattice().genus(),
                t.lattice().punctures(),
            ));
        }
    }
    let mut pending: HashMap<u64, Vec<usize>> = HashMap::new();
    for (i, t) in targets.iter().enumerate() {
        pending.entry(fingerprint(t)).or_default().push(i);
    }
    let mut words: Vec<Option<Word>> = vec![None; targets.len()];
    let gens: Vec<(Letter, &RepElement)> = alphabet
        .generators()
        .map(|(g, e)| (Letter::new(g), e))
        .collect();

    let start = RepElement::identity(lat);
    let mut seen: HashSet<u64> = HashSet::new();
    seen.insert(fingerprint(&start));
    let mut resolve = |e: &RepElement, h: u64, w: &Word, words: &mut Vec<Option<Word>>| {
        if let Some(ix) = pending.get_mut(&h) {
            ix.retain(|&i| {
                let hit = targets[i] == *e;
                if hit {
                    words[i] = Some(w.clone());
                }
                !hit
            });
            if ix.is_empty() {
                pending.remove(&h);
            }
        }
        pending.is_empty()
    };
    let mut frontier = vec![(Word::empty(), start.clone())];
    if resolve(&start, fingerprint(&start), &Word::empty(), &mut words) {
        return Ok(SearchResult {
            words,
            states: 1,
            depth_reached: 0,
            truncated: false,
        });
    }

    let mut depth_reached = 0;
    let mut truncated = false;
    'levels: for level in 1..=depth {
        let mut next = Vec::new();
        for (w, e) in &frontier {
            let last = w.letters().last().copied();
            for (l, g) in &gens {
                if Some(*l) == last {
                    continue;
                }
                let x = e.compose(g)?;
                let h = fingerprint(&x);
                if !seen.insert(h) {
                    continue;
                }
                let mut nw = w.clone();
                nw.push(*l);
                if resolve(&x, h, &nw, &mut words) {
                    depth_reached = level;
                    break 'levels;
                }
                if seen.len() >= state_cap {
                    truncated = true;
                    depth_reached = level;
                    break 'levels;
                }
                next.push((nw, x));
            }
        }
        depth_reached = level;
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(SearchResult {
        words,
        states: seen.len(),
        depth_reached,
        truncated,
    })
}

fn fingerprint(e: &RepElement) -> u64 {
    let mut h = DefaultHasher::new();
    e.hash(&mut h);
    h.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{rho1, rho2, rotation, Generator};
    use crate::surface::SurfaceParams;

    #[test]
    fn finds_rotation_square() {
        let p = SurfaceParams::new(5, 0).unwrap();
        let mut a = Alphabet::new(p.lattice());
        a.bind(Generator::Rho1, rho1(&p)).unwrap();
        a.bind(Generator::Rho2, rho2(&p)).unwrap();
        let r = rotation(&p);
        let r2 = r.compose(&r).unwrap();
        let res = bfs_search(&[r2, r.inverse()], &a, 6).unwrap();
        assert_eq!(res.words[0], Some(Word::rotation_power(2)));
        assert_eq!(res.words[1], Some(Word::rotation_power(-1)));
    }

    #[test]
    fn dihedral_group_is_exhausted() {
        let p = SurfaceParams::new(5, 0).unwrap();
        let mut a = Alphabet::new(p.lattice());
        a.bind(Generator::Rho1, rho1(&p)).unwrap();
        a.bind(Generator::Rho2, rho2(&p)).unwrap();
        let t = RepElement::twist(p.lattice(), &p.lattice().a(1)).unwrap();
        let res = bfs_search(&[t], &a, 20).unwrap();
        assert_eq!(res.words, vec![None]);
        assert_eq!(res.states, 10);
        assert!(!res.truncated);
    }
}
