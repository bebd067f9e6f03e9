//! Words in the involution alphabet, their evaluation, the lantern and
//! coverage words of each construction, and bounded breadth-first search.

mod coverage;
mod search;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use coverage::{coverage_words, lantern_word, CoverageEntry, LanternWord};
pub use coverage::{coverage_words_in, lantern_word_in};
pub use search::{bfs_search, bfs_search_capped, SearchResult, DEFAULT_DEPTH, DEFAULT_STATE_CAP};

use crate::error::{Error, Result};
use crate::rep::{involution_set, RepElement};
pub use crate::rep::{Flavor, Generator};
use crate::surface::SurfaceParams;
use crate::symhom::HomologyLattice;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: Generator) -> Self {
        Letter {
            generator,
            inverse: false,
        }
    }

    pub fn inverted(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.generator)
        } else {
            write!(f, "{}", self.generator)
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, inverse) = match s.strip_suffix("^-1") {
            Some(n) => (n, true),
            None => (s, false),
        };
        let generator =
            Generator::parse(name).ok_or_else(|| Error::UnboundLetter(s.to_string()))?;
        Ok(Letter { generator, inverse })
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A word, read left to right as a product of generator images.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn of(generators: &[Generator]) -> Self {
        Word(generators.iter().map(|&g| Letter::new(g)).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverted()).collect())
    }

    /// `h · x · h^-1`.
    pub fn conjugate(h: &Word, x: &Word) -> Word {
        h.concat(x).concat(&h.inverse())
    }

    /// `R^n`, expanded with `R = rho2 rho1` and `R^-1 = rho1 rho2`.
    pub fn rotation_power(n: isize) -> Word {
        let unit = if n >= 0 {
            [Generator::Rho2, Generator::Rho1]
        } else {
            [Generator::Rho1, Generator::Rho2]
        };
        let mut w = Word::empty();
        for _ in 0..n.unsigned_abs() {
            w.0.extend(unit.iter().map(|&g| Letter::new(g)));
        }
        w
    }

    /// Free reduction. Every generator is an involution, so exponents are
    /// dropped and any two equal neighbours cancel.
    pub fn reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for l in &self.0 {
            let l = Letter::new(l.generator);
            if out.last() == Some(&l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Distinct generators used.
    pub fn census(&self) -> BTreeSet<Generator> {
        self.0.iter().map(|l| l.generator).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(Letter::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Generator bindings on a common lattice. Only involutions may be bound.
#[derive(Debug, Clone)]
pub struct Alphabet {
    lattice: HomologyLattice,
    bindings: BTreeMap<Generator, RepElement>,
}

impl Alphabet {
    pub fn new(lattice: HomologyLattice) -> Self {
        Alphabet {
            lattice,
            bindings: BTreeMap::new(),
        }
    }

    /// The involution set of a construction.
    pub fn for_flavor(p: &SurfaceParams, flavor: Flavor) -> Result<Self> {
        let mut a = Alphabet::new(p.lattice());
        for (g, e) in involution_set(p, flavor)? {
            a.bind(g, e)?;
        }
        Ok(a)
    }

    pub fn bind(&mut self, g: Generator, e: RepElement) -> Result<()> {
        if e.lattice() != self.lattice {
            let (l, m) = (self.lattice, e.lattice());
            return Err(Error::LatticeMismatch(
                l.genus(),
                l.punctures(),
                m.genus(),
                m.punctures(),
            ));
        }
        if !e.is_involution() {
            return Err(Error::InvalidArgument(format!(
                "{g} must be bound to an involution"
            )));
        }
        self.bindings.insert(g, e);
        Ok(())
    }

    pub fn lattice(&self) -> HomologyLattice {
        self.lattice
    }

    pub fn get(&self, g: Generator) -> Result<&RepElement> {
        self.bindings
            .get(&g)
            .ok_or_else(|| Error::UnboundLetter(g.to_string()))
    }

    pub fn generators(&self) -> impl Iterator<Item = (Generator, &RepElement)> {
        self.bindings.iter().map(|(g, e)| (*g, e))
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }
}

/// Product of the letter images, left to right.
pub fn evaluate(w: &Word, alphabet: &Alphabet) -> Result<RepElement> {
    let mut acc = RepElement::identity(alphabet.lattice());
    for l in w.letters() {
        let e = alphabet.get(l.generator)?;
        acc = if l.inverse {
            acc.compose(&e.inverse())?
        } else {
            acc.compose(e)?
        };
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{rho1, rho2, rotation};

    fn alphabet(g: usize, b: usize) -> (SurfaceParams, Alphabet) {
        let p = SurfaceParams::new(g, b).unwrap();
        let mut a = Alphabet::new(p.lattice());
        a.bind(Generator::Rho1, rho1(&p)).unwrap();
        a.bind(Generator::Rho2, rho2(&p)).unwrap();
        (p, a)
    }

    #[test]
    fn evaluation_basics() {
        let (p, a) = alphabet(4, 3);
        let w = Word::of(&[Generator::Rho1, Generator::Rho1]);
        assert!(evaluate(&w, &a).unwrap().is_identity());
        assert_eq!(
            evaluate(&Word::of(&[Generator::Rho2, Generator::Rho1]), &a).unwrap(),
            rotation(&p)
        );
        assert_eq!(
            evaluate(&Word::rotation_power(-1), &a).unwrap(),
            rotation(&p).inverse()
        );
        assert!(matches!(
            evaluate(&Word::of(&[Generator::J]), &a),
            Err(Error::UnboundLetter(_))
        ));
    }

    #[test]
    fn reduction() {
        use Generator::*;
        let w = Word::new(vec![
            Letter::new(Rho1),
            Letter::new(Rho2),
            Letter::new(Rho2).inverted(),
            Letter::new(Rho1),
            Letter::new(Rho3),
        ]);
        assert_eq!(w.reduce(), Word::of(&[Rho3]));
        let w = Word::conjugate(&Word::rotation_power(2), &Word::rotation_power(-2));
        assert_eq!(w.reduce(), Word::rotation_power(-2));
    }

    #[test]
    fn letters_serialize_as_strings() {
        let w = Word::new(vec![
            Letter::new(Generator::I12),
            Letter::new(Generator::Rho1).inverted(),
        ]);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"["I12","rho1^-1"]"#);
        let back: Word = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
        assert!(serde_json::from_str::<Word>(r#"["K"]"#).is_err());
    }

    #[test]
    fn non_involutions_are_not_bindable() {
        let (p, mut a) = alphabet(3, 0);
        assert!(a.bind(Generator::Rho3, rotation(&p)).is_err());
    }
}
