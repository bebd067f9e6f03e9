//! The lantern word and the twist words for the Humphries-Lickorish curves.

use serde::Serialize;

use super::{evaluate, Alphabet, Flavor, Generator, Word};
use crate::error::{Error, Result};
use crate::rep::{build_i_indexed, lantern_factor, FactorOrder, RepElement};
use crate::surface::{
    build_registry, lantern_config, CurveId, LanternConfig, Pivot, SurfaceParams,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LanternWord {
    pub flavor: Flavor,
    pub factor_order: FactorOrder,
    /// The factor `T_x1 T_a1^-1` as a word.
    pub factor: Word,
    /// Conjugators carrying the factor to the second and third factors.
    pub conjugators: [Word; 2],
    /// Evaluates to the twist about the fourth boundary curve.
    pub word: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageEntry {
    pub curve: CurveId,
    pub word: Word,
    pub ok: bool,
}

fn pivot_letter(cfg: &LanternConfig) -> Generator {
    match cfg.pivot {
        Pivot::Rho1 => Generator::Rho1,
        Pivot::Rho2 => Generator::Rho2,
    }
}

/// `R^n x R^-n`, with `n` reduced to the shortest residue mod `g`.
fn shift(p: &SurfaceParams, n: isize, x: &Word) -> Word {
    let g = p.g as isize;
    let mut n = n.rem_euclid(g);
    if n > g / 2 {
        n -= g;
    }
    Word::conjugate(&Word::rotation_power(n), x).reduce()
}

fn twist_pair(p: &SurfaceParams, cfg: &LanternConfig, k: usize) -> Result<RepElement> {
    let l = p.lattice();
    RepElement::twist(l, &cfg.x_classes[k])?
        .compose(&RepElement::twist(l, &cfg.b_classes[k])?.inverse())
}

pub fn lantern_word(p: &SurfaceParams, flavor: Flavor) -> Result<LanternWord> {
    lantern_word_in(p, flavor, &Alphabet::for_flavor(p, flavor)?)
}

/// Builds `F · c2 F c2^-1 · c3 F c3^-1` with `F = T_x1 T_a1^-1` and checks
/// that it evaluates to `T_a4`.
pub fn lantern_word_in(
    p: &SurfaceParams,
    flavor: Flavor,
    alphabet: &Alphabet,
) -> Result<LanternWord> {
    let cfg = lantern_config(p)?;
    let (factor_order, _) = lantern_factor(p)?;
    let pv = pivot_letter(&cfg);
    let factor = match factor_order {
        FactorOrder::Rho3Pivot => Word::of(&[Generator::Rho3, pv]),
        FactorOrder::PivotRho3 => Word::of(&[pv, Generator::Rho3]),
    };
    let f = evaluate(&factor, alphabet)?;

    let candidates: Vec<Word> = match flavor {
        Flavor::FiveInv | Flavor::SixInv => {
            vec![Word::of(&[Generator::I12]), Word::of(&[Generator::I13])]
        }
        Flavor::FourInv => {
            let j = Word::of(&[Generator::J]);
            let (r2, r_2) = (Word::rotation_power(2), Word::rotation_power(-2));
            vec![j.concat(&r2), r2.concat(&j), j.concat(&r_2), r_2.concat(&j)]
        }
    };
    let mut conjugators = Vec::with_capacity(2);
    for k in 1..=2 {
        let target = twist_pair(p, &cfg, k)?;
        let pool: Vec<&Word> = match flavor {
            Flavor::FourInv => candidates.iter().collect(),
            _ => vec![&candidates[k - 1]],
        };
        let mut found = None;
        for c in pool {
            if evaluate(c, alphabet)?.conjugate(&f)? == target {
                found = Some(c.clone());
                break;
            }
        }
        let c = found.ok_or_else(|| {
            Error::VerificationFailed(format!(
                "no conjugator carries T_x1 T_a1^-1 to T_x{0} T_a{0}^-1",
                k + 1
            ))
        })?;
        conjugators.push(c);
    }
    let conjugators: [Word; 2] = conjugators.try_into().expect("two factors");

    let word = factor
        .concat(&Word::conjugate(&conjugators[0], &factor))
        .concat(&Word::conjugate(&conjugators[1], &factor))
        .reduce();
    let expected = RepElement::twist(p.lattice(), &cfg.b_classes[3])?;
    if evaluate(&word, alphabet)? != expected {
        return Err(Error::VerificationFailed(format!(
            "lantern word {word} is not T_a4"
        )));
    }
    Ok(LanternWord {
        flavor,
        factor_order,
        factor,
        conjugators,
        word,
    })
}

pub fn coverage_words(p: &SurfaceParams, flavor: Flavor) -> Result<Vec<CoverageEntry>> {
    coverage_words_in(p, flavor, &Alphabet::for_flavor(p, flavor)?)
}

/// A word for the twist about every `alpha_i`, `beta_i` and `gamma_i`, each
/// checked by evaluation. The lantern word gives `T_gamma_m`; rotation and one
/// crossing conjugation per family give the rest.
pub fn coverage_words_in(
    p: &SurfaceParams,
    flavor: Flavor,
    alphabet: &Alphabet,
) -> Result<Vec<CoverageEntry>> {
    let lw = lantern_word_in(p, flavor, alphabet)?;
    let cfg = lantern_config(p)?;
    let m = cfg.center as isize;
    let l = lw.word;
    let gamma = |i: isize| shift(p, i - m, &l);
    let conj = |g: Generator, x: &Word| Word::conjugate(&Word::of(&[g]), x).reduce();

    let (alpha_index, alpha_word) = match flavor {
        Flavor::FiveInv | Flavor::SixInv => (m + 1, conj(Generator::I13, &gamma(m - 1))),
        Flavor::FourInv => (m + 3, conj(Generator::J, &gamma(m - 1))),
    };
    let (beta_index, beta_word) = match flavor {
        Flavor::SixInv => {
            let (_, j) = build_i_indexed(p)?;
            let alpha_m = shift(p, m - alpha_index, &alpha_word);
            (j as isize, conj(Generator::I, &alpha_m))
        }
        Flavor::FiveInv => (m - 2, conj(Generator::I12, &gamma(m + 1))),
        Flavor::FourInv => (m - 2, conj(Generator::J, &gamma(m + 3))),
    };

    let reg = build_registry(p);
    let lat = p.lattice();
    let mut out = Vec::new();
    for id in reg.lickorish_targets() {
        let word = match id {
            CurveId::Alpha(i) => shift(p, i as isize - alpha_index, &alpha_word),
            CurveId::Beta(i) => shift(p, i as isize - beta_index, &beta_word),
            CurveId::Gamma(i) => gamma(i as isize),
            other => return Err(Error::CoverageGap(other.to_string())),
        };
        let ok = evaluate(&word, alphabet)? == RepElement::twist(lat, reg.class(&id))?;
        out.push(CoverageEntry {
            curve: id,
            word,
            ok,
        });
    }
    Ok(out)
}
