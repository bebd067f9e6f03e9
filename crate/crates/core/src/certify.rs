//! Branch selection and certificate assembly.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permgrp::{canonical_r, factorial, schreier_sims, Perm, Reflection};
use crate::quotient::{
    enumerate_generated, sp_order, Enumeration, ModPMatrix, DEFAULT_CAP, MAX_ENUMERATION_GENUS,
};
use crate::rep::{check_relations, involution_set, CheckReport, Flavor, Generator, RepElement};
use crate::surface::{build_registry, CurveId, SurfaceParams};
use crate::symhom::IntMatrix;
use crate::words::{
    bfs_search_capped, coverage_words_in, evaluate, lantern_word_in, Alphabet, CoverageEntry, Word,
};

pub const SCOPE: &str =
    "Scope: this certificate verifies exact word identities in the action of the \
mapping class group on punctured homology together with the puncture permutation, \
surjectivity onto the symmetric group of the punctures, and generation of the full \
finite symplectic quotient where it is enumerable. The homology representation is not \
faithful: the lift to the mapping class group rests on the classical Dehn-Lickorish \
generation theorem and is cited, not re-proved.";

pub const SKETCH_VERDICT: &str = "construction sketch only: no word certificate";
pub const QUOTIENT_SKIPPED: &str = "quotient check skipped (size)";
pub const DELTA_UNREACHABLE: &str = "not certified at representation level";

/// Default depth for the puncture-curve searches.
pub const DELTA_DEPTH: usize = 10;
const DELTA_STATE_CAP: usize = 50_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremBranch {
    pub count: usize,
    /// `a` through `d`, in the order the counts decrease with genus.
    pub case: char,
    pub condition: String,
    pub flavor: Option<Flavor>,
    pub involutions: Vec<Generator>,
}

/// The smallest involution count the genus and puncture parity allow.
pub fn select_branch(g: usize, b: usize) -> Result<TheoremBranch> {
    if g < 3 {
        return Err(Error::NotGeneratedByInvolutions(g));
    }
    let even = b.is_multiple_of(2);
    let (count, case, condition, flavor) = if g > 7 || (g == 7 && even) {
        (4, 'a', "g > 7, or g = 7 with b even", Some(Flavor::FourInv))
    } else if g > 5 || (g == 5 && even) {
        (5, 'b', "g > 5, or g = 5 with b even", Some(Flavor::FiveInv))
    } else if g > 3 || even {
        (6, 'c', "g > 3, or g = 3 with b even", Some(Flavor::SixInv))
    } else {
        (9, 'd', "g = 3 with b odd", None)
    };
    Ok(TheoremBranch {
        count,
        case,
        condition: condition.into(),
        flavor,
        involutions: flavor.map(|f| f.generators().to_vec()).unwrap_or_default(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub g: usize,
    pub b: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRecord {
    pub name: Generator,
    pub matrix: Vec<Vec<i64>>,
    pub perm: Perm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymVerdict {
    pub order_r1r2: u64,
    pub order_images: u64,
    pub expected: u64,
    pub full: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientVerdict {
    pub p: u64,
    /// Decimal, since the order formula outgrows 64 bits.
    pub expected: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ok: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaEntry {
    pub j: usize,
    pub word: Option<Word>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageRecord {
    pub curve: String,
    pub word: Word,
    pub ok: bool,
}

impl From<CoverageEntry> for CoverageRecord {
    fn from(e: CoverageEntry) -> Self {
        CoverageRecord {
            curve: e.curve.to_string(),
            word: e.word,
            ok: e.ok,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationRecord {
    pub relation: String,
    pub instance: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub scope: String,
    pub params: Params,
    pub branch: TheoremBranch,
    pub generators: Vec<GeneratorRecord>,
    pub relations: Vec<RelationRecord>,
    pub lantern: Option<Word>,
    pub coverage: Vec<CoverageRecord>,
    pub sym: SymVerdict,
    pub quotient: QuotientVerdict,
    pub delta: Vec<DeltaEntry>,
    pub verified: bool,
    pub verdict: String,
    pub failures: Vec<String>,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertifyOptions {
    pub delta_depth: usize,
    pub prime: u64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            delta_depth: DELTA_DEPTH,
            prime: 2,
        }
    }
}

pub fn certify(g: usize, b: usize) -> Result<Certificate> {
    certify_with(g, b, CertifyOptions::default())
}

/// Builds and checks everything for `(g, b)`. Check failures land in the
/// certificate; only invalid parameters are errors.
pub fn certify_with(g: usize, b: usize, opts: CertifyOptions) -> Result<Certificate> {
    let branch = select_branch(g, b)?;
    let p = SurfaceParams::new(g, b)?;
    let mut failures = Vec::new();
    let relations = relation_records(&check_relations(&p), &mut failures);

    let Some(flavor) = branch.flavor else {
        let sym = sym_verdict(
            b,
            &[
                canonical_r(b, Reflection::R1),
                canonical_r(b, Reflection::R2),
            ],
        )?;
        return Ok(Certificate {
            scope: SCOPE.into(),
            params: Params { g, b },
            branch,
            generators: Vec::new(),
            relations,
            lantern: None,
            coverage: Vec::new(),
            sym,
            quotient: QuotientVerdict {
                p: opts.prime,
                expected: sp_order(g, opts.prime).to_string(),
                order: None,
                ok: None,
                skipped: Some("sketch-only branch".into()),
            },
            delta: Vec::new(),
            verified: false,
            verdict: SKETCH_VERDICT.into(),
            failures: vec!["sketch-only branch".into()],
        });
    };

    let set = match involution_set(&p, flavor) {
        Ok(s) => s,
        Err(e) => {
            failures.push(format!("involution set: {e}"));
            return Ok(failed_certificate(g, b, branch, relations, opts, failures));
        }
    };
    let mut alphabet = Alphabet::new(p.lattice());
    for (name, e) in &set {
        alphabet.bind(*name, e.clone())?;
    }
    let generators: Vec<GeneratorRecord> = set
        .iter()
        .map(|(name, e)| GeneratorRecord {
            name: *name,
            matrix: e.matrix().to_rows(),
            perm: e.perm().clone(),
        })
        .collect();

    let lantern = match lantern_word_in(&p, flavor, &alphabet) {
        Ok(lw) => Some(lw.word),
        Err(e) => {
            failures.push(format!("lantern: {e}"));
            None
        }
    };
    let coverage: Vec<CoverageRecord> = match coverage_words_in(&p, flavor, &alphabet) {
        Ok(c) => c.into_iter().map(CoverageRecord::from).collect(),
        Err(e) => {
            failures.push(format!("coverage: {e}"));
            Vec::new()
        }
    };
    for c in coverage.iter().filter(|c| !c.ok) {
        failures.push(format!(
            "coverage: word for {} does not evaluate to its twist",
            c.curve
        ));
    }
    if coverage.len() != 3 * g - 1 && lantern.is_some() {
        failures.push(format!(
            "coverage: {} of {} targets",
            coverage.len(),
            3 * g - 1
        ));
    }
    let letters: BTreeSet<Generator> = coverage.iter().flat_map(|c| c.word.census()).collect();
    if letters.len() > branch.count {
        failures.push(format!(
            "coverage uses {} letters, more than {}",
            letters.len(),
            branch.count
        ));
    }

    let perms: Vec<Perm> = set.iter().map(|(_, e)| e.perm().clone()).collect();
    let sym = sym_verdict(b, &perms)?;
    if !sym.full {
        failures.push(format!(
            "puncture images generate order {} of {}",
            sym.order_images, sym.expected
        ));
    }

    let quotient = quotient_verdict(&p, &set, opts.prime)?;
    if quotient.ok == Some(false) {
        failures.push(format!(
            "quotient order {:?}, expected {}",
            quotient.order, quotient.expected
        ));
    }

    let delta = delta_search(&p, &alphabet, &set, &coverage, opts.delta_depth)?;

    let verified = failures.is_empty();
    Ok(Certificate {
        scope: SCOPE.into(),
        params: Params { g, b },
        branch,
        generators,
        relations,
        lantern,
        coverage,
        sym,
        quotient,
        delta,
        verified,
        verdict: if verified {
            "verified".into()
        } else {
            "failed".into()
        },
        failures,
    })
}

fn failed_certificate(
    g: usize,
    b: usize,
    branch: TheoremBranch,
    relations: Vec<RelationRecord>,
    opts: CertifyOptions,
    failures: Vec<String>,
) -> Certificate {
    Certificate {
        scope: SCOPE.into(),
        params: Params { g, b },
        branch,
        generators: Vec::new(),
        relations,
        lantern: None,
        coverage: Vec::new(),
        sym: SymVerdict {
            order_r1r2: 0,
            order_images: 0,
            expected: 0,
            full: false,
        },
        quotient: QuotientVerdict {
            p: opts.prime,
            expected: sp_order(g, opts.prime).to_string(),
            order: None,
            ok: None,
            skipped: Some("no involution set".into()),
        },
        delta: Vec::new(),
        verified: false,
        verdict: "failed".into(),
        failures,
    }
}

fn relation_records(report: &CheckReport, failures: &mut Vec<String>) -> Vec<RelationRecord> {
    for f in report.failures() {
        failures.push(format!("relation {}: {}", f.relation, f.instance));
    }
    report
        .entries
        .iter()
        .map(|e| RelationRecord {
            relation: e.relation.clone(),
            instance: e.instance.clone(),
            holds: e.holds,
        })
        .collect()
}

fn to_u64(n: &BigUint) -> u64 {
    u64::try_from(n).unwrap_or(u64::MAX)
}

fn sym_verdict(b: usize, images: &[Perm]) -> Result<SymVerdict> {
    let r = [
        canonical_r(b, Reflection::R1),
        canonical_r(b, Reflection::R2),
    ];
    let dihedral = schreier_sims(&r, b)?;
    let group = schreier_sims(images, b)?;
    let expected = factorial(b);
    Ok(SymVerdict {
        order_r1r2: to_u64(&dihedral.order()),
        order_images: to_u64(&group.order()),
        expected: to_u64(&expected),
        full: group.order() == expected,
    })
}

fn quotient_verdict(
    p: &SurfaceParams,
    set: &[(Generator, RepElement)],
    prime: u64,
) -> Result<QuotientVerdict> {
    let expected = sp_order(p.g, prime);
    let mut v = QuotientVerdict {
        p: prime,
        expected: expected.to_string(),
        order: None,
        ok: None,
        skipped: None,
    };
    if p.g > MAX_ENUMERATION_GENUS {
        v.skipped = Some(QUOTIENT_SKIPPED.into());
        return Ok(v);
    }
    let gens = set
        .iter()
        .map(|(_, e)| ModPMatrix::from_rep(e, prime))
        .collect::<Result<Vec<_>>>()?;
    match enumerate_generated(&gens, DEFAULT_CAP)? {
        Enumeration::Order(n) => {
            v.order = Some(n);
            v.ok = Some(BigUint::from(n) == expected);
        }
        Enumeration::CapExceeded { cap } => {
            v.skipped = Some(format!("{QUOTIENT_SKIPPED}: more than {cap} elements"));
        }
    }
    Ok(v)
}

/// Twists about the curves `delta_j` around the first `j` punctures. When no
/// generator mixes handles into punctures, every product keeps a zero mixed
/// block while `T_delta_j` for `j >= 1` does not, so those are unreachable.
fn delta_search(
    p: &SurfaceParams,
    alphabet: &Alphabet,
    set: &[(Generator, RepElement)],
    coverage: &[CoverageRecord],
    depth: usize,
) -> Result<Vec<DeltaEntry>> {
    let reg = build_registry(p);
    let l = p.lattice();
    let block_diagonal = set.iter().all(|(_, e)| e.mixed_block_is_zero());
    let mut out = Vec::new();
    for j in 0..p.b.max(1) {
        let class = reg.class(&CurveId::Delta(j));
        let covered = reg
            .lickorish_targets()
            .into_iter()
            .find(|id| reg.class(id).coords == class.coords)
            .and_then(|id| coverage.iter().find(|c| c.curve == id.to_string() && c.ok));
        if let Some(c) = covered {
            out.push(DeltaEntry {
                j,
                word: Some(c.word.clone()),
                note: format!("same class as {}", c.curve),
            });
            continue;
        }
        let target = RepElement::twist(l, class)?;
        if block_diagonal && !target.mixed_block_is_zero() {
            out.push(DeltaEntry {
                j,
                word: None,
                note: format!("{DELTA_UNREACHABLE}: every generator has a zero mixed block"),
            });
            continue;
        }
        let res = bfs_search_capped(
            std::slice::from_ref(&target),
            alphabet,
            depth,
            DELTA_STATE_CAP,
        )?;
        let entry = match &res.words[0] {
            Some(w) if evaluate(w, alphabet)? == target => DeltaEntry {
                j,
                word: Some(w.clone()),
                note: format!("search depth {}", w.len()),
            },
            _ => DeltaEntry {
                j,
                word: None,
                note: format!(
                    "{DELTA_UNREACHABLE}: no word within depth {} ({} states{})",
                    res.depth_reached,
                    res.states,
                    if res.truncated { ", capped" } else { "" }
                ),
            },
        };
        out.push(entry);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReplayReport {
    pub coverage: Vec<bool>,
    pub lantern: Option<bool>,
    pub involutions: bool,
    /// Every recomputed bit equals the stored one.
    pub matches: bool,
}

/// Re-evaluates every stored word against the stored generator matrices.
pub fn replay(cert: &Certificate) -> Result<ReplayReport> {
    let p = SurfaceParams::new(cert.params.g, cert.params.b)?;
    let l = p.lattice();
    let mut alphabet = Alphabet::new(l);
    let mut involutions = true;
    for r in &cert.generators {
        let n = l.rank();
        if r.matrix.len() != n || r.matrix.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: r.matrix.len(),
            });
        }
        let e = RepElement::new(l, IntMatrix::from_rows(&r.matrix), r.perm.clone())?;
        involutions &= e.is_involution();
        alphabet.bind(r.name, e)?;
    }
    let reg = build_registry(&p);
    let table: Vec<(String, Vec<i64>)> = reg.table();
    let mut coverage = Vec::new();
    for c in &cert.coverage {
        let class = table
            .iter()
            .find(|(name, _)| *name == c.curve)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown curve {}", c.curve)))?;
        let twist = RepElement::twist(l, &crate::symhom::HClass::new(class.1.clone()))?;
        coverage.push(evaluate(&c.word, &alphabet)? == twist);
    }
    let lantern = match (&cert.lantern, reg.lantern()) {
        (Some(w), Some(cfg)) => {
            Some(evaluate(w, &alphabet)? == RepElement::twist(l, &cfg.b_classes[3])?)
        }
        _ => None,
    };
    let matches = cert
        .coverage
        .iter()
        .zip(&coverage)
        .all(|(c, &ok)| c.ok == ok)
        && lantern.unwrap_or(true);
    Ok(ReplayReport {
        coverage,
        lantern,
        involutions,
        matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn branch_examples() {
        assert_eq!(select_branch(8, 3).unwrap().count, 4);
        assert_eq!(select_branch(7, 3).unwrap().count, 5);
        assert_eq!(select_branch(7, 2).unwrap().count, 4);
        assert_eq!(select_branch(3, 5).unwrap().count, 9);
        assert_eq!(select_branch(3, 0).unwrap().count, 6);
        assert_eq!(
            select_branch(2, 0),
            Err(Error::NotGeneratedByInvolutions(2))
        );
    }

    #[test]
    fn sketch_branch() {
        let c = certify(3, 5).unwrap();
        assert!(!c.verified);
        assert_eq!(c.verdict, SKETCH_VERDICT);
        assert!(c.failures.iter().any(|f| f == "sketch-only branch"));
    }

    #[test]
    fn genus_six_branch_five() {
        let c = certify(6, 0).unwrap();
        assert!(c.verified, "{:?}", c.failures);
        assert_eq!(c.branch.count, 5);
        assert_eq!(c.coverage.len(), 17);
        assert_eq!(c.quotient.skipped.as_deref(), Some(QUOTIENT_SKIPPED));
        let r = replay(&c).unwrap();
        assert!(r.matches && r.involutions);
    }
}
