//! Constructors for the embedding involutions, the rotation, and the
//! pair-swap involutions used by the word certificates.

use serde::Serialize;

use super::{Flavor, Generator, RepElement};
use crate::error::{Error, Result};
use crate::permgrp::{canonical_r, Perm, Reflection};
use crate::surface::{gamma_class, lantern_config, LanternConfig, Pivot, SurfaceParams};
use crate::symhom::{complete_partial_involution, HClass, IntMatrix};

/// Handle involution `a_i -> -a_sigma(i)`, `b_i -> -b_sigma(i)` with the
/// given puncture action and no mixed block.
fn embedding_involution(p: &SurfaceParams, pivot: Pivot, perm: Perm, name: &str) -> RepElement {
    let l = p.lattice();
    let g = p.g;
    let n = l.rank();
    let mut m = IntMatrix::zeros(n, n);
    for i in 1..=g {
        let s = pivot.sigma(g, i);
        m[(s - 1, i - 1)] = -1;
        m[(g + s - 1, g + i - 1)] = -1;
    }
    let punct = l.puncture_block(&perm).expect("reflection degree is b");
    for i in 0..punct.rows() {
        for j in 0..punct.cols() {
            m[(2 * g + i, 2 * g + j)] = punct[(i, j)];
        }
    }
    RepElement::new(l, m, perm)
        .expect("embedding involutions are symplectic and compatible")
        .named(name)
}

pub fn rho1(p: &SurfaceParams) -> RepElement {
    embedding_involution(p, Pivot::Rho1, canonical_r(p.b, Reflection::R1), "rho1")
}

pub fn rho2(p: &SurfaceParams) -> RepElement {
    embedding_involution(p, Pivot::Rho2, canonical_r(p.b, Reflection::R2), "rho2")
}

/// `R = rho2 rho1`.
pub fn rotation(p: &SurfaceParams) -> RepElement {
    rho2(p).compose(&rho1(p)).expect("same lattice").named("R")
}

/// The embedding involution carrying the lantern boundary `a1` to `x1`.
pub fn pivot(p: &SurfaceParams) -> Result<RepElement> {
    Ok(match lantern_config(p)?.pivot {
        Pivot::Rho1 => rho1(p),
        Pivot::Rho2 => rho2(p),
    })
}

/// `rho3 = T_x1 · pivot · T_x1^-1`.
pub fn rho3(p: &SurfaceParams) -> Result<RepElement> {
    let cfg = lantern_config(p)?;
    let t = RepElement::twist(p.lattice(), &cfg.x_classes[0])?;
    Ok(t.conjugate(&pivot(p)?)?.named("rho3"))
}

/// Which product of `rho3` and the pivot equals `T_x1 T_a1^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactorOrder {
    Rho3Pivot,
    PivotRho3,
}

pub fn factor_orientation(p: &SurfaceParams) -> Result<FactorOrder> {
    lantern_factor(p).map(|(o, _)| o)
}

/// `T_x1 T_a1^-1` together with the involution order producing it.
pub fn lantern_factor(p: &SurfaceParams) -> Result<(FactorOrder, RepElement)> {
    let cfg = lantern_config(p)?;
    let l = p.lattice();
    let target = RepElement::twist(l, &cfg.x_classes[0])?
        .compose(&RepElement::twist(l, &cfg.b_classes[0])?.inverse())?;
    let (r3, pv) = (rho3(p)?, pivot(p)?);
    if r3.compose(&pv)? == target {
        Ok((FactorOrder::Rho3Pivot, target))
    } else if pv.compose(&r3)? == target {
        Ok((FactorOrder::PivotRho3, target))
    } else {
        Err(Error::VerificationFailed(
            "neither rho3·pivot nor pivot·rho3 equals T_x1 T_a1^-1".into(),
        ))
    }
}

/// Number of fixed points available to each involution's puncture action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FixedPointBudget {
    /// Plain pair swaps: the complement has genus `g - 3` and four boundaries.
    PairSwap,
    /// Pair swap extended over two pants: genus `g - 5`, six boundaries.
    ModifiedPairSwap,
    /// Pants swap in the six-involution set.
    PantsSwap,
    /// The single pair swap of the four-involution set.
    FourInvolution,
}

impl FixedPointBudget {
    pub fn limit(self, g: usize) -> usize {
        match self {
            FixedPointBudget::PairSwap => 2 * g.saturating_sub(3),
            FixedPointBudget::ModifiedPairSwap => 2 * g.saturating_sub(5),
            FixedPointBudget::PantsSwap => 3,
            FixedPointBudget::FourInvolution => 2 * g.saturating_sub(7) + 2,
        }
    }

    fn check(self, generator: Generator, g: usize, perm: &Perm) -> Result<()> {
        let f = perm.fixed_points();
        let limit = self.limit(g);
        if f > limit {
            return Err(Error::BranchNotAvailable(format!(
                "{generator} must act on the punctures as {perm} with {f} fixed points, \
                 but the complementary surface admits at most {limit} in genus {g}"
            )));
        }
        Ok(())
    }
}

type Pairs = Vec<(HClass, HClass)>;
type Fixed = Vec<(HClass, i64)>;

/// Tries each signed constraint set in order and keeps the first completion.
fn complete_first(
    p: &SurfaceParams,
    generator: Generator,
    attempts: Vec<(Pairs, Fixed)>,
    perm: Perm,
) -> Result<RepElement> {
    let l = p.lattice();
    let mut last = String::from("no constraint sets");
    for (pairs, fixed) in attempts {
        match complete_partial_involution(&l, &pairs, &fixed, &perm) {
            Ok(m) => {
                let e =
                    RepElement::new(l, m, perm.clone()).map_err(|e| Error::ConstructionFailed {
                        generator: generator.to_string(),
                        reason: e.to_string(),
                    })?;
                return Ok(e.named(generator.name()));
            }
            Err(e) => last = e.to_string(),
        }
    }
    Err(Error::ConstructionFailed {
        generator: generator.to_string(),
        reason: last,
    })
}

const SIGNS: [i64; 2] = [1, -1];

/// Swap of boundary pair `(1, j)` and interior pair `(x1, xj)` of the lantern,
/// fixing the other two boundaries, all with a common sign `s`.
fn pair_swap_constraints(cfg: &LanternConfig, j: usize, s: i64) -> (Pairs, Fixed) {
    let b = &cfg.b_classes;
    let x = &cfg.x_classes;
    let pairs = vec![
        (b[0].clone(), b[j - 1].scaled(s)),
        (x[0].clone(), x[j - 1].scaled(s)),
    ];
    let fixed = (1..4)
        .filter(|&i| i != j - 1)
        .map(|i| (b[i].clone(), s))
        .collect();
    (pairs, fixed)
}

/// Plain pair swap exchanging lantern boundaries 1 and 2.
pub fn build_i12(p: &SurfaceParams) -> Result<RepElement> {
    let cfg = lantern_config(p)?;
    let perm = canonical_r(p.b, Reflection::R1);
    FixedPointBudget::PairSwap.check(Generator::I12, p.g, &perm)?;
    let attempts = SIGNS
        .iter()
        .map(|&s| pair_swap_constraints(&cfg, 2, s))
        .collect();
    complete_first(p, Generator::I12, attempts, perm)
}

/// Plain pair swap exchanging lantern boundaries 1 and 3; acts as `r3` on the
/// punctures once the genus leaves room for its fixed points.
pub fn build_i13(p: &SurfaceParams) -> Result<RepElement> {
    let cfg = lantern_config(p)?;
    let perm = if p.g >= 5 {
        canonical_r(p.b, Reflection::R3)
    } else {
        canonical_r(p.b, Reflection::R1)
    };
    FixedPointBudget::PairSwap.check(Generator::I13, p.g, &perm)?;
    let attempts = SIGNS
        .iter()
        .map(|&s| pair_swap_constraints(&cfg, 3, s))
        .collect();
    complete_first(p, Generator::I13, attempts, perm)
}

/// Pair swap `1 <-> 2` extended over two pants so that it also carries
/// `gamma_{m+1}` to `beta_{m-2}` and `alpha_{m+2}` to the third pants curve.
pub fn build_i12_modified(p: &SurfaceParams) -> Result<RepElement> {
    if p.g < 5 {
        return Err(Error::BranchNotAvailable(format!(
            "the extended pair swap needs genus at least 5, got {}",
            p.g
        )));
    }
    let cfg = lantern_config(p)?;
    let m = cfg.center;
    let perm = canonical_r(p.b, Reflection::R1);
    FixedPointBudget::ModifiedPairSwap.check(Generator::I12, p.g, &perm)?;
    let l = p.lattice();
    let gamma = gamma_class(p, m + 1);
    let beta = l.b(m - 2);
    let alpha = l.a(m + 2);
    let mut attempts = Vec::new();
    for s in SIGNS {
        for t in SIGNS {
            let (mut pairs, fixed) = pair_swap_constraints(&cfg, 2, s);
            // alpha_{m+1} = alpha_{m+2} + gamma_{m+1} forces the image of alpha_{m+2}.
            let x = &cfg.b_classes[1].scaled(s) - &beta.scaled(t);
            pairs.push((gamma.clone(), beta.scaled(t)));
            pairs.push((alpha.clone(), x));
            attempts.push((pairs, fixed));
        }
    }
    complete_first(p, Generator::I12, attempts, perm)
}

/// Pants swap `alpha_m <-> beta_j` fixing the third boundary, with `j = m + 1`
/// preferred and `m - 1` as fallback. Returns the element and `j`.
pub fn build_i_indexed(p: &SurfaceParams) -> Result<(RepElement, usize)> {
    if p.g == 3 && p.b % 2 == 1 {
        return Err(Error::BranchNotAvailable(
            "genus 3 with an odd number of punctures: the pair swaps have no fixed points to carry a puncture".into(),
        ));
    }
    let cfg = lantern_config(p)?;
    let m = cfg.center;
    let perm = canonical_r(p.b, Reflection::R3);
    FixedPointBudget::PantsSwap.check(Generator::I, p.g, &perm)?;
    let l = p.lattice();
    let mut last = None;
    for j in [m + 1, m - 1] {
        if !(1..=p.g).contains(&j) || j == m {
            continue;
        }
        let a = l.a(m);
        let b = l.b(j);
        let x = &a + &b;
        let attempts = vec![(vec![(a, b)], vec![(x, 1)])];
        match complete_first(p, Generator::I, attempts, perm.clone()) {
            Ok(e) => return Ok((e, j)),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or_else(|| Error::ConstructionFailed {
        generator: "I".into(),
        reason: "no admissible beta index".into(),
    }))
}

pub fn build_i(p: &SurfaceParams) -> Result<RepElement> {
    build_i_indexed(p).map(|(e, _)| e)
}

/// The four-involution pair swap: on the lantern it acts as
/// `a1 -> a1`, `a2 -> R^2 a3`, `a3 -> R^2 a1`, `a4 -> R^2 a4`, and it carries
/// `beta_{m-2}` to `gamma_{m+3}` (indices cyclic).
pub fn build_j(p: &SurfaceParams) -> Result<RepElement> {
    if p.g < 7 {
        return Err(Error::BranchNotAvailable(format!(
            "the four-involution construction needs genus at least 7, got {}",
            p.g
        )));
    }
    let cfg = lantern_config(p)?;
    let m = cfg.center;
    let perm = canonical_r(p.b, Reflection::R3);
    FixedPointBudget::FourInvolution.check(Generator::J, p.g, &perm)?;
    let l = p.lattice();
    let r2 = {
        let r = rotation(p);
        r.compose(&r)?
    };
    let b = &cfg.b_classes;
    let rb: Vec<HClass> = b.iter().map(|c| r2.apply(c)).collect();
    let gamma = gamma_class(p, m + 3);
    let beta = l.b(p.cyclic(m as isize - 2));
    let alpha = l.a(p.cyclic(m as isize + 4));
    let mut attempts = Vec::new();
    for s in SIGNS {
        for t in SIGNS {
            let pairs = vec![
                (b[1].clone(), rb[2].scaled(s)),
                (b[2].clone(), rb[0].scaled(s)),
                (b[3].clone(), rb[3].scaled(s)),
                (gamma.clone(), beta.scaled(t)),
                // alpha_{m+3} = gamma_{m+3} + alpha_{m+4} with alpha_{m+3} = R^2 a1 <-> a3
                (alpha.clone(), &b[2].scaled(s) - &beta.scaled(t)),
            ];
            let fixed = vec![(b[0].clone(), -s)];
            attempts.push((pairs, fixed));
        }
    }
    complete_first(p, Generator::J, attempts, perm)
}

/// The involutions of one construction, in generator order.
pub fn involution_set(p: &SurfaceParams, flavor: Flavor) -> Result<Vec<(Generator, RepElement)>> {
    flavor
        .generators()
        .iter()
        .map(|&g| {
            let e = match (g, flavor) {
                (Generator::Rho1, _) => Ok(rho1(p)),
                (Generator::Rho2, _) => Ok(rho2(p)),
                (Generator::Rho3, _) => rho3(p),
                (Generator::I12, Flavor::FiveInv) => build_i12_modified(p),
                (Generator::I12, _) => build_i12(p),
                (Generator::I13, _) => build_i13(p),
                (Generator::I, _) => build_i(p),
                (Generator::J, _) => build_j(p),
            }?;
            Ok((g, e))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{build_registry, CurveId};

    fn params(g: usize, b: usize) -> SurfaceParams {
        SurfaceParams::new(g, b).unwrap()
    }

    #[test]
    fn reflections_on_punctures() {
        let p = params(4, 5);
        assert_eq!(rho1(&p).perm().to_string(), "(1,5)(2,4)");
        assert_eq!(rho2(&p).perm().to_string(), "(1,4)(2,3)");
    }

    #[test]
    fn rho1_moves_gamma1_to_gamma3() {
        let p = params(4, 0);
        let reg = build_registry(&p);
        let img = rho1(&p).apply(reg.class(&CurveId::Gamma(1)));
        assert_eq!(img.coords, reg.class(&CurveId::Gamma(3)).coords);
    }

    #[test]
    fn rho3_and_factor() {
        for g in 3..=8 {
            let p = params(g, 3);
            let r3 = rho3(&p).unwrap();
            assert!(r3.is_involution());
            let cfg = lantern_config(&p).unwrap();
            let pv = pivot(&p).unwrap();
            assert_eq!(pv.apply(&cfg.b_classes[0]).coords, cfg.x_classes[0].coords);
            assert!(lantern_factor(&p).is_ok());
        }
    }

    #[test]
    fn i13_takes_alpha_to_gamma() {
        for (g, b) in [(4, 0), (5, 3), (6, 2)] {
            let p = params(g, b);
            let cfg = lantern_config(&p).unwrap();
            let m = cfg.center;
            let reg = build_registry(&p);
            let i13 = build_i13(&p).unwrap();
            let img = i13.apply(reg.class(&CurveId::Alpha(m + 1)));
            assert!(img.same_up_to_sign(reg.class(&CurveId::Gamma(m - 1))));
        }
        assert_eq!(
            build_i13(&params(5, 5)).unwrap().perm().to_string(),
            "(2,4)"
        );
    }

    #[test]
    fn modified_i12_takes_gamma_to_beta() {
        for (g, b) in [(5, 2), (6, 0), (6, 3)] {
            let p = params(g, b);
            let m = lantern_config(&p).unwrap().center;
            let reg = build_registry(&p);
            let e = build_i12_modified(&p).unwrap();
            assert!(e.is_involution() && e.is_symplectic());
            let img = e.apply(reg.class(&CurveId::Gamma(m + 1)));
            assert!(img.same_up_to_sign(reg.class(&CurveId::Beta(m - 2))));
        }
        // genus 5 leaves no fixed point for an odd puncture count
        assert!(matches!(
            build_i12_modified(&params(5, 3)),
            Err(Error::BranchNotAvailable(_))
        ));
    }

    #[test]
    fn pants_swap() {
        let p = params(4, 5);
        let (i, j) = build_i_indexed(&p).unwrap();
        let m = lantern_config(&p).unwrap().center;
        assert_eq!(j, m + 1);
        let l = p.lattice();
        assert_eq!(i.apply(&l.a(m)).coords, l.b(j).coords);
        assert_eq!(i.perm().to_string(), "(2,4)");
        let t = RepElement::twist(l, &l.a(m)).unwrap();
        assert_eq!(
            i.conjugate(&t).unwrap(),
            RepElement::twist(l, &l.b(j)).unwrap()
        );
        assert!(matches!(
            build_i(&params(3, 3)),
            Err(Error::BranchNotAvailable(_))
        ));
    }

    #[test]
    fn four_involution_pair_swap() {
        for (g, b) in [(7, 2), (8, 0), (8, 3)] {
            let p = params(g, b);
            let cfg = lantern_config(&p).unwrap();
            let j = build_j(&p).unwrap();
            assert!(j.is_involution() && j.is_symplectic());
            let r = rotation(&p);
            let r2 = r.compose(&r).unwrap();
            assert!(j
                .apply(&cfg.b_classes[0])
                .same_up_to_sign(&cfg.b_classes[0]));
            assert!(j
                .apply(&cfg.x_classes[0])
                .same_up_to_sign(&r2.apply(&cfg.x_classes[1])));
            assert!(j
                .apply(&cfg.x_classes[1])
                .same_up_to_sign(&r2.apply(&cfg.x_classes[2])));
            assert!(j
                .apply(&cfg.x_classes[2])
                .same_up_to_sign(&r2.apply(&cfg.x_classes[0])));
            let beta = p.lattice().b(cfg.center - 2);
            assert!(j
                .apply(&beta)
                .same_up_to_sign(&gamma_class(&p, cfg.center + 3)));
        }
        assert!(matches!(
            build_j(&params(7, 3)),
            Err(Error::BranchNotAvailable(_))
        ));
        assert!(matches!(
            build_j(&params(6, 0)),
            Err(Error::BranchNotAvailable(_))
        ));
    }

    #[test]
    fn plain_pair_swaps_need_even_punctures_in_genus_three() {
        assert!(build_i12(&params(3, 2)).is_ok());
        assert!(matches!(
            build_i12(&params(3, 3)),
            Err(Error::BranchNotAvailable(_))
        ));
        assert!(matches!(
            build_i13(&params(3, 1)),
            Err(Error::BranchNotAvailable(_))
        ));
    }
}
