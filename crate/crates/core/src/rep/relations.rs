//! Exact relation checks on the constructed generators.

use serde::Serialize;

use super::{
    build_i, build_i12, build_i12_modified, build_i13, build_j, rho1, rho2, rho3, rotation,
    RepElement,
};
use crate::surface::{
    build_registry, delta_class, lantern_config, lantern_identity_holds, CurveId, SurfaceParams,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub relation: String,
    pub instance: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn push(&mut self, relation: &str, instance: impl Into<String>, holds: bool) {
        self.entries.push(CheckEntry {
            relation: relation.into(),
            instance: instance.into(),
            holds,
        });
    }

    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.holds)
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }
}

type Builder = fn(&SurfaceParams) -> crate::Result<RepElement>;

/// Every generator whose construction applies to `p`, by name.
pub(crate) fn constructible(p: &SurfaceParams) -> Vec<(&'static str, RepElement)> {
    let mut out = vec![("rho1", rho1(p)), ("rho2", rho2(p))];
    let optional: [(&'static str, Builder); 6] = [
        ("rho3", rho3),
        ("I12", build_i12),
        ("I12-extended", build_i12_modified),
        ("I13", build_i13),
        ("I", build_i),
        ("J", build_j),
    ];
    for (name, build) in optional {
        if let Ok(e) = build(p) {
            out.push((name, e));
        }
    }
    out
}

/// Runs every relation family on `p`; failures are report entries.
pub fn check_relations(p: &SurfaceParams) -> CheckReport {
    let mut report = CheckReport::default();
    let l = p.lattice();
    let reg = build_registry(p);
    let gens = constructible(p);

    for (name, e) in &gens {
        report.push("involution", *name, e.is_involution());
        report.push("symplectic", *name, e.is_symplectic());
        report.push("compatibility", *name, e.is_compatible());
    }

    let r = rotation(p);
    let r_inv = r.inverse();
    let g = p.g;
    let mut families: Vec<(CurveId, CurveId)> = Vec::new();
    for i in 1..=g {
        let next = if i == g { 1 } else { i + 1 };
        families.push((CurveId::Alpha(i), CurveId::Alpha(next)));
        families.push((CurveId::Beta(i), CurveId::Beta(next)));
    }
    for i in 1..g.saturating_sub(1) {
        families.push((CurveId::Gamma(i), CurveId::Gamma(i + 1)));
    }
    for (from, to) in families {
        let (c, d) = (reg.class(&from), reg.class(&to));
        report.push(
            "rotation-action",
            format!("R {from} = {to}"),
            r.apply(c).coords == d.coords,
        );
        let holds = match (RepElement::twist(l, c), RepElement::twist(l, d)) {
            (Ok(tc), Ok(td)) => r.conjugate(&tc).is_ok_and(|x| x == td),
            _ => false,
        };
        report.push(
            "rotation-conjugation",
            format!("R T_{from} R^-1 = T_{to}"),
            holds,
        );
    }

    for j in 0..p.b {
        let eta = reg.class(&CurveId::Eta(j + 1));
        let holds = r_inv.apply(&delta_class(p, j)).coords == eta.coords;
        report.push(
            "eta-from-delta",
            format!("R^-1 delta{j} = eta{}", j + 1),
            holds,
        );
    }

    if let Ok(cfg) = lantern_config(p) {
        let holds = lantern_identity_holds(&l, &cfg).unwrap_or(false);
        report.push("lantern", format!("center {}", cfg.center), holds);
    }

    // h T_c h^-1 = T_{h c} over every registered class with nonzero handle part.
    for (name, h) in &gens {
        let h_inv = h.inverse();
        let holds = reg.iter().all(|(_, c)| {
            let (Ok(tc), Ok(thc)) = (RepElement::twist(l, c), RepElement::twist(l, &h.apply(c)))
            else {
                return true;
            };
            h.compose(&tc)
                .and_then(|x| x.compose(&h_inv))
                .is_ok_and(|x| x == thc)
        });
        report.push("twist-conjugation", *name, holds);
    }
    report
}
