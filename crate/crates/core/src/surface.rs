//! Named curves on the punctured surface and their homology classes.
//!
//! Handles are indexed `1..=g` along the chain `alpha_1, gamma_1, alpha_2, ..`;
//! `beta_i` is dual to `alpha_i`. The lantern sits around the middle handle
//! `m` and is bounded by `alpha_{m+1}`, `alpha_{m-1}`, `gamma_{m-1}`, `gamma_m`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::symhom::{make_lattice, HClass, HomologyLattice, IntMatrix};

/// Genus, puncture count and `k = floor(g / 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SurfaceParams {
    pub g: usize,
    pub b: usize,
    pub k: usize,
}

impl SurfaceParams {
    pub fn new(g: usize, b: usize) -> Result<Self> {
        if g < 1 {
            return Err(Error::InvalidGenus(g));
        }
        Ok(SurfaceParams { g, b, k: g / 2 })
    }

    pub fn lattice(&self) -> HomologyLattice {
        make_lattice(self.g, self.b).expect("params are validated on construction")
    }

    /// Reduces a possibly out-of-range handle index into `1..=g`.
    pub fn cyclic(&self, i: isize) -> usize {
        (i - 1).rem_euclid(self.g as isize) as usize + 1
    }
}

/// Roles of the seven lantern curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LanternRole {
    A1,
    A2,
    A3,
    A4,
    X1,
    X2,
    X3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurveId {
    Alpha(usize),
    Beta(usize),
    Gamma(usize),
    Delta(usize),
    Eta(usize),
    Lantern(LanternRole),
}

impl fmt::Display for CurveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveId::Alpha(i) => write!(f, "alpha{i}"),
            CurveId::Beta(i) => write!(f, "beta{i}"),
            CurveId::Gamma(i) => write!(f, "gamma{i}"),
            CurveId::Delta(j) => write!(f, "delta{j}"),
            CurveId::Eta(j) => write!(f, "eta{j}"),
            CurveId::Lantern(r) => {
                let s = match r {
                    LanternRole::A1 => "a1",
                    LanternRole::A2 => "a2",
                    LanternRole::A3 => "a3",
                    LanternRole::A4 => "a4",
                    LanternRole::X1 => "x1",
                    LanternRole::X2 => "x2",
                    LanternRole::X3 => "x3",
                };
                f.write_str(s)
            }
        }
    }
}

impl Serialize for CurveId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `[gamma_i] = a_i - a_{i+1}`, with the index read cyclically so that
/// `gamma_g` is the class `a_g - a_1`.
pub fn gamma_class(p: &SurfaceParams, i: usize) -> HClass {
    let l = p.lattice();
    let i = p.cyclic(i as isize);
    let j = p.cyclic(i as isize + 1);
    (&l.a(i) - &l.a(j)).with_label(format!("gamma{i}"))
}

/// `[delta_j] = a_1 + c_1 + .. + c_j`.
pub fn delta_class(p: &SurfaceParams, j: usize) -> HClass {
    let l = p.lattice();
    let mut v = l.a(1);
    for t in 1..=j.min(p.b) {
        v = &v + &l.c(t);
    }
    v.with_label(format!("delta{j}"))
}

/// Which embedding involution carries the lantern boundary `a1` onto `x1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Pivot {
    Rho1,
    Rho2,
}

impl Pivot {
    /// Handle permutation `sigma` of the pivot, 1-based.
    pub fn sigma(self, g: usize, i: usize) -> usize {
        match self {
            Pivot::Rho1 => g + 1 - i,
            Pivot::Rho2 if i == 1 => 1,
            Pivot::Rho2 => g + 2 - i,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LanternConfig {
    pub center: usize,
    pub pivot: Pivot,
    pub boundary: [CurveId; 4],
    /// Orientation signs applied to the boundary curve classes.
    pub signs: [i64; 4],
    pub b_classes: [HClass; 4],
    pub x_classes: [HClass; 3],
    /// Index of the chosen interior assignment among the candidates.
    pub assignment: usize,
}

/// Lantern configuration for `g >= 3`.
pub fn lantern_config(p: &SurfaceParams) -> Result<LanternConfig> {
    let g = p.g;
    if g < 3 {
        return Err(Error::NoLantern(g));
    }
    let (center, pivot) = if g.is_multiple_of(2) {
        (g / 2, Pivot::Rho1)
    } else {
        let m = (2..g)
            .find(|&m| Pivot::Rho2.sigma(g, m + 1) == m)
            .expect("odd genus has a center");
        (m, Pivot::Rho2)
    };
    debug_assert_eq!(pivot.sigma(g, center + 1), center);
    let m = center;
    let l = p.lattice();
    let boundary = [
        CurveId::Alpha(m + 1),
        CurveId::Alpha(m - 1),
        CurveId::Gamma(m - 1),
        CurveId::Gamma(m),
    ];
    let raw = [
        l.a(m + 1),
        l.a(m - 1),
        gamma_class(p, m - 1),
        gamma_class(p, m),
    ];

    let mut signs = None;
    'search: for mask in 0..8u8 {
        let s = [
            1,
            if mask & 1 == 0 { 1 } else { -1 },
            if mask & 2 == 0 { 1 } else { -1 },
            if mask & 4 == 0 { 1 } else { -1 },
        ];
        let mut sum = l.zero();
        for (c, &si) in raw.iter().zip(&s) {
            sum = &sum + &c.scaled(si);
        }
        if sum.is_zero() {
            signs = Some(s);
            break 'search;
        }
    }
    let signs = signs.ok_or(Error::NoLantern(g))?;
    let names = ["a1", "a2", "a3", "a4"];
    let bs: Vec<HClass> = raw
        .iter()
        .zip(&signs)
        .zip(names)
        .map(|((c, &s), n)| c.scaled(s).with_label(n))
        .collect();
    let b_classes: [HClass; 4] = bs.try_into().expect("four boundary classes");

    let x1 = (&b_classes[1] + &b_classes[2]).with_label("x1");
    let s13 = &b_classes[0] + &b_classes[2];
    let s12 = &b_classes[0] + &b_classes[1];
    let candidates = [(s13.clone(), s12.clone()), (s12, s13)];
    for (idx, (x2, x3)) in candidates.into_iter().enumerate() {
        let config = LanternConfig {
            center,
            pivot,
            boundary,
            signs,
            b_classes: b_classes.clone(),
            x_classes: [x1.clone(), x2.with_label("x2"), x3.with_label("x3")],
            assignment: idx,
        };
        if swaps_are_consistent(&config) && lantern_identity_holds(&l, &config)? {
            return Ok(config);
        }
    }
    Err(Error::NoLantern(g))
}

/// Swapping boundary indices `1 <-> j` (j = 2, 3) must carry `x1` to `xj`,
/// as the pair-swap involutions require.
fn swaps_are_consistent(c: &LanternConfig) -> bool {
    let b = &c.b_classes;
    let x = &c.x_classes;
    // x1 = B2 + B3; (1 2) gives B1 + B3, (1 3) gives B2 + B1.
    (&b[0] + &b[2]).coords == x[1].coords && (&b[1] + &b[0]).coords == x[2].coords
}

fn product(l: &HomologyLattice, classes: &[&HClass]) -> Result<IntMatrix> {
    let mut m = IntMatrix::identity(l.rank());
    for c in classes {
        m = m.mul(&l.transvection(c)?);
    }
    Ok(m)
}

/// `T_x1 T_x2 T_x3 == T_a1 T_a2 T_a3 T_a4` as exact integer matrices.
pub fn lantern_identity_holds(l: &HomologyLattice, c: &LanternConfig) -> Result<bool> {
    let xs: Vec<&HClass> = c.x_classes.iter().collect();
    let bs: Vec<&HClass> = c.b_classes.iter().collect();
    Ok(product(l, &xs)? == product(l, &bs)?)
}

/// Every named curve with its class.
#[derive(Debug, Clone)]
pub struct CurveRegistry {
    params: SurfaceParams,
    classes: BTreeMap<CurveId, HClass>,
    lantern: Option<LanternConfig>,
}

impl CurveRegistry {
    pub fn params(&self) -> SurfaceParams {
        self.params
    }

    pub fn get(&self, id: &CurveId) -> Option<&HClass> {
        self.classes.get(id)
    }

    /// Like [`get`](Self::get) but for ids that must exist.
    pub fn class(&self, id: &CurveId) -> &HClass {
        self.classes
            .get(id)
            .unwrap_or_else(|| panic!("curve {id} is not registered"))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CurveId, &HClass)> {
        self.classes.iter()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn lantern(&self) -> Option<&LanternConfig> {
        self.lantern.as_ref()
    }

    /// The `3g - 1` twist targets `alpha_i`, `beta_i`, `gamma_i`.
    pub fn lickorish_targets(&self) -> Vec<CurveId> {
        let g = self.params.g;
        let mut ids: Vec<CurveId> = (1..=g).map(CurveId::Alpha).collect();
        ids.extend((1..=g).map(CurveId::Beta));
        ids.extend((1..g).map(CurveId::Gamma));
        ids
    }

    /// `(curve, coordinates)` rows, in id order.
    pub fn table(&self) -> Vec<(String, Vec<i64>)> {
        self.classes
            .iter()
            .map(|(id, c)| (id.to_string(), c.coords.clone()))
            .collect()
    }
}

pub fn build_registry(p: &SurfaceParams) -> CurveRegistry {
    let l = p.lattice();
    let mut classes = BTreeMap::new();
    for i in 1..=p.g {
        classes.insert(CurveId::Alpha(i), l.a(i).with_label(format!("alpha{i}")));
        classes.insert(CurveId::Beta(i), l.b(i).with_label(format!("beta{i}")));
    }
    for i in 1..p.g {
        classes.insert(CurveId::Gamma(i), gamma_class(p, i));
    }
    for j in 0..p.b.max(1) {
        classes.insert(CurveId::Delta(j), delta_class(p, j));
    }
    if p.b > 0 {
        let r_inv = crate::rep::rotation(p).inverse();
        for j in 0..p.b {
            let eta = r_inv
                .apply(&delta_class(p, j))
                .with_label(format!("eta{}", j + 1));
            classes.insert(CurveId::Eta(j + 1), eta);
        }
    }
    let lantern = lantern_config(p).ok();
    if let Some(cfg) = &lantern {
        let roles = [
            LanternRole::A1,
            LanternRole::A2,
            LanternRole::A3,
            LanternRole::A4,
        ];
        for (r, c) in roles.into_iter().zip(&cfg.b_classes) {
            classes.insert(CurveId::Lantern(r), c.clone());
        }
        let roles = [LanternRole::X1, LanternRole::X2, LanternRole::X3];
        for (r, c) in roles.into_iter().zip(&cfg.x_classes) {
            classes.insert(CurveId::Lantern(r), c.clone());
        }
    }
    CurveRegistry {
        params: *p,
        classes,
        lantern,
    }
}
