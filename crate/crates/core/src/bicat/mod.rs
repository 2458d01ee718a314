//! Finite bicategories: objects, hom-categories of 1- and 2-cells,
//! horizontal-composition functors, and explicitly stored associator and
//! unitor families. Strict 2-categories are the special case where every
//! coherence cell is an identity; the [`FinBicat::is_strict`] predicate is
//! the gate.

mod enumerate;
mod icon;
mod predicates;
mod pseudofunctor;
mod two_nat;

pub use enumerate::{
    enumerate_2nats, enumerate_icons, enumerate_modifications, enumerate_normal_pseudofunctors,
    enumerate_strict_2functors,
};
pub use icon::Icon;
pub use predicates::{
    are_objects_equivalent, is_discrete_isofibration, is_equifibration, is_isofibration_2cat,
    is_isofibration_icon, ObjectEquivalence,
};
pub use pseudofunctor::NormalPseudofunctor;
pub use two_nat::{Modification, TwoNatTrans};

use crate::error::Error;
use crate::fincat::{product_cat, CatFunctor, FinCat, MorInfo};
use crate::verdict::Verdict;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// A 1-cell `src → tgt`, identified by its object name inside
/// `hom(src, tgt)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct OneCell {
    pub src: String,
    pub tgt: String,
    pub name: String,
}

impl OneCell {
    pub fn new(src: impl Into<String>, tgt: impl Into<String>, name: impl Into<String>) -> Self {
        OneCell {
            src: src.into(),
            tgt: tgt.into(),
            name: name.into(),
        }
    }
}

/// A 2-cell, identified by its morphism name inside `hom(src, tgt)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TwoCell {
    pub src: String,
    pub tgt: String,
    pub name: String,
}

impl TwoCell {
    pub fn new(src: impl Into<String>, tgt: impl Into<String>, name: impl Into<String>) -> Self {
        TwoCell {
            src: src.into(),
            tgt: tgt.into(),
            name: name.into(),
        }
    }
}

type AssocKey = ((String, String, String, String), (String, String, String));
type UnitorKey = (String, String, String);

/// A finite bicategory with explicit coherence data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinBicat {
    objects: BTreeSet<String>,
    homs: BTreeMap<(String, String), Arc<FinCat>>,
    identities: BTreeMap<String, String>,
    /// `(x, y, z)` keys the functor `hom(y,z) × hom(x,y) → hom(x,z)`.
    hcomp: BTreeMap<(String, String, String), CatFunctor>,
    /// `a_{h,g,f}: (h∘g)∘f ⇒ h∘(g∘f)` per composable triple, keyed by the
    /// object path `(x,y,z,w)` and the cells `(h, g, f)`.
    associators: BTreeMap<AssocKey, String>,
    /// `λ_f: id∘f ⇒ f` keyed by `(x, y, f)`.
    lunitors: BTreeMap<UnitorKey, String>,
    /// `ρ_f: f∘id ⇒ f` keyed by `(x, y, f)`.
    runitors: BTreeMap<UnitorKey, String>,
}

impl FinBicat {
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        objects: BTreeSet<String>,
        homs: BTreeMap<(String, String), Arc<FinCat>>,
        identities: BTreeMap<String, String>,
        hcomp: BTreeMap<(String, String, String), CatFunctor>,
        associators: BTreeMap<AssocKey, String>,
        lunitors: BTreeMap<UnitorKey, String>,
        runitors: BTreeMap<UnitorKey, String>,
    ) -> Self {
        FinBicat {
            objects,
            homs,
            identities,
            hcomp,
            associators,
            lunitors,
            runitors,
        }
    }

    pub fn objects(&self) -> impl Iterator<Item = &str> {
        self.objects.iter().map(|s| s.as_str())
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn has_object(&self, x: &str) -> bool {
        self.objects.contains(x)
    }

    pub fn hom(&self, x: &str, y: &str) -> &Arc<FinCat> {
        &self.homs[&(x.to_string(), y.to_string())]
    }

    pub fn homs(&self) -> impl Iterator<Item = (&str, &str, &Arc<FinCat>)> {
        self.homs.iter().map(|((x, y), c)| (x.as_str(), y.as_str(), c))
    }

    pub fn identity1(&self, x: &str) -> OneCell {
        OneCell::new(x, x, self.identities[x].clone())
    }

    /// 1-cells `x → y`, sorted by name.
    pub fn one_cells(&self, x: &str, y: &str) -> Vec<OneCell> {
        self.hom(x, y)
            .objects()
            .map(|f| OneCell::new(x, y, f))
            .collect()
    }

    /// All 1-cells of the bicategory.
    pub fn all_one_cells(&self) -> Vec<OneCell> {
        let mut out = Vec::new();
        for ((x, y), c) in &self.homs {
            out.extend(c.objects().map(|f| OneCell::new(x.clone(), y.clone(), f)));
        }
        out
    }

    /// 2-cells `x → y`, sorted by name.
    pub fn two_cells(&self, x: &str, y: &str) -> Vec<TwoCell> {
        self.hom(x, y)
            .morphisms()
            .map(|(m, _)| TwoCell::new(x, y, m))
            .collect()
    }

    pub fn two_cell_src(&self, t: &TwoCell) -> OneCell {
        OneCell::new(&t.src, &t.tgt, self.hom(&t.src, &t.tgt).src(&t.name))
    }

    pub fn two_cell_tgt(&self, t: &TwoCell) -> OneCell {
        OneCell::new(&t.src, &t.tgt, self.hom(&t.src, &t.tgt).tgt(&t.name))
    }

    pub fn id2(&self, f: &OneCell) -> TwoCell {
        TwoCell::new(&f.src, &f.tgt, self.hom(&f.src, &f.tgt).identity(&f.name))
    }

    pub fn is_invertible2(&self, t: &TwoCell) -> bool {
        self.hom(&t.src, &t.tgt).is_iso(&t.name)
    }

    fn hcomp_functor(&self, x: &str, y: &str, z: &str) -> &CatFunctor {
        &self.hcomp[&(x.to_string(), y.to_string(), z.to_string())]
    }

    /// Composite 1-cell `g ∘ f` for `f: x → y`, `g: y → z`.
    pub fn compose1(&self, g: &OneCell, f: &OneCell) -> OneCell {
        debug_assert_eq!(f.tgt, g.src);
        let table = self.hcomp_functor(&f.src, &f.tgt, &g.tgt);
        OneCell::new(
            &f.src,
            &g.tgt,
            table.ob(&crate::name::pair(&g.name, &f.name)),
        )
    }

    /// Horizontal composite of 2-cells `beta ∗ alpha`.
    pub fn hcomp2(&self, beta: &TwoCell, alpha: &TwoCell) -> TwoCell {
        debug_assert_eq!(alpha.tgt, beta.src);
        let table = self.hcomp_functor(&alpha.src, &alpha.tgt, &beta.tgt);
        TwoCell::new(
            &alpha.src,
            &beta.tgt,
            table.mor(&crate::name::pair(&beta.name, &alpha.name)),
        )
    }

    /// Vertical composite `beta · alpha` (apply `alpha` first).
    pub fn vcomp2(&self, beta: &TwoCell, alpha: &TwoCell) -> TwoCell {
        debug_assert_eq!(alpha.src, beta.src);
        debug_assert_eq!(alpha.tgt, beta.tgt);
        let hom = self.hom(&alpha.src, &alpha.tgt);
        TwoCell::new(
            &alpha.src,
            &alpha.tgt,
            hom.compose(&beta.name, &alpha.name)
                .expect("vertical composite defined"),
        )
    }

    /// Whisker on the left: `id_g ∗ alpha` for `alpha` in `hom(x,y)`,
    /// `g: y → z`.
    pub fn whisker_left(&self, g: &OneCell, alpha: &TwoCell) -> TwoCell {
        self.hcomp2(&self.id2(g), alpha)
    }

    /// Whisker on the right: `beta ∗ id_f` for `beta` in `hom(y,z)`,
    /// `f: x → y`.
    pub fn whisker_right(&self, beta: &TwoCell, f: &OneCell) -> TwoCell {
        self.hcomp2(beta, &self.id2(f))
    }

    pub fn associator(&self, h: &OneCell, g: &OneCell, f: &OneCell) -> TwoCell {
        let key = (
            (f.src.clone(), f.tgt.clone(), g.tgt.clone(), h.tgt.clone()),
            (h.name.clone(), g.name.clone(), f.name.clone()),
        );
        TwoCell::new(&f.src, &h.tgt, self.associators[&key].clone())
    }

    pub fn lunitor(&self, f: &OneCell) -> TwoCell {
        let key = (f.src.clone(), f.tgt.clone(), f.name.clone());
        TwoCell::new(&f.src, &f.tgt, self.lunitors[&key].clone())
    }

    pub fn runitor(&self, f: &OneCell) -> TwoCell {
        let key = (f.src.clone(), f.tgt.clone(), f.name.clone());
        TwoCell::new(&f.src, &f.tgt, self.runitors[&key].clone())
    }

    /// The source category `hom(y,z) × hom(x,y)` that the stored horizontal
    /// composition functor must be defined on.
    pub fn hcomp_source(&self, x: &str, y: &str, z: &str) -> Arc<FinCat> {
        product_cat(self.hom(y, z), self.hom(x, y))
    }

    /// Checks every bicategory axiom exhaustively and reports the first
    /// violated coherence with a witness.
    pub fn validate(&self) -> Verdict {
        // Hom-categories: present for every ordered pair, each valid.
        for x in &self.objects {
            for y in &self.objects {
                let Some(hom) = self.homs.get(&(x.clone(), y.clone())) else {
                    return Verdict::fail("hom-category present for every pair", format!("({x}, {y})"));
                };
                if let Verdict::Fail { law, witness } = hom.validate() {
                    return Verdict::fail(
                        format!("hom({x}, {y}) is a category: {law}"),
                        witness,
                    );
                }
            }
        }
        for (x, y) in self.homs.keys() {
            if !self.objects.contains(x) || !self.objects.contains(y) {
                return Verdict::fail("hom keyed by declared objects", format!("({x}, {y})"));
            }
        }
        for x in &self.objects {
            let Some(id) = self.identities.get(x) else {
                return Verdict::fail("identity 1-cell present", x.clone());
            };
            if !self.hom(x, x).has_object(id) {
                return Verdict::fail("identity 1-cell lies in hom(x,x)", x.clone());
            }
        }
        // Horizontal composition functors: present with the right shape,
        // functorial (this is middle-four interchange).
        for x in &self.objects {
            for y in &self.objects {
                for z in &self.objects {
                    let key = (x.clone(), y.clone(), z.clone());
                    let Some(table) = self.hcomp.get(&key) else {
                        return Verdict::fail(
                            "horizontal composition present for every triple",
                            format!("({x}, {y}, {z})"),
                        );
                    };
                    if table.source != self.hcomp_source(x, y, z) || table.target != *self.hom(x, z)
                    {
                        return Verdict::fail(
                            "horizontal composition has shape hom(y,z) × hom(x,y) → hom(x,z)",
                            format!("({x}, {y}, {z})"),
                        );
                    }
                    if let Verdict::Fail { law, witness } = table.validate() {
                        return Verdict::fail(
                            format!("horizontal composition functorial at ({x}, {y}, {z}): {law}"),
                            witness,
                        );
                    }
                }
            }
        }
        // Unitors: present per 1-cell, invertible, correct endpoints,
        // natural.
        if let v @ Verdict::Fail { .. } = self.validate_unitors() {
            return v;
        }
        // Associators: present per composable triple, invertible, correct
        // endpoints, natural in all three variables.
        if let v @ Verdict::Fail { .. } = self.validate_associators() {
            return v;
        }
        // Triangle coherence.
        for (g, f) in self.composable_pairs() {
            let id_mid = self.identity1(&f.tgt);
            let lhs = self.vcomp2(
                &self.whisker_left(&g, &self.lunitor(&f)),
                &self.associator(&g, &id_mid, &f),
            );
            let rhs = self.whisker_right(&self.runitor(&g), &f);
            if lhs != rhs {
                return Verdict::fail("triangle coherence", format!("({}, {})", g.name, f.name));
            }
        }
        // Pentagon coherence.
        for (k, h, g, f) in self.composable_quadruples() {
            let gf = self.compose1(&g, &f);
            let hg = self.compose1(&h, &g);
            let lhs = self.vcomp2(&self.associator(&k, &h, &gf), &self.associator(&self.compose1(&k, &h), &g, &f));
            let rhs = self.vcomp2(
                &self.whisker_left(&k, &self.associator(&h, &g, &f)),
                &self.vcomp2(
                    &self.associator(&k, &hg, &f),
                    &self.whisker_right(&self.associator(&k, &h, &g), &f),
                ),
            );
            if lhs != rhs {
                return Verdict::fail(
                    "pentagon coherence",
                    format!("({}, {}, {}, {})", k.name, h.name, g.name, f.name),
                );
            }
        }
        Verdict::Pass
    }

    fn validate_unitors(&self) -> Verdict {
        for f in self.all_one_cells() {
            let key = (f.src.clone(), f.tgt.clone(), f.name.clone());
            let id_src = self.identity1(&f.src);
            let id_tgt = self.identity1(&f.tgt);
            let Some(l) = self.lunitors.get(&key) else {
                return Verdict::fail("left unitor present", f.name.clone());
            };
            let hom = self.hom(&f.src, &f.tgt);
            if !hom.has_morphism(l)
                || hom.src(l) != self.compose1(&id_tgt, &f).name
                || hom.tgt(l) != f.name
                || !hom.is_iso(l)
            {
                return Verdict::fail("left unitor shape id∘f ⇒ f, invertible", f.name.clone());
            }
            let Some(r) = self.runitors.get(&key) else {
                return Verdict::fail("right unitor present", f.name.clone());
            };
            if !hom.has_morphism(r)
                || hom.src(r) != self.compose1(&f, &id_src).name
                || hom.tgt(r) != f.name
                || !hom.is_iso(r)
            {
                return Verdict::fail("right unitor shape f∘id ⇒ f, invertible", f.name.clone());
            }
        }
        // Naturality against every 2-cell.
        for ((x, y), hom) in &self.homs {
            for (m, info) in hom.morphisms() {
                let alpha = TwoCell::new(x.clone(), y.clone(), m);
                let f = OneCell::new(x.clone(), y.clone(), info.src.clone());
                let f2 = OneCell::new(x.clone(), y.clone(), info.tgt.clone());
                let id_y = self.identity1(y);
                let lhs = self.vcomp2(&self.lunitor(&f2), &self.whisker_left(&id_y, &alpha));
                let rhs = self.vcomp2(&alpha, &self.lunitor(&f));
                if lhs != rhs {
                    return Verdict::fail("left unitor naturality", m.to_string());
                }
                let id_x = self.identity1(x);
                let lhs = self.vcomp2(&self.runitor(&f2), &self.whisker_right(&alpha, &id_x));
                let rhs = self.vcomp2(&alpha, &self.runitor(&f));
                if lhs != rhs {
                    return Verdict::fail("right unitor naturality", m.to_string());
                }
            }
        }
        Verdict::Pass
    }

    fn validate_associators(&self) -> Verdict {
        for (h, g, f) in self.composable_triples() {
            let key = (
                (f.src.clone(), f.tgt.clone(), g.tgt.clone(), h.tgt.clone()),
                (h.name.clone(), g.name.clone(), f.name.clone()),
            );
            let Some(a) = self.associators.get(&key) else {
                return Verdict::fail(
                    "associator present per composable triple",
                    format!("({}, {}, {})", h.name, g.name, f.name),
                );
            };
            let hom = self.hom(&f.src, &h.tgt);
            let src = self.compose1(&self.compose1(&h, &g), &f);
            let tgt = self.compose1(&h, &self.compose1(&g, &f));
            if !hom.has_morphism(a) || hom.src(a) != src.name || hom.tgt(a) != tgt.name || !hom.is_iso(a)
            {
                return Verdict::fail(
                    "associator shape (h∘g)∘f ⇒ h∘(g∘f), invertible",
                    format!("({}, {}, {})", h.name, g.name, f.name),
                );
            }
        }
        // Naturality, one variable at a time.
        for (h, g, f) in self.composable_triples() {
            let hom_f = self.hom(&f.src, &f.tgt);
            for (m, info) in hom_f.morphisms() {
                if info.src != f.name {
                    continue;
                }
                let alpha = TwoCell::new(f.src.clone(), f.tgt.clone(), m);
                let f2 = OneCell::new(f.src.clone(), f.tgt.clone(), info.tgt.clone());
                let lhs = self.vcomp2(
                    &self.associator(&h, &g, &f2),
                    &self.whisker_left(&self.compose1(&h, &g), &alpha),
                );
                let rhs = self.vcomp2(
                    &self.hcomp2(&self.id2(&h), &self.hcomp2(&self.id2(&g), &alpha)),
                    &self.associator(&h, &g, &f),
                );
                if lhs != rhs {
                    return Verdict::fail(
                        "associator naturality in f",
                        format!("({}, {}, {})", h.name, g.name, m),
                    );
                }
            }
            let hom_g = self.hom(&g.src, &g.tgt);
            for (m, info) in hom_g.morphisms() {
                if info.src != g.name {
                    continue;
                }
                let beta = TwoCell::new(g.src.clone(), g.tgt.clone(), m);
                let g2 = OneCell::new(g.src.clone(), g.tgt.clone(), info.tgt.clone());
                let lhs = self.vcomp2(
                    &self.associator(&h, &g2, &f),
                    &self.hcomp2(&self.hcomp2(&self.id2(&h), &beta), &self.id2(&f)),
                );
                let rhs = self.vcomp2(
                    &self.hcomp2(&self.id2(&h), &self.hcomp2(&beta, &self.id2(&f))),
                    &self.associator(&h, &g, &f),
                );
                if lhs != rhs {
                    return Verdict::fail(
                        "associator naturality in g",
                        format!("({}, {}, {})", h.name, m, f.name),
                    );
                }
            }
            let hom_h = self.hom(&h.src, &h.tgt);
            for (m, info) in hom_h.morphisms() {
                if info.src != h.name {
                    continue;
                }
                let gamma = TwoCell::new(h.src.clone(), h.tgt.clone(), m);
                let h2 = OneCell::new(h.src.clone(), h.tgt.clone(), info.tgt.clone());
                let lhs = self.vcomp2(
                    &self.associator(&h2, &g, &f),
                    &self.hcomp2(&self.hcomp2(&gamma, &self.id2(&g)), &self.id2(&f)),
                );
                let rhs = self.vcomp2(
                    &self.hcomp2(&gamma, &self.id2(&self.compose1(&g, &f))),
                    &self.associator(&h, &g, &f),
                );
                if lhs != rhs {
                    return Verdict::fail(
                        "associator naturality in h",
                        format!("({}, {}, {})", m, g.name, f.name),
                    );
                }
            }
        }
        Verdict::Pass
    }

    pub fn composable_pairs(&self) -> Vec<(OneCell, OneCell)> {
        let mut out = Vec::new();
        for f in self.all_one_cells() {
            for z in self.objects() {
                for g in self.one_cells(&f.tgt, z) {
                    out.push((g, f.clone()));
                }
            }
        }
        out.sort();
        out
    }

    pub fn composable_triples(&self) -> Vec<(OneCell, OneCell, OneCell)> {
        let mut out = Vec::new();
        for (g, f) in self.composable_pairs() {
            for w in self.objects() {
                for h in self.one_cells(&g.tgt, w) {
                    out.push((h, g.clone(), f.clone()));
                }
            }
        }
        out.sort();
        out
    }

    fn composable_quadruples(&self) -> Vec<(OneCell, OneCell, OneCell, OneCell)> {
        let mut out = Vec::new();
        for (h, g, f) in self.composable_triples() {
            for v in self.objects() {
                for k in self.one_cells(&h.tgt, v) {
                    out.push((k, h.clone(), g.clone(), f.clone()));
                }
            }
        }
        out
    }

    /// True iff all coherence cells are identities and horizontal
    /// composition is strictly associative and unital on the nose.
    pub fn is_strict(&self) -> Verdict {
        for (key, a) in &self.associators {
            let hom = self.hom(&key.0 .0, &key.0 .3);
            if !hom.is_identity(a) {
                return Verdict::fail(
                    "associators are identities",
                    format!("({}, {}, {})", key.1 .0, key.1 .1, key.1 .2),
                );
            }
        }
        for ((x, y, f), l) in &self.lunitors {
            if !self.hom(x, y).is_identity(l) {
                return Verdict::fail("left unitors are identities", f.clone());
            }
        }
        for ((x, y, f), r) in &self.runitors {
            if !self.hom(x, y).is_identity(r) {
                return Verdict::fail("right unitors are identities", f.clone());
            }
        }
        for (g, f) in self.composable_pairs() {
            if f.name == self.identity1(&f.src).name && f.src == f.tgt {
                if self.compose1(&g, &f) != g {
                    return Verdict::fail("strict right unit", g.name.clone());
                }
            }
            if g.name == self.identity1(&g.src).name && g.src == g.tgt {
                if self.compose1(&g, &f) != f {
                    return Verdict::fail("strict left unit", f.name.clone());
                }
            }
        }
        for (h, g, f) in self.composable_triples() {
            if self.compose1(&self.compose1(&h, &g), &f) != self.compose1(&h, &self.compose1(&g, &f)) {
                return Verdict::fail(
                    "strict associativity",
                    format!("({}, {}, {})", h.name, g.name, f.name),
                );
            }
        }
        Verdict::Pass
    }

    /// The underlying 1-category of a strict 2-category: objects are the
    /// objects and morphisms are the 1-cells, qualified to stay unique
    /// across homs.
    pub fn underlying_cat(&self) -> Result<Arc<FinCat>, Error> {
        if !self.is_strict().holds() {
            return Err(Error::shape(
                "underlying category requires a strict 2-category",
            ));
        }
        let mut morphisms = BTreeMap::new();
        let mut identities = BTreeMap::new();
        let mut composition = BTreeMap::new();
        for f in self.all_one_cells() {
            morphisms.insert(
                crate::name::qualified(&f.src, &f.tgt, &f.name),
                MorInfo {
                    src: f.src.clone(),
                    tgt: f.tgt.clone(),
                },
            );
        }
        for x in self.objects() {
            let id = self.identity1(x);
            identities.insert(x.to_string(), crate::name::qualified(&id.src, &id.tgt, &id.name));
        }
        for (g, f) in self.composable_pairs() {
            let gf = self.compose1(&g, &f);
            composition.insert(
                (
                    crate::name::qualified(&g.src, &g.tgt, &g.name),
                    crate::name::qualified(&f.src, &f.tgt, &f.name),
                ),
                crate::name::qualified(&gf.src, &gf.tgt, &gf.name),
            );
        }
        Ok(Arc::new(FinCat::from_parts(
            self.objects.clone(),
            morphisms,
            identities,
            composition,
        )))
    }
}

