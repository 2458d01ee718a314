//! Finite 1-categories stored as explicit object/morphism sets with a total
//! composition table over composable pairs. All identifiers are strings
//! ordered lexicographically; every enumeration and witness selection follows
//! that order.

mod analysis;
mod construct;
mod enumerate;
mod functor;

pub use analysis::{absolute_right_lifting, enumerate_cones, verify_limit_cone};
pub use construct::{
    full_subcat, functor_cat, functor_name, nat_trans_name, path_components, product_cat,
    product_of_cats, CELL_SEP,
};
pub use enumerate::{enumerate_fincats, enumerate_functors, enumerate_nat_trans};
pub use functor::{CatAdjunction, CatFunctor, CatNatTrans};

use crate::error::Error;
use crate::verdict::Verdict;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// Source and target of a morphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MorInfo {
    pub src: String,
    pub tgt: String,
}

/// A finite category: explicit object and morphism sets, an identity
/// assignment, and a composition table `(g, f) -> g∘f` defined exactly on
/// composable pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FinCat {
    objects: BTreeSet<String>,
    morphisms: BTreeMap<String, MorInfo>,
    identities: BTreeMap<String, String>,
    composition: BTreeMap<(String, String), String>,
}

impl FinCat {
    pub fn from_parts(
        objects: BTreeSet<String>,
        morphisms: BTreeMap<String, MorInfo>,
        identities: BTreeMap<String, String>,
        composition: BTreeMap<(String, String), String>,
    ) -> Self {
        FinCat {
            objects,
            morphisms,
            identities,
            composition,
        }
    }

    pub fn builder() -> FinCatBuilder {
        FinCatBuilder::default()
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

    pub fn morphisms(&self) -> impl Iterator<Item = (&str, &MorInfo)> {
        self.morphisms.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn has_morphism(&self, m: &str) -> bool {
        self.morphisms.contains_key(m)
    }

    pub fn src(&self, m: &str) -> &str {
        &self.morphisms[m].src
    }

    pub fn tgt(&self, m: &str) -> &str {
        &self.morphisms[m].tgt
    }

    pub fn identity(&self, x: &str) -> &str {
        &self.identities[x]
    }

    pub fn is_identity(&self, m: &str) -> bool {
        self.identities.values().any(|id| id == m)
    }

    /// `g∘f`, defined when `tgt(f) = src(g)`.
    pub fn compose(&self, g: &str, f: &str) -> Option<&str> {
        self.composition
            .get(&(g.to_string(), f.to_string()))
            .map(|s| s.as_str())
    }

    pub fn composition_table(&self) -> impl Iterator<Item = (&str, &str, &str)> {
        self.composition
            .iter()
            .map(|((g, f), h)| (g.as_str(), f.as_str(), h.as_str()))
    }

    /// Morphism names `x -> y`, sorted.
    pub fn hom(&self, x: &str, y: &str) -> Vec<&str> {
        self.morphisms
            .iter()
            .filter(|(_, info)| info.src == x && info.tgt == y)
            .map(|(m, _)| m.as_str())
            .collect()
    }

    pub fn hom_size(&self, x: &str, y: &str) -> usize {
        self.morphisms
            .values()
            .filter(|info| info.src == x && info.tgt == y)
            .count()
    }

    /// Two-sided inverse of `m`, if any.
    pub fn inverse_of(&self, m: &str) -> Option<&str> {
        let info = &self.morphisms[m];
        let id_src = self.identity(&info.src);
        let id_tgt = self.identity(&info.tgt);
        self.hom(&info.tgt, &info.src).into_iter().find(|&n| {
            self.compose(n, m) == Some(id_src) && self.compose(m, n) == Some(id_tgt)
        })
    }

    pub fn is_iso(&self, m: &str) -> bool {
        self.inverse_of(m).is_some()
    }

    /// Isomorphisms out of `x`, sorted.
    pub fn isos_from(&self, x: &str) -> Vec<&str> {
        self.morphisms
            .iter()
            .filter(|(m, info)| info.src == x && self.is_iso(m))
            .map(|(m, _)| m.as_str())
            .collect()
    }

    /// Checks every category axiom exhaustively, reporting the first
    /// violation in a fixed order: well-formed references, identity
    /// endpoints, composition domain/endpoints, unit laws, associativity.
    pub fn validate(&self) -> Verdict {
        for (m, info) in &self.morphisms {
            if !self.objects.contains(&info.src) || !self.objects.contains(&info.tgt) {
                return Verdict::fail("morphism endpoints are declared objects", m.clone());
            }
        }
        for x in &self.objects {
            let Some(id) = self.identities.get(x) else {
                return Verdict::fail("every object has an identity", x.clone());
            };
            let Some(info) = self.morphisms.get(id) else {
                return Verdict::fail("identity is a declared morphism", format!("({x}, {id})"));
            };
            if info.src != *x || info.tgt != *x {
                return Verdict::fail("identity endpoints", format!("({x}, {id})"));
            }
        }
        for x in self.identities.keys() {
            if !self.objects.contains(x) {
                return Verdict::fail("identity assigned to a declared object", x.clone());
            }
        }
        // Composition is total on composable pairs and lands correctly.
        for ((g, f), h) in &self.composition {
            let (Some(gi), Some(fi), Some(hi)) = (
                self.morphisms.get(g),
                self.morphisms.get(f),
                self.morphisms.get(h),
            ) else {
                return Verdict::fail(
                    "composition entries are declared morphisms",
                    format!("({g}, {f})"),
                );
            };
            if fi.tgt != gi.src {
                return Verdict::fail("composition only on composable pairs", format!("({g}, {f})"));
            }
            if hi.src != fi.src || hi.tgt != gi.tgt {
                return Verdict::fail("composite endpoints", format!("({g}, {f})"));
            }
        }
        for (g, gi) in &self.morphisms {
            for (f, fi) in &self.morphisms {
                if fi.tgt == gi.src && self.compose(g, f).is_none() {
                    return Verdict::fail(
                        "composition total on composable pairs",
                        format!("({g}, {f})"),
                    );
                }
            }
        }
        // Unit laws.
        for (m, info) in &self.morphisms {
            let id_src = self.identity(&info.src);
            let id_tgt = self.identity(&info.tgt);
            if self.compose(m, id_src) != Some(m) {
                return Verdict::fail("right unit law", format!("({m}, {id_src})"));
            }
            if self.compose(id_tgt, m) != Some(m) {
                return Verdict::fail("left unit law", format!("({id_tgt}, {m})"));
            }
        }
        // Associativity.
        for (h, hi) in &self.morphisms {
            for (g, gi) in &self.morphisms {
                if gi.tgt != hi.src {
                    continue;
                }
                for (f, fi) in &self.morphisms {
                    if fi.tgt != gi.src {
                        continue;
                    }
                    let hg = self.compose(h, g).unwrap();
                    let gf = self.compose(g, f).unwrap();
                    if self.compose(hg, f) != self.compose(h, gf) {
                        return Verdict::fail("associativity", format!("({h}, {g}, {f})"));
                    }
                }
            }
        }
        Verdict::Pass
    }
}

/// Builds a [`FinCat`] from objects and generating morphisms. Identities are
/// added automatically as `id_<object>`, and all compositions with
/// identities are filled in; the remaining composable pairs must be given
/// explicitly.
#[derive(Debug, Default)]
pub struct FinCatBuilder {
    objects: BTreeSet<String>,
    morphisms: BTreeMap<String, MorInfo>,
    composition: BTreeMap<(String, String), String>,
}

impl FinCatBuilder {
    pub fn object(mut self, x: &str) -> Self {
        self.objects.insert(x.to_string());
        self
    }

    pub fn objects<'a>(mut self, xs: impl IntoIterator<Item = &'a str>) -> Self {
        for x in xs {
            self.objects.insert(x.to_string());
        }
        self
    }

    pub fn morphism(mut self, m: &str, src: &str, tgt: &str) -> Self {
        self.morphisms.insert(
            m.to_string(),
            MorInfo {
                src: src.to_string(),
                tgt: tgt.to_string(),
            },
        );
        self
    }

    pub fn compose(mut self, g: &str, f: &str, gf: &str) -> Self {
        self.composition
            .insert((g.to_string(), f.to_string()), gf.to_string());
        self
    }

    pub fn build(self) -> Result<Arc<FinCat>, Error> {
        let mut morphisms = self.morphisms;
        let mut identities = BTreeMap::new();
        for x in &self.objects {
            let id = format!("id_{x}");
            if morphisms.contains_key(&id) {
                return Err(Error::shape(format!(
                    "generated identity name {id} collides with a declared morphism"
                )));
            }
            morphisms.insert(
                id.clone(),
                MorInfo {
                    src: x.clone(),
                    tgt: x.clone(),
                },
            );
            identities.insert(x.clone(), id);
        }
        let mut composition = self.composition;
        for (m, info) in &morphisms {
            let id_src = identities
                .get(&info.src)
                .ok_or_else(|| Error::shape(format!("morphism {m} has undeclared source")))?;
            let id_tgt = identities
                .get(&info.tgt)
                .ok_or_else(|| Error::shape(format!("morphism {m} has undeclared target")))?;
            composition.insert((m.clone(), id_src.clone()), m.clone());
            composition.insert((id_tgt.clone(), m.clone()), m.clone());
        }
        let cat = FinCat {
            objects: self.objects,
            morphisms,
            identities,
            composition,
        };
        let verdict = cat.validate();
        if let Verdict::Fail { law, witness } = verdict {
            return Err(Error::shape(format!("built category is invalid: {law} at {witness}")));
        }
        Ok(Arc::new(cat))
    }
}

/// The empty category.
pub fn empty_cat() -> Arc<FinCat> {
    Arc::new(FinCat::default())
}

/// The terminal category `𝟙`.
pub fn terminal_cat() -> Arc<FinCat> {
    FinCat::builder().object("*").build().unwrap()
}

/// The walking arrow `𝟚 = {0 → 1}`.
pub fn walking_arrow() -> Arc<FinCat> {
    FinCat::builder()
        .objects(["0", "1"])
        .morphism("arr", "0", "1")
        .build()
        .unwrap()
}

/// The walking isomorphism `I = {0 ≅ 1}`.
pub fn walking_iso() -> Arc<FinCat> {
    FinCat::builder()
        .objects(["0", "1"])
        .morphism("fwd", "0", "1")
        .morphism("bwd", "1", "0")
        .compose("bwd", "fwd", "id_0")
        .compose("fwd", "bwd", "id_1")
        .build()
        .unwrap()
}

/// Discrete category on the given object names.
pub fn discrete_cat<'a>(names: impl IntoIterator<Item = &'a str>) -> Arc<FinCat> {
    FinCat::builder().objects(names).build().unwrap()
}

/// The linear order `0 → 1 → ... → n-1` as a category.
pub fn chain_cat(n: usize) -> Arc<FinCat> {
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut b = FinCat::builder();
    for x in &names {
        b = b.object(x);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            b = b.morphism(&format!("le_{i}_{j}"), &names[i], &names[j]);
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                b = b.compose(
                    &format!("le_{j}_{k}"),
                    &format!("le_{i}_{j}"),
                    &format!("le_{i}_{k}"),
                );
            }
        }
    }
    b.build().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terminal_category_is_valid() {
        assert!(terminal_cat().validate().holds());
    }

    #[test]
    fn walking_arrow_is_valid() {
        let two = walking_arrow();
        assert!(two.validate().holds());
        assert_eq!(two.compose("arr", "id_0"), Some("arr"));
        assert_eq!(two.compose("id_1", "arr"), Some("arr"));
    }

    #[test]
    fn walking_iso_is_valid_with_isos() {
        let iso = walking_iso();
        assert!(iso.validate().holds());
        assert!(iso.is_iso("fwd"));
        assert_eq!(iso.inverse_of("fwd"), Some("bwd"));
        assert!(!iso.is_iso("fwd") || iso.is_iso("bwd"));
    }

    #[test]
    fn mutated_composition_entry_is_detected() {
        // Point `id_1 ∘ arr` at a morphism with the wrong source.
        let two = walking_arrow();
        let mut comp: BTreeMap<(String, String), String> = two
            .composition_table()
            .map(|(g, f, h)| ((g.to_string(), f.to_string()), h.to_string()))
            .collect();
        comp.insert(("id_1".into(), "arr".into()), "id_1".into());
        let mutated = FinCat::from_parts(
            two.objects.clone(),
            two.morphisms.clone(),
            two.identities.clone(),
            comp,
        );
        let verdict = mutated.validate();
        assert!(!verdict.holds());
        assert_eq!(verdict.witness(), Some("(id_1, arr)"));
    }

    #[test]
    fn empty_category_is_valid() {
        assert!(empty_cat().validate().holds());
    }

    #[test]
    fn chain_cat_composes_transitively() {
        let three = chain_cat(3);
        assert!(three.validate().holds());
        assert_eq!(three.compose("le_1_2", "le_0_1"), Some("le_0_2"));
    }
}
