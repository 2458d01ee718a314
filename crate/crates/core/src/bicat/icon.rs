use super::{NormalPseudofunctor, OneCell, TwoCell};
use crate::error::Error;
use crate::fincat::CatNatTrans;
use crate::verdict::Verdict;
use std::collections::BTreeMap;

/// An icon between parallel, object-agreeing normal pseudofunctors: one
/// natural transformation per hom-category, subject to the unit and
/// composition axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Icon {
    pub source: NormalPseudofunctor,
    pub target: NormalPseudofunctor,
    /// `(x, y)` keys the natural transformation `F_{x,y} ⇒ G_{x,y}`.
    pub components: BTreeMap<(String, String), CatNatTrans>,
}

impl Icon {
    pub fn identity(f: &NormalPseudofunctor) -> Self {
        let components = f
            .hom_maps
            .iter()
            .map(|(key, map)| (key.clone(), CatNatTrans::identity(map)))
            .collect();
        Icon {
            source: f.clone(),
            target: f.clone(),
            components,
        }
    }

    pub fn component(&self, x: &str, y: &str) -> &CatNatTrans {
        &self.components[&(x.to_string(), y.to_string())]
    }

    /// The 2-cell component at a 1-cell of the common source.
    pub fn at(&self, f: &OneCell) -> TwoCell {
        TwoCell::new(
            self.source.ob(&f.src),
            self.source.ob(&f.tgt),
            self.component(&f.src, &f.tgt).at(&f.name).to_string(),
        )
    }

    pub fn validate(&self) -> Verdict {
        if !self.source.is_parallel_to(&self.target) {
            return Verdict::fail("parallel pseudofunctors", "endpoints".to_string());
        }
        if !self.source.agrees_on_objects(&self.target) {
            let bad = self
                .source
                .object_map
                .iter()
                .find(|(x, fx)| self.target.ob(x) != fx.as_str())
                .map(|(x, _)| x.clone())
                .unwrap_or_default();
            return Verdict::fail("object agreement Fx = Gx", bad);
        }
        let b = &self.source.target;
        for (x, y, _) in self.source.source.homs() {
            let Some(nt) = self.components.get(&(x.to_string(), y.to_string())) else {
                return Verdict::fail("component present per hom", format!("({x}, {y})"));
            };
            if nt.source != *self.source.hom_map(x, y) || nt.target != *self.target.hom_map(x, y) {
                return Verdict::fail("component shape F_{x,y} ⇒ G_{x,y}", format!("({x}, {y})"));
            }
            if let Verdict::Fail { law, witness } = nt.validate() {
                return Verdict::fail(format!("component naturality at ({x}, {y}): {law}"), witness);
            }
        }
        // Unit axiom: the component at each identity 1-cell is an identity
        // 2-cell.
        for x in self.source.source.objects() {
            let id = self.source.source.identity1(x);
            let cell = self.at(&id);
            let hom = b.hom(&cell.src, &cell.tgt);
            if !hom.is_identity(&cell.name) {
                return Verdict::fail("unit axiom: component at id is identity", x.to_string());
            }
        }
        // Composition axiom: φ^G · (α_g ∗ α_f) = α_{g∘f} · φ^F.
        for (g, f) in self.source.source.composable_pairs() {
            let lhs = b.vcomp2(
                &self.target.comparison(&g, &f),
                &b.hcomp2(&self.at(&g), &self.at(&f)),
            );
            let rhs = b.vcomp2(
                &self.at(&self.source.source.compose1(&g, &f)),
                &self.source.comparison(&g, &f),
            );
            if lhs != rhs {
                return Verdict::fail(
                    "composition axiom",
                    format!("({}, {})", g.name, f.name),
                );
            }
        }
        Verdict::Pass
    }

    /// Vertical composition `self · inner` (apply `inner` first),
    /// componentwise in each hom.
    pub fn vcompose(&self, inner: &Icon) -> Result<Icon, Error> {
        if inner.target != self.source {
            return Err(Error::shape("icon composition endpoints do not match"));
        }
        let mut components = BTreeMap::new();
        for (key, nt) in &inner.components {
            components.insert(key.clone(), self.components[key].vcompose(nt)?);
        }
        Ok(Icon {
            source: inner.source.clone(),
            target: self.target.clone(),
            components,
        })
    }

    /// Whisker with a pseudofunctor `k` out of the common target:
    /// `k · self` has components `k_{Fx,Fy}(self_{x,y})`.
    pub fn whisker_left(k: &NormalPseudofunctor, icon: &Icon) -> Result<Icon, Error> {
        if icon.source.target != k.source {
            return Err(Error::shape("left whiskering endpoints do not match"));
        }
        let mut components = BTreeMap::new();
        for ((x, y), nt) in &icon.components {
            let fx = icon.source.ob(x);
            let fy = icon.source.ob(y);
            components.insert((x.clone(), y.clone()), nt.whisker_post(k.hom_map(fx, fy))?);
        }
        Ok(Icon {
            source: k.compose_after(&icon.source)?,
            target: k.compose_after(&icon.target)?,
            components,
        })
    }

    /// Whisker with a pseudofunctor `h` into the common source:
    /// `self · h` has components `self_{hx,hy} · h_{x,y}`.
    pub fn whisker_right(icon: &Icon, h: &NormalPseudofunctor) -> Result<Icon, Error> {
        if h.target != icon.source.source {
            return Err(Error::shape("right whiskering endpoints do not match"));
        }
        let mut components = BTreeMap::new();
        for (x, y, _) in h.source.homs() {
            let hx = h.ob(x);
            let hy = h.ob(y);
            components.insert(
                (x.to_string(), y.to_string()),
                icon.component(hx, hy).whisker_pre(h.hom_map(x, y))?,
            );
        }
        Ok(Icon {
            source: icon.source.compose_after(h)?,
            target: icon.target.compose_after(h)?,
            components,
        })
    }

    /// Every component natural transformation is invertible.
    pub fn is_invertible(&self) -> bool {
        self.components.values().all(|nt| nt.is_invertible())
    }
}
