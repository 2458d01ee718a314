use super::FinCat;
use crate::error::Error;
use crate::verdict::Verdict;
use std::collections::BTreeMap;
use std::sync::Arc;

/// A functor between finite categories: explicit object and morphism maps,
/// functoriality checked exhaustively by [`CatFunctor::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatFunctor {
    pub source: Arc<FinCat>,
    pub target: Arc<FinCat>,
    pub object_map: BTreeMap<String, String>,
    pub morphism_map: BTreeMap<String, String>,
}

impl CatFunctor {
    pub fn identity(c: &Arc<FinCat>) -> Self {
        CatFunctor {
            source: c.clone(),
            target: c.clone(),
            object_map: c.objects().map(|x| (x.to_string(), x.to_string())).collect(),
            morphism_map: c
                .morphisms()
                .map(|(m, _)| (m.to_string(), m.to_string()))
                .collect(),
        }
    }

    /// The constant functor at `obj`, sending every morphism to its identity.
    pub fn constant(source: &Arc<FinCat>, target: &Arc<FinCat>, obj: &str) -> Self {
        let id = target.identity(obj).to_string();
        CatFunctor {
            source: source.clone(),
            target: target.clone(),
            object_map: source.objects().map(|x| (x.to_string(), obj.to_string())).collect(),
            morphism_map: source
                .morphisms()
                .map(|(m, _)| (m.to_string(), id.clone()))
                .collect(),
        }
    }

    /// The unique functor into the terminal category.
    pub fn bang(source: &Arc<FinCat>, terminal: &Arc<FinCat>) -> Self {
        let obj = terminal.objects().next().expect("terminal category has an object");
        Self::constant(source, terminal, obj)
    }

    pub fn ob(&self, x: &str) -> &str {
        &self.object_map[x]
    }

    pub fn mor(&self, m: &str) -> &str {
        &self.morphism_map[m]
    }

    pub fn is_parallel_to(&self, other: &CatFunctor) -> bool {
        self.source == other.source && self.target == other.target
    }

    pub fn validate(&self) -> Verdict {
        for x in self.source.objects() {
            match self.object_map.get(x) {
                Some(fx) if self.target.has_object(fx) => {}
                _ => return Verdict::fail("object map total into target objects", x.to_string()),
            }
        }
        for (m, info) in self.source.morphisms() {
            let Some(fm) = self.morphism_map.get(m) else {
                return Verdict::fail("morphism map total", m.to_string());
            };
            if !self.target.has_morphism(fm) {
                return Verdict::fail("morphism map lands in target", m.to_string());
            }
            if self.target.src(fm) != self.ob(&info.src) || self.target.tgt(fm) != self.ob(&info.tgt)
            {
                return Verdict::fail("source/target preservation", m.to_string());
            }
        }
        for x in self.source.objects() {
            if self.mor(self.source.identity(x)) != self.target.identity(self.ob(x)) {
                return Verdict::fail("identity preservation", x.to_string());
            }
        }
        for (g, f, gf) in self.source.composition_table() {
            let composed = self.target.compose(self.mor(g), self.mor(f));
            if composed != Some(self.mor(gf)) {
                return Verdict::fail("composition preservation", format!("({g}, {f})"));
            }
        }
        Verdict::Pass
    }

    /// `self ∘ inner`.
    pub fn compose_after(&self, inner: &CatFunctor) -> Result<CatFunctor, Error> {
        if inner.target != self.source {
            return Err(Error::shape("functor composition endpoints do not match"));
        }
        Ok(CatFunctor {
            source: inner.source.clone(),
            target: self.target.clone(),
            object_map: inner
                .object_map
                .iter()
                .map(|(x, fx)| (x.clone(), self.ob(fx).to_string()))
                .collect(),
            morphism_map: inner
                .morphism_map
                .iter()
                .map(|(m, fm)| (m.clone(), self.mor(fm).to_string()))
                .collect(),
        })
    }

    pub fn is_isomorphism(&self) -> bool {
        let obs: std::collections::BTreeSet<&String> = self.object_map.values().collect();
        let mors: std::collections::BTreeSet<&String> = self.morphism_map.values().collect();
        obs.len() == self.source.object_count()
            && obs.len() == self.target.object_count()
            && mors.len() == self.source.morphism_count()
            && mors.len() == self.target.morphism_count()
    }

    /// Inverse of an isomorphism of categories.
    pub fn inverse(&self) -> Result<CatFunctor, Error> {
        if !self.is_isomorphism() {
            return Err(Error::shape("functor is not an isomorphism of categories"));
        }
        Ok(CatFunctor {
            source: self.target.clone(),
            target: self.source.clone(),
            object_map: self.object_map.iter().map(|(x, y)| (y.clone(), x.clone())).collect(),
            morphism_map: self
                .morphism_map
                .iter()
                .map(|(m, n)| (n.clone(), m.clone()))
                .collect(),
        })
    }

    /// Iso-lifting along either endpoint of the walking isomorphism: every
    /// isomorphism `β: F(a) → b` lifts to an isomorphism `α: a → x` with
    /// `F(α) = β`. Witness is the first unliftable isomorphism.
    pub fn is_isofibration(&self) -> Verdict {
        for a in self.source.objects() {
            let fa = self.ob(a);
            for beta in self.target.isos_from(fa) {
                let lifted = self.source.isos_from(a).into_iter().any(|alpha| {
                    self.mor(alpha) == beta
                });
                if !lifted {
                    return Verdict::fail(
                        "isomorphism lifting",
                        format!("iso {beta} out of image of {a} has no lift"),
                    );
                }
            }
        }
        Verdict::Pass
    }

    /// Full, faithful, and essentially surjective, each by enumeration.
    /// Reports which property fails.
    pub fn is_equivalence(&self) -> Verdict {
        // Faithful.
        for x in self.source.objects() {
            for y in self.source.objects() {
                let hom = self.source.hom(x, y);
                for (i, m) in hom.iter().enumerate() {
                    for n in &hom[i + 1..] {
                        if self.mor(m) == self.mor(n) {
                            return Verdict::fail("faithful", format!("({m}, {n})"));
                        }
                    }
                }
            }
        }
        // Full.
        for x in self.source.objects() {
            for y in self.source.objects() {
                let image: Vec<&str> = self.source.hom(x, y).into_iter().map(|m| self.mor(m)).collect();
                for n in self.target.hom(self.ob(x), self.ob(y)) {
                    if !image.contains(&n) {
                        return Verdict::fail("full", format!("{n} not in image of hom({x}, {y})"));
                    }
                }
            }
        }
        // Essentially surjective.
        for d in self.target.objects() {
            let hit = self.source.objects().any(|a| {
                let fa = self.ob(a);
                fa == d || self.target.hom(fa, d).into_iter().any(|m| self.target.is_iso(m))
            });
            if !hit {
                return Verdict::fail("essentially surjective", d.to_string());
            }
        }
        Verdict::Pass
    }
}

/// A natural transformation between parallel functors, stored as its
/// component family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatNatTrans {
    pub source: CatFunctor,
    pub target: CatFunctor,
    pub components: BTreeMap<String, String>,
}

impl CatNatTrans {
    pub fn identity(f: &CatFunctor) -> Self {
        CatNatTrans {
            source: f.clone(),
            target: f.clone(),
            components: f
                .source
                .objects()
                .map(|x| (x.to_string(), f.target.identity(f.ob(x)).to_string()))
                .collect(),
        }
    }

    pub fn at(&self, x: &str) -> &str {
        &self.components[x]
    }

    pub fn validate(&self) -> Verdict {
        if !self.source.is_parallel_to(&self.target) {
            return Verdict::fail("parallel endpoints", "source/target functors".to_string());
        }
        let cat = &self.source.target;
        for x in self.source.source.objects() {
            let Some(c) = self.components.get(x) else {
                return Verdict::fail("component total", x.to_string());
            };
            if !cat.has_morphism(c)
                || cat.src(c) != self.source.ob(x)
                || cat.tgt(c) != self.target.ob(x)
            {
                return Verdict::fail("component endpoints", x.to_string());
            }
        }
        for (m, info) in self.source.source.morphisms() {
            let lhs = cat.compose(self.at(&info.tgt), self.source.mor(m));
            let rhs = cat.compose(self.target.mor(m), self.at(&info.src));
            if lhs != rhs || lhs.is_none() {
                return Verdict::fail("naturality", m.to_string());
            }
        }
        Verdict::Pass
    }

    /// Vertical composition `self · inner` (apply `inner` first).
    pub fn vcompose(&self, inner: &CatNatTrans) -> Result<CatNatTrans, Error> {
        if inner.target != self.source {
            return Err(Error::shape("vertical composition endpoints do not match"));
        }
        let cat = &self.source.target;
        let components = inner
            .components
            .iter()
            .map(|(x, c)| {
                let composed = cat
                    .compose(self.at(x), c)
                    .ok_or_else(|| Error::shape(format!("components at {x} do not compose")))?;
                Ok((x.clone(), composed.to_string()))
            })
            .collect::<Result<_, Error>>()?;
        Ok(CatNatTrans {
            source: inner.source.clone(),
            target: self.target.clone(),
            components,
        })
    }

    /// Whisker with a functor into the source: `self · h` has components
    /// `self_{h(x)}`.
    pub fn whisker_pre(&self, h: &CatFunctor) -> Result<CatNatTrans, Error> {
        if h.target != self.source.source {
            return Err(Error::shape("pre-whiskering endpoints do not match"));
        }
        Ok(CatNatTrans {
            source: self.source.compose_after(h)?,
            target: self.target.compose_after(h)?,
            components: h
                .source
                .objects()
                .map(|x| (x.to_string(), self.at(h.ob(x)).to_string()))
                .collect(),
        })
    }

    /// Whisker with a functor out of the target: `k · self` has components
    /// `k(self_x)`.
    pub fn whisker_post(&self, k: &CatFunctor) -> Result<CatNatTrans, Error> {
        if k.source != self.source.target {
            return Err(Error::shape("post-whiskering endpoints do not match"));
        }
        Ok(CatNatTrans {
            source: k.compose_after(&self.source)?,
            target: k.compose_after(&self.target)?,
            components: self
                .components
                .iter()
                .map(|(x, c)| (x.clone(), k.mor(c).to_string()))
                .collect(),
        })
    }

    pub fn is_invertible(&self) -> bool {
        self.components.values().all(|c| self.source.target.is_iso(c))
    }
}

/// Adjunction data `F ⊣ U` between finite categories with explicit unit and
/// counit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatAdjunction {
    pub left: CatFunctor,
    pub right: CatFunctor,
    pub unit: CatNatTrans,
    pub counit: CatNatTrans,
}

impl CatAdjunction {
    /// Verifies both triangle identities componentwise. Errors if the unit
    /// or counit endpoints do not match the adjunction composites.
    pub fn validate(&self) -> Result<Verdict, Error> {
        let f = &self.left;
        let u = &self.right;
        if f.source != u.target || f.target != u.source {
            return Err(Error::shape("adjunction functors are not opposed"));
        }
        let uf = u.compose_after(f)?;
        let fu = f.compose_after(u)?;
        if self.unit.source != CatFunctor::identity(&f.source) || self.unit.target != uf {
            return Err(Error::shape("unit endpoints do not match id ⇒ UF"));
        }
        if self.counit.source != fu || self.counit.target != CatFunctor::identity(&f.target) {
            return Err(Error::shape("counit endpoints do not match FU ⇒ id"));
        }
        if let v @ Verdict::Fail { .. } = self.unit.validate() {
            return Ok(v);
        }
        if let v @ Verdict::Fail { .. } = self.counit.validate() {
            return Ok(v);
        }
        let a_cat = &f.target;
        let b_cat = &f.source;
        for b in b_cat.objects() {
            let lhs = a_cat.compose(self.counit.at(f.ob(b)), f.mor(self.unit.at(b)));
            if lhs != Some(a_cat.identity(f.ob(b))) {
                return Ok(Verdict::fail("triangle identity εF · Fη = id", b.to_string()));
            }
        }
        for a in a_cat.objects() {
            let lhs = b_cat.compose(u.mor(self.counit.at(a)), self.unit.at(u.ob(a)));
            if lhs != Some(b_cat.identity(u.ob(a))) {
                return Ok(Verdict::fail("triangle identity Uε · ηU = id", a.to_string()));
            }
        }
        Ok(Verdict::Pass)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{terminal_cat, walking_arrow, walking_iso};

    #[test]
    fn identity_functor_validates() {
        let two = walking_arrow();
        assert!(CatFunctor::identity(&two).validate().holds());
    }

    #[test]
    fn identity_functor_is_isofibration_and_equivalence() {
        let iso = walking_iso();
        let f = CatFunctor::identity(&iso);
        assert!(f.is_isofibration().holds());
        assert!(f.is_equivalence().holds());
    }

    #[test]
    fn functor_into_terminal_is_isofibration() {
        let f = CatFunctor::bang(&walking_iso(), &terminal_cat());
        assert!(f.validate().holds());
        assert!(f.is_isofibration().holds());
    }

    #[test]
    fn endpoint_inclusion_into_walking_iso_fails_isofibration() {
        let one = terminal_cat();
        let iso = walking_iso();
        let incl = CatFunctor::constant(&one, &iso, "0");
        assert!(incl.validate().holds());
        let verdict = incl.is_isofibration();
        assert!(!verdict.holds());
        assert!(verdict.witness().unwrap().contains("fwd"));
    }

    #[test]
    fn collapse_of_walking_iso_is_equivalence() {
        let f = CatFunctor::bang(&walking_iso(), &terminal_cat());
        assert!(f.is_equivalence().holds());
    }

    #[test]
    fn endpoint_inclusion_into_walking_arrow_not_essentially_surjective() {
        let incl = CatFunctor::constant(&terminal_cat(), &walking_arrow(), "0");
        let verdict = incl.is_equivalence();
        assert_eq!(verdict.law(), Some("essentially surjective"));
    }

    #[test]
    fn identity_adjunction_validates() {
        let two = walking_arrow();
        let id = CatFunctor::identity(&two);
        let adj = CatAdjunction {
            left: id.clone(),
            right: id.clone(),
            unit: CatNatTrans::identity(&id),
            counit: CatNatTrans::identity(&id),
        };
        assert!(adj.validate().unwrap().holds());
    }

    #[test]
    fn inclusion_collapse_adjunction_between_terminal_and_walking_iso() {
        // Inclusion of 0 into I is left adjoint to the unique collapse, with
        // counit the isomorphism pointing back at 0.
        let one = terminal_cat();
        let iso = walking_iso();
        let f = CatFunctor::constant(&one, &iso, "0");
        let u = CatFunctor::bang(&iso, &one);
        let unit = CatNatTrans::identity(&CatFunctor::identity(&one));
        let fu = f.compose_after(&u).unwrap();
        let counit = CatNatTrans {
            source: fu,
            target: CatFunctor::identity(&iso),
            components: [("0".to_string(), "id_0".to_string()), ("1".to_string(), "fwd".to_string())]
                .into_iter()
                .collect(),
        };
        let adj = CatAdjunction {
            left: f,
            right: u,
            unit,
            counit,
        };
        assert!(adj.validate().unwrap().holds());
    }

    #[test]
    fn mutated_counit_fails_triangles() {
        // Same data with the counit forced to identity components where an
        // isomorphism is required: the component at 1 no longer typechecks
        // as a natural transformation.
        let one = terminal_cat();
        let iso = walking_iso();
        let f = CatFunctor::constant(&one, &iso, "0");
        let u = CatFunctor::bang(&iso, &one);
        let unit = CatNatTrans::identity(&CatFunctor::identity(&one));
        let fu = f.compose_after(&u).unwrap();
        let counit = CatNatTrans {
            source: fu,
            target: CatFunctor::identity(&iso),
            components: [("0".to_string(), "id_0".to_string()), ("1".to_string(), "id_1".to_string())]
                .into_iter()
                .collect(),
        };
        let adj = CatAdjunction {
            left: f,
            right: u,
            unit,
            counit,
        };
        assert!(!adj.validate().unwrap().holds());
    }
}
