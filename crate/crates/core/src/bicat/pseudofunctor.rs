use super::{FinBicat, OneCell, TwoCell};
use crate::error::Error;
use crate::fincat::CatFunctor;
use crate::verdict::Verdict;
use std::collections::BTreeMap;
use std::sync::Arc;

type CompKey = ((String, String, String), (String, String));

/// A normal pseudofunctor: preserves identity 1-cells strictly and
/// composition up to the stored invertible comparison cells
/// `φ_{g,f}: Fg ∘ Ff ⇒ F(g∘f)`. Strict 2-functors are the special case
/// where every comparison is an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalPseudofunctor {
    pub source: Arc<FinBicat>,
    pub target: Arc<FinBicat>,
    pub object_map: BTreeMap<String, String>,
    /// Hom-functors `hom(x,y) → hom(Fx,Fy)`, keyed by `(x, y)`.
    pub hom_maps: BTreeMap<(String, String), CatFunctor>,
    /// Comparisons keyed by the object path `(x, y, z)` and cells `(g, f)`;
    /// the value is a 2-cell name in `hom(Fx, Fz)`.
    pub comparisons: BTreeMap<CompKey, String>,
}

impl NormalPseudofunctor {
    pub fn identity(b: &Arc<FinBicat>) -> Self {
        let mut hom_maps = BTreeMap::new();
        for (x, y, hom) in b.homs() {
            hom_maps.insert((x.to_string(), y.to_string()), CatFunctor::identity(hom));
        }
        let mut comparisons = BTreeMap::new();
        for (g, f) in b.composable_pairs() {
            let gf = b.compose1(&g, &f);
            comparisons.insert(
                (
                    (f.src.clone(), f.tgt.clone(), g.tgt.clone()),
                    (g.name.clone(), f.name.clone()),
                ),
                b.id2(&gf).name,
            );
        }
        NormalPseudofunctor {
            source: b.clone(),
            target: b.clone(),
            object_map: b.objects().map(|x| (x.to_string(), x.to_string())).collect(),
            hom_maps,
            comparisons,
        }
    }

    /// The normal pseudofunctor `1 → B` picking an object; all comparisons
    /// are forced by normality.
    pub fn from_object(terminal: &Arc<FinBicat>, b: &Arc<FinBicat>, obj: &str) -> Self {
        let star = terminal.objects().next().expect("terminal object").to_string();
        let id_cell = b.identity1(obj);
        let hom_b = b.hom(obj, obj);
        let hom_t = terminal.hom(&star, &star);
        let hom = CatFunctor {
            source: hom_t.clone(),
            target: hom_b.clone(),
            object_map: hom_t.objects().map(|f| (f.to_string(), id_cell.name.clone())).collect(),
            morphism_map: hom_t
                .morphisms()
                .map(|(m, _)| (m.to_string(), hom_b.identity(&id_cell.name).to_string()))
                .collect(),
        };
        let id1_t = terminal.identity1(&star);
        let comparison = b.lunitor(&id_cell);
        NormalPseudofunctor {
            source: terminal.clone(),
            target: b.clone(),
            object_map: [(star.clone(), obj.to_string())].into_iter().collect(),
            hom_maps: [((star.clone(), star.clone()), hom)].into_iter().collect(),
            comparisons: [(
                (
                    (star.clone(), star.clone(), star.clone()),
                    (id1_t.name.clone(), id1_t.name),
                ),
                comparison.name,
            )]
            .into_iter()
            .collect(),
        }
    }

    /// The unique pseudofunctor into the terminal bicategory.
    pub fn bang(source: &Arc<FinBicat>, terminal: &Arc<FinBicat>) -> Self {
        let star = terminal.objects().next().expect("terminal object").to_string();
        let id_cell = terminal.identity1(&star);
        let id2 = terminal.id2(&id_cell);
        let mut hom_maps = BTreeMap::new();
        for (x, y, hom) in source.homs() {
            hom_maps.insert(
                (x.to_string(), y.to_string()),
                CatFunctor {
                    source: hom.clone(),
                    target: terminal.hom(&star, &star).clone(),
                    object_map: hom.objects().map(|f| (f.to_string(), id_cell.name.clone())).collect(),
                    morphism_map: hom
                        .morphisms()
                        .map(|(m, _)| (m.to_string(), id2.name.clone()))
                        .collect(),
                },
            );
        }
        let mut comparisons = BTreeMap::new();
        for (g, f) in source.composable_pairs() {
            comparisons.insert(
                (
                    (f.src.clone(), f.tgt.clone(), g.tgt.clone()),
                    (g.name.clone(), f.name.clone()),
                ),
                id2.name.clone(),
            );
        }
        NormalPseudofunctor {
            source: source.clone(),
            target: terminal.clone(),
            object_map: source.objects().map(|x| (x.to_string(), star.clone())).collect(),
            hom_maps,
            comparisons,
        }
    }

    pub fn ob(&self, x: &str) -> &str {
        &self.object_map[x]
    }

    pub fn hom_map(&self, x: &str, y: &str) -> &CatFunctor {
        &self.hom_maps[&(x.to_string(), y.to_string())]
    }

    pub fn one(&self, f: &OneCell) -> OneCell {
        OneCell::new(
            self.ob(&f.src),
            self.ob(&f.tgt),
            self.hom_map(&f.src, &f.tgt).ob(&f.name),
        )
    }

    pub fn two(&self, t: &TwoCell) -> TwoCell {
        TwoCell::new(
            self.ob(&t.src),
            self.ob(&t.tgt),
            self.hom_map(&t.src, &t.tgt).mor(&t.name),
        )
    }

    /// `φ_{g,f}: Fg ∘ Ff ⇒ F(g∘f)`.
    pub fn comparison(&self, g: &OneCell, f: &OneCell) -> TwoCell {
        let key = (
            (f.src.clone(), f.tgt.clone(), g.tgt.clone()),
            (g.name.clone(), f.name.clone()),
        );
        TwoCell::new(self.ob(&f.src), self.ob(&g.tgt), self.comparisons[&key].clone())
    }

    pub fn is_parallel_to(&self, other: &NormalPseudofunctor) -> bool {
        self.source == other.source && self.target == other.target
    }

    pub fn agrees_on_objects(&self, other: &NormalPseudofunctor) -> bool {
        self.object_map == other.object_map
    }

    /// All comparison cells are identities.
    pub fn is_strict(&self) -> bool {
        self.comparisons.iter().all(|(key, c)| {
            let hom = self.target.hom(self.ob(&key.0 .0), self.ob(&key.0 .2));
            hom.is_identity(c)
        })
    }

    pub fn validate(&self) -> Verdict {
        for x in self.source.objects() {
            match self.object_map.get(x) {
                Some(fx) if self.target.has_object(fx) => {}
                _ => return Verdict::fail("object map total into target", x.to_string()),
            }
        }
        for (x, y, hom) in self.source.homs() {
            let Some(map) = self.hom_maps.get(&(x.to_string(), y.to_string())) else {
                return Verdict::fail("hom-functor present for every pair", format!("({x}, {y})"));
            };
            if map.source != *hom || map.target != *self.target.hom(self.ob(x), self.ob(y)) {
                return Verdict::fail("hom-functor shape", format!("({x}, {y})"));
            }
            if let Verdict::Fail { law, witness } = map.validate() {
                return Verdict::fail(format!("hom-functor at ({x}, {y}): {law}"), witness);
            }
        }
        // Normality: identity 1-cells preserved strictly.
        for x in self.source.objects() {
            let id = self.source.identity1(x);
            if self.one(&id) != self.target.identity1(self.ob(x)) {
                return Verdict::fail("normality: F(id) = id", x.to_string());
            }
        }
        // Comparisons: defined per composable pair, invertible, right shape.
        for (g, f) in self.source.composable_pairs() {
            let key = (
                (f.src.clone(), f.tgt.clone(), g.tgt.clone()),
                (g.name.clone(), f.name.clone()),
            );
            let Some(c) = self.comparisons.get(&key) else {
                return Verdict::fail(
                    "comparison present per composable pair",
                    format!("({}, {})", g.name, f.name),
                );
            };
            let hom = self.target.hom(self.ob(&f.src), self.ob(&g.tgt));
            let src = self.target.compose1(&self.one(&g), &self.one(&f));
            let tgt = self.one(&self.source.compose1(&g, &f));
            if !hom.has_morphism(c) || hom.src(c) != src.name || hom.tgt(c) != tgt.name || !hom.is_iso(c)
            {
                return Verdict::fail(
                    "comparison shape Fg∘Ff ⇒ F(g∘f), invertible",
                    format!("({}, {})", g.name, f.name),
                );
            }
        }
        for key in self.comparisons.keys() {
            let (path, (g, f)) = key;
            let ok = self.source.has_object(&path.0)
                && self.source.has_object(&path.1)
                && self.source.has_object(&path.2)
                && self.source.hom(&path.1, &path.2).has_object(g)
                && self.source.hom(&path.0, &path.1).has_object(f);
            if !ok {
                return Verdict::fail("comparison keyed by declared cells", format!("({g}, {f})"));
            }
        }
        // Unit coherence, forced by normality.
        for f in self.source.all_one_cells() {
            let id_tgt = self.source.identity1(&f.tgt);
            let ff = self.one(&f);
            let lhs = self.comparison(&id_tgt, &f);
            let l_src = self.two(&self.source.lunitor(&f));
            let inv = invert(&self.target, &l_src);
            let rhs = self.target.vcomp2(&inv, &self.target.lunitor(&ff));
            if lhs != rhs {
                return Verdict::fail("unit coherence φ_{id,f} = F(λ)⁻¹·λ", f.name.clone());
            }
            let id_src = self.source.identity1(&f.src);
            let lhs = self.comparison(&f, &id_src);
            let r_src = self.two(&self.source.runitor(&f));
            let inv = invert(&self.target, &r_src);
            let rhs = self.target.vcomp2(&inv, &self.target.runitor(&ff));
            if lhs != rhs {
                return Verdict::fail("unit coherence φ_{f,id} = F(ρ)⁻¹·ρ", f.name.clone());
            }
        }
        // Naturality of the comparisons in both variables.
        for (g, f) in self.source.composable_pairs() {
            let hom_g = self.source.hom(&g.src, &g.tgt);
            for (m, info) in hom_g.morphisms() {
                if info.src != g.name {
                    continue;
                }
                let beta = TwoCell::new(g.src.clone(), g.tgt.clone(), m);
                let g2 = OneCell::new(g.src.clone(), g.tgt.clone(), info.tgt.clone());
                let lhs = self.target.vcomp2(
                    &self.comparison(&g2, &f),
                    &self.target.whisker_right(&self.two(&beta), &self.one(&f)),
                );
                let rhs = self.target.vcomp2(
                    &self.two(&self.source.whisker_right(&beta, &f)),
                    &self.comparison(&g, &f),
                );
                if lhs != rhs {
                    return Verdict::fail(
                        "comparison naturality in g",
                        format!("({m}, {})", f.name),
                    );
                }
            }
            let hom_f = self.source.hom(&f.src, &f.tgt);
            for (m, info) in hom_f.morphisms() {
                if info.src != f.name {
                    continue;
                }
                let alpha = TwoCell::new(f.src.clone(), f.tgt.clone(), m);
                let f2 = OneCell::new(f.src.clone(), f.tgt.clone(), info.tgt.clone());
                let lhs = self.target.vcomp2(
                    &self.comparison(&g, &f2),
                    &self.target.whisker_left(&self.one(&g), &self.two(&alpha)),
                );
                let rhs = self.target.vcomp2(
                    &self.two(&self.source.whisker_left(&g, &alpha)),
                    &self.comparison(&g, &f),
                );
                if lhs != rhs {
                    return Verdict::fail(
                        "comparison naturality in f",
                        format!("({}, {m})", g.name),
                    );
                }
            }
        }
        // Composition coherence: both pastings from (Fh∘Fg)∘Ff to
        // F(h∘(g∘f)) agree.
        for (h, g, f) in self.source.composable_triples() {
            let fh = self.one(&h);
            let fg = self.one(&g);
            let ff = self.one(&f);
            let gf = self.source.compose1(&g, &f);
            let hg = self.source.compose1(&h, &g);
            let lhs = self.target.vcomp2(
                &self.comparison(&h, &gf),
                &self.target.vcomp2(
                    &self.target.whisker_left(&fh, &self.comparison(&g, &f)),
                    &self.target.associator(&fh, &fg, &ff),
                ),
            );
            let rhs = self.target.vcomp2(
                &self.two(&self.source.associator(&h, &g, &f)),
                &self.target.vcomp2(
                    &self.comparison(&hg, &f),
                    &self.target.whisker_right(&self.comparison(&h, &g), &ff),
                ),
            );
            if lhs != rhs {
                return Verdict::fail(
                    "composition coherence",
                    format!("({}, {}, {})", h.name, g.name, f.name),
                );
            }
        }
        Verdict::Pass
    }

    /// `self ∘ inner`, with comparisons `self(φ^inner) · φ^self` at images.
    pub fn compose_after(&self, inner: &NormalPseudofunctor) -> Result<NormalPseudofunctor, Error> {
        if inner.target != self.source {
            return Err(Error::shape("pseudofunctor composition endpoints do not match"));
        }
        let mut hom_maps = BTreeMap::new();
        for ((x, y), map) in &inner.hom_maps {
            hom_maps.insert(
                (x.clone(), y.clone()),
                self.hom_map(inner.ob(x), inner.ob(y)).compose_after(map)?,
            );
        }
        let mut comparisons = BTreeMap::new();
        for (g, f) in inner.source.composable_pairs() {
            let ig = inner.one(&g);
            let if_ = inner.one(&f);
            let outer_phi = self.comparison(&ig, &if_);
            let inner_phi = self.two(&inner.comparison(&g, &f));
            let composed = self.target.vcomp2(&inner_phi, &outer_phi);
            comparisons.insert(
                (
                    (f.src.clone(), f.tgt.clone(), g.tgt.clone()),
                    (g.name.clone(), f.name.clone()),
                ),
                composed.name,
            );
        }
        Ok(NormalPseudofunctor {
            source: inner.source.clone(),
            target: self.target.clone(),
            object_map: inner
                .object_map
                .iter()
                .map(|(x, y)| (x.clone(), self.ob(y).to_string()))
                .collect(),
            hom_maps,
            comparisons,
        })
    }
}

/// Inverse of an invertible 2-cell.
pub(crate) fn invert(b: &FinBicat, t: &TwoCell) -> TwoCell {
    let hom = b.hom(&t.src, &t.tgt);
    TwoCell::new(
        &t.src,
        &t.tgt,
        hom.inverse_of(&t.name).expect("2-cell is invertible"),
    )
}
