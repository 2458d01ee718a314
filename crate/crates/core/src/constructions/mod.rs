//! Shape and limit-type constructions: the terminal bicategory, binary
//! products, free cells, suspensions, cotensors in both ambient settings,
//! exponentials of strict 2-categories, and the strict slice of cones over
//! a diagram. Every construction names its output cells deterministically
//! from the input names and produces validator-clean structures.

mod cotensor;
mod exponential;
mod slice;

pub use cotensor::{
    cone_category_2cat, cotensor_2cat, cotensor_delta_2cat, cotensor_delta_icon, cotensor_icon,
    icon_cotensor_object_name, IconDiagram,
};
pub use exponential::{exponential_2cat, pseudofunctor_name, two_nat_name};
pub use slice::{slice_object_name, strict_slice, Cone2Cat};

use crate::bicat::{FinBicat, NormalPseudofunctor, OneCell};
use crate::error::Error;
use crate::fincat::{discrete_cat, empty_cat, product_cat, walking_arrow, CatFunctor, FinCat};
use crate::name;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// Assembles a strict 2-category from hom-categories and composition
/// closures. Coherence cells are identities; the closures must compose
/// strictly (checked by the validator downstream).
pub(crate) fn assemble_strict(
    objects: BTreeSet<String>,
    homs: BTreeMap<(String, String), Arc<FinCat>>,
    identities: BTreeMap<String, String>,
    compose_ob: &dyn Fn(&str, &str, &str, &str, &str) -> String,
    compose_mor: &dyn Fn(&str, &str, &str, &str, &str) -> String,
) -> Arc<FinBicat> {
    let mut hcomp = BTreeMap::new();
    for x in &objects {
        for y in &objects {
            for z in &objects {
                let source = product_cat(&homs[&(y.clone(), z.clone())], &homs[&(x.clone(), y.clone())]);
                let target = homs[&(x.clone(), z.clone())].clone();
                let mut object_map = BTreeMap::new();
                for g in homs[&(y.clone(), z.clone())].objects() {
                    for f in homs[&(x.clone(), y.clone())].objects() {
                        object_map.insert(name::pair(g, f), compose_ob(x, y, z, g, f));
                    }
                }
                let mut morphism_map = BTreeMap::new();
                for (m, _) in homs[&(y.clone(), z.clone())].morphisms() {
                    for (n, _) in homs[&(x.clone(), y.clone())].morphisms() {
                        morphism_map.insert(name::pair(m, n), compose_mor(x, y, z, m, n));
                    }
                }
                hcomp.insert(
                    (x.clone(), y.clone(), z.clone()),
                    CatFunctor {
                        source,
                        target,
                        object_map,
                        morphism_map,
                    },
                );
            }
        }
    }
    let skeleton = FinBicat::from_parts(
        objects.clone(),
        homs.clone(),
        identities.clone(),
        hcomp.clone(),
        BTreeMap::new(),
        BTreeMap::new(),
        BTreeMap::new(),
    );
    let mut associators = BTreeMap::new();
    for (h, g, f) in skeleton.composable_triples() {
        let composite = skeleton.compose1(&skeleton.compose1(&h, &g), &f);
        associators.insert(
            (
                (f.src.clone(), f.tgt.clone(), g.tgt.clone(), h.tgt.clone()),
                (h.name.clone(), g.name.clone(), f.name.clone()),
            ),
            skeleton.id2(&composite).name,
        );
    }
    let mut lunitors = BTreeMap::new();
    let mut runitors = BTreeMap::new();
    for f in skeleton.all_one_cells() {
        let id = skeleton.id2(&f).name;
        lunitors.insert((f.src.clone(), f.tgt.clone(), f.name.clone()), id.clone());
        runitors.insert((f.src.clone(), f.tgt.clone(), f.name.clone()), id);
    }
    Arc::new(FinBicat::from_parts(
        objects, homs, identities, hcomp, associators, lunitors, runitors,
    ))
}

/// Builds a strict 2-category in which every composable pair of 1-cells has
/// an identity on one side, so all composition tables are forced by strict
/// unit laws. Suspensions and the counterexample fixtures have this shape.
pub(crate) fn unit_sparse_strict_bicat(
    objects: BTreeSet<String>,
    homs: BTreeMap<(String, String), Arc<FinCat>>,
    identities: BTreeMap<String, String>,
) -> Arc<FinBicat> {
    let ids = identities.clone();
    let homs2 = homs.clone();
    let compose_ob = move |x: &str, y: &str, _z: &str, g: &str, f: &str| -> String {
        if x == y && f == ids[x] {
            g.to_string()
        } else {
            // The right factor is not an identity, so the left one must be.
            f.to_string()
        }
    };
    let ids = identities.clone();
    let compose_mor = move |x: &str, y: &str, z: &str, m: &str, n: &str| -> String {
        if x == y && n == homs2[&(x.to_string(), x.to_string())].identity(&ids[x]) {
            m.to_string()
        } else {
            debug_assert_eq!(
                m,
                homs2[&(y.to_string(), z.to_string())].identity(&ids[y])
            );
            n.to_string()
        }
    };
    assemble_strict(objects, homs, identities, &compose_ob, &compose_mor)
}

/// The terminal bicategory: one object, one 1-cell, one 2-cell.
pub fn terminal_bicat() -> Arc<FinBicat> {
    locally_discrete(&crate::fincat::terminal_cat())
}

/// A category viewed as a locally discrete strict 2-category.
pub fn locally_discrete(c: &Arc<FinCat>) -> Arc<FinBicat> {
    let objects: BTreeSet<String> = c.objects().map(|s| s.to_string()).collect();
    let mut homs = BTreeMap::new();
    for x in c.objects() {
        for y in c.objects() {
            homs.insert(
                (x.to_string(), y.to_string()),
                discrete_cat(c.hom(x, y).into_iter()),
            );
        }
    }
    let identities = c
        .objects()
        .map(|x| (x.to_string(), c.identity(x).to_string()))
        .collect();
    let comp = c.clone();
    let compose_ob = move |_x: &str, _y: &str, _z: &str, g: &str, f: &str| -> String {
        comp.compose(g, f).expect("composable").to_string()
    };
    let comp = c.clone();
    let homs2 = homs.clone();
    let compose_mor = move |x: &str, y: &str, z: &str, m: &str, n: &str| -> String {
        // Morphisms of discrete homs are identities id_<cell>.
        let g = homs2[&(y.to_string(), z.to_string())]
            .morphisms()
            .find(|(mm, _)| *mm == m)
            .map(|(_, info)| info.src.clone())
            .unwrap();
        let f = homs2[&(x.to_string(), y.to_string())]
            .morphisms()
            .find(|(nn, _)| *nn == n)
            .map(|(_, info)| info.src.clone())
            .unwrap();
        let gf = comp.compose(&g, &f).expect("composable").to_string();
        homs2[&(x.to_string(), z.to_string())].identity(&gf).to_string()
    };
    assemble_strict(objects, homs, identities, &compose_ob, &compose_mor)
}

/// Embeds a functor of categories as a strict 2-functor between the locally
/// discrete 2-categories.
pub fn locally_discrete_functor(f: &CatFunctor) -> NormalPseudofunctor {
    let source = locally_discrete(&f.source);
    let target = locally_discrete(&f.target);
    let mut hom_maps = BTreeMap::new();
    for (x, y, hom) in source.homs() {
        let tgt_hom = target.hom(f.ob(x), f.ob(y));
        let object_map: BTreeMap<String, String> = hom
            .objects()
            .map(|m| (m.to_string(), f.mor(m).to_string()))
            .collect();
        let morphism_map = hom
            .morphisms()
            .map(|(mm, info)| {
                (
                    mm.to_string(),
                    tgt_hom.identity(&object_map[&info.src]).to_string(),
                )
            })
            .collect();
        hom_maps.insert(
            (x.to_string(), y.to_string()),
            CatFunctor {
                source: hom.clone(),
                target: tgt_hom.clone(),
                object_map,
                morphism_map,
            },
        );
    }
    let mut comparisons = BTreeMap::new();
    for (g, f1) in source.composable_pairs() {
        let img = {
            let gf = source.compose1(&g, &f1);
            let pf_src = f.ob(&gf.src);
            let pf_tgt = f.ob(&gf.tgt);
            OneCell::new(pf_src, pf_tgt, f.mor(&gf.name))
        };
        comparisons.insert(
            (
                (f1.src.clone(), f1.tgt.clone(), g.tgt.clone()),
                (g.name.clone(), f1.name.clone()),
            ),
            target.id2(&img).name,
        );
    }
    NormalPseudofunctor {
        source,
        target,
        object_map: f.object_map.clone(),
        hom_maps,
        comparisons,
    }
}

/// The suspension `ΣJ`: two objects `0` and `1`, `hom(0,1) = J`, trivial
/// endpoint homs, nothing backwards.
pub fn suspension(j: &Arc<FinCat>) -> Arc<FinBicat> {
    let objects: BTreeSet<String> = ["0".to_string(), "1".to_string()].into_iter().collect();
    let mut homs = BTreeMap::new();
    homs.insert(("0".to_string(), "1".to_string()), j.clone());
    homs.insert(("0".to_string(), "0".to_string()), discrete_cat(["id_0"]));
    homs.insert(("1".to_string(), "1".to_string()), discrete_cat(["id_1"]));
    homs.insert(("1".to_string(), "0".to_string()), empty_cat());
    let identities = [
        ("0".to_string(), "id_0".to_string()),
        ("1".to_string(), "id_1".to_string()),
    ]
    .into_iter()
    .collect();
    unit_sparse_strict_bicat(objects, homs, identities)
}

/// Free cells: the free 0-cell is the terminal bicategory, the free 1-cell
/// is `Σ𝟙`, and the free 2-cell is `Σ𝟚`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FreeCell {
    Zero,
    One,
    Two,
}

pub fn free_cell(kind: FreeCell) -> Arc<FinBicat> {
    match kind {
        FreeCell::Zero => terminal_bicat(),
        FreeCell::One => suspension(&crate::fincat::terminal_cat()),
        FreeCell::Two => suspension(&walking_arrow()),
    }
}

/// A bicategory with a chosen ordered pair of basepoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipointedBicat {
    pub bicat: Arc<FinBicat>,
    pub base: (String, String),
}

impl BipointedBicat {
    pub fn new(bicat: &Arc<FinBicat>, x: &str, y: &str) -> Result<Self, Error> {
        if !bicat.has_object(x) || !bicat.has_object(y) {
            return Err(Error::shape("basepoints must be objects of the bicategory"));
        }
        Ok(BipointedBicat {
            bicat: bicat.clone(),
            base: (x.to_string(), y.to_string()),
        })
    }
}

/// The canonical normal pseudofunctor `Σ C(x,y) → C` sending `0 ↦ x`,
/// `1 ↦ y`, the identity on the generating hom. Comparisons are forced by
/// normality from the unitors of `C`.
pub fn suspension_counit(c: &BipointedBicat) -> NormalPseudofunctor {
    let (x, y) = (&c.base.0, &c.base.1);
    let b = &c.bicat;
    let hom_xy = b.hom(x, y).clone();
    let sigma = suspension(&hom_xy);
    let mut hom_maps = BTreeMap::new();
    hom_maps.insert(
        ("0".to_string(), "1".to_string()),
        CatFunctor::identity(&hom_xy),
    );
    // Endpoint homs pick the identity 1-cells.
    for (s_ob, b_ob) in [("0", x.as_str()), ("1", y.as_str())] {
        let s_hom = sigma.hom(s_ob, s_ob);
        let b_hom = b.hom(b_ob, b_ob);
        let id_cell = b.identity1(b_ob);
        hom_maps.insert(
            (s_ob.to_string(), s_ob.to_string()),
            CatFunctor {
                source: s_hom.clone(),
                target: b_hom.clone(),
                object_map: s_hom.objects().map(|o| (o.to_string(), id_cell.name.clone())).collect(),
                morphism_map: s_hom
                    .morphisms()
                    .map(|(m, _)| (m.to_string(), b_hom.identity(&id_cell.name).to_string()))
                    .collect(),
            },
        );
    }
    hom_maps.insert(
        ("1".to_string(), "0".to_string()),
        CatFunctor {
            source: sigma.hom("1", "0").clone(),
            target: b.hom(y, x).clone(),
            object_map: BTreeMap::new(),
            morphism_map: BTreeMap::new(),
        },
    );
    let object_map: BTreeMap<String, String> = [
        ("0".to_string(), x.clone()),
        ("1".to_string(), y.clone()),
    ]
    .into_iter()
    .collect();
    let skeleton = NormalPseudofunctor {
        source: sigma.clone(),
        target: b.clone(),
        object_map: object_map.clone(),
        hom_maps: hom_maps.clone(),
        comparisons: BTreeMap::new(),
    };
    let mut comparisons = BTreeMap::new();
    for (g, f) in sigma.composable_pairs() {
        // Every composable pair in a suspension has an identity factor.
        let cell = if g.src == g.tgt && g.name == sigma.identity1(&g.src).name {
            b.lunitor(&skeleton.one(&f))
        } else {
            b.runitor(&skeleton.one(&g))
        };
        comparisons.insert(
            (
                (f.src.clone(), f.tgt.clone(), g.tgt.clone()),
                (g.name.clone(), f.name.clone()),
            ),
            cell.name,
        );
    }
    NormalPseudofunctor {
        source: sigma,
        target: b.clone(),
        object_map,
        hom_maps,
        comparisons,
    }
}

/// Suspension of a functor: the strict 2-functor `ΣJ → ΣK` acting as `k` on
/// the generating hom.
pub fn suspension_functor(k: &CatFunctor) -> NormalPseudofunctor {
    let source = suspension(&k.source);
    let target = suspension(&k.target);
    let mut hom_maps = BTreeMap::new();
    hom_maps.insert(("0".to_string(), "1".to_string()), k.clone());
    for ob in ["0", "1"] {
        let s_hom = source.hom(ob, ob);
        let t_hom = target.hom(ob, ob);
        hom_maps.insert(
            (ob.to_string(), ob.to_string()),
            CatFunctor {
                source: s_hom.clone(),
                target: t_hom.clone(),
                object_map: [(format!("id_{ob}"), format!("id_{ob}"))].into_iter().collect(),
                morphism_map: [(format!("id_id_{ob}"), format!("id_id_{ob}"))]
                    .into_iter()
                    .collect(),
            },
        );
    }
    hom_maps.insert(
        ("1".to_string(), "0".to_string()),
        CatFunctor {
            source: source.hom("1", "0").clone(),
            target: target.hom("1", "0").clone(),
            object_map: BTreeMap::new(),
            morphism_map: BTreeMap::new(),
        },
    );
    let skeleton = NormalPseudofunctor {
        source: source.clone(),
        target: target.clone(),
        object_map: [
            ("0".to_string(), "0".to_string()),
            ("1".to_string(), "1".to_string()),
        ]
        .into_iter()
        .collect(),
        hom_maps,
        comparisons: BTreeMap::new(),
    };
    let mut comparisons = BTreeMap::new();
    for (g, f) in source.composable_pairs() {
        let gf = source.compose1(&g, &f);
        comparisons.insert(
            (
                (f.src.clone(), f.tgt.clone(), g.tgt.clone()),
                (g.name.clone(), f.name.clone()),
            ),
            target.id2(&skeleton.one(&gf)).name,
        );
    }
    let mut out = skeleton;
    out.comparisons = comparisons;
    out
}

/// Binary product of bicategories with componentwise structure. Returns the
/// product together with its two projections.
pub fn product_bicat(
    a: &Arc<FinBicat>,
    b: &Arc<FinBicat>,
) -> (Arc<FinBicat>, NormalPseudofunctor, NormalPseudofunctor) {
    let mut objects = BTreeSet::new();
    let mut homs = BTreeMap::new();
    let mut identities = BTreeMap::new();
    for x in a.objects() {
        for x2 in b.objects() {
            let ob = name::pair(x, x2);
            identities.insert(
                ob.clone(),
                name::pair(&a.identity1(x).name, &b.identity1(x2).name),
            );
            objects.insert(ob);
        }
    }
    for (x, y, hom_a) in a.homs() {
        for (x2, y2, hom_b) in b.homs() {
            homs.insert(
                (name::pair(x, x2), name::pair(y, y2)),
                product_cat(hom_a, hom_b),
            );
        }
    }
    let mut hcomp = BTreeMap::new();
    for xs in objects.iter() {
        for ys in objects.iter() {
            for zs in objects.iter() {
                let (x, x2) = name::unpair(xs).unwrap();
                let (y, y2) = name::unpair(ys).unwrap();
                let (z, z2) = name::unpair(zs).unwrap();
                let source = product_cat(
                    &homs[&(ys.clone(), zs.clone())],
                    &homs[&(xs.clone(), ys.clone())],
                );
                let target = homs[&(xs.clone(), zs.clone())].clone();
                let mut object_map = BTreeMap::new();
                let mut morphism_map = BTreeMap::new();
                for g in homs[&(ys.clone(), zs.clone())].objects() {
                    let (ga, gb) = name::unpair(g).unwrap();
                    for f in homs[&(xs.clone(), ys.clone())].objects() {
                        let (fa, fb) = name::unpair(f).unwrap();
                        let ca = a.compose1(&OneCell::new(&y, &z, ga.clone()), &OneCell::new(&x, &y, fa));
                        let cb = b.compose1(&OneCell::new(&y2, &z2, gb.clone()), &OneCell::new(&x2, &y2, fb));
                        object_map.insert(name::pair(g, f), name::pair(&ca.name, &cb.name));
                    }
                }
                for (m, _) in homs[&(ys.clone(), zs.clone())].morphisms() {
                    let (ma, mb) = name::unpair(m).unwrap();
                    for (n, _) in homs[&(xs.clone(), ys.clone())].morphisms() {
                        let (na, nb) = name::unpair(n).unwrap();
                        let ca = a.hcomp2(
                            &crate::bicat::TwoCell::new(&y, &z, ma.clone()),
                            &crate::bicat::TwoCell::new(&x, &y, na),
                        );
                        let cb = b.hcomp2(
                            &crate::bicat::TwoCell::new(&y2, &z2, mb.clone()),
                            &crate::bicat::TwoCell::new(&x2, &y2, nb),
                        );
                        morphism_map.insert(name::pair(m, n), name::pair(&ca.name, &cb.name));
                    }
                }
                hcomp.insert(
                    (xs.clone(), ys.clone(), zs.clone()),
                    CatFunctor {
                        source,
                        target,
                        object_map,
                        morphism_map,
                    },
                );
            }
        }
    }
    let skeleton = FinBicat::from_parts(
        objects.clone(),
        homs.clone(),
        identities.clone(),
        hcomp.clone(),
        BTreeMap::new(),
        BTreeMap::new(),
        BTreeMap::new(),
    );
    let split1 = |c: &OneCell| -> (OneCell, OneCell) {
        let (sx, sx2) = name::unpair(&c.src).unwrap();
        let (tx, tx2) = name::unpair(&c.tgt).unwrap();
        let (na, nb) = name::unpair(&c.name).unwrap();
        (OneCell::new(sx, tx, na), OneCell::new(sx2, tx2, nb))
    };
    let mut associators = BTreeMap::new();
    for (h, g, f) in skeleton.composable_triples() {
        let (ha, hb) = split1(&h);
        let (ga, gb) = split1(&g);
        let (fa, fb) = split1(&f);
        let aa = a.associator(&ha, &ga, &fa);
        let ab = b.associator(&hb, &gb, &fb);
        associators.insert(
            (
                (f.src.clone(), f.tgt.clone(), g.tgt.clone(), h.tgt.clone()),
                (h.name.clone(), g.name.clone(), f.name.clone()),
            ),
            name::pair(&aa.name, &ab.name),
        );
    }
    let mut lunitors = BTreeMap::new();
    let mut runitors = BTreeMap::new();
    for f in skeleton.all_one_cells() {
        let (fa, fb) = split1(&f);
        lunitors.insert(
            (f.src.clone(), f.tgt.clone(), f.name.clone()),
            name::pair(&a.lunitor(&fa).name, &b.lunitor(&fb).name),
        );
        runitors.insert(
            (f.src.clone(), f.tgt.clone(), f.name.clone()),
            name::pair(&a.runitor(&fa).name, &b.runitor(&fb).name),
        );
    }
    let product = Arc::new(FinBicat::from_parts(
        objects, homs, identities, hcomp, associators, lunitors, runitors,
    ));
    let proj_a = product_projection(&product, a, true);
    let proj_b = product_projection(&product, b, false);
    (product, proj_a, proj_b)
}

fn product_projection(
    product: &Arc<FinBicat>,
    side: &Arc<FinBicat>,
    first: bool,
) -> NormalPseudofunctor {
    let pick = |s: &str| -> String {
        let (l, r) = name::unpair(s).unwrap();
        if first {
            l
        } else {
            r
        }
    };
    let object_map: BTreeMap<String, String> =
        product.objects().map(|o| (o.to_string(), pick(o))).collect();
    let mut hom_maps = BTreeMap::new();
    for (x, y, hom) in product.homs() {
        let tgt_hom = side.hom(&pick(x), &pick(y));
        hom_maps.insert(
            (x.to_string(), y.to_string()),
            CatFunctor {
                source: hom.clone(),
                target: tgt_hom.clone(),
                object_map: hom.objects().map(|o| (o.to_string(), pick(o))).collect(),
                morphism_map: hom.morphisms().map(|(m, _)| (m.to_string(), pick(m))).collect(),
            },
        );
    }
    let skeleton = NormalPseudofunctor {
        source: product.clone(),
        target: side.clone(),
        object_map: object_map.clone(),
        hom_maps: hom_maps.clone(),
        comparisons: BTreeMap::new(),
    };
    let mut comparisons = BTreeMap::new();
    for (g, f) in product.composable_pairs() {
        let gf = product.compose1(&g, &f);
        comparisons.insert(
            (
                (f.src.clone(), f.tgt.clone(), g.tgt.clone()),
                (g.name.clone(), f.name.clone()),
            ),
            side.id2(&skeleton.one(&gf)).name,
        );
    }
    NormalPseudofunctor {
        source: product.clone(),
        target: side.clone(),
        object_map,
        hom_maps,
        comparisons,
    }
}

/// Pairing `⟨f, g⟩: X → A × B` of pseudofunctors with a common source.
pub fn product_pairing(
    product: &Arc<FinBicat>,
    f: &NormalPseudofunctor,
    g: &NormalPseudofunctor,
) -> Result<NormalPseudofunctor, Error> {
    if f.source != g.source {
        return Err(Error::shape("pairing requires a common source"));
    }
    let x_cat = &f.source;
    let object_map: BTreeMap<String, String> = x_cat
        .objects()
        .map(|x| (x.to_string(), name::pair(f.ob(x), g.ob(x))))
        .collect();
    let mut hom_maps = BTreeMap::new();
    for (x, y, hom) in x_cat.homs() {
        let tgt_hom = product.hom(&object_map[x], &object_map[y]);
        let fa = f.hom_map(x, y);
        let ga = g.hom_map(x, y);
        hom_maps.insert(
            (x.to_string(), y.to_string()),
            CatFunctor {
                source: hom.clone(),
                target: tgt_hom.clone(),
                object_map: hom
                    .objects()
                    .map(|m| (m.to_string(), name::pair(fa.ob(m), ga.ob(m))))
                    .collect(),
                morphism_map: hom
                    .morphisms()
                    .map(|(m, _)| (m.to_string(), name::pair(fa.mor(m), ga.mor(m))))
                    .collect(),
            },
        );
    }
    let mut comparisons = BTreeMap::new();
    for (gc, fc) in x_cat.composable_pairs() {
        comparisons.insert(
            (
                (fc.src.clone(), fc.tgt.clone(), gc.tgt.clone()),
                (gc.name.clone(), fc.name.clone()),
            ),
            name::pair(&f.comparison(&gc, &fc).name, &g.comparison(&gc, &fc).name),
        );
    }
    Ok(NormalPseudofunctor {
        source: x_cat.clone(),
        target: product.clone(),
        object_map,
        hom_maps,
        comparisons,
    })
}

/// A one-object strict 2-category from a strict monoidal structure on a
/// category: the hom is `hom_cat`, horizontal composition is the tensor.
pub fn monoidal_bicat(
    hom_cat: &Arc<FinCat>,
    unit: &str,
    tensor_ob: &dyn Fn(&str, &str) -> String,
    tensor_mor: &dyn Fn(&str, &str) -> String,
) -> Arc<FinBicat> {
    let objects: BTreeSet<String> = ["*".to_string()].into_iter().collect();
    let homs: BTreeMap<(String, String), Arc<FinCat>> =
        [(("*".to_string(), "*".to_string()), hom_cat.clone())]
            .into_iter()
            .collect();
    let identities = [("*".to_string(), unit.to_string())].into_iter().collect();
    assemble_strict(
        objects,
        homs,
        identities,
        &|_, _, _, g, f| tensor_ob(g, f),
        &|_, _, _, m, n| tensor_mor(m, n),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{terminal_cat, walking_iso};

    #[test]
    fn terminal_bicat_is_valid_strict() {
        let t = terminal_bicat();
        assert!(t.validate().holds());
        assert!(t.is_strict().holds());
        assert_eq!(t.object_count(), 1);
    }

    #[test]
    fn suspension_of_terminal_is_free_one_cell() {
        let c1 = free_cell(FreeCell::One);
        assert!(c1.validate().holds());
        assert!(c1.is_strict().holds());
        assert_eq!(c1.all_one_cells().len(), 3);
        assert_eq!(*c1, *suspension(&terminal_cat()));
    }

    #[test]
    fn free_two_cell_hom_is_walking_arrow() {
        let c2 = free_cell(FreeCell::Two);
        assert!(c2.validate().holds());
        assert_eq!(*c2, *suspension(&walking_arrow()));
        let hom = c2.hom("0", "1");
        assert_eq!(hom.object_count(), 2);
        assert_eq!(hom.morphism_count(), 3);
    }

    #[test]
    fn suspension_of_empty_is_discrete_pair() {
        let s = suspension(&empty_cat());
        assert!(s.validate().holds());
        assert!(s.is_strict().holds());
        assert_eq!(s.all_one_cells().len(), 2);
    }

    #[test]
    fn locally_discrete_walking_iso_is_valid() {
        let ld = locally_discrete(&walking_iso());
        assert!(ld.validate().holds());
        assert!(ld.is_strict().holds());
    }

    #[test]
    fn suspension_counit_is_valid_pseudofunctor() {
        let c2 = free_cell(FreeCell::Two);
        let bp = BipointedBicat::new(&c2, "0", "1").unwrap();
        let counit = suspension_counit(&bp);
        assert!(counit.validate().holds());
        // Σ is fully faithful: on ΣJ bipointed at its own ends, the counit
        // is an isomorphism on each hom.
        assert!(counit.hom_map("0", "1").is_isomorphism());
    }

    #[test]
    fn product_of_suspensions_is_valid() {
        let c2 = free_cell(FreeCell::Two);
        let one = terminal_bicat();
        let (p, pa, pb) = product_bicat(&one, &c2);
        assert!(p.validate().holds());
        assert!(pa.validate().holds());
        assert!(pb.validate().holds());
        assert_eq!(p.object_count(), 2);
        // Projections of a product of strict inputs are strict.
        assert!(pa.is_strict());
        assert!(pb.is_strict());
    }

    #[test]
    fn monoidal_min_poset_is_valid() {
        let two = crate::fincat::walking_arrow();
        let min = monoidal_bicat(
            &two,
            "1",
            &|g, f| if g == "0" || f == "0" { "0".into() } else { "1".into() },
            &|m, n| {
                if m == "id_0" || n == "id_0" {
                    "id_0".into()
                } else if m == "id_1" && n == "id_1" {
                    "id_1".into()
                } else {
                    "arr".into()
                }
            },
        );
        assert!(min.validate().holds());
        assert!(min.is_strict().holds());
    }
}
