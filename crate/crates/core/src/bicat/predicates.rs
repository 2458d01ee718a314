use super::{FinBicat, NormalPseudofunctor, OneCell};
use crate::error::{Error, SizeGuard};
use crate::verdict::Verdict;

/// Witness data for an internal equivalence between two objects: 1-cells in
/// both directions whose composites are isomorphic to identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectEquivalence {
    pub fwd: OneCell,
    pub bwd: OneCell,
    /// Name of an invertible 2-cell between `bwd∘fwd` and `id_src`.
    pub src_iso: String,
    /// Name of an invertible 2-cell between `fwd∘bwd` and `id_tgt`.
    pub tgt_iso: String,
}

/// Searches for an internal equivalence `x ≃ y` by enumeration. Any pair of
/// 1-cells with invertible 2-cells witnessing both composites counts; no
/// adjoint equivalence data is required. Returns the least witness in
/// canonical order.
pub fn are_objects_equivalent(
    b: &FinBicat,
    x: &str,
    y: &str,
    guard: SizeGuard,
) -> Result<Option<ObjectEquivalence>, Error> {
    let fwds = b.one_cells(x, y);
    let bwds = b.one_cells(y, x);
    guard.admit_product([fwds.len() as u64, bwds.len() as u64])?;
    for f in &fwds {
        for g in &bwds {
            if let Some(w) = equivalence_witness(b, f, g) {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

fn equivalence_witness(b: &FinBicat, f: &OneCell, g: &OneCell) -> Option<ObjectEquivalence> {
    let src_iso = iso_between(b, &b.compose1(g, f), &b.identity1(&f.src))?;
    let tgt_iso = iso_between(b, &b.compose1(f, g), &b.identity1(&f.tgt))?;
    Some(ObjectEquivalence {
        fwd: f.clone(),
        bwd: g.clone(),
        src_iso,
        tgt_iso,
    })
}

/// Least invertible 2-cell between two parallel 1-cells, if any.
fn iso_between(b: &FinBicat, a: &OneCell, c: &OneCell) -> Option<String> {
    let hom = b.hom(&a.src, &a.tgt);
    hom.hom(&a.name, &c.name)
        .into_iter()
        .find(|m| hom.is_iso(m))
        .map(|m| m.to_string())
}

/// A 1-cell `e: x → y` that is one leg of some internal equivalence.
pub fn is_equivalence_one_cell(b: &FinBicat, e: &OneCell) -> bool {
    b.one_cells(&e.tgt, &e.src)
        .iter()
        .any(|g| equivalence_witness(b, e, g).is_some())
}

/// Isofibration of strict 2-categories, detected on the underlying functor.
pub fn is_isofibration_2cat(f: &NormalPseudofunctor) -> Result<Verdict, Error> {
    if !f.is_strict() {
        return Err(Error::shape("isofibration check requires a strict 2-functor"));
    }
    let under = underlying_functor(f)?;
    Ok(under.is_isofibration())
}

/// Underlying functor of a strict 2-functor between strict 2-categories.
pub fn underlying_functor(f: &NormalPseudofunctor) -> Result<crate::fincat::CatFunctor, Error> {
    let source = f.source.underlying_cat()?;
    let target = f.target.underlying_cat()?;
    let object_map = f.object_map.clone();
    let mut morphism_map = std::collections::BTreeMap::new();
    for c in f.source.all_one_cells() {
        let fc = f.one(&c);
        morphism_map.insert(
            crate::name::qualified(&c.src, &c.tgt, &c.name),
            crate::name::qualified(&fc.src, &fc.tgt, &fc.name),
        );
    }
    Ok(crate::fincat::CatFunctor {
        source,
        target,
        object_map,
        morphism_map,
    })
}

/// Isofibration in the icon setting: every hom-functor is an isofibration
/// of categories. Witness is the first failing hom pair.
pub fn is_isofibration_icon(f: &NormalPseudofunctor) -> Verdict {
    for (x, y, _) in f.source.homs() {
        if let Verdict::Fail { law, witness } = f.hom_map(x, y).is_isofibration() {
            return Verdict::fail(
                format!("hom-functor at ({x}, {y}) is an isofibration: {law}"),
                witness,
            );
        }
    }
    Verdict::Pass
}

/// Discrete isofibration: an isofibration of strict 2-categories in which
/// every liftable invertible 2-cell has exactly one lift.
pub fn is_discrete_isofibration(f: &NormalPseudofunctor) -> Result<Verdict, Error> {
    match is_isofibration_2cat(f)? {
        v @ Verdict::Fail { .. } => return Ok(v),
        Verdict::Pass => {}
    }
    let a = &f.source;
    let b = &f.target;
    for m in a.all_one_cells() {
        let fm = f.one(&m);
        let hom_b = b.hom(&fm.src, &fm.tgt);
        let hom_a = a.hom(&m.src, &m.tgt);
        for beta in hom_b.morphisms().map(|(n, _)| n) {
            if hom_b.src(beta) != fm.name || !hom_b.is_iso(beta) {
                continue;
            }
            let lifts = hom_a
                .morphisms()
                .filter(|(alpha, info)| {
                    info.src == m.name
                        && hom_a.is_iso(alpha)
                        && f.hom_map(&m.src, &m.tgt).mor(alpha) == beta
                })
                .count();
            if lifts > 1 {
                return Ok(Verdict::fail(
                    "unique invertible 2-cell lifts",
                    format!("{beta} over {} has {lifts} lifts", m.name),
                ));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Equifibration: internal equivalences lift along `f` and every
/// hom-functor is an isofibration of categories.
pub fn is_equifibration(f: &NormalPseudofunctor) -> Verdict {
    if let v @ Verdict::Fail { .. } = is_isofibration_icon(f) {
        return v;
    }
    let a = &f.source;
    let b = &f.target;
    for x in a.objects() {
        let fx = f.ob(x);
        for y in b.objects() {
            for e in b.one_cells(fx, y) {
                if !is_equivalence_one_cell(b, &e) {
                    continue;
                }
                // Look for an equivalence 1-cell upstairs mapping onto e.
                let mut lifted = false;
                'search: for x2 in a.objects() {
                    if f.ob(x2) != y {
                        continue;
                    }
                    for d in a.one_cells(x, x2) {
                        if f.one(&d) == e && is_equivalence_one_cell(a, &d) {
                            lifted = true;
                            break 'search;
                        }
                    }
                }
                if !lifted {
                    return Verdict::fail(
                        "equivalence lifting",
                        format!("equivalence {} out of image of {x} has no lift", e.name),
                    );
                }
            }
        }
    }
    Verdict::Pass
}
