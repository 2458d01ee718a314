use super::{CatFunctor, CatNatTrans, FinCat};
use crate::error::{Error, SizeGuard};
use crate::verdict::Verdict;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Verifies that `(apex, cone)` is a limit of `diagram: J → C`: every cone
/// over the diagram factors through it by a unique morphism. Cones are
/// enumerated exhaustively.
pub fn verify_limit_cone(
    diagram: &CatFunctor,
    apex: &str,
    cone: &CatNatTrans,
    guard: SizeGuard,
) -> Result<Verdict, Error> {
    let c = &diagram.target;
    if !c.has_object(apex) {
        return Err(Error::shape(format!("apex {apex} is not an object of the target")));
    }
    let expected_src = CatFunctor::constant(&diagram.source, c, apex);
    if cone.source != expected_src || cone.target != *diagram {
        return Err(Error::shape("cone is not of shape Δapex ⇒ diagram"));
    }
    if let v @ Verdict::Fail { .. } = cone.validate() {
        return Ok(v);
    }
    for x in c.objects() {
        for candidate in enumerate_cones(diagram, x, guard)? {
            let factorizations: Vec<&str> = c
                .hom(x, apex)
                .into_iter()
                .filter(|h| {
                    diagram
                        .source
                        .objects()
                        .all(|j| c.compose(cone.at(j), h) == Some(candidate[j].as_str()))
                })
                .collect();
            if factorizations.len() != 1 {
                return Ok(Verdict::fail(
                    "unique factorization of cones",
                    format!(
                        "cone at {x} with {} factorizations: {}",
                        factorizations.len(),
                        describe_cone(&candidate)
                    ),
                ));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// All cones over `diagram` with the given apex, as component maps.
pub fn enumerate_cones(
    diagram: &CatFunctor,
    apex: &str,
    guard: SizeGuard,
) -> Result<Vec<BTreeMap<String, String>>, Error> {
    let j = &diagram.source;
    let c = &diagram.target;
    let j_obs: Vec<&str> = j.objects().collect();
    let legs: Vec<Vec<&str>> = j_obs.iter().map(|jo| c.hom(apex, diagram.ob(jo))).collect();
    guard.admit_product(legs.iter().map(|l| l.len() as u64))?;
    let mut out = Vec::new();
    let mut choice = vec![0usize; j_obs.len()];
    if legs.iter().any(|l| l.is_empty()) && !j_obs.is_empty() {
        return Ok(out);
    }
    'outer: loop {
        let cone: BTreeMap<String, String> = j_obs
            .iter()
            .zip(&choice)
            .map(|(jo, &i)| {
                let idx = j_obs.iter().position(|o| o == jo).unwrap();
                (jo.to_string(), legs[idx][i].to_string())
            })
            .collect();
        let natural = j.morphisms().all(|(u, info)| {
            c.compose(diagram.mor(u), &cone[&info.src]) == Some(cone[&info.tgt].as_str())
        });
        if natural {
            out.push(cone);
        }
        if j_obs.is_empty() {
            return Ok(out);
        }
        let mut k = choice.len();
        loop {
            if k == 0 {
                break 'outer;
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < legs[k].len() {
                continue 'outer;
            }
            choice[k] = 0;
        }
    }
    Ok(out)
}

fn describe_cone(cone: &BTreeMap<String, String>) -> String {
    let parts: Vec<String> = cone.iter().map(|(j, m)| format!("{j}↦{m}")).collect();
    format!("[{}]", parts.join(", "))
}

/// Decides whether `(r, rho)` is an absolute right lifting of `g` through
/// `f` in the category of finite categories, by the pointwise criterion:
/// for every `c` and `b`, pasting with `rho` is a bijection
/// `B(b, r(c)) → A(f(b), g(c))`.
pub fn absolute_right_lifting(
    f: &CatFunctor,
    g: &CatFunctor,
    r: &CatFunctor,
    rho: &CatNatTrans,
) -> Result<Verdict, Error> {
    let b_cat: &Arc<FinCat> = &f.source;
    let a_cat: &Arc<FinCat> = &f.target;
    let c_cat: &Arc<FinCat> = &g.source;
    if g.target != *a_cat || r.source != *c_cat || r.target != *b_cat {
        return Err(Error::shape("lifting problem functors do not compose"));
    }
    let fr = f.compose_after(r)?;
    if rho.source != fr || rho.target != *g {
        return Err(Error::shape("rho is not of shape f∘r ⇒ g"));
    }
    if let v @ Verdict::Fail { .. } = rho.validate() {
        return Ok(v);
    }
    for c in c_cat.objects() {
        for b in b_cat.objects() {
            let domain = b_cat.hom(b, r.ob(c));
            let codomain = a_cat.hom(f.ob(b), g.ob(c));
            let mut image: Vec<&str> = Vec::with_capacity(domain.len());
            for zeta in &domain {
                let Some(pasted) = a_cat.compose(rho.at(c), f.mor(zeta)) else {
                    return Err(Error::shape(format!(
                        "pasting of {zeta} with rho at {c} does not compose"
                    )));
                };
                if image.contains(&pasted) {
                    return Ok(Verdict::fail(
                        "pasting with rho is injective",
                        format!("({b}, {c}): {pasted} hit twice"),
                    ));
                }
                image.push(pasted);
            }
            for chi in codomain {
                if !image.contains(&chi) {
                    return Ok(Verdict::fail(
                        "pasting with rho is surjective",
                        format!("({b}, {c}): {chi} not hit"),
                    ));
                }
            }
        }
    }
    Ok(Verdict::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{empty_cat, terminal_cat, walking_arrow, CatAdjunction};

    #[test]
    fn terminal_object_detection_via_empty_diagram() {
        let two = walking_arrow();
        let empty = empty_cat();
        let diagram = CatFunctor {
            source: empty.clone(),
            target: two.clone(),
            object_map: BTreeMap::new(),
            morphism_map: BTreeMap::new(),
        };
        let guard = SizeGuard::default();
        let cone_at = |apex: &str| CatNatTrans {
            source: CatFunctor::constant(&empty, &two, apex),
            target: diagram.clone(),
            components: BTreeMap::new(),
        };
        assert!(verify_limit_cone(&diagram, "1", &cone_at("1"), guard)
            .unwrap()
            .holds());
        // 0 is not terminal: the cone with apex 1 has no factorization.
        assert!(!verify_limit_cone(&diagram, "0", &cone_at("0"), guard)
            .unwrap()
            .holds());
    }

    #[test]
    fn identity_cone_over_point_diagram() {
        let one = terminal_cat();
        let two = walking_arrow();
        let diagram = CatFunctor::constant(&one, &two, "1");
        let cone = CatNatTrans::identity(&diagram);
        assert!(verify_limit_cone(&diagram, "1", &cone, SizeGuard::default())
            .unwrap()
            .holds());
    }

    #[test]
    fn counit_of_identity_adjunction_is_absolute_lifting() {
        let two = walking_arrow();
        let id = CatFunctor::identity(&two);
        let rho = CatNatTrans::identity(&id);
        assert!(absolute_right_lifting(&id, &id, &id, &rho).unwrap().holds());
    }

    #[test]
    fn endpoint_inclusion_lifting_with_constant_target() {
        // f: 𝟙 → 𝟚 at 0, g: 𝟙 → 𝟚 constant at 1, r = id, rho the walking
        // arrow. The pasting map is a bijection {id} → {arr}, so this is an
        // absolute right lifting by the pointwise count.
        let one = terminal_cat();
        let two = walking_arrow();
        let f = CatFunctor::constant(&one, &two, "0");
        let g = CatFunctor::constant(&one, &two, "1");
        let r = CatFunctor::identity(&one);
        let rho = CatNatTrans {
            source: f.compose_after(&r).unwrap(),
            target: g.clone(),
            components: [("*".to_string(), "arr".to_string())].into_iter().collect(),
        };
        assert!(absolute_right_lifting(&f, &g, &r, &rho).unwrap().holds());
    }

    #[test]
    fn adjunction_counit_passes_lifting_and_conversely() {
        // The free/forgetful adjunction between 𝟙 and the walking iso.
        let one = terminal_cat();
        let iso = crate::fincat::walking_iso();
        let f = CatFunctor::constant(&one, &iso, "0");
        let u = CatFunctor::bang(&iso, &one);
        let fu = f.compose_after(&u).unwrap();
        let counit = CatNatTrans {
            source: fu,
            target: CatFunctor::identity(&iso),
            components: [("0".to_string(), "id_0".to_string()), ("1".to_string(), "fwd".to_string())]
                .into_iter()
                .collect(),
        };
        let g = CatFunctor::identity(&iso);
        assert!(absolute_right_lifting(&f, &g, &u, &counit).unwrap().holds());

        let adj = CatAdjunction {
            left: f,
            right: u,
            unit: CatNatTrans::identity(&CatFunctor::identity(&one)),
            counit,
        };
        assert!(adj.validate().unwrap().holds());
    }
}
