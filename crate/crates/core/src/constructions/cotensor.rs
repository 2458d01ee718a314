use crate::bicat::{FinBicat, NormalPseudofunctor, OneCell, TwoCell};
use crate::error::{Error, SizeGuard};
use crate::fincat::{
    enumerate_functors, enumerate_nat_trans, full_subcat, functor_name, nat_trans_name,
    path_components, product_cat, product_of_cats, CatFunctor, CatNatTrans, FinCat, MorInfo,
};
use crate::name;
use crate::verdict::Verdict;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// Sorted component representatives of `j` with the full subcategory on each
/// component.
fn components_of(j: &Arc<FinCat>) -> Vec<(String, Arc<FinCat>)> {
    let comps = path_components(j);
    let mut by_rep: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for (ob, rep) in &comps {
        by_rep.entry(rep.clone()).or_default().insert(ob.clone());
    }
    by_rep
        .into_iter()
        .map(|(rep, obs)| (rep, full_subcat(j, &obs)))
        .collect()
}

/// Canonical object name of the icon cotensor `A^J` for a diagram given on
/// the objects of `J`. Errors if the assignment is not constant on path
/// components.
pub fn icon_cotensor_object_name(
    j: &Arc<FinCat>,
    a: &Arc<FinBicat>,
    assignment: &BTreeMap<String, String>,
) -> Result<String, Error> {
    let comps = path_components(j);
    let mut per_rep: BTreeMap<String, String> = BTreeMap::new();
    for ob in j.objects() {
        let Some(target) = assignment.get(ob) else {
            return Err(Error::shape(format!("diagram misses object {ob}")));
        };
        if !a.has_object(target) {
            return Err(Error::shape(format!("diagram value {target} is not an object")));
        }
        let rep = &comps[ob];
        match per_rep.get(rep) {
            Some(existing) if existing != target => {
                return Err(Error::shape(format!(
                    "diagram is not constant on the path component of {rep}: {existing} vs {target}"
                )));
            }
            _ => {
                per_rep.insert(rep.clone(), target.clone());
            }
        }
    }
    Ok(name::graph(
        per_rep.iter().map(|(k, v)| (k.as_str(), v.as_str())),
    ))
}

/// Per-hom bookkeeping for a cotensor: the hom-category together with the
/// actual functor/transformation tuples behind each cell name.
struct HomData {
    cat: Arc<FinCat>,
    one_cells: BTreeMap<String, Vec<CatFunctor>>,
    two_cells: BTreeMap<String, Vec<CatNatTrans>>,
}

/// The cotensor of a bicategory with a 1-category in the icon setting.
/// Objects are functions from path components of `J` to objects of `A`;
/// 1-cells are componentwise functors `J_P → A(S_P, T_P)`; 2-cells are
/// componentwise natural transformations.
pub fn cotensor_icon(
    a: &Arc<FinBicat>,
    j: &Arc<FinCat>,
    guard: SizeGuard,
) -> Result<Arc<FinBicat>, Error> {
    let comps = components_of(j);
    let reps: Vec<&str> = comps.iter().map(|(r, _)| r.as_str()).collect();
    guard.admit_product(vec![a.object_count() as u64; reps.len()])?;

    // Objects: functions reps → ob A.
    let a_obs: Vec<&str> = a.objects().collect();
    let mut assignments: Vec<BTreeMap<String, String>> = vec![BTreeMap::new()];
    for rep in &reps {
        let mut next = Vec::new();
        for prefix in &assignments {
            for ob in &a_obs {
                let mut row = prefix.clone();
                row.insert(rep.to_string(), ob.to_string());
                next.push(row);
            }
        }
        assignments = next;
    }
    if a_obs.is_empty() && !reps.is_empty() {
        assignments = Vec::new();
    }
    let object_names: BTreeMap<String, BTreeMap<String, String>> = assignments
        .into_iter()
        .map(|s| {
            (
                name::graph(s.iter().map(|(k, v)| (k.as_str(), v.as_str()))),
                s,
            )
        })
        .collect();

    // Hom data per ordered pair of objects.
    let mut hom_data: BTreeMap<(String, String), HomData> = BTreeMap::new();
    for (sn, s) in &object_names {
        for (tn, t) in &object_names {
            let mut per_comp_fs: Vec<Vec<CatFunctor>> = Vec::new();
            for (rep, sub) in &comps {
                let hom_a = a.hom(&s[rep], &t[rep]);
                per_comp_fs.push(enumerate_functors(sub, hom_a, guard)?);
            }
            guard.admit_product(per_comp_fs.iter().map(|f| f.len() as u64))?;
            let hd = assemble_hom(&comps, &per_comp_fs, guard)?;
            hom_data.insert((sn.clone(), tn.clone()), hd);
        }
    }

    build_cotensor_bicat(a, &comps, &object_names, hom_data)
}

/// Assembles the hom-category of a cotensor from per-component functor
/// lists: a product of functor categories with tuple-named cells.
fn assemble_hom(
    comps: &[(String, Arc<FinCat>)],
    per_comp_fs: &[Vec<CatFunctor>],
    guard: SizeGuard,
) -> Result<HomData, Error> {
    let mut factor_cats: Vec<Arc<FinCat>> = Vec::new();
    let mut factor_nts: Vec<BTreeMap<String, CatNatTrans>> = Vec::new();
    for ((_, sub), fs) in comps.iter().zip(per_comp_fs) {
        let mut objects = BTreeSet::new();
        let mut morphisms = BTreeMap::new();
        let mut identities = BTreeMap::new();
        let mut composition = BTreeMap::new();
        let mut nts: BTreeMap<String, CatNatTrans> = BTreeMap::new();
        for f in fs {
            let fname = functor_name(f);
            let idnt = CatNatTrans::identity(f);
            identities.insert(fname.clone(), nat_trans_name(&idnt));
            objects.insert(fname);
        }
        let _ = sub;
        for f in fs {
            for g in fs {
                for nt in enumerate_nat_trans(f, g, guard)? {
                    let nm = nat_trans_name(&nt);
                    morphisms.insert(
                        nm.clone(),
                        MorInfo {
                            src: functor_name(f),
                            tgt: functor_name(g),
                        },
                    );
                    nts.insert(nm, nt);
                }
            }
        }
        let snapshot: Vec<(String, CatNatTrans)> =
            nts.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        for (gn, gnt) in &snapshot {
            for (fn_, fnt) in &snapshot {
                if morphisms[fn_].tgt != morphisms[gn].src {
                    continue;
                }
                let composed = gnt.vcompose(fnt)?;
                composition.insert((gn.clone(), fn_.clone()), nat_trans_name(&composed));
            }
        }
        factor_cats.push(Arc::new(FinCat::from_parts(
            objects, morphisms, identities, composition,
        )));
        factor_nts.push(nts);
    }
    let cat = product_of_cats(&factor_cats);
    // Lookups: tuple names to component data.
    let mut one_cells = BTreeMap::new();
    for combo in cartesian(&per_comp_fs.iter().map(|f| f.len()).collect::<Vec<_>>()) {
        let mut names: Vec<String> = Vec::new();
        let mut data: Vec<CatFunctor> = Vec::new();
        for (i, &k) in combo.iter().enumerate() {
            names.push(functor_name(&per_comp_fs[i][k]));
            data.push(per_comp_fs[i][k].clone());
        }
        let parts: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        one_cells.insert(name::tuple(&parts), data);
    }
    let mut two_cells = BTreeMap::new();
    let nt_lists: Vec<Vec<(&String, &CatNatTrans)>> =
        factor_nts.iter().map(|m| m.iter().collect()).collect();
    for combo in cartesian(&nt_lists.iter().map(|l| l.len()).collect::<Vec<_>>()) {
        let mut names: Vec<&str> = Vec::new();
        let mut data: Vec<CatNatTrans> = Vec::new();
        for (i, &k) in combo.iter().enumerate() {
            names.push(nt_lists[i][k].0);
            data.push(nt_lists[i][k].1.clone());
        }
        two_cells.insert(name::tuple(&names), data);
    }
    Ok(HomData {
        cat,
        one_cells,
        two_cells,
    })
}

fn cartesian(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &s in sizes {
        let mut next = Vec::new();
        for prefix in &out {
            for i in 0..s {
                let mut row = prefix.clone();
                row.push(i);
                next.push(row);
            }
        }
        out = next;
    }
    out
}

/// Composite of two componentwise functors through the horizontal
/// composition of `a`.
fn compose_dependent(
    a: &Arc<FinBicat>,
    sub: &Arc<FinCat>,
    outer: &CatFunctor,
    inner: &CatFunctor,
    s_ob: &str,
    m_ob: &str,
    t_ob: &str,
) -> CatFunctor {
    let target = a.hom(s_ob, t_ob).clone();
    let object_map: BTreeMap<String, String> = sub
        .objects()
        .map(|jo| {
            let g = OneCell::new(m_ob, t_ob, outer.ob(jo));
            let f = OneCell::new(s_ob, m_ob, inner.ob(jo));
            (jo.to_string(), a.compose1(&g, &f).name)
        })
        .collect();
    let morphism_map = sub
        .morphisms()
        .map(|(u, _)| {
            let gm = TwoCell::new(m_ob, t_ob, outer.mor(u));
            let fm = TwoCell::new(s_ob, m_ob, inner.mor(u));
            (u.to_string(), a.hcomp2(&gm, &fm).name)
        })
        .collect();
    CatFunctor {
        source: sub.clone(),
        target,
        object_map,
        morphism_map,
    }
}

fn build_cotensor_bicat(
    a: &Arc<FinBicat>,
    comps: &[(String, Arc<FinCat>)],
    object_names: &BTreeMap<String, BTreeMap<String, String>>,
    hom_data: BTreeMap<(String, String), HomData>,
) -> Result<Arc<FinBicat>, Error> {
    let objects: BTreeSet<String> = object_names.keys().cloned().collect();
    let homs: BTreeMap<(String, String), Arc<FinCat>> = hom_data
        .iter()
        .map(|(k, hd)| (k.clone(), hd.cat.clone()))
        .collect();
    // Identity 1-cells: componentwise constant functors at identity cells.
    let mut identities = BTreeMap::new();
    for (sn, s) in object_names {
        let names: Vec<String> = comps
            .iter()
            .map(|(rep, sub)| {
                let ob = &s[rep];
                let idc = a.identity1(ob);
                functor_name(&CatFunctor::constant(sub, a.hom(ob, ob), &idc.name))
            })
            .collect();
        let parts: Vec<&str> = names.iter().map(|x| x.as_str()).collect();
        identities.insert(sn.clone(), name::tuple(&parts));
    }
    // Horizontal composition.
    let mut hcomp = BTreeMap::new();
    for (sn, s) in object_names {
        for (tn, t) in object_names {
            for (un, u) in object_names {
                let left = &hom_data[&(tn.clone(), un.clone())];
                let right = &hom_data[&(sn.clone(), tn.clone())];
                let out_hom = &hom_data[&(sn.clone(), un.clone())];
                let source = product_cat(&left.cat, &right.cat);
                let mut object_map = BTreeMap::new();
                for (gname, gdata) in &left.one_cells {
                    for (fname, fdata) in &right.one_cells {
                        let comp_names: Vec<String> = comps
                            .iter()
                            .enumerate()
                            .map(|(i, (rep, sub))| {
                                functor_name(&compose_dependent(
                                    a, sub, &gdata[i], &fdata[i], &s[rep], &t[rep], &u[rep],
                                ))
                            })
                            .collect();
                        let parts: Vec<&str> = comp_names.iter().map(|x| x.as_str()).collect();
                        object_map.insert(name::pair(gname, fname), name::tuple(&parts));
                    }
                }
                let mut morphism_map = BTreeMap::new();
                for (gname, gdata) in &left.two_cells {
                    for (fname, fdata) in &right.two_cells {
                        let comp_names: Vec<String> = comps
                            .iter()
                            .enumerate()
                            .map(|(i, (rep, sub))| {
                                let composed = hcompose_nts(
                                    a, sub, &gdata[i], &fdata[i], &s[rep], &t[rep], &u[rep],
                                );
                                nat_trans_name(&composed)
                            })
                            .collect();
                        let parts: Vec<&str> = comp_names.iter().map(|x| x.as_str()).collect();
                        morphism_map.insert(name::pair(gname, fname), name::tuple(&parts));
                    }
                }
                hcomp.insert(
                    (sn.clone(), tn.clone(), un.clone()),
                    CatFunctor {
                        source,
                        target: out_hom.cat.clone(),
                        object_map,
                        morphism_map,
                    },
                );
            }
        }
    }
    // Coherence cells, pointwise from a.
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
        let s = &object_names[&f.src];
        let t = &object_names[&f.tgt];
        let u = &object_names[&g.tgt];
        let v = &object_names[&h.tgt];
        let hdata = &hom_data[&(g.tgt.clone(), h.tgt.clone())].one_cells[&h.name];
        let gdata = &hom_data[&(f.tgt.clone(), g.tgt.clone())].one_cells[&g.name];
        let fdata = &hom_data[&(f.src.clone(), f.tgt.clone())].one_cells[&f.name];
        let comp_names: Vec<String> = comps
            .iter()
            .enumerate()
            .map(|(i, (rep, sub))| {
                // Associator component: pointwise associator of a.
                let hg = compose_dependent(a, sub, &hdata[i], &gdata[i], &t[rep], &u[rep], &v[rep]);
                let hg_f =
                    compose_dependent(a, sub, &hg, &fdata[i], &s[rep], &t[rep], &v[rep]);
                let gf = compose_dependent(a, sub, &gdata[i], &fdata[i], &s[rep], &t[rep], &u[rep]);
                let h_gf =
                    compose_dependent(a, sub, &hdata[i], &gf, &s[rep], &u[rep], &v[rep]);
                let components: BTreeMap<String, String> = sub
                    .objects()
                    .map(|jo| {
                        let hc = OneCell::new(&u[rep], &v[rep], hdata[i].ob(jo));
                        let gc = OneCell::new(&t[rep], &u[rep], gdata[i].ob(jo));
                        let fc = OneCell::new(&s[rep], &t[rep], fdata[i].ob(jo));
                        (jo.to_string(), a.associator(&hc, &gc, &fc).name)
                    })
                    .collect();
                nat_trans_name(&CatNatTrans {
                    source: hg_f,
                    target: h_gf,
                    components,
                })
            })
            .collect();
        let parts: Vec<&str> = comp_names.iter().map(|x| x.as_str()).collect();
        associators.insert(
            (
                (f.src.clone(), f.tgt.clone(), g.tgt.clone(), h.tgt.clone()),
                (h.name.clone(), g.name.clone(), f.name.clone()),
            ),
            name::tuple(&parts),
        );
    }
    let mut lunitors = BTreeMap::new();
    let mut runitors = BTreeMap::new();
    for f in skeleton.all_one_cells() {
        let s = &object_names[&f.src];
        let t = &object_names[&f.tgt];
        let fdata = &hom_data[&(f.src.clone(), f.tgt.clone())].one_cells[&f.name];
        let mut l_names = Vec::new();
        let mut r_names = Vec::new();
        for (i, (rep, sub)) in comps.iter().enumerate() {
            let idc_t = a.identity1(&t[rep]);
            let id_fun_t = CatFunctor::constant(sub, a.hom(&t[rep], &t[rep]), &idc_t.name);
            let idf = compose_dependent(a, sub, &id_fun_t, &fdata[i], &s[rep], &t[rep], &t[rep]);
            let l_components: BTreeMap<String, String> = sub
                .objects()
                .map(|jo| {
                    let fc = OneCell::new(&s[rep], &t[rep], fdata[i].ob(jo));
                    (jo.to_string(), a.lunitor(&fc).name)
                })
                .collect();
            l_names.push(nat_trans_name(&CatNatTrans {
                source: idf,
                target: fdata[i].clone(),
                components: l_components,
            }));
            let idc_s = a.identity1(&s[rep]);
            let id_fun_s = CatFunctor::constant(sub, a.hom(&s[rep], &s[rep]), &idc_s.name);
            let fid = compose_dependent(a, sub, &fdata[i], &id_fun_s, &s[rep], &s[rep], &t[rep]);
            let r_components: BTreeMap<String, String> = sub
                .objects()
                .map(|jo| {
                    let fc = OneCell::new(&s[rep], &t[rep], fdata[i].ob(jo));
                    (jo.to_string(), a.runitor(&fc).name)
                })
                .collect();
            r_names.push(nat_trans_name(&CatNatTrans {
                source: fid,
                target: fdata[i].clone(),
                components: r_components,
            }));
        }
        let l_parts: Vec<&str> = l_names.iter().map(|x| x.as_str()).collect();
        let r_parts: Vec<&str> = r_names.iter().map(|x| x.as_str()).collect();
        lunitors.insert(
            (f.src.clone(), f.tgt.clone(), f.name.clone()),
            name::tuple(&l_parts),
        );
        runitors.insert(
            (f.src.clone(), f.tgt.clone(), f.name.clone()),
            name::tuple(&r_parts),
        );
    }
    Ok(Arc::new(FinBicat::from_parts(
        objects, homs, identities, hcomp, associators, lunitors, runitors,
    )))
}

/// Horizontal composite of componentwise natural transformations.
fn hcompose_nts(
    a: &Arc<FinBicat>,
    sub: &Arc<FinCat>,
    outer: &CatNatTrans,
    inner: &CatNatTrans,
    s_ob: &str,
    m_ob: &str,
    t_ob: &str,
) -> CatNatTrans {
    let source = compose_dependent(a, sub, &outer.source, &inner.source, s_ob, m_ob, t_ob);
    let target = compose_dependent(a, sub, &outer.target, &inner.target, s_ob, m_ob, t_ob);
    let components = sub
        .objects()
        .map(|jo| {
            let gm = TwoCell::new(m_ob, t_ob, outer.at(jo).to_string());
            let fm = TwoCell::new(s_ob, m_ob, inner.at(jo).to_string());
            (jo.to_string(), a.hcomp2(&gm, &fm).name)
        })
        .collect();
    CatNatTrans {
        source,
        target,
        components,
    }
}

/// The constant-diagram pseudofunctor `Δ: A → A^J` in the icon setting.
/// Its comparisons are identities because horizontal composites of constant
/// families are constant.
pub fn cotensor_delta_icon(
    a: &Arc<FinBicat>,
    j: &Arc<FinCat>,
    cotensor: &Arc<FinBicat>,
) -> Result<NormalPseudofunctor, Error> {
    let comps = components_of(j);
    let object_map: BTreeMap<String, String> = a
        .objects()
        .map(|x| {
            let assignment: BTreeMap<String, String> =
                j.objects().map(|jo| (jo.to_string(), x.to_string())).collect();
            Ok((
                x.to_string(),
                icon_cotensor_object_name(j, a, &assignment)?,
            ))
        })
        .collect::<Result<_, Error>>()?;
    let mut hom_maps = BTreeMap::new();
    for (x, y, hom) in a.homs() {
        let tgt_hom = cotensor.hom(&object_map[x], &object_map[y]);
        let object_map_h: BTreeMap<String, String> = hom
            .objects()
            .map(|u| {
                let names: Vec<String> = comps
                    .iter()
                    .map(|(_, sub)| functor_name(&CatFunctor::constant(sub, hom, u)))
                    .collect();
                let parts: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
                (u.to_string(), name::tuple(&parts))
            })
            .collect();
        let morphism_map = hom
            .morphisms()
            .map(|(m, info)| {
                let names: Vec<String> = comps
                    .iter()
                    .map(|(_, sub)| {
                        let src = CatFunctor::constant(sub, hom, &info.src);
                        let tgt = CatFunctor::constant(sub, hom, &info.tgt);
                        nat_trans_name(&CatNatTrans {
                            source: src,
                            target: tgt,
                            components: sub
                                .objects()
                                .map(|jo| (jo.to_string(), m.to_string()))
                                .collect(),
                        })
                    })
                    .collect();
                let parts: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
                (m.to_string(), name::tuple(&parts))
            })
            .collect();
        hom_maps.insert(
            (x.to_string(), y.to_string()),
            CatFunctor {
                source: hom.clone(),
                target: tgt_hom.clone(),
                object_map: object_map_h,
                morphism_map,
            },
        );
    }
    let skeleton = NormalPseudofunctor {
        source: a.clone(),
        target: cotensor.clone(),
        object_map: object_map.clone(),
        hom_maps: hom_maps.clone(),
        comparisons: BTreeMap::new(),
    };
    let mut comparisons = BTreeMap::new();
    for (g, f) in a.composable_pairs() {
        let gf = a.compose1(&g, &f);
        comparisons.insert(
            (
                (f.src.clone(), f.tgt.clone(), g.tgt.clone()),
                (g.name.clone(), f.name.clone()),
            ),
            cotensor.id2(&skeleton.one(&gf)).name,
        );
    }
    Ok(NormalPseudofunctor {
        source: a.clone(),
        target: cotensor.clone(),
        object_map,
        hom_maps,
        comparisons,
    })
}

/// Name of a 1-cell family `{j=cell;...}` in the strict cotensor.
fn family_name(prefix: &str, entries: &BTreeMap<String, String>) -> String {
    format!(
        "{prefix}{}",
        name::graph(entries.iter().map(|(k, v)| (k.as_str(), v.as_str())))
    )
}

/// The cotensor `A^J` of a strict 2-category by a 1-category: objects are
/// functors `J → A`, 1-cells are strictly natural families, 2-cells are
/// modification families. Returns the strict 2-category.
pub fn cotensor_2cat(
    a: &Arc<FinBicat>,
    j: &Arc<FinCat>,
    guard: SizeGuard,
) -> Result<Arc<FinBicat>, Error> {
    if !a.is_strict().holds() {
        return Err(Error::shape("2-cat cotensor requires a strict 2-category"));
    }
    let under = a.underlying_cat()?;
    let diagrams = enumerate_functors(j, &under, guard)?;
    let mut objects = BTreeSet::new();
    let mut diagram_by_name = BTreeMap::new();
    for d in &diagrams {
        let n = functor_name(d);
        objects.insert(n.clone());
        diagram_by_name.insert(n, d.clone());
    }
    let mut homs = BTreeMap::new();
    let mut cell_data: BTreeMap<(String, String), ConeHom> = BTreeMap::new();
    for (fname, fd) in &diagram_by_name {
        for (gname, gd) in &diagram_by_name {
            let data = natural_families(a, j, fd, gd, guard)?;
            homs.insert((fname.clone(), gname.clone()), data.cat.clone());
            cell_data.insert((fname.clone(), gname.clone()), data);
        }
    }
    let identities: BTreeMap<String, String> = diagram_by_name
        .iter()
        .map(|(n, d)| {
            let entries: BTreeMap<String, String> = j
                .objects()
                .map(|jo| (jo.to_string(), a.identity1(ob_of(a, d, jo).as_str()).name))
                .collect();
            (n.clone(), family_name("N", &entries))
        })
        .collect();
    let mut hcomp = BTreeMap::new();
    for fname in &objects {
        for gname in &objects {
            for hname in &objects {
                let left = &cell_data[&(gname.clone(), hname.clone())];
                let right = &cell_data[&(fname.clone(), gname.clone())];
                let out = &cell_data[&(fname.clone(), hname.clone())];
                let source = product_cat(&left.cat, &right.cat);
                let mut object_map = BTreeMap::new();
                for (mu_name, mu) in &left.one_cells {
                    for (eta_name, eta) in &right.one_cells {
                        let entries: BTreeMap<String, String> = mu
                            .iter()
                            .map(|(jo, c)| (jo.clone(), a.compose1(c, &eta[jo]).name))
                            .collect();
                        object_map.insert(
                            name::pair(mu_name, eta_name),
                            family_name("N", &entries),
                        );
                    }
                }
                let mut morphism_map = BTreeMap::new();
                for (psi_name, psi) in &left.two_cells {
                    for (phi_name, phi) in &right.two_cells {
                        let entries: BTreeMap<String, String> = psi
                            .iter()
                            .map(|(jo, c)| (jo.clone(), a.hcomp2(c, &phi[jo]).name))
                            .collect();
                        morphism_map.insert(
                            name::pair(psi_name, phi_name),
                            family_name("M", &entries),
                        );
                    }
                }
                hcomp.insert(
                    (fname.clone(), gname.clone(), hname.clone()),
                    CatFunctor {
                        source,
                        target: out.cat.clone(),
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
    Ok(Arc::new(FinBicat::from_parts(
        objects, homs, identities, hcomp, associators, lunitors, runitors,
    )))
}

/// The object of `A` that diagram `d` assigns to `jo`; `d` lands in the
/// underlying category whose objects are the objects of `a`.
fn ob_of(_a: &Arc<FinBicat>, d: &CatFunctor, jo: &str) -> String {
    d.ob(jo).to_string()
}

/// The 1-cell of `a` behind a morphism of the underlying category.
fn one_cell_of(a: &Arc<FinBicat>, d: &CatFunctor, u: &str) -> OneCell {
    let q = d.mor(u);
    a.all_one_cells()
        .into_iter()
        .find(|c| name::qualified(&c.src, &c.tgt, &c.name) == q)
        .expect("underlying morphism resolves to a 1-cell")
}

struct ConeHom {
    cat: Arc<FinCat>,
    one_cells: BTreeMap<String, BTreeMap<String, OneCell>>,
    two_cells: BTreeMap<String, BTreeMap<String, TwoCell>>,
}

/// Strictly natural families `f ⇒ g` between diagrams and the modification
/// families between them, assembled into a category.
fn natural_families(
    a: &Arc<FinBicat>,
    j: &Arc<FinCat>,
    f: &CatFunctor,
    g: &CatFunctor,
    guard: SizeGuard,
) -> Result<ConeHom, Error> {
    let j_obs: Vec<&str> = j.objects().collect();
    let candidates: Vec<Vec<OneCell>> = j_obs
        .iter()
        .map(|jo| a.one_cells(&ob_of(a, f, jo), &ob_of(a, g, jo)))
        .collect();
    guard.admit_product(candidates.iter().map(|c| c.len() as u64))?;
    let mut families: BTreeMap<String, BTreeMap<String, OneCell>> = BTreeMap::new();
    let empty_or_not = candidates.iter().any(|c| c.is_empty()) && !j_obs.is_empty();
    if !empty_or_not {
        for combo in cartesian(&candidates.iter().map(|c| c.len()).collect::<Vec<_>>()) {
            let family: BTreeMap<String, OneCell> = j_obs
                .iter()
                .zip(&candidates)
                .zip(&combo)
                .map(|((jo, cands), &i)| (jo.to_string(), cands[i].clone()))
                .collect();
            let natural = j.morphisms().all(|(u, info)| {
                let fu = one_cell_of(a, f, u);
                let gu = one_cell_of(a, g, u);
                a.compose1(&family[&info.tgt], &fu) == a.compose1(&gu, &family[&info.src])
            });
            if natural {
                let entries: BTreeMap<String, String> = family
                    .iter()
                    .map(|(k, v)| (k.clone(), v.name.clone()))
                    .collect();
                families.insert(family_name("N", &entries), family);
            }
        }
    }
    // Modification families between each ordered pair of natural families.
    let mut two_cells: BTreeMap<String, BTreeMap<String, TwoCell>> = BTreeMap::new();
    let mut morphisms = BTreeMap::new();
    let mut composition = BTreeMap::new();
    let fam_list: Vec<(&String, &BTreeMap<String, OneCell>)> = families.iter().collect();
    for (ename, eta) in &fam_list {
        for (e2name, eta2) in &fam_list {
            let cands: Vec<Vec<TwoCell>> = j_obs
                .iter()
                .map(|jo| {
                    let src = &eta[*jo];
                    let tgt = &eta2[*jo];
                    let hom = a.hom(&src.src, &src.tgt);
                    hom.hom(&src.name, &tgt.name)
                        .into_iter()
                        .map(|m| TwoCell::new(&src.src, &src.tgt, m))
                        .collect()
                })
                .collect();
            guard.admit_product(cands.iter().map(|c| c.len() as u64))?;
            if cands.iter().any(|c| c.is_empty()) && !j_obs.is_empty() {
                continue;
            }
            for combo in cartesian(&cands.iter().map(|c| c.len()).collect::<Vec<_>>()) {
                let fam: BTreeMap<String, TwoCell> = j_obs
                    .iter()
                    .zip(&cands)
                    .zip(&combo)
                    .map(|((jo, cs), &i)| (jo.to_string(), cs[i].clone()))
                    .collect();
                let ok = j.morphisms().all(|(u, info)| {
                    let fu = one_cell_of(a, f, u);
                    let gu = one_cell_of(a, g, u);
                    a.whisker_left(&gu, &fam[&info.src])
                        == a.whisker_right(&fam[&info.tgt], &fu)
                });
                if ok {
                    let entries: BTreeMap<String, String> =
                        fam.iter().map(|(k, v)| (k.clone(), v.name.clone())).collect();
                    let mname = family_name("M", &entries);
                    morphisms.insert(
                        mname.clone(),
                        MorInfo {
                            src: (*ename).clone(),
                            tgt: (*e2name).clone(),
                        },
                    );
                    two_cells.insert(mname, fam);
                }
            }
        }
    }
    let mut identities = BTreeMap::new();
    for (ename, eta) in &fam_list {
        let entries: BTreeMap<String, String> = eta
            .iter()
            .map(|(k, v)| (k.clone(), a.id2(v).name))
            .collect();
        identities.insert((*ename).clone(), family_name("M", &entries));
    }
    let snapshot: Vec<(String, BTreeMap<String, TwoCell>)> = two_cells
        .iter()
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    for (mn, md) in &snapshot {
        for (nn, nd) in &snapshot {
            if morphisms[nn].tgt != morphisms[mn].src {
                continue;
            }
            let entries: BTreeMap<String, String> = md
                .iter()
                .map(|(jo, c)| (jo.clone(), a.vcomp2(c, &nd[jo]).name))
                .collect();
            composition.insert((mn.clone(), nn.clone()), family_name("M", &entries));
        }
    }
    let cat = Arc::new(FinCat::from_parts(
        families.keys().cloned().collect(),
        morphisms,
        identities,
        composition,
    ));
    Ok(ConeHom {
        cat,
        one_cells: families,
        two_cells,
    })
}

/// The constant-diagram 2-functor `Δ: A → A^J` for the strict cotensor.
pub fn cotensor_delta_2cat(
    a: &Arc<FinBicat>,
    j: &Arc<FinCat>,
    cotensor: &Arc<FinBicat>,
) -> Result<NormalPseudofunctor, Error> {
    let under = a.underlying_cat()?;
    let object_map: BTreeMap<String, String> = a
        .objects()
        .map(|x| (x.to_string(), functor_name(&CatFunctor::constant(j, &under, x))))
        .collect();
    let mut hom_maps = BTreeMap::new();
    for (x, y, hom) in a.homs() {
        let tgt_hom = cotensor.hom(&object_map[x], &object_map[y]);
        let object_map_h: BTreeMap<String, String> = hom
            .objects()
            .map(|u| {
                let entries: BTreeMap<String, String> =
                    j.objects().map(|jo| (jo.to_string(), u.to_string())).collect();
                (u.to_string(), family_name("N", &entries))
            })
            .collect();
        let morphism_map: BTreeMap<String, String> = hom
            .morphisms()
            .map(|(m, _)| {
                let entries: BTreeMap<String, String> =
                    j.objects().map(|jo| (jo.to_string(), m.to_string())).collect();
                (m.to_string(), family_name("M", &entries))
            })
            .collect();
        hom_maps.insert(
            (x.to_string(), y.to_string()),
            CatFunctor {
                source: hom.clone(),
                target: tgt_hom.clone(),
                object_map: object_map_h,
                morphism_map,
            },
        );
    }
    let skeleton = NormalPseudofunctor {
        source: a.clone(),
        target: cotensor.clone(),
        object_map: object_map.clone(),
        hom_maps: hom_maps.clone(),
        comparisons: BTreeMap::new(),
    };
    let mut comparisons = BTreeMap::new();
    for (g, f) in a.composable_pairs() {
        let gf = a.compose1(&g, &f);
        comparisons.insert(
            (
                (f.src.clone(), f.tgt.clone(), g.tgt.clone()),
                (g.name.clone(), f.name.clone()),
            ),
            cotensor.id2(&skeleton.one(&gf)).name,
        );
    }
    Ok(NormalPseudofunctor {
        source: a.clone(),
        target: cotensor.clone(),
        object_map,
        hom_maps,
        comparisons,
    })
}

/// The category of cones `Δapex ⇒ D` for a strict 2-category: objects are
/// strictly natural families, morphisms are modification families. This is
/// the hom-category `A^J(Δapex, D)` computed directly.
pub fn cone_category_2cat(
    a: &Arc<FinBicat>,
    j: &Arc<FinCat>,
    d: &CatFunctor,
    apex: &str,
    guard: SizeGuard,
) -> Result<ConeCategory, Error> {
    let under = a.underlying_cat()?;
    let delta = CatFunctor::constant(j, &under, apex);
    let data = natural_families(a, j, &delta, d, guard)?;
    if let Verdict::Fail { law, witness } = data.cat.validate() {
        return Err(Error::shape(format!("cone category invalid: {law} at {witness}")));
    }
    Ok(ConeCategory {
        cat: data.cat,
        cones: data.one_cells,
        modifications: data.two_cells,
    })
}

/// Cone data with name lookups, used by the limit checks.
pub struct ConeCategory {
    pub cat: Arc<FinCat>,
    pub cones: BTreeMap<String, BTreeMap<String, OneCell>>,
    pub modifications: BTreeMap<String, BTreeMap<String, TwoCell>>,
}

impl ConeCategory {
    pub fn cone_name(&self, legs: &BTreeMap<String, OneCell>) -> String {
        let entries: BTreeMap<String, String> = legs
            .iter()
            .map(|(k, v)| (k.clone(), v.name.clone()))
            .collect();
        family_name("N", &entries)
    }

    pub fn modification_name(&self, cells: &BTreeMap<String, TwoCell>) -> String {
        let entries: BTreeMap<String, String> = cells
            .iter()
            .map(|(k, v)| (k.clone(), v.name.clone()))
            .collect();
        family_name("M", &entries)
    }
}
