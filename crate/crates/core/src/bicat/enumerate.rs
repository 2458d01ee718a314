use super::{FinBicat, Icon, Modification, NormalPseudofunctor, OneCell, TwoCell, TwoNatTrans};
use crate::error::{Error, SizeGuard};
use crate::fincat::{enumerate_functors, enumerate_nat_trans, CatFunctor, CatNatTrans};
use crate::verdict::Verdict;
use std::collections::BTreeMap;
use std::sync::Arc;

fn cartesian_indices(sizes: &[usize]) -> Vec<Vec<usize>> {
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

/// All strict 2-functors `x → b` between strict 2-categories, in
/// lexicographic order of object assignments and hom-functor choices.
pub fn enumerate_strict_2functors(
    x: &Arc<FinBicat>,
    b: &Arc<FinBicat>,
    guard: SizeGuard,
) -> Result<Vec<NormalPseudofunctor>, Error> {
    if !x.is_strict().holds() || !b.is_strict().holds() {
        return Err(Error::shape("strict 2-functor enumeration requires strict 2-categories"));
    }
    enumerate_pseudofunctors_inner(x, b, guard, true)
}

/// All normal pseudofunctors `x → b`, comparisons included, in canonical
/// order.
pub fn enumerate_normal_pseudofunctors(
    x: &Arc<FinBicat>,
    b: &Arc<FinBicat>,
    guard: SizeGuard,
) -> Result<Vec<NormalPseudofunctor>, Error> {
    enumerate_pseudofunctors_inner(x, b, guard, false)
}

fn enumerate_pseudofunctors_inner(
    x: &Arc<FinBicat>,
    b: &Arc<FinBicat>,
    guard: SizeGuard,
    strict_only: bool,
) -> Result<Vec<NormalPseudofunctor>, Error> {
    let x_obs: Vec<&str> = x.objects().collect();
    guard.admit_product(vec![b.object_count() as u64; x_obs.len()])?;
    let b_obs: Vec<&str> = b.objects().collect();
    if x_obs.is_empty() {
        let empty = NormalPseudofunctor {
            source: x.clone(),
            target: b.clone(),
            object_map: BTreeMap::new(),
            hom_maps: BTreeMap::new(),
            comparisons: BTreeMap::new(),
        };
        return Ok(vec![empty]);
    }
    if b_obs.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for ob_choice in cartesian_indices(&vec![b_obs.len(); x_obs.len()]) {
        let object_map: BTreeMap<String, String> = x_obs
            .iter()
            .zip(&ob_choice)
            .map(|(o, &i)| (o.to_string(), b_obs[i].to_string()))
            .collect();
        extend_hom_maps(x, b, &object_map, guard, strict_only, &mut out)?;
    }
    Ok(out)
}

fn extend_hom_maps(
    x: &Arc<FinBicat>,
    b: &Arc<FinBicat>,
    object_map: &BTreeMap<String, String>,
    guard: SizeGuard,
    strict_only: bool,
    out: &mut Vec<NormalPseudofunctor>,
) -> Result<(), Error> {
    let hom_keys: Vec<(String, String)> = x
        .homs()
        .map(|(a, c, _)| (a.to_string(), c.to_string()))
        .collect();
    let mut candidates: Vec<Vec<CatFunctor>> = Vec::with_capacity(hom_keys.len());
    for (a, c) in &hom_keys {
        let source_hom = x.hom(a, c);
        let target_hom = b.hom(&object_map[a], &object_map[c]);
        let mut fs = enumerate_functors(source_hom, target_hom, guard)?;
        // Normality prunes hom-endofunctors that move the identity 1-cell.
        if a == c {
            let id_x = x.identity1(a);
            let id_b = b.identity1(&object_map[a]);
            fs.retain(|f| f.ob(&id_x.name) == id_b.name);
        }
        if fs.is_empty() {
            return Ok(());
        }
        candidates.push(fs);
    }
    guard.admit_product(candidates.iter().map(|c| c.len() as u64))?;
    for combo in cartesian_indices(&candidates.iter().map(|c| c.len()).collect::<Vec<_>>()) {
        let hom_maps: BTreeMap<(String, String), CatFunctor> = hom_keys
            .iter()
            .zip(&candidates)
            .zip(&combo)
            .map(|((key, cands), &i)| (key.clone(), cands[i].clone()))
            .collect();
        extend_comparisons(x, b, object_map, &hom_maps, guard, strict_only, out)?;
    }
    Ok(())
}

fn extend_comparisons(
    x: &Arc<FinBicat>,
    b: &Arc<FinBicat>,
    object_map: &BTreeMap<String, String>,
    hom_maps: &BTreeMap<(String, String), CatFunctor>,
    guard: SizeGuard,
    strict_only: bool,
    out: &mut Vec<NormalPseudofunctor>,
) -> Result<(), Error> {
    let skeleton = NormalPseudofunctor {
        source: x.clone(),
        target: b.clone(),
        object_map: object_map.clone(),
        hom_maps: hom_maps.clone(),
        comparisons: BTreeMap::new(),
    };
    let pairs = x.composable_pairs();
    // Forced comparisons at identity pairs; free choices elsewhere.
    type CompKey = ((String, String, String), (String, String));
    let comp_key = |g: &OneCell, f: &OneCell| -> CompKey {
        (
            (f.src.clone(), f.tgt.clone(), g.tgt.clone()),
            (g.name.clone(), f.name.clone()),
        )
    };
    let mut forced: BTreeMap<CompKey, String> = BTreeMap::new();
    let mut free: Vec<(OneCell, OneCell)> = Vec::new();
    for (g, f) in &pairs {
        let g_is_id = g.src == g.tgt && g.name == x.identity1(&g.src).name;
        let f_is_id = f.src == f.tgt && f.name == x.identity1(&f.src).name;
        if g_is_id {
            let ff = skeleton.one(f);
            let l_src = skeleton.two(&x.lunitor(f));
            let inv = super::pseudofunctor::invert(b, &l_src);
            let value = b.vcomp2(&inv, &b.lunitor(&ff));
            forced.insert(comp_key(g, f), value.name);
        } else if f_is_id {
            let fg = skeleton.one(g);
            let r_src = skeleton.two(&x.runitor(g));
            let inv = super::pseudofunctor::invert(b, &r_src);
            let value = b.vcomp2(&inv, &b.runitor(&fg));
            forced.insert(comp_key(g, f), value.name);
        } else {
            free.push((g.clone(), f.clone()));
        }
    }
    // Candidate comparison cells per free pair.
    let mut free_candidates: Vec<Vec<String>> = Vec::with_capacity(free.len());
    for (g, f) in &free {
        let src = b.compose1(&skeleton.one(g), &skeleton.one(f));
        let tgt = skeleton.one(&x.compose1(g, f));
        let hom = b.hom(&src.src, &src.tgt);
        let mut cells: Vec<String> = hom
            .hom(&src.name, &tgt.name)
            .into_iter()
            .filter(|m| hom.is_iso(m))
            .map(|m| m.to_string())
            .collect();
        if strict_only {
            cells.retain(|m| src.name == tgt.name && hom.is_identity(m));
        }
        if cells.is_empty() {
            return Ok(());
        }
        free_candidates.push(cells);
    }
    guard.admit_product(free_candidates.iter().map(|c| c.len() as u64))?;
    for combo in cartesian_indices(&free_candidates.iter().map(|c| c.len()).collect::<Vec<_>>()) {
        let mut comparisons = forced.clone();
        for (idx, ((g, f), &i)) in free.iter().zip(&combo).enumerate() {
            comparisons.insert(comp_key(g, f), free_candidates[idx][i].clone());
        }
        let candidate = NormalPseudofunctor {
            source: x.clone(),
            target: b.clone(),
            object_map: object_map.clone(),
            hom_maps: hom_maps.clone(),
            comparisons,
        };
        let ok = if strict_only {
            candidate.is_strict() && candidate.validate().holds()
        } else {
            candidate.validate().holds()
        };
        if ok {
            out.push(candidate);
        }
    }
    Ok(())
}

/// All 2-natural transformations `f ⇒ g` between parallel strict
/// 2-functors.
pub fn enumerate_2nats(
    f: &NormalPseudofunctor,
    g: &NormalPseudofunctor,
    guard: SizeGuard,
) -> Result<Vec<TwoNatTrans>, Error> {
    if !f.is_parallel_to(g) {
        return Err(Error::shape("2-natural transformations require parallel 2-functors"));
    }
    let b = &f.target;
    let obs: Vec<&str> = f.source.objects().collect();
    let candidates: Vec<Vec<OneCell>> = obs
        .iter()
        .map(|x| b.one_cells(f.ob(x), g.ob(x)))
        .collect();
    guard.admit_product(candidates.iter().map(|c| c.len() as u64))?;
    if candidates.iter().any(|c| c.is_empty()) && !obs.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for combo in cartesian_indices(&candidates.iter().map(|c| c.len()).collect::<Vec<_>>()) {
        let nt = TwoNatTrans {
            source: f.clone(),
            target: g.clone(),
            components: obs
                .iter()
                .zip(&candidates)
                .zip(&combo)
                .map(|((x, cands), &i)| (x.to_string(), cands[i].clone()))
                .collect(),
        };
        if matches!(nt.validate()?, Verdict::Pass) {
            out.push(nt);
        }
    }
    Ok(out)
}

/// All icons `f ⇒ g` between parallel normal pseudofunctors. Empty unless
/// the pseudofunctors agree on objects.
pub fn enumerate_icons(
    f: &NormalPseudofunctor,
    g: &NormalPseudofunctor,
    guard: SizeGuard,
) -> Result<Vec<Icon>, Error> {
    if !f.is_parallel_to(g) {
        return Err(Error::shape("icons require parallel pseudofunctors"));
    }
    if !f.agrees_on_objects(g) {
        return Ok(Vec::new());
    }
    let hom_keys: Vec<(String, String)> = f
        .source
        .homs()
        .map(|(x, y, _)| (x.to_string(), y.to_string()))
        .collect();
    let mut candidates: Vec<Vec<CatNatTrans>> = Vec::with_capacity(hom_keys.len());
    for (x, y) in &hom_keys {
        let nts = enumerate_nat_trans(f.hom_map(x, y), g.hom_map(x, y), guard)?;
        if nts.is_empty() {
            return Ok(Vec::new());
        }
        candidates.push(nts);
    }
    guard.admit_product(candidates.iter().map(|c| c.len() as u64))?;
    let mut out = Vec::new();
    for combo in cartesian_indices(&candidates.iter().map(|c| c.len()).collect::<Vec<_>>()) {
        let components = hom_keys
            .iter()
            .zip(&candidates)
            .zip(&combo)
            .map(|((key, cands), &i)| (key.clone(), cands[i].clone()))
            .collect();
        let icon = Icon {
            source: f.clone(),
            target: g.clone(),
            components,
        };
        if icon.validate().holds() {
            out.push(icon);
        }
    }
    Ok(out)
}

/// All modifications between parallel 2-natural transformations.
pub fn enumerate_modifications(
    e: &TwoNatTrans,
    e2: &TwoNatTrans,
    guard: SizeGuard,
) -> Result<Vec<Modification>, Error> {
    if e.source != e2.source || e.target != e2.target {
        return Err(Error::shape("modifications require parallel 2-natural transformations"));
    }
    let b = &e.source.target;
    let obs: Vec<&str> = e.source.source.objects().collect();
    let candidates: Vec<Vec<TwoCell>> = obs
        .iter()
        .map(|x| {
            let src = e.at(x);
            let tgt = e2.at(x);
            let hom = b.hom(&src.src, &src.tgt);
            hom.hom(&src.name, &tgt.name)
                .into_iter()
                .map(|m| TwoCell::new(&src.src, &src.tgt, m))
                .collect()
        })
        .collect();
    guard.admit_product(candidates.iter().map(|c| c.len() as u64))?;
    if candidates.iter().any(|c| c.is_empty()) && !obs.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for combo in cartesian_indices(&candidates.iter().map(|c| c.len()).collect::<Vec<_>>()) {
        let m = Modification {
            source: e.clone(),
            target: e2.clone(),
            components: obs
                .iter()
                .zip(&candidates)
                .zip(&combo)
                .map(|((x, cands), &i)| (x.to_string(), cands[i].clone()))
                .collect(),
        };
        if matches!(m.validate()?, Verdict::Pass) {
            out.push(m);
        }
    }
    Ok(out)
}
