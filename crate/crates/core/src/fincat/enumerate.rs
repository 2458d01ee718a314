use super::{CatFunctor, CatNatTrans, FinCat, MorInfo};
use crate::error::{Error, SizeGuard};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// All functors `c → d`, complete and duplicate-free, in lexicographic order
/// of object and morphism assignments.
pub fn enumerate_functors(
    c: &Arc<FinCat>,
    d: &Arc<FinCat>,
    guard: SizeGuard,
) -> Result<Vec<CatFunctor>, Error> {
    let c_obs: Vec<&str> = c.objects().collect();
    let nonid_mors: Vec<&str> = c
        .morphisms()
        .filter(|(m, _)| !c.is_identity(m))
        .map(|(m, _)| m)
        .collect();
    let mut raw: Vec<u64> = vec![d.object_count() as u64; c_obs.len()];
    raw.extend(vec![d.morphism_count() as u64; nonid_mors.len()]);
    guard.admit_product(raw)?;

    if c_obs.is_empty() {
        return Ok(vec![CatFunctor {
            source: c.clone(),
            target: d.clone(),
            object_map: BTreeMap::new(),
            morphism_map: BTreeMap::new(),
        }]);
    }
    let d_obs: Vec<&str> = d.objects().collect();
    if d_obs.is_empty() {
        return Ok(Vec::new());
    }

    let mut out = Vec::new();
    let mut ob_choice = vec![0usize; c_obs.len()];
    loop {
        let object_map: BTreeMap<String, String> = c_obs
            .iter()
            .zip(&ob_choice)
            .map(|(x, &i)| (x.to_string(), d_obs[i].to_string()))
            .collect();
        extend_morphism_maps(c, d, &object_map, &nonid_mors, &mut out);
        // Advance the object assignment lexicographically.
        let mut k = ob_choice.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            ob_choice[k] += 1;
            if ob_choice[k] < d_obs.len() {
                break;
            }
            ob_choice[k] = 0;
        }
    }
}

fn extend_morphism_maps(
    c: &Arc<FinCat>,
    d: &Arc<FinCat>,
    object_map: &BTreeMap<String, String>,
    nonid_mors: &[&str],
    out: &mut Vec<CatFunctor>,
) {
    // Candidate images per non-identity morphism, constrained by endpoints.
    let mut candidates: Vec<Vec<&str>> = Vec::with_capacity(nonid_mors.len());
    for m in nonid_mors {
        let fs = &object_map[c.src(m)];
        let ft = &object_map[c.tgt(m)];
        let opts = d.hom(fs, ft);
        if opts.is_empty() {
            return;
        }
        candidates.push(opts);
    }
    let mut choice = vec![0usize; nonid_mors.len()];
    'outer: loop {
        let mut morphism_map: BTreeMap<String, String> = c
            .objects()
            .map(|x| {
                (
                    c.identity(x).to_string(),
                    d.identity(&object_map[x]).to_string(),
                )
            })
            .collect();
        for (m, &i) in nonid_mors.iter().zip(&choice) {
            morphism_map.insert(m.to_string(), candidates_at(&candidates, nonid_mors, m)[i].to_string());
        }
        let f = CatFunctor {
            source: c.clone(),
            target: d.clone(),
            object_map: object_map.clone(),
            morphism_map,
        };
        if preserves_composition(&f) {
            out.push(f);
        }
        if nonid_mors.is_empty() {
            return;
        }
        let mut k = choice.len();
        loop {
            if k == 0 {
                break 'outer;
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                continue 'outer;
            }
            choice[k] = 0;
        }
    }
}

fn candidates_at<'a>(
    candidates: &'a [Vec<&'a str>],
    nonid_mors: &[&str],
    m: &str,
) -> &'a Vec<&'a str> {
    let idx = nonid_mors.iter().position(|n| *n == m).unwrap();
    &candidates[idx]
}

fn preserves_composition(f: &CatFunctor) -> bool {
    f.source
        .composition_table()
        .all(|(g, h, gh)| f.target.compose(f.mor(g), f.mor(h)) == Some(f.mor(gh)))
}

/// All natural transformations `f ⇒ g` between parallel functors, in
/// lexicographic component order.
pub fn enumerate_nat_trans(
    f: &CatFunctor,
    g: &CatFunctor,
    guard: SizeGuard,
) -> Result<Vec<CatNatTrans>, Error> {
    if !f.is_parallel_to(g) {
        return Err(Error::shape("natural transformations require parallel functors"));
    }
    let obs: Vec<&str> = f.source.objects().collect();
    let candidates: Vec<Vec<&str>> = obs
        .iter()
        .map(|x| f.target.hom(f.ob(x), g.ob(x)))
        .collect();
    guard.admit_product(candidates.iter().map(|c| c.len() as u64))?;
    if candidates.iter().any(|c| c.is_empty()) && !obs.is_empty() {
        return Ok(Vec::new());
    }

    let mut out = Vec::new();
    let mut choice = vec![0usize; obs.len()];
    'outer: loop {
        let nt = CatNatTrans {
            source: f.clone(),
            target: g.clone(),
            components: obs
                .iter()
                .zip(&choice)
                .map(|(x, &i)| (x.to_string(), candidates_for(x, &obs, &candidates)[i].to_string()))
                .collect(),
        };
        if natural(&nt) {
            out.push(nt);
        }
        if obs.is_empty() {
            return Ok(out);
        }
        let mut k = choice.len();
        loop {
            if k == 0 {
                break 'outer;
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                continue 'outer;
            }
            choice[k] = 0;
        }
    }
    Ok(out)
}

fn candidates_for<'a>(x: &str, obs: &[&str], candidates: &'a [Vec<&'a str>]) -> &'a Vec<&'a str> {
    let idx = obs.iter().position(|o| *o == x).unwrap();
    &candidates[idx]
}

fn natural(nt: &CatNatTrans) -> bool {
    let cat = &nt.source.target;
    nt.source.source.morphisms().all(|(m, info)| {
        let lhs = cat.compose(nt.at(&info.tgt), nt.source.mor(m));
        let rhs = cat.compose(nt.target.mor(m), nt.at(&info.src));
        lhs.is_some() && lhs == rhs
    })
}

/// Generates every finite category with at most `max_morphisms` total
/// morphisms (identities included), deduplicated up to object/morphism
/// relabeling. Objects are named `o0, o1, ...` and non-identity morphisms
/// `m0, m1, ...`; composition tables are filled by backtracking with unit
/// laws forced and associativity pruned.
pub fn enumerate_fincats(max_morphisms: usize) -> Vec<Arc<FinCat>> {
    let mut out: Vec<Arc<FinCat>> = vec![Arc::new(FinCat::default())];
    let mut seen: BTreeSet<String> = BTreeSet::new();
    for n_obj in 1..=max_morphisms {
        for n_extra in 0..=(max_morphisms - n_obj) {
            let obs: Vec<String> = (0..n_obj).map(|i| format!("o{i}")).collect();
            let mors: Vec<String> = (0..n_extra).map(|i| format!("m{i}")).collect();
            // All source/target assignments for the non-identity morphisms.
            let mut assign = vec![(0usize, 0usize); n_extra];
            loop {
                candidates_with_assignment(&obs, &mors, &assign, &mut out, &mut seen);
                let mut k = n_extra;
                loop {
                    if k == 0 {
                        break;
                    }
                    k -= 1;
                    if assign[k].1 + 1 < n_obj {
                        assign[k].1 += 1;
                        break;
                    }
                    assign[k].1 = 0;
                    if assign[k].0 + 1 < n_obj {
                        assign[k].0 += 1;
                        break;
                    }
                    assign[k].0 = 0;
                }
                if assign.iter().all(|&(s, t)| s == 0 && t == 0) {
                    break;
                }
            }
            if n_extra == 0 {
                // The discrete case was emitted once by the loop above.
                continue;
            }
        }
    }
    out
}

fn candidates_with_assignment(
    obs: &[String],
    mors: &[String],
    assign: &[(usize, usize)],
    out: &mut Vec<Arc<FinCat>>,
    seen: &mut BTreeSet<String>,
) {
    let mut objects = BTreeSet::new();
    let mut morphisms = BTreeMap::new();
    let mut identities = BTreeMap::new();
    for x in obs {
        objects.insert(x.clone());
        let id = format!("id_{x}");
        morphisms.insert(
            id.clone(),
            MorInfo {
                src: x.clone(),
                tgt: x.clone(),
            },
        );
        identities.insert(x.clone(), id);
    }
    for (m, &(s, t)) in mors.iter().zip(assign) {
        morphisms.insert(
            m.clone(),
            MorInfo {
                src: obs[s].clone(),
                tgt: obs[t].clone(),
            },
        );
    }
    // Composition entries forced by unit laws.
    let mut composition = BTreeMap::new();
    for (m, info) in &morphisms {
        composition.insert((m.clone(), identities[&info.src].clone()), m.clone());
        composition.insert((identities[&info.tgt].clone(), m.clone()), m.clone());
    }
    // Remaining composable pairs of non-identity morphisms.
    let mut free_pairs = Vec::new();
    for g in mors {
        for f in mors {
            if morphisms[f].tgt == morphisms[g].src {
                free_pairs.push((g.clone(), f.clone()));
            }
        }
    }
    fill_tables(
        &objects,
        &morphisms,
        &identities,
        &free_pairs,
        0,
        &mut composition,
        out,
        seen,
    );
}

#[allow(clippy::too_many_arguments)]
fn fill_tables(
    objects: &BTreeSet<String>,
    morphisms: &BTreeMap<String, MorInfo>,
    identities: &BTreeMap<String, String>,
    free_pairs: &[(String, String)],
    depth: usize,
    composition: &mut BTreeMap<(String, String), String>,
    out: &mut Vec<Arc<FinCat>>,
    seen: &mut BTreeSet<String>,
) {
    if depth == free_pairs.len() {
        let cat = FinCat::from_parts(
            objects.clone(),
            morphisms.clone(),
            identities.clone(),
            composition.clone(),
        );
        if cat.validate().holds() {
            let key = canonical_form(&cat);
            if seen.insert(key) {
                out.push(Arc::new(cat));
            }
        }
        return;
    }
    let (g, f) = &free_pairs[depth];
    let src = morphisms[f].src.clone();
    let tgt = morphisms[g].tgt.clone();
    let candidates: Vec<String> = morphisms
        .iter()
        .filter(|(_, info)| info.src == src && info.tgt == tgt)
        .map(|(m, _)| m.clone())
        .collect();
    for h in candidates {
        composition.insert((g.clone(), f.clone()), h);
        if associativity_consistent(morphisms, composition) {
            fill_tables(
                objects,
                morphisms,
                identities,
                free_pairs,
                depth + 1,
                composition,
                out,
                seen,
            );
        }
        composition.remove(&(g.clone(), f.clone()));
    }
}

/// Partial associativity check: only triples whose needed entries are all
/// present so far.
fn associativity_consistent(
    morphisms: &BTreeMap<String, MorInfo>,
    composition: &BTreeMap<(String, String), String>,
) -> bool {
    let get = |g: &str, f: &str| composition.get(&(g.to_string(), f.to_string()));
    for (h, hi) in morphisms {
        for (g, gi) in morphisms {
            if gi.tgt != hi.src {
                continue;
            }
            for (f, fi) in morphisms {
                if fi.tgt != gi.src {
                    continue;
                }
                let (Some(hg), Some(gf)) = (get(h, g), get(g, f)) else {
                    continue;
                };
                let (Some(hg_f), Some(h_gf)) = (get(hg, f), get(h, gf)) else {
                    continue;
                };
                if hg_f != h_gf {
                    return false;
                }
            }
        }
    }
    true
}

/// Canonical string for a category under all object/morphism relabelings:
/// minimizes a serialized form over object permutations (morphisms are
/// canonically ordered by their endpoint data and in-hom table behavior).
fn canonical_form(cat: &FinCat) -> String {
    let obs: Vec<&str> = cat.objects().collect();
    let mut best: Option<String> = None;
    for perm in permutations(obs.len()) {
        let rank = |x: &str| perm[obs.iter().position(|o| *o == x).unwrap()];
        // Order morphisms by (src rank, tgt rank, is_identity, discovery of
        // composition behavior); break ties over all in-hom orderings by
        // taking the lexicographically least serialization.
        let mut mors: Vec<&str> = cat.morphisms().map(|(m, _)| m).collect();
        mors.sort_by_key(|m| {
            (
                rank(cat.src(m)),
                rank(cat.tgt(m)),
                !cat.is_identity(m),
                m.to_string(),
            )
        });
        // Serialize with positional names. In-hom ordering still depends on
        // the original names; for the tiny categories this generator emits,
        // refine by trying all orderings within each parallel class.
        let classes = parallel_classes(cat, &mors);
        for ordering in class_orderings(&classes) {
            let index = |m: &str| ordering.iter().position(|n| *n == m).unwrap();
            let mut s = String::new();
            s.push_str(&format!("ob={};", obs.len()));
            for m in &ordering {
                s.push_str(&format!(
                    "{}:{}->{};",
                    index(m),
                    rank(cat.src(m)),
                    rank(cat.tgt(m))
                ));
            }
            let mut entries: Vec<String> = cat
                .composition_table()
                .map(|(g, f, h)| format!("{}.{}={}", index(g), index(f), index(h)))
                .collect();
            entries.sort();
            s.push_str(&entries.join(";"));
            if best.as_ref().map_or(true, |b| s < *b) {
                best = Some(s);
            }
        }
    }
    best.unwrap_or_default()
}

fn parallel_classes<'a>(cat: &FinCat, mors: &[&'a str]) -> Vec<Vec<&'a str>> {
    let mut classes: Vec<Vec<&str>> = Vec::new();
    for m in mors {
        match classes.last_mut() {
            Some(class)
                if cat.src(class[0]) == cat.src(m)
                    && cat.tgt(class[0]) == cat.tgt(m)
                    && cat.is_identity(class[0]) == cat.is_identity(m) =>
            {
                class.push(m);
            }
            _ => classes.push(vec![m]),
        }
    }
    classes
}

fn class_orderings<'a>(classes: &[Vec<&'a str>]) -> Vec<Vec<&'a str>> {
    let mut result: Vec<Vec<&'a str>> = vec![Vec::new()];
    for class in classes {
        let perms = permutations(class.len());
        let mut next = Vec::new();
        for prefix in &result {
            for perm in &perms {
                let mut row = prefix.clone();
                for &i in perm {
                    row.push(class[i]);
                }
                next.push(row);
            }
        }
        result = next;
    }
    result
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let rest = permutations(n - 1);
    for p in rest {
        for i in 0..n {
            let mut q = Vec::with_capacity(n);
            q.extend(p.iter().take(i).copied());
            q.push(n - 1);
            q.extend(p.iter().skip(i).copied());
            out.push(q);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{terminal_cat, walking_arrow};

    #[test]
    fn functor_counts_on_small_categories() {
        let guard = SizeGuard::default();
        let one = terminal_cat();
        let two = walking_arrow();
        assert_eq!(enumerate_functors(&one, &two, guard).unwrap().len(), 2);
        assert_eq!(enumerate_functors(&two, &one, guard).unwrap().len(), 1);
        assert_eq!(enumerate_functors(&two, &two, guard).unwrap().len(), 3);
    }

    #[test]
    fn nat_trans_counts_on_small_categories() {
        let guard = SizeGuard::default();
        let one = terminal_cat();
        let two = walking_arrow();
        let id_one = CatFunctor::identity(&one);
        assert_eq!(enumerate_nat_trans(&id_one, &id_one, guard).unwrap().len(), 1);
        let id_two = CatFunctor::identity(&two);
        assert_eq!(enumerate_nat_trans(&id_two, &id_two, guard).unwrap().len(), 1);
        let at0 = CatFunctor::constant(&one, &two, "0");
        let at1 = CatFunctor::constant(&one, &two, "1");
        let up = enumerate_nat_trans(&at0, &at1, guard).unwrap();
        assert_eq!(up.len(), 1);
        assert_eq!(up[0].at("*"), "arr");
        assert_eq!(enumerate_nat_trans(&at1, &at0, guard).unwrap().len(), 0);
    }

    #[test]
    fn size_guard_aborts_oversized_searches() {
        let guard = SizeGuard::new(1);
        let two = walking_arrow();
        let err = enumerate_functors(&two, &two, guard).unwrap_err();
        assert!(err.is_size_guard());
    }

    #[test]
    fn generated_categories_are_valid_and_deduplicated() {
        let cats = enumerate_fincats(3);
        assert!(cats.iter().all(|c| c.validate().holds()));
        // 0 morphisms: empty. 1: terminal. 2: discrete pair plus the two
        // 2-element monoids.
        let with_two: Vec<_> = cats.iter().filter(|c| c.morphism_count() == 2).collect();
        assert_eq!(with_two.len(), 3);
        // Monoid tables with 3 elements exist (e.g. Z3 and friends).
        assert!(cats
            .iter()
            .any(|c| c.object_count() == 1 && c.morphism_count() == 3));
    }
}
