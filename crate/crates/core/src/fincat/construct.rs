use super::{enumerate_functors, enumerate_nat_trans, CatFunctor, CatNatTrans, FinCat, MorInfo};
use crate::error::{Error, SizeGuard};
use crate::name;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// Separator marker used by qualified cell names.
pub const CELL_SEP: &str = ">";

/// Binary product of categories. Objects and morphisms are named
/// `(a,b)` from their component names.
pub fn product_cat(a: &Arc<FinCat>, b: &Arc<FinCat>) -> Arc<FinCat> {
    let mut objects = BTreeSet::new();
    let mut morphisms = BTreeMap::new();
    let mut identities = BTreeMap::new();
    let mut composition = BTreeMap::new();
    for x in a.objects() {
        for y in b.objects() {
            let xy = name::pair(x, y);
            identities.insert(xy.clone(), name::pair(a.identity(x), b.identity(y)));
            objects.insert(xy);
        }
    }
    for (m, mi) in a.morphisms() {
        for (n, ni) in b.morphisms() {
            morphisms.insert(
                name::pair(m, n),
                MorInfo {
                    src: name::pair(&mi.src, &ni.src),
                    tgt: name::pair(&mi.tgt, &ni.tgt),
                },
            );
        }
    }
    for (g, f, gf) in a.composition_table() {
        for (g2, f2, gf2) in b.composition_table() {
            composition.insert(
                (name::pair(g, g2), name::pair(f, f2)),
                name::pair(gf, gf2),
            );
        }
    }
    Arc::new(FinCat::from_parts(objects, morphisms, identities, composition))
}

/// Finite product of categories; the empty product is the terminal
/// category. Cells are named as tuples of component names.
pub fn product_of_cats(factors: &[Arc<FinCat>]) -> Arc<FinCat> {
    let mut objects = BTreeSet::new();
    let mut morphisms = BTreeMap::new();
    let mut identities = BTreeMap::new();
    let mut composition = BTreeMap::new();

    let ob_tuples = cartesian(
        &factors
            .iter()
            .map(|c| c.objects().map(|s| s.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    );
    for tup in &ob_tuples {
        let parts: Vec<&str> = tup.iter().map(|s| s.as_str()).collect();
        let nm = name::tuple(&parts);
        let ids: Vec<&str> = tup
            .iter()
            .enumerate()
            .map(|(i, x)| factors[i].identity(x))
            .collect();
        identities.insert(nm.clone(), name::tuple(&ids));
        objects.insert(nm);
    }
    let mor_tuples = cartesian(
        &factors
            .iter()
            .map(|c| c.morphisms().map(|(m, _)| m.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    );
    for tup in &mor_tuples {
        let parts: Vec<&str> = tup.iter().map(|s| s.as_str()).collect();
        let srcs: Vec<&str> = tup.iter().enumerate().map(|(i, m)| factors[i].src(m)).collect();
        let tgts: Vec<&str> = tup.iter().enumerate().map(|(i, m)| factors[i].tgt(m)).collect();
        morphisms.insert(
            name::tuple(&parts),
            MorInfo {
                src: name::tuple(&srcs),
                tgt: name::tuple(&tgts),
            },
        );
    }
    for g in &mor_tuples {
        for f in &mor_tuples {
            let composable = g
                .iter()
                .zip(f.iter())
                .enumerate()
                .all(|(i, (gm, fm))| factors[i].compose(gm, fm).is_some());
            if !composable {
                continue;
            }
            let comps: Vec<&str> = g
                .iter()
                .zip(f.iter())
                .enumerate()
                .map(|(i, (gm, fm))| factors[i].compose(gm, fm).unwrap())
                .collect();
            let gp: Vec<&str> = g.iter().map(|s| s.as_str()).collect();
            let fp: Vec<&str> = f.iter().map(|s| s.as_str()).collect();
            composition.insert((name::tuple(&gp), name::tuple(&fp)), name::tuple(&comps));
        }
    }
    Arc::new(FinCat::from_parts(objects, morphisms, identities, composition))
}

fn cartesian(choices: &[Vec<String>]) -> Vec<Vec<String>> {
    let mut out = vec![Vec::new()];
    for c in choices {
        let mut next = Vec::new();
        for prefix in &out {
            for item in c {
                let mut row = prefix.clone();
                row.push(item.clone());
                next.push(row);
            }
        }
        out = next;
    }
    out
}

/// Canonical name of a functor from its object/morphism graph.
pub fn functor_name(f: &CatFunctor) -> String {
    format!(
        "F{}{}",
        name::graph(f.object_map.iter().map(|(k, v)| (k.as_str(), v.as_str()))),
        name::graph(f.morphism_map.iter().map(|(k, v)| (k.as_str(), v.as_str())))
    )
}

/// Canonical name of a natural transformation from its component graph.
pub fn nat_trans_name(nt: &CatNatTrans) -> String {
    format!(
        "N{}",
        name::graph(nt.components.iter().map(|(k, v)| (k.as_str(), v.as_str())))
    )
}

/// The functor category `c^j`: objects are functors `j → c`, morphisms are
/// natural transformations, both canonically named.
pub fn functor_cat(j: &Arc<FinCat>, c: &Arc<FinCat>, guard: SizeGuard) -> Result<Arc<FinCat>, Error> {
    let functors = enumerate_functors(j, c, guard)?;
    let mut objects = BTreeSet::new();
    let mut morphisms = BTreeMap::new();
    let mut identities = BTreeMap::new();
    let mut composition = BTreeMap::new();
    let mut nts: Vec<(String, CatNatTrans)> = Vec::new();
    for f in &functors {
        let fname = functor_name(f);
        identities.insert(fname.clone(), nat_trans_name(&CatNatTrans::identity(f)));
        objects.insert(fname);
    }
    for f in &functors {
        for g in &functors {
            for nt in enumerate_nat_trans(f, g, guard)? {
                let nm = nat_trans_name(&nt);
                morphisms.insert(
                    nm.clone(),
                    MorInfo {
                        src: functor_name(f),
                        tgt: functor_name(g),
                    },
                );
                nts.push((nm, nt));
            }
        }
    }
    for (gn, gnt) in &nts {
        for (fn_, fnt) in &nts {
            if morphisms[fn_].tgt != morphisms[gn].src {
                continue;
            }
            let composed = gnt.vcompose(fnt)?;
            composition.insert((gn.clone(), fn_.clone()), nat_trans_name(&composed));
        }
    }
    Ok(Arc::new(FinCat::from_parts(
        objects,
        morphisms,
        identities,
        composition,
    )))
}

/// Full subcategory on the given objects.
pub fn full_subcat(c: &Arc<FinCat>, keep: &BTreeSet<String>) -> Arc<FinCat> {
    let objects: BTreeSet<String> = c
        .objects()
        .filter(|x| keep.contains(*x))
        .map(|s| s.to_string())
        .collect();
    let morphisms: BTreeMap<String, MorInfo> = c
        .morphisms()
        .filter(|(_, info)| objects.contains(&info.src) && objects.contains(&info.tgt))
        .map(|(m, info)| (m.to_string(), info.clone()))
        .collect();
    let identities = objects
        .iter()
        .map(|x| (x.clone(), c.identity(x).to_string()))
        .collect();
    let composition = c
        .composition_table()
        .filter(|(g, f, _)| morphisms.contains_key(*g) && morphisms.contains_key(*f))
        .map(|(g, f, h)| ((g.to_string(), f.to_string()), h.to_string()))
        .collect();
    Arc::new(FinCat::from_parts(objects, morphisms, identities, composition))
}

/// Path components of a category's object set under the morphism graph,
/// mapping each object to the least object of its component.
pub fn path_components(c: &FinCat) -> BTreeMap<String, String> {
    let obs: Vec<&str> = c.objects().collect();
    let mut parent: Vec<usize> = (0..obs.len()).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    let index: BTreeMap<&str, usize> = obs.iter().enumerate().map(|(i, x)| (*x, i)).collect();
    for (_, info) in c.morphisms() {
        let a = find(&mut parent, index[info.src.as_str()]);
        let b = find(&mut parent, index[info.tgt.as_str()]);
        if a != b {
            // Union by least representative to keep determinism.
            let (lo, hi) = if obs[a] < obs[b] { (a, b) } else { (b, a) };
            parent[hi] = lo;
        }
    }
    let mut out = BTreeMap::new();
    for (i, x) in obs.iter().enumerate() {
        let root = find(&mut parent, i);
        out.insert(x.to_string(), obs[root].to_string());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{discrete_cat, terminal_cat, walking_arrow};

    #[test]
    fn product_of_walking_arrows_is_valid() {
        let two = walking_arrow();
        let p = product_cat(&two, &two);
        assert!(p.validate().holds());
        assert_eq!(p.object_count(), 4);
        assert_eq!(p.morphism_count(), 9);
    }

    #[test]
    fn empty_product_is_terminal() {
        let p = product_of_cats(&[]);
        assert!(p.validate().holds());
        assert_eq!(p.object_count(), 1);
        assert_eq!(p.morphism_count(), 1);
    }

    #[test]
    fn functor_cat_of_arrow_into_arrow() {
        let two = walking_arrow();
        let fc = functor_cat(&two, &two, SizeGuard::default()).unwrap();
        assert!(fc.validate().holds());
        // Three monotone maps; natural transformations follow the pointwise
        // order: const0 ⇒ id ⇒ const1 and composites.
        assert_eq!(fc.object_count(), 3);
        assert_eq!(fc.morphism_count(), 6);
    }

    #[test]
    fn path_components_of_discrete_and_arrow() {
        let d = discrete_cat(["a", "b"]);
        let comps = path_components(&d);
        assert_eq!(comps["a"], "a");
        assert_eq!(comps["b"], "b");
        let two = walking_arrow();
        let comps = path_components(&two);
        assert_eq!(comps["0"], "0");
        assert_eq!(comps["1"], "0");
    }

    #[test]
    fn full_subcat_of_terminal_pair() {
        let two = walking_arrow();
        let keep: BTreeSet<String> = ["1".to_string()].into_iter().collect();
        let sub = full_subcat(&two, &keep);
        assert!(sub.validate().holds());
        assert_eq!(sub.object_count(), 1);
        assert_eq!(terminal_cat().object_count(), 1);
    }
}
