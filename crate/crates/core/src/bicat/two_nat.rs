use super::{NormalPseudofunctor, OneCell, TwoCell};
use crate::error::Error;
use crate::verdict::Verdict;
use std::collections::BTreeMap;

/// A 2-natural transformation between strict 2-functors of strict
/// 2-categories: a family of 1-cells, strictly natural against both 1-cells
/// and 2-cells of the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoNatTrans {
    pub source: NormalPseudofunctor,
    pub target: NormalPseudofunctor,
    pub components: BTreeMap<String, OneCell>,
}

impl TwoNatTrans {
    pub fn identity(f: &NormalPseudofunctor) -> Self {
        TwoNatTrans {
            source: f.clone(),
            target: f.clone(),
            components: f
                .source
                .objects()
                .map(|x| (x.to_string(), f.target.identity1(f.ob(x))))
                .collect(),
        }
    }

    pub fn at(&self, x: &str) -> &OneCell {
        &self.components[x]
    }

    pub fn validate(&self) -> Result<Verdict, Error> {
        if !self.source.is_parallel_to(&self.target) {
            return Err(Error::shape("2-natural transformation requires parallel 2-functors"));
        }
        for f in [&self.source, &self.target] {
            if !f.is_strict() {
                return Err(Error::shape(
                    "2-natural transformations live between strict 2-functors",
                ));
            }
        }
        if !self.source.source.is_strict().holds() || !self.source.target.is_strict().holds() {
            return Err(Error::shape(
                "2-natural transformations live between strict 2-categories",
            ));
        }
        let b = &self.source.target;
        for x in self.source.source.objects() {
            let Some(c) = self.components.get(x) else {
                return Ok(Verdict::fail("component present per object", x.to_string()));
            };
            if c.src != self.source.ob(x) || c.tgt != self.target.ob(x)
                || !b.hom(&c.src, &c.tgt).has_object(&c.name)
            {
                return Ok(Verdict::fail("component shape Fx → Gx", x.to_string()));
            }
        }
        // Strict 1-naturality.
        for f in self.source.source.all_one_cells() {
            let lhs = b.compose1(self.at(&f.tgt), &self.source.one(&f));
            let rhs = b.compose1(&self.target.one(&f), self.at(&f.src));
            if lhs != rhs {
                return Ok(Verdict::fail("1-naturality", f.name.clone()));
            }
        }
        // 2-naturality: whiskered images of every 2-cell agree.
        for (x, y, hom) in self.source.source.homs() {
            for (m, _) in hom.morphisms() {
                let alpha = TwoCell::new(x, y, m);
                let lhs = b.whisker_left(self.at(y), &self.source.two(&alpha));
                let rhs = b.whisker_right(&self.target.two(&alpha), self.at(x));
                if lhs != rhs {
                    return Ok(Verdict::fail("2-naturality", m.to_string()));
                }
            }
        }
        Ok(Verdict::Pass)
    }

    /// Vertical composition `self · inner`: components compose as 1-cells.
    pub fn vcompose(&self, inner: &TwoNatTrans) -> Result<TwoNatTrans, Error> {
        if inner.target != self.source {
            return Err(Error::shape("vertical composition endpoints do not match"));
        }
        let b = &self.source.target;
        Ok(TwoNatTrans {
            source: inner.source.clone(),
            target: self.target.clone(),
            components: inner
                .components
                .iter()
                .map(|(x, c)| (x.clone(), b.compose1(self.at(x), c)))
                .collect(),
        })
    }

    /// Whisker with a 2-functor out of the target: `k · self` has components
    /// `k(self_x)`.
    pub fn whisker_left(k: &NormalPseudofunctor, nt: &TwoNatTrans) -> Result<TwoNatTrans, Error> {
        if nt.source.target != k.source {
            return Err(Error::shape("left whiskering endpoints do not match"));
        }
        Ok(TwoNatTrans {
            source: k.compose_after(&nt.source)?,
            target: k.compose_after(&nt.target)?,
            components: nt
                .components
                .iter()
                .map(|(x, c)| (x.clone(), k.one(c)))
                .collect(),
        })
    }

    /// Whisker with a 2-functor into the source: `self · c` has components
    /// `self_{c(x)}`.
    pub fn whisker_right(nt: &TwoNatTrans, c: &NormalPseudofunctor) -> Result<TwoNatTrans, Error> {
        if c.target != nt.source.source {
            return Err(Error::shape("right whiskering endpoints do not match"));
        }
        Ok(TwoNatTrans {
            source: nt.source.compose_after(c)?,
            target: nt.target.compose_after(c)?,
            components: c
                .source
                .objects()
                .map(|x| (x.to_string(), nt.at(c.ob(x)).clone()))
                .collect(),
        })
    }

    /// Invertible as a 2-cell: every component is a strictly invertible
    /// 1-cell.
    pub fn is_invertible(&self) -> bool {
        let b = &self.source.target;
        self.components.values().all(|c| {
            b.one_cells(&c.tgt, &c.src).iter().any(|d| {
                b.compose1(d, c) == b.identity1(&c.src) && b.compose1(c, d) == b.identity1(&c.tgt)
            })
        })
    }
}

/// A modification between parallel 2-natural transformations: a family of
/// 2-cells commuting with whiskering along every 1-cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modification {
    pub source: TwoNatTrans,
    pub target: TwoNatTrans,
    pub components: BTreeMap<String, TwoCell>,
}

impl Modification {
    pub fn identity(nt: &TwoNatTrans) -> Self {
        let b = &nt.source.target;
        Modification {
            source: nt.clone(),
            target: nt.clone(),
            components: nt
                .components
                .iter()
                .map(|(x, c)| (x.clone(), b.id2(c)))
                .collect(),
        }
    }

    pub fn at(&self, x: &str) -> &TwoCell {
        &self.components[x]
    }

    pub fn validate(&self) -> Result<Verdict, Error> {
        if self.source.source != self.target.source || self.source.target != self.target.target {
            return Err(Error::shape("modification requires parallel 2-natural transformations"));
        }
        let b = &self.source.source.target;
        for x in self.source.source.source.objects() {
            let Some(c) = self.components.get(x) else {
                return Ok(Verdict::fail("component present per object", x.to_string()));
            };
            let src = self.source.at(x);
            let tgt = self.target.at(x);
            if c.src != src.src || c.tgt != src.tgt {
                return Ok(Verdict::fail("component hom placement", x.to_string()));
            }
            let hom = b.hom(&c.src, &c.tgt);
            if !hom.has_morphism(&c.name)
                || hom.src(&c.name) != src.name
                || hom.tgt(&c.name) != tgt.name
            {
                return Ok(Verdict::fail("component shape η_x ⇒ η'_x", x.to_string()));
            }
        }
        // Modification axiom along every 1-cell.
        let f2 = &self.source.target;
        let f1 = &self.source.source;
        for f in f1.source.all_one_cells() {
            let lhs = b.whisker_left(&f2.one(&f), self.at(&f.src));
            let rhs = b.whisker_right(self.at(&f.tgt), &f1.one(&f));
            if lhs != rhs {
                return Ok(Verdict::fail("modification axiom", f.name.clone()));
            }
        }
        Ok(Verdict::Pass)
    }

    /// Vertical composition inside hom 2-cells.
    pub fn vcompose(&self, inner: &Modification) -> Result<Modification, Error> {
        if inner.target != self.source {
            return Err(Error::shape("modification composition endpoints do not match"));
        }
        let b = &self.source.source.target;
        Ok(Modification {
            source: inner.source.clone(),
            target: self.target.clone(),
            components: inner
                .components
                .iter()
                .map(|(x, c)| (x.clone(), b.vcomp2(self.at(x), c)))
                .collect(),
        })
    }
}
