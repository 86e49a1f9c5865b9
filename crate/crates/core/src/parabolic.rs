//! Parabolic subgroups `f·A_X·f⁻¹`: the O/C-set calculus for intersections,
//! retractions extended to conjugates, ribbons and amalgam splittings.
//!
//! Conjugation acts on the left throughout: the pair `(f, X)` stands for
//! `f·A_X·f⁻¹`, and a ribbon `r` from `X` to `Y` satisfies `r·A_X·r⁻¹ = A_Y`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Label, LabeledGraph, VertexSet};
use crate::retraction::{ordinary_failure, ordinary_map, verify_retraction, DEFAULT_SUBSET_CAP};
use crate::word::{alternating, GeneratorMap, Side, Word};

/// Presentation `conjugator·A_base·conjugator⁻¹` of a parabolic subgroup.
/// An empty base is the trivial subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParabolicDescriptor {
    pub conjugator: Word,
    pub base: VertexSet,
}

impl ParabolicDescriptor {
    pub fn new(g: &LabeledGraph, conjugator: Word, base: VertexSet) -> Result<Self> {
        check_subset(g, base)?;
        if let Some(l) = conjugator.letters().iter().find(|l| l.generator >= g.len()) {
            return Err(Error::UnknownGenerator(l.generator.to_string()));
        }
        Ok(ParabolicDescriptor { conjugator, base })
    }

    pub fn standard(base: VertexSet) -> Self {
        ParabolicDescriptor { conjugator: Word::identity(), base }
    }
}

fn check_subset(g: &LabeledGraph, set: VertexSet) -> Result<()> {
    match set.difference(g.vertices()).first() {
        Some(v) => Err(Error::UnknownVertex(format!("#{v}"))),
        None => Ok(()),
    }
}

/// `O_{X,Y}`, `C_{X,Y}`, `O_{Y,X}`, `C_{Y,X}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OcSets {
    pub o_xy: VertexSet,
    pub c_xy: VertexSet,
    pub o_yx: VertexSet,
    pub c_yx: VertexSet,
}

fn odd_connected(g: &LabeledGraph, from: VertexSet, to: VertexSet) -> VertexSet {
    from.iter().filter(|&v| !g.odd_neighbors(v).intersection(to).is_empty()).collect()
}

/// `O_{X,Y}` holds the vertices of `X∖Y` with an odd edge into `Y∖X`, and
/// `C_{X,Y} = (X∩Y) ∪ O_{X,Y}`.
pub fn oc_sets(g: &LabeledGraph, x: VertexSet, y: VertexSet) -> Result<OcSets> {
    check_subset(g, x)?;
    check_subset(g, y)?;
    let (only_x, only_y, both) = (x.difference(y), y.difference(x), x.intersection(y));
    let o_xy = odd_connected(g, only_x, only_y);
    let o_yx = odd_connected(g, only_y, only_x);
    Ok(OcSets { o_xy, c_xy: both.union(o_xy), o_yx, c_yx: both.union(o_yx) })
}

/// `f·A_X·f⁻¹ ∩ g·A_Y·g⁻¹` rewritten as an intersection of conjugates of
/// `A_{C_{X,Y}}` and `A_{C_{Y,X}}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionRewrite {
    pub left: ParabolicDescriptor,
    pub right: ParabolicDescriptor,
    /// Element of `A_X` absorbed into the left conjugator.
    pub x: Word,
    /// Element of `A_Y` absorbed into the right conjugator.
    pub y: Word,
}

fn require_admissible(g: &LabeledGraph) -> Result<()> {
    if let Some(failure) = ordinary_failure(g, DEFAULT_SUBSET_CAP)? {
        return Err(Error::NotAdmissible(failure.describe(g)));
    }
    Ok(())
}

fn valid_retraction(g: &LabeledGraph, x: VertexSet) -> Result<GeneratorMap> {
    let map = ordinary_map(g, x).map_err(|e| Error::NotAdmissible(e.to_string()))?;
    verify_retraction(g, &map).map_err(|v| Error::NotAdmissible(v.describe(g)))?;
    Ok(map)
}

/// Symbolic rewriting of `f·A_X·f⁻¹ ∩ gw·A_Y·gw⁻¹` through the ordinary
/// retractions: `h = f⁻¹·gw`, `x = ρ_X(h)`, `k = h⁻¹·x`, `y = ρ_Y(k)`.
pub fn intersect_rewrite(
    g: &LabeledGraph,
    f: &Word,
    gw: &Word,
    x: VertexSet,
    y: VertexSet,
) -> Result<IntersectionRewrite> {
    if !g.is_odd_odd_free() {
        return Err(Error::NotOddOddFree);
    }
    require_admissible(g)?;
    let oc = oc_sets(g, x, y)?;
    let rho_x = ordinary_map(g, x)?;
    let rho_y = ordinary_map(g, y)?;
    let h = f.inverse().mul(gw);
    let xw = rho_x.apply(&h)?;
    let k = h.inverse().mul(&xw);
    let yw = rho_y.apply(&k)?;
    Ok(IntersectionRewrite {
        left: ParabolicDescriptor { conjugator: f.mul(&xw), base: oc.c_xy },
        right: ParabolicDescriptor { conjugator: gw.mul(&yw), base: oc.c_yx },
        x: xw,
        y: yw,
    })
}

/// `f·ρ_X(f⁻¹·w·f)·f⁻¹` for the parabolic `(f, X)`.
pub fn extended_retraction(g: &LabeledGraph, p: &ParabolicDescriptor, w: &Word) -> Result<Word> {
    let rho = valid_retraction(g, p.base)?;
    let f = &p.conjugator;
    let inner = f.inverse().concat(w).concat(f);
    Ok(f.concat(&rho.apply(&inner)?).concat(&f.inverse()).reduce_free())
}

/// Vertices outside `X` commuting with all of `X`.
pub fn x_perp(g: &LabeledGraph, x: VertexSet) -> VertexSet {
    g.vertices()
        .difference(x)
        .iter()
        .filter(|&v| x.iter().all(|u| g.label(u, v).is_two()))
        .collect()
}

/// The alternating word `y x y ...` of length `m_{x,y} - 1`.
pub fn elementary_ribbon(g: &LabeledGraph, x: usize, y: usize) -> Result<Word> {
    match g.label(x, y) {
        Label::Infinity => Err(Error::InfiniteLabel(g.name(x).to_owned(), g.name(y).to_owned())),
        l @ Label::Finite(2) => Err(Error::LabelTooSmall(l)),
        Label::Finite(m) => {
            Ok(alternating(&Word::generator(y), &Word::generator(x), m as usize - 1, Side::Left))
        }
    }
}

/// A conjugator together with the standard parabolic it carries `X` to.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Conjugator {
    pub word: Word,
    pub target: VertexSet,
}

/// Single ribbon steps out of `set`: each `x` forming a cyclic irreducible
/// component of `set`, and `y` outside with `2 < m_{x,y} < ∞` commuting with
/// the rest of `set`.
pub fn elementary_steps(g: &LabeledGraph, set: VertexSet) -> Vec<Conjugator> {
    let mut out = Vec::new();
    for x in set.iter() {
        let rest = set.without(x);
        if !rest.iter().all(|z| g.label(x, z).is_two()) {
            continue;
        }
        for y in g.vertices().difference(set).iter() {
            let Label::Finite(m) = g.label(x, y) else { continue };
            if m == 2 || !rest.iter().all(|z| g.label(y, z).is_two()) {
                continue;
            }
            let (gx, gy) = (Word::generator(x), Word::generator(y));
            let len = m as usize - 1;
            let (words, target) = if m % 2 == 1 {
                (
                    [alternating(&gx, &gy, len, Side::Left), alternating(&gy, &gx, len, Side::Left).inverse()],
                    rest.with(y),
                )
            } else {
                let r = alternating(&gy, &gx, len, Side::Left);
                let inv = r.inverse();
                ([r, inv], set)
            };
            out.extend(words.into_iter().map(|word| Conjugator { word, target }));
        }
    }
    out
}

/// Ribbon chains of length at most `depth` starting from `x`, each with the
/// set it conjugates `x` onto. The chain `r_1, ..., r_n` yields the word
/// `r_n ⋯ r_1`. Chains reaching an already seen (reduced word, target) pair
/// are dropped. Sorted, starting with `(1, X)`.
pub fn conj_generators(g: &LabeledGraph, x: VertexSet, depth: usize) -> Vec<Conjugator> {
    let start = Conjugator { word: Word::identity(), target: x };
    let mut seen: BTreeSet<Conjugator> = BTreeSet::from([start.clone()]);
    let mut frontier = vec![start];
    for _ in 0..depth {
        let mut next = Vec::new();
        for c in &frontier {
            for step in elementary_steps(g, c.target) {
                let cand = Conjugator { word: step.word.mul(&c.word), target: step.target };
                if seen.insert(cand.clone()) {
                    next.push(cand);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by(|a, b| (a.word.len(), &a.word, a.target).cmp(&(b.word.len(), &b.word, b.target)));
    out
}

/// Every vertex outside `C_{X,Y} ∪ C_{Y,X}` has star equal to the whole
/// vertex set.
pub fn property_c_precondition(g: &LabeledGraph, x: VertexSet, y: VertexSet) -> Result<bool> {
    let oc = oc_sets(g, x, y)?;
    let d = oc.c_xy.union(oc.c_yx);
    Ok(g.vertices().difference(d).iter().all(|v| g.star(v) == g.vertices()))
}

/// `A_S = A_{star} *_{A_{link}} A_{rest}` for one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AmalgamSplit {
    pub star: VertexSet,
    pub link: VertexSet,
    pub rest: VertexSet,
}

pub fn amalgam_split(g: &LabeledGraph, s: usize) -> Result<AmalgamSplit> {
    if s >= g.len() {
        return Err(Error::UnknownVertex(format!("#{s}")));
    }
    let (link, star) = g.link_star(s);
    Ok(AmalgamSplit { star, link, rest: g.vertices().without(s) })
}
