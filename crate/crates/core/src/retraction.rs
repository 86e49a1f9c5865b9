//! Ordinary retractions onto standard parabolic subgroups.
//!
//! The ordinary map for a target set `X` fixes `X`, sends a vertex outside `X`
//! to its odd-labelled neighbour in `X` when it has one, and kills it
//! otherwise. Whether that map extends to a homomorphism is decided relation
//! by relation inside two-generator parabolics.

use std::fmt;

use crate::dihedral::DihedralNF;
use crate::error::{Error, Result};
use crate::finite_type::is_fc_type;
use crate::graph::{Label, LabeledGraph, VertexSet};
use crate::word::{alternating, GeneratorMap, Side, Word};

/// Default vertex cap for [`admits_ordinary_all`].
pub const DEFAULT_SUBSET_CAP: usize = 16;

/// Images of all vertices under the ordinary map onto `x`, or the first
/// vertex with two odd edges into `x`.
fn ordinary_images(g: &LabeledGraph, x: VertexSet) -> std::result::Result<Vec<Option<usize>>, usize> {
    (0..g.len())
        .map(|v| {
            if x.contains(v) {
                return Ok(Some(v));
            }
            let odd = g.odd_neighbors(v).intersection(x);
            match odd.len() {
                0 => Ok(None),
                1 => Ok(odd.first()),
                _ => Err(v),
            }
        })
        .collect()
}

/// The ordinary generator map onto `x`.
pub fn ordinary_map(g: &LabeledGraph, x: VertexSet) -> Result<GeneratorMap> {
    let images = ordinary_images(g, x).map_err(|v| Error::AmbiguousOddTarget(g.name(v).to_owned()))?;
    GeneratorMap::new(x, images)
}

/// A defining relation whose image fails in the target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Violation {
    pub pair: (usize, usize),
    pub label: Label,
    pub images: (Option<usize>, Option<usize>),
}

impl Violation {
    pub fn describe(&self, g: &LabeledGraph) -> String {
        let name = |v: Option<usize>| v.map_or("1", |v| g.name(v)).to_owned();
        format!(
            "relation {}–{} (label {}) maps to {}, {}",
            g.name(self.pair.0),
            g.name(self.pair.1),
            self.label,
            name(self.images.0),
            name(self.images.1)
        )
    }
}

/// Whether the length-`len` alternating products of `x` and `y`, starting
/// with either letter, agree in the Artin group where `x`, `y` span `label`.
pub fn alternating_products_agree(label: Label, len: u32) -> bool {
    let Label::Finite(k) = label else {
        return false;
    };
    let (a, b) = (Word::generator(0), Word::generator(1));
    let lhs = alternating(&a, &b, len as usize, Side::Left);
    let rhs = alternating(&b, &a, len as usize, Side::Left);
    let nf = |w: &Word| DihedralNF::from_word(k, 0, 1, w).expect("two generators");
    nf(&lhs) == nf(&rhs)
}

fn relation_holds(g: &LabeledGraph, len: u32, i: Option<usize>, j: Option<usize>) -> bool {
    match (i, j) {
        (None, None) => true,
        // x^ceil(l/2) = x^floor(l/2)
        (Some(_), None) | (None, Some(_)) => len % 2 == 0,
        (Some(x), Some(y)) if x == y => true,
        (Some(x), Some(y)) => alternating_products_agree(g.label(x, y), len),
    }
}

fn first_violation(g: &LabeledGraph, images: &[Option<usize>]) -> Option<Violation> {
    for u in 0..g.len() {
        for v in g.finite_neighbors(u).iter().filter(|&v| v > u) {
            let label = g.label(u, v);
            let len = label.value().expect("finite neighbour");
            if !relation_holds(g, len, images[u], images[v]) {
                return Some(Violation { pair: (u, v), label, images: (images[u], images[v]) });
            }
        }
    }
    None
}

/// Checks that `map` sends every defining relation to a relation of the
/// target parabolic; returns the first violated one otherwise.
pub fn verify_retraction(g: &LabeledGraph, map: &GeneratorMap) -> std::result::Result<(), Violation> {
    match first_violation(g, map.images()) {
        Some(v) => Err(v),
        None => Ok(()),
    }
}

/// Why a triangle rules out retractions in an FC-type group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TriangleReason {
    /// `(∞, even, odd)`
    InfinityOddEven,
    /// `(∞, odd, odd)`
    InfinityOddOdd,
    Sph233,
    Sph234,
    Sph235,
    /// An all-finite triangle that is not spherical.
    NotFC,
}

impl fmt::Display for TriangleReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Sorts a label triple, infinity last.
pub fn sorted_triple(mut labels: [Label; 3]) -> [Label; 3] {
    labels.sort();
    labels
}

/// Obstruction carried by a triangle, if any. Allowed triangles are
/// `(2, 2, k)`, `(2m, 2n, ∞)` and `(k, ∞, ∞)`.
pub fn triangle_obstruction(labels: [Label; 3]) -> Option<TriangleReason> {
    use Label::{Finite, Infinity};
    match sorted_triple(labels) {
        [_, Infinity, Infinity] => None,
        [p, q, Infinity] => match (p.is_even(), q.is_even()) {
            (true, true) => None,
            (false, false) => Some(TriangleReason::InfinityOddOdd),
            _ => Some(TriangleReason::InfinityOddEven),
        },
        [Finite(2), Finite(2), _] => None,
        [Finite(2), Finite(3), Finite(3)] => Some(TriangleReason::Sph233),
        [Finite(2), Finite(3), Finite(4)] => Some(TriangleReason::Sph234),
        [Finite(2), Finite(3), Finite(5)] => Some(TriangleReason::Sph235),
        _ => Some(TriangleReason::NotFC),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OffendingTriangle {
    pub vertices: [usize; 3],
    pub labels: [Label; 3],
    pub reason: TriangleReason,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub admits: bool,
    pub offending_triangles: Vec<OffendingTriangle>,
}

/// Triangle criterion for ordinary retractions on FC-type graphs.
pub fn admits_retractions_fc(g: &LabeledGraph) -> Result<AdmissibilityReport> {
    if !is_fc_type(g) {
        return Err(Error::NotFcType);
    }
    let offending_triangles: Vec<_> = g
        .triangle_labels()
        .into_iter()
        .filter_map(|(vertices, labels)| {
            triangle_obstruction(labels).map(|reason| OffendingTriangle { vertices, labels, reason })
        })
        .collect();
    Ok(AdmissibilityReport { admits: offending_triangles.is_empty(), offending_triangles })
}

/// First target set whose ordinary map is undefined or not a homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RetractionFailure {
    Ambiguous { target: VertexSet, vertex: usize },
    Relation { target: VertexSet, violation: Violation },
}

impl RetractionFailure {
    pub fn target(&self) -> VertexSet {
        match self {
            RetractionFailure::Ambiguous { target, .. } | RetractionFailure::Relation { target, .. } => *target,
        }
    }

    pub fn describe(&self, g: &LabeledGraph) -> String {
        let target = g.set_names(self.target()).join(",");
        match self {
            RetractionFailure::Ambiguous { vertex, .. } => {
                format!("X = {{{target}}}: {} has two odd edges into X", g.name(*vertex))
            }
            RetractionFailure::Relation { violation, .. } => {
                format!("X = {{{target}}}: {}", violation.describe(g))
            }
        }
    }
}

/// Exhaustive search over all target sets for a failing ordinary map.
pub fn ordinary_failure(g: &LabeledGraph, cap: usize) -> Result<Option<RetractionFailure>> {
    if g.len() > cap {
        return Err(Error::TooLarge(format!("{} vertices exceeds the subset cap of {cap}", g.len())));
    }
    for target in g.vertices().subsets() {
        match ordinary_images(g, target) {
            Err(vertex) => return Ok(Some(RetractionFailure::Ambiguous { target, vertex })),
            Ok(images) => {
                if let Some(violation) = first_violation(g, &images) {
                    return Ok(Some(RetractionFailure::Relation { target, violation }));
                }
            }
        }
    }
    Ok(None)
}

/// Whether every standard parabolic subgroup is the image of its ordinary
/// retraction.
pub fn admits_ordinary_all(g: &LabeledGraph, cap: usize) -> Result<bool> {
    Ok(ordinary_failure(g, cap)?.is_none())
}

/// Which alternative holds for the composite retractions at one generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Trichotomy {
    /// The retraction onto the intersection kills the generator and the two
    /// composites differ.
    One,
    /// The intersection retraction and both composites agree.
    TripleEqual,
    /// Neither alternative; impossible for admissible (odd, odd)-free graphs.
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TrichotomyReport {
    pub s: usize,
    pub case: Trichotomy,
    pub value_intersection: Option<usize>,
    /// `ρ_X(ρ_Y(s))`
    pub value_xy: Option<usize>,
    /// `ρ_Y(ρ_X(s))`
    pub value_yx: Option<usize>,
}

/// Compares `ρ_{X∩Y}(s)`, `ρ_X(ρ_Y(s))` and `ρ_Y(ρ_X(s))`.
///
/// Requires an (odd, odd)-free graph; admissibility is assumed, not checked.
pub fn trichotomy(g: &LabeledGraph, x: VertexSet, y: VertexSet, s: usize) -> Result<TrichotomyReport> {
    if !g.is_odd_odd_free() {
        return Err(Error::NotOddOddFree);
    }
    let rx = ordinary_map(g, x)?;
    let ry = ordinary_map(g, y)?;
    let rxy = ordinary_map(g, x.intersection(y))?;
    Ok(compose_report(s, rxy.image(s), rx.image_of(ry.image(s)), ry.image_of(rx.image(s))))
}

/// Classifies three already computed values.
pub fn compose_report(
    s: usize,
    value_intersection: Option<usize>,
    value_xy: Option<usize>,
    value_yx: Option<usize>,
) -> TrichotomyReport {
    let case = if value_intersection == value_xy && value_xy == value_yx {
        Trichotomy::TripleEqual
    } else if value_intersection.is_none() {
        Trichotomy::One
    } else {
        Trichotomy::Neither
    };
    TrichotomyReport { s, case, value_intersection, value_xy, value_yx }
}

/// The configuration where the composites can differ: `s` lies in exactly
/// one of `X`, `Y` and has an odd edge into the other one's private part.
pub fn is_exceptional(g: &LabeledGraph, x: VertexSet, y: VertexSet, s: usize) -> bool {
    let odd = g.odd_neighbors(s);
    let (only_x, only_y) = (x.difference(y), y.difference(x));
    (only_x.contains(s) && !odd.intersection(only_y).is_empty())
        || (only_y.contains(s) && !odd.intersection(only_x).is_empty())
}
