//! Spherical-type recognition and the FC-type test.

mod surd;

use std::cmp::Ordering;
use std::fmt;

pub use surd::Surd;

use crate::error::{Error, Result};
use crate::graph::{Label, LabeledGraph, VertexSet};

/// Name of an irreducible Coxeter graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
    /// A single vertex.
    Z,
    NonSpherical,
}

impl CoxeterType {
    pub fn is_spherical(self) -> bool {
        self != CoxeterType::NonSpherical
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::E6 => f.write_str("E6"),
            CoxeterType::E7 => f.write_str("E7"),
            CoxeterType::E8 => f.write_str("E8"),
            CoxeterType::F4 => f.write_str("F4"),
            CoxeterType::H3 => f.write_str("H3"),
            CoxeterType::H4 => f.write_str("H4"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
            CoxeterType::Z => f.write_str("Z"),
            CoxeterType::NonSpherical => f.write_str("non-spherical"),
        }
    }
}

/// Entry of the cosine matrix.
#[derive(Debug, Clone, PartialEq)]
pub enum Cosine {
    Exact(Surd),
    Approx(f64),
}

impl Cosine {
    pub fn to_f64(&self) -> f64 {
        match self {
            Cosine::Exact(s) => s.to_f64(),
            Cosine::Approx(x) => *x,
        }
    }
}

fn exact_cosine(label: Label) -> Option<Surd> {
    Some(match label {
        Label::Infinity => Surd::rational(-1, 1),
        Label::Finite(2) => Surd::zero(),
        Label::Finite(3) => Surd::rational(-1, 2),
        Label::Finite(4) => Surd::sqrt2(-1, 2),
        Label::Finite(6) => Surd::sqrt3(-1, 2),
        Label::Finite(_) => return None,
    })
}

fn approx_cosine(label: Label) -> f64 {
    match label {
        Label::Infinity => -1.0,
        Label::Finite(m) => -(std::f64::consts::PI / m as f64).cos(),
    }
}

/// The matrix `B[s][t] = -cos(π / m_st)`, with 1 on the diagonal.
pub fn cosine_matrix(g: &LabeledGraph) -> Vec<Vec<Cosine>> {
    let n = g.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        return Cosine::Exact(Surd::one());
                    }
                    let l = g.label(i, j);
                    exact_cosine(l).map_or_else(|| Cosine::Approx(approx_cosine(l)), Cosine::Exact)
                })
                .collect()
        })
        .collect()
}

const MINOR_TOLERANCE: f64 = 1e-12;

/// Positive-definiteness of the cosine matrix via leading principal minors.
///
/// Exact when every label lies in {2, 3, 4, 6, ∞}. Otherwise returns `None`
/// if some minor is within `1e-12` of zero.
pub fn spherical_by_gram(g: &LabeledGraph) -> Option<bool> {
    let matrix = cosine_matrix(g);
    let exact: Option<Vec<Vec<Surd>>> = matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| match c {
                    Cosine::Exact(s) => Some(s.clone()),
                    Cosine::Approx(_) => None,
                })
                .collect()
        })
        .collect();
    match exact {
        Some(m) => Some(exact_positive_definite(m)),
        None => approx_positive_definite(matrix.iter().map(|r| r.iter().map(Cosine::to_f64).collect()).collect()),
    }
}

// Pivots of Gaussian elimination without row swaps are ratios of consecutive
// leading minors, so all minors are positive iff all pivots are.
fn exact_positive_definite(mut m: Vec<Vec<Surd>>) -> bool {
    let n = m.len();
    for k in 0..n {
        if m[k][k].sign() != Ordering::Greater {
            return false;
        }
        let inv = m[k][k].inv();
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = &m[i][k] * &inv;
            for j in k..n {
                let d = &factor * &m[k][j];
                m[i][j] = &m[i][j] - &d;
            }
        }
    }
    true
}

fn approx_positive_definite(mut m: Vec<Vec<f64>>) -> Option<bool> {
    let n = m.len();
    let mut minor = 1.0;
    for k in 0..n {
        minor *= m[k][k];
        if minor.abs() < MINOR_TOLERANCE {
            return None;
        }
        if minor < 0.0 {
            return Some(false);
        }
        for i in k + 1..n {
            let factor = m[i][k] / m[k][k];
            for j in k..n {
                m[i][j] -= factor * m[k][j];
            }
        }
    }
    Some(true)
}

/// Spherical by matching every irreducible component against the
/// classification list.
pub fn spherical_by_classification(g: &LabeledGraph) -> bool {
    is_spherical_within(g, g.vertices())
}

/// Whether the Coxeter group of `g` is finite.
///
/// Classification matching is the authority; the Gram test must agree when
/// it is conclusive.
pub fn is_spherical(g: &LabeledGraph) -> bool {
    let by_class = spherical_by_classification(g);
    debug_assert!(
        g.len() > 12 || spherical_by_gram(g).map_or(true, |b| b == by_class),
        "classification and Gram test disagree"
    );
    by_class
}

/// `is_spherical` for the induced subgraph on `set`, without building it.
pub fn is_spherical_within(g: &LabeledGraph, set: VertexSet) -> bool {
    g.irreducible_components_within(set)
        .into_iter()
        .all(|c| classify_component(g, c).is_spherical())
}

/// Name of an irreducible graph.
pub fn classify_irreducible(g: &LabeledGraph) -> Result<CoxeterType> {
    classify_irreducible_within(g, g.vertices())
}

/// `classify_irreducible` for the induced subgraph on `set`.
pub fn classify_irreducible_within(g: &LabeledGraph, set: VertexSet) -> Result<CoxeterType> {
    if g.irreducible_components_within(set).len() != 1 {
        return Err(Error::NotIrreducible);
    }
    Ok(classify_component(g, set))
}

/// Names of the irreducible components, in component order.
pub fn classify(g: &LabeledGraph) -> Vec<(VertexSet, CoxeterType)> {
    g.irreducible_components_within(g.vertices())
        .into_iter()
        .map(|c| (c, classify_component(g, c)))
        .collect()
}

fn classify_component(g: &LabeledGraph, set: VertexSet) -> CoxeterType {
    let n = set.len();
    if n == 1 {
        return CoxeterType::Z;
    }
    let verts: Vec<usize> = set.iter().collect();
    let mut edges = Vec::new();
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            match g.label(u, v) {
                Label::Infinity => return CoxeterType::NonSpherical,
                Label::Finite(2) => {}
                Label::Finite(m) => edges.push((u, v, m)),
            }
        }
    }
    if n == 2 {
        return match edges[0].2 {
            3 => CoxeterType::A(2),
            4 => CoxeterType::B(2),
            m => CoxeterType::I2(m),
        };
    }
    if edges.len() != n - 1 {
        // connected with a cycle
        return CoxeterType::NonSpherical;
    }
    let heavy: Vec<_> = edges.iter().filter(|e| e.2 > 3).collect();
    if heavy.len() > 1 || heavy.iter().any(|e| e.2 > 5) {
        return CoxeterType::NonSpherical;
    }
    let degree = |v: usize| edges.iter().filter(|e| e.0 == v || e.1 == v).count();
    let branch: Vec<usize> = verts.iter().copied().filter(|&v| degree(v) > 2).collect();

    if let Some(&&(u, v, m)) = heavy.first() {
        if !branch.is_empty() {
            return CoxeterType::NonSpherical;
        }
        let at_end = degree(u) == 1 || degree(v) == 1;
        return match (m, at_end, n) {
            (4, true, _) => CoxeterType::B(n),
            (4, false, 4) => CoxeterType::F4,
            (5, true, 3) => CoxeterType::H3,
            (5, true, 4) => CoxeterType::H4,
            _ => CoxeterType::NonSpherical,
        };
    }
    match branch.as_slice() {
        [] => CoxeterType::A(n),
        [center] if degree(*center) == 3 => {
            let mut arms: Vec<usize> = edges
                .iter()
                .filter_map(|e| {
                    if e.0 == *center {
                        Some(e.1)
                    } else if e.1 == *center {
                        Some(e.0)
                    } else {
                        None
                    }
                })
                .map(|start| arm_length(&edges, *center, start))
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => CoxeterType::D(n),
                [1, 2, 2] => CoxeterType::E6,
                [1, 2, 3] => CoxeterType::E7,
                [1, 2, 4] => CoxeterType::E8,
                _ => CoxeterType::NonSpherical,
            }
        }
        _ => CoxeterType::NonSpherical,
    }
}

/// Vertices on the path leaving `from` through `start`.
fn arm_length(edges: &[(usize, usize, u32)], from: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        let next = edges.iter().find_map(|e| {
            if e.0 == cur && e.1 != prev {
                Some(e.1)
            } else if e.1 == cur && e.0 != prev {
                Some(e.0)
            } else {
                None
            }
        });
        match next {
            Some(nx) => {
                prev = cur;
                cur = nx;
                len += 1;
            }
            None => return len,
        }
    }
}

/// Maximal cliques of the graph of finite-label pairs restricted to `within`.
pub fn maximal_finite_cliques(g: &LabeledGraph, within: VertexSet) -> Vec<VertexSet> {
    let adj: Vec<VertexSet> = (0..g.len()).map(|v| g.finite_neighbors(v).intersection(within)).collect();
    let mut out = Vec::new();
    bron_kerbosch(&adj, VertexSet::EMPTY, within, VertexSet::EMPTY, &mut out);
    out.sort();
    out
}

fn bron_kerbosch(adj: &[VertexSet], r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p.union(x).iter().max_by_key(|&u| adj[u].intersection(p).len()).expect("p non-empty");
    for v in p.difference(adj[pivot]).iter() {
        bron_kerbosch(adj, r.with(v), p.intersection(adj[v]), x.intersection(adj[v]), out);
        p = p.without(v);
        x = x.with(v);
    }
}

/// Every subgraph without infinity labels is spherical.
pub fn is_fc_type(g: &LabeledGraph) -> bool {
    is_fc_type_within(g, g.vertices())
}

/// `is_fc_type` for the induced subgraph on `set`.
pub fn is_fc_type_within(g: &LabeledGraph, set: VertexSet) -> bool {
    maximal_finite_cliques(g, set).into_iter().all(|c| is_spherical_within(g, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{dihedral, even_even_odd, chorded_square, triangle, worked_example};
    use crate::graph::Convention;

    fn f(n: u32) -> Label {
        Label::Finite(n)
    }

    fn path(labels: &[u32]) -> LabeledGraph {
        let n = labels.len() + 1;
        LabeledGraph::from_fn(n, |i, j| if j == i + 1 { f(labels[i]) } else { Label::TWO })
    }

    #[test]
    fn small_cosine_matrices() {
        let single = LabeledGraph::from_fn(1, |_, _| unreachable!());
        assert_eq!(cosine_matrix(&single), vec![vec![Cosine::Exact(Surd::one())]]);
        let m = cosine_matrix(&dihedral(f(2)));
        assert_eq!(m[0][1], Cosine::Exact(Surd::zero()));
        let m = cosine_matrix(&dihedral(f(3)));
        assert_eq!(m[0][1], Cosine::Exact(Surd::rational(-1, 2)));
        assert_eq!(m[1][0], Cosine::Exact(Surd::rational(-1, 2)));
        assert_eq!(m[1][1], Cosine::Exact(Surd::one()));
        let m = cosine_matrix(&dihedral(f(5)));
        assert!((m[0][1].to_f64() + (std::f64::consts::PI / 5.0).cos()).abs() < 1e-15);
    }

    #[test]
    fn spherical_triangles() {
        assert!(is_spherical(&triangle(f(2), f(3), f(3))));
        assert!(!is_spherical(&triangle(f(3), f(3), f(3))));
        assert!(!is_spherical(&triangle(f(2), f(3), f(6))));
        assert!(is_spherical(&triangle(f(2), f(3), f(4))));
        assert!(is_spherical(&triangle(f(2), f(3), f(5))));
        assert!(is_spherical(&triangle(f(2), f(2), f(9))));
        assert!(!is_spherical(&triangle(f(2), f(4), f(4))));
    }

    #[test]
    fn affine_graphs_are_singular() {
        // Ã2 and B̃2-style triangles have a zero determinant
        assert_eq!(spherical_by_gram(&triangle(f(3), f(3), f(3))), Some(false));
        assert_eq!(spherical_by_gram(&triangle(f(2), f(4), f(4))), Some(false));
        assert_eq!(spherical_by_gram(&triangle(f(2), f(3), f(6))), Some(false));
        assert!(!spherical_by_classification(&triangle(f(2), f(3), f(6))));
    }

    #[test]
    fn classification_names() {
        assert_eq!(classify_irreducible(&path(&[3, 3])).unwrap(), CoxeterType::A(3));
        assert_eq!(classify_irreducible(&dihedral(f(7))).unwrap(), CoxeterType::I2(7));
        assert_eq!(classify_irreducible(&dihedral(f(3))).unwrap(), CoxeterType::A(2));
        assert_eq!(classify_irreducible(&dihedral(f(4))).unwrap(), CoxeterType::B(2));
        let single = LabeledGraph::from_fn(1, |_, _| unreachable!());
        assert_eq!(classify_irreducible(&single).unwrap(), CoxeterType::Z);
        assert_eq!(classify_irreducible(&path(&[4, 3, 3])).unwrap(), CoxeterType::B(4));
        assert_eq!(classify_irreducible(&path(&[3, 4, 3])).unwrap(), CoxeterType::F4);
        assert_eq!(classify_irreducible(&path(&[3, 4, 3, 3])).unwrap(), CoxeterType::NonSpherical);
        assert_eq!(classify_irreducible(&path(&[5, 3])).unwrap(), CoxeterType::H3);
        assert_eq!(classify_irreducible(&path(&[3, 3, 5])).unwrap(), CoxeterType::H4);
        assert_eq!(classify_irreducible(&path(&[3, 5, 3])).unwrap(), CoxeterType::NonSpherical);
        assert_eq!(classify_irreducible(&path(&[5, 3, 3, 3])).unwrap(), CoxeterType::NonSpherical);
        assert_eq!(classify_irreducible(&path(&[6, 3])).unwrap(), CoxeterType::NonSpherical);
        assert!(matches!(classify_irreducible(&triangle(f(2), f(2), f(3))), Err(Error::NotIrreducible)));
    }

    fn star(arms: &[usize]) -> LabeledGraph {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in arms {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        LabeledGraph::from_fn(next, |i, j| {
            if edges.contains(&(i, j)) || edges.contains(&(j, i)) {
                f(3)
            } else {
                Label::TWO
            }
        })
    }

    #[test]
    fn simply_laced_branches() {
        assert_eq!(classify_irreducible(&star(&[1, 1, 1])).unwrap(), CoxeterType::D(4));
        assert_eq!(classify_irreducible(&star(&[1, 1, 5])).unwrap(), CoxeterType::D(8));
        assert_eq!(classify_irreducible(&star(&[2, 1, 2])).unwrap(), CoxeterType::E6);
        assert_eq!(classify_irreducible(&star(&[3, 2, 1])).unwrap(), CoxeterType::E7);
        assert_eq!(classify_irreducible(&star(&[4, 1, 2])).unwrap(), CoxeterType::E8);
        assert_eq!(classify_irreducible(&star(&[2, 2, 2])).unwrap(), CoxeterType::NonSpherical);
        assert_eq!(classify_irreducible(&star(&[1, 2, 5])).unwrap(), CoxeterType::NonSpherical);
        assert_eq!(classify_irreducible(&star(&[1, 1, 1, 1])).unwrap(), CoxeterType::NonSpherical);
        for arms in [[1, 1, 1], [2, 1, 2], [3, 2, 1], [4, 1, 2]] {
            assert_eq!(spherical_by_gram(&star(&arms)), Some(true));
        }
        assert_eq!(spherical_by_gram(&star(&[2, 2, 2])), Some(false));
    }

    #[test]
    fn fc_type_examples() {
        assert!(is_fc_type(&worked_example()));
        assert!(!is_fc_type(&even_even_odd(2, 1)));
        assert!(is_fc_type(&even_even_odd(1, 1)));
        assert!(is_fc_type(&chorded_square(3)));
        assert!(is_fc_type(&triangle(f(2), f(2), f(9))));
        let free = LabeledGraph::from_edges(["a", "b", "c"], [], Convention::NoInfinityEdge).unwrap();
        assert!(is_fc_type(&free));
    }

    #[test]
    fn cliques_of_worked_example() {
        let g = worked_example();
        let cliques = maximal_finite_cliques(&g, g.vertices());
        let names: Vec<Vec<&str>> = cliques.iter().map(|c| g.set_names(*c)).collect();
        // e,f,g pairwise infinity except e-f
        assert!(names.contains(&vec!["a", "b", "c", "d", "f"]));
        assert!(names.contains(&vec!["a", "b", "c", "e", "f"]));
        assert!(names.contains(&vec!["a", "b", "c", "d", "g"]));
        assert_eq!(cliques.len(), 3);
    }
}
