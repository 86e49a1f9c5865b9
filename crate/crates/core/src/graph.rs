//! Labeled Coxeter graphs.
//!
//! A [`LabeledGraph`] always carries an explicit label for every unordered
//! pair of distinct vertices. The three drawing conventions only matter when
//! a graph is built from a partial edge list: under [`Convention::NoInfinityEdge`]
//! an absent pair is labeled infinity, under [`Convention::NoTwoEdge`] it is
//! labeled 2, and [`Convention::FullEdge`] requires every pair to be given.
//!
//! Vertices are stored in lexicographic order of their names and addressed by
//! index; subsets of vertices are bitmasks ([`VertexSet`]).

use std::fmt;

use crate::error::{Error, Result};

/// Hard limit imposed by the bitmask representation of vertex sets.
pub const MAX_VERTICES: usize = 64;

/// Edge label of a Coxeter graph: an integer `>= 2` or infinity.
///
/// The derived order puts every finite label before `Infinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl Label {
    pub const TWO: Label = Label::Finite(2);

    pub fn finite(n: u64) -> Result<Label> {
        if n < 2 || n > u32::MAX as u64 {
            return Err(Error::BadLabel(n));
        }
        Ok(Label::Finite(n as u32))
    }

    pub fn value(self) -> Option<u32> {
        match self {
            Label::Finite(n) => Some(n),
            Label::Infinity => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Label::Finite(_))
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Label::Finite(n) if n % 2 == 1)
    }

    pub fn is_even(self) -> bool {
        matches!(self, Label::Finite(n) if n % 2 == 0)
    }

    pub fn is_two(self) -> bool {
        self == Label::TWO
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(n) => write!(f, "{n}"),
            Label::Infinity => f.write_str("inf"),
        }
    }
}

/// How absent pairs of a partial edge list are to be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convention {
    /// Absent pairs carry label infinity.
    NoInfinityEdge,
    /// Absent pairs carry label 2.
    NoTwoEdge,
    /// Every pair must be listed.
    FullEdge,
}

impl Convention {
    /// Label given to a pair missing from the edge list, if the convention allows it.
    pub fn absent_label(self) -> Option<Label> {
        match self {
            Convention::NoInfinityEdge => Some(Label::Infinity),
            Convention::NoTwoEdge => Some(Label::TWO),
            Convention::FullEdge => None,
        }
    }
}

/// A set of vertex indices, stored as a 64-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n - 1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest element.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    /// Every subset of `self`, in increasing order of bitmask.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(VertexSet(cur))
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Vertex names must start with a letter or `_` and continue with letters,
/// digits, `_` or `'`.
pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

/// Names used by [`LabeledGraph::from_fn`]: `a`, `b`, ... for up to 26
/// vertices, `v00`, `v01`, ... beyond. Both schemes sort in index order.
pub fn default_name(i: usize, n: usize) -> String {
    if n <= 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("v{i:02}")
    }
}

/// Finite simple graph with a label on every pair of distinct vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    names: Vec<String>,
    labels: Vec<Label>,
    finite_adj: Vec<VertexSet>,
    non_two_adj: Vec<VertexSet>,
    odd_adj: Vec<VertexSet>,
}

impl LabeledGraph {
    /// Builds a graph from vertex names and a (partial) edge list, materializing
    /// absent pairs according to `convention`.
    pub fn from_edges<V, E, S>(vertices: V, edges: E, convention: Convention) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        E: IntoIterator<Item = (S, S, Label)>,
        S: AsRef<str>,
    {
        let mut names: Vec<String> = vertices.into_iter().map(|s| s.as_ref().to_owned()).collect();
        for name in &names {
            if !is_valid_name(name) {
                return Err(Error::BadName(name.clone()));
            }
        }
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0].clone()));
        }
        let n = names.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { got: n, max: MAX_VERTICES });
        }
        let lookup = |s: &str| {
            names
                .binary_search_by(|x| x.as_str().cmp(s))
                .map_err(|_| Error::UnknownVertex(s.to_owned()))
        };
        let mut given: Vec<Option<Label>> = vec![None; n * n];
        for (u, v, label) in edges {
            let (u, v) = (u.as_ref(), v.as_ref());
            let i = lookup(u)?;
            let j = lookup(v)?;
            if i == j {
                return Err(Error::SelfPair(u.to_owned()));
            }
            if let Label::Finite(k) = label {
                if k < 2 {
                    return Err(Error::BadLabel(k as u64));
                }
            }
            if given[i * n + j].is_some() {
                return Err(Error::DuplicateEdge(names[i.min(j)].clone(), names[i.max(j)].clone()));
            }
            given[i * n + j] = Some(label);
            given[j * n + i] = Some(label);
        }
        let default = convention.absent_label();
        let mut labels = vec![Label::TWO; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let label = match (given[i * n + j], default) {
                    (Some(l), _) => l,
                    (None, Some(d)) => d,
                    (None, None) => {
                        return Err(Error::MissingEdge(names[i].clone(), names[j].clone()))
                    }
                };
                labels[i * n + j] = label;
                labels[j * n + i] = label;
            }
        }
        Ok(Self::assemble(names, labels))
    }

    /// Graph on `n` vertices with [`default_name`]s and `label(i, j)` for `i < j`.
    ///
    /// Panics if `n > MAX_VERTICES` or a finite label is below 2.
    pub fn from_fn(n: usize, mut label: impl FnMut(usize, usize) -> Label) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        let names = (0..n).map(|i| default_name(i, n)).collect();
        let mut labels = vec![Label::TWO; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let l = label(i, j);
                assert!(l.value().map_or(true, |k| k >= 2), "label below 2");
                labels[i * n + j] = l;
                labels[j * n + i] = l;
            }
        }
        Self::assemble(names, labels)
    }

    fn assemble(names: Vec<String>, labels: Vec<Label>) -> Self {
        let n = names.len();
        let mut finite_adj = vec![VertexSet::EMPTY; n];
        let mut non_two_adj = vec![VertexSet::EMPTY; n];
        let mut odd_adj = vec![VertexSet::EMPTY; n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let l = labels[i * n + j];
                if l.is_finite() {
                    finite_adj[i].insert(j);
                }
                if !l.is_two() {
                    non_two_adj[i].insert(j);
                }
                if l.is_odd() {
                    odd_adj[i].insert(j);
                }
            }
        }
        LabeledGraph { names, labels, finite_adj, non_two_adj, odd_adj }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.len())
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .binary_search_by(|x| x.as_str().cmp(name))
            .map_err(|_| Error::UnknownVertex(name.to_owned()))
    }

    pub fn set_of<I, S>(&self, names: I) -> Result<VertexSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        names.into_iter().map(|s| self.index_of(s.as_ref())).collect()
    }

    pub fn set_names(&self, set: VertexSet) -> Vec<&str> {
        set.iter().map(|v| self.name(v)).collect()
    }

    /// Label of the pair `{u, v}` by index. Panics if `u == v` or out of range.
    pub fn label(&self, u: usize, v: usize) -> Label {
        assert!(u != v, "no label on a vertex with itself");
        self.labels[u * self.len() + v]
    }

    /// Label of the pair `{u, v}` by name.
    pub fn label_of(&self, u: &str, v: &str) -> Result<Label> {
        let i = self.index_of(u)?;
        let j = self.index_of(v)?;
        if i == j {
            return Err(Error::SelfPair(u.to_owned()));
        }
        Ok(self.label(i, j))
    }

    /// Finite-label neighbourhoods of all vertices.
    pub fn finite_adjacency(&self) -> &[VertexSet] {
        &self.finite_adj
    }

    /// Vertices joined to `v` by a finite label.
    pub fn finite_neighbors(&self, v: usize) -> VertexSet {
        self.finite_adj[v]
    }

    /// Vertices joined to `v` by a label other than 2 (infinity included).
    pub fn non_two_neighbors(&self, v: usize) -> VertexSet {
        self.non_two_adj[v]
    }

    /// Vertices joined to `v` by an odd label.
    pub fn odd_neighbors(&self, v: usize) -> VertexSet {
        self.odd_adj[v]
    }

    /// Subgraph induced by `set`; vertex names are kept.
    pub fn induced(&self, set: VertexSet) -> LabeledGraph {
        let keep: Vec<usize> = set.iter().filter(|&v| v < self.len()).collect();
        let n = keep.len();
        let names = keep.iter().map(|&v| self.names[v].clone()).collect();
        let mut labels = vec![Label::TWO; n * n];
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if i != j {
                    labels[i * n + j] = self.label(u, v);
                }
            }
        }
        Self::assemble(names, labels)
    }

    /// Induced subgraph on named vertices.
    pub fn induced_by_names<I, S>(&self, names: I) -> Result<LabeledGraph>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Ok(self.induced(self.set_of(names)?))
    }

    /// Link and star of `s` in the no-infinity view: the link holds the
    /// vertices with a finite label to `s`, the star adds `s` itself.
    pub fn link_star(&self, s: usize) -> (VertexSet, VertexSet) {
        let link = self.finite_adj[s];
        (link, link.with(s))
    }

    pub fn link(&self, s: usize) -> VertexSet {
        self.finite_adj[s]
    }

    pub fn star(&self, s: usize) -> VertexSet {
        self.finite_adj[s].with(s)
    }

    /// Connected components after erasing all pairs labeled 2. Components are
    /// listed by their smallest vertex.
    pub fn irreducible_components(&self) -> Vec<VertexSet> {
        components(&self.non_two_adj, self.vertices())
    }

    /// Irreducible components of the induced subgraph on `set`.
    pub fn irreducible_components_within(&self, set: VertexSet) -> Vec<VertexSet> {
        components(&self.non_two_adj, set)
    }

    /// Connected components of the graph of odd labels.
    pub fn odd_classes(&self) -> Vec<VertexSet> {
        components(&self.odd_adj, self.vertices())
    }

    /// Components of the finite-label graph restricted to `set`.
    pub fn finite_components_within(&self, set: VertexSet) -> Vec<VertexSet> {
        components(&self.finite_adj, set)
    }

    /// Keeps the pairs labeled 2 and relabels every other pair infinity, so
    /// that the no-infinity view is the graph with only the 2-edges.
    pub fn restrict_le2(&self) -> LabeledGraph {
        let labels = self
            .labels
            .iter()
            .map(|&l| if l.is_two() { l } else { Label::Infinity })
            .collect();
        Self::assemble(self.names.clone(), labels)
    }

    /// Chordality of the no-infinity view (edges are the finite labels).
    pub fn is_chordal(&self) -> bool {
        is_chordal_adjacency(&self.finite_adj)
    }

    /// No vertex meets two odd labels.
    pub fn is_odd_odd_free(&self) -> bool {
        self.odd_adj.iter().all(|s| s.len() <= 1)
    }

    /// Every 3-subset with its labels sorted ascending (infinity last), in
    /// lexicographic order of the vertex triples.
    pub fn triangle_labels(&self) -> Vec<([usize; 3], [Label; 3])> {
        let n = self.len();
        let mut out = Vec::with_capacity(n * n.saturating_sub(1) * n.saturating_sub(2) / 6);
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    out.push(([a, b, c], self.triangle(a, b, c)));
                }
            }
        }
        out
    }

    /// Sorted label triple of `{a, b, c}`.
    pub fn triangle(&self, a: usize, b: usize, c: usize) -> [Label; 3] {
        let mut t = [self.label(a, b), self.label(b, c), self.label(a, c)];
        t.sort();
        t
    }

    /// Same graph with vertex `i` renamed to `names[perm[i]]`'s position, i.e.
    /// `result.label(perm[i], perm[j]) == self.label(i, j)`.
    pub fn permuted(&self, perm: &[usize]) -> LabeledGraph {
        let n = self.len();
        assert_eq!(perm.len(), n);
        let mut labels = vec![Label::TWO; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    labels[perm[i] * n + perm[j]] = self.label(i, j);
                }
            }
        }
        Self::assemble(self.names.clone(), labels)
    }

    /// Edge list in the given convention: pairs carrying the convention's
    /// default label are left out.
    pub fn edges(&self, convention: Convention) -> Vec<(usize, usize, Label)> {
        let skip = convention.absent_label();
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let l = self.label(i, j);
                if Some(l) != skip {
                    out.push((i, j, l));
                }
            }
        }
        out
    }
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = f.debug_struct("LabeledGraph");
        s.field("vertices", &self.names);
        let edges: Vec<String> = self
            .edges(Convention::NoTwoEdge)
            .into_iter()
            .map(|(i, j, l)| format!("{}-{}:{}", self.names[i], self.names[j], l))
            .collect();
        s.field("non_two", &edges);
        s.finish()
    }
}

/// Connected components of `within` under the adjacency masks.
pub(crate) fn components(adj: &[VertexSet], within: VertexSet) -> Vec<VertexSet> {
    let mut left = within;
    let mut out = Vec::new();
    while let Some(start) = left.first() {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(adj[v]);
            }
            next = next.intersection(within).difference(comp);
            comp = comp.union(next);
            frontier = next;
        }
        left = left.difference(comp);
        out.push(comp);
    }
    out
}

/// Lexicographic breadth-first search. Returns the visit order; ties are
/// broken towards the smallest index.
pub fn lex_bfs(adj: &[VertexSet]) -> Vec<usize> {
    let n = adj.len();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited.contains(v))
            .max_by(|&x, &y| labels[x].cmp(&labels[y]).then(y.cmp(&x)))
            .expect("unvisited vertex");
        visited.insert(v);
        order.push(v);
        for w in adj[v].difference(visited) {
            labels[w].push(n - step);
        }
    }
    order
}

/// Chordality via LexBFS: the reverse visit order must be a perfect
/// elimination ordering.
pub fn is_chordal_adjacency(adj: &[VertexSet]) -> bool {
    let order = lex_bfs(adj);
    let n = adj.len();
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut earlier = VertexSet::EMPTY;
    for &v in &order {
        let back = adj[v].intersection(earlier);
        if let Some(parent) = back.iter().max_by_key(|&u| position[u]) {
            if !back.without(parent).is_subset(adj[parent]) {
                return false;
            }
        }
        earlier.insert(v);
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{chorded_square, triangle, worked_example};

    fn f(n: u32) -> Label {
        Label::Finite(n)
    }

    #[test]
    fn labels_are_symmetric_and_materialized() {
        let g = triangle(f(2), f(3), f(3));
        assert_eq!(g.label_of("a", "b").unwrap(), f(2));
        assert_eq!(g.label_of("b", "a").unwrap(), f(2));
        assert_eq!(g.label_of("a", "a"), Err(Error::SelfPair("a".into())));
        assert_eq!(g.label_of("a", "z"), Err(Error::UnknownVertex("z".into())));
        let ex = worked_example();
        assert_eq!(ex.label_of("a", "f").unwrap(), Label::TWO);
        let g = LabeledGraph::from_edges(["x", "y"], Vec::<(&str, &str, Label)>::new(), Convention::NoInfinityEdge).unwrap();
        assert_eq!(g.label(0, 1), Label::Infinity);
    }

    #[test]
    fn construction_errors() {
        let full = LabeledGraph::from_edges(["a", "b"], Vec::<(&str, &str, Label)>::new(), Convention::FullEdge);
        assert!(matches!(full, Err(Error::MissingEdge(..))));
        let dup = LabeledGraph::from_edges(["a", "b"], [("a", "b", f(3)), ("b", "a", f(3))], Convention::NoTwoEdge);
        assert!(matches!(dup, Err(Error::DuplicateEdge(..))));
        let bad = LabeledGraph::from_edges(["a", "b"], [("a", "b", f(1))], Convention::NoTwoEdge);
        assert_eq!(bad, Err(Error::BadLabel(1)));
        assert!(Label::finite(1).is_err());
        let twice = LabeledGraph::from_edges(["a", "a"], Vec::<(&str, &str, Label)>::new(), Convention::NoTwoEdge);
        assert!(matches!(twice, Err(Error::DuplicateVertex(_))));
    }

    #[test]
    fn induced_subgraphs() {
        let ex = worked_example();
        assert_eq!(ex.induced(ex.vertices()), ex);
        assert!(ex.induced(VertexSet::EMPTY).is_empty());
        let ab = ex.induced_by_names(["a", "b"]).unwrap();
        assert_eq!(ab.len(), 2);
        assert_eq!(ab.label(0, 1), f(3));
        let x = ex.set_of(["c", "d", "e", "g"]).unwrap();
        let y = ex.set_of(["d", "g"]).unwrap();
        let nested = ex.induced(x).induced(ex.induced(x).set_of(["d", "g"]).unwrap());
        assert_eq!(nested, ex.induced(y));
    }

    #[test]
    fn link_and_star() {
        let ex = worked_example();
        let e = ex.index_of("e").unwrap();
        let (link, star) = ex.link_star(e);
        assert_eq!(ex.set_names(link), ["a", "b", "c", "f"]);
        assert_eq!(star, link.with(e));

        let free = LabeledGraph::from_fn(3, |_, _| Label::Infinity);
        assert!(free.link(0).is_empty());
        let commuting = LabeledGraph::from_fn(4, |_, _| Label::TWO);
        assert_eq!(commuting.link(2), commuting.vertices().without(2));
    }

    #[test]
    fn components_and_odd_classes() {
        let ex = worked_example();
        let names = |sets: Vec<VertexSet>| -> Vec<Vec<String>> {
            sets.into_iter().map(|s| ex.set_names(s).into_iter().map(String::from).collect()).collect()
        };
        assert_eq!(names(ex.irreducible_components()), [vec!["a", "b"], vec!["c", "d", "e", "f", "g"]]);
        assert_eq!(
            names(ex.odd_classes()),
            [vec!["a", "b"], vec!["c", "d"], vec!["e"], vec!["f"], vec!["g"]]
        );
        assert_eq!(LabeledGraph::from_fn(4, |_, _| Label::TWO).irreducible_components().len(), 4);
        assert_eq!(LabeledGraph::from_fn(2, |_, _| f(3)).irreducible_components().len(), 1);
        assert_eq!(triangle(f(2), f(3), f(3)).odd_classes().len(), 1);
        assert_eq!(LabeledGraph::from_fn(4, |_, _| f(4)).odd_classes().len(), 4);
    }

    #[test]
    fn restriction_to_two_edges() {
        let g = chorded_square(5);
        let r = g.restrict_le2();
        assert_eq!(r.label_of("b", "d").unwrap(), Label::Infinity);
        assert_eq!(r.label_of("a", "b").unwrap(), Label::TWO);
        assert_eq!(r.restrict_le2(), r);
        let all_two = LabeledGraph::from_fn(4, |_, _| Label::TWO);
        assert_eq!(all_two.restrict_le2(), all_two);
        let big = LabeledGraph::from_fn(4, |_, _| f(3)).restrict_le2();
        assert!((0..4).all(|v| big.finite_neighbors(v).is_empty()));
    }

    #[test]
    fn chordality() {
        let square = LabeledGraph::from_fn(4, |i, j| {
            if (j - i) % 2 == 1 {
                Label::TWO
            } else {
                Label::Infinity
            }
        });
        assert!(!square.is_chordal());
        assert!(LabeledGraph::from_fn(6, |_, _| f(3)).is_chordal());
        let g = chorded_square(3);
        assert!(g.is_chordal());
        assert!(!g.restrict_le2().is_chordal());
        assert!(LabeledGraph::from_fn(0, |_, _| Label::TWO).is_chordal());
    }

    #[test]
    fn odd_odd_freeness() {
        assert!(!triangle(f(2), f(3), f(3)).is_odd_odd_free());
        assert!(LabeledGraph::from_fn(5, |_, _| f(4)).is_odd_odd_free());
        // labels 2m, 2m, 2n+1 with m = 2, n = 1
        assert!(triangle(f(4), f(3), f(4)).is_odd_odd_free());
    }

    #[test]
    fn triangles() {
        let t = triangle(f(3), f(2), f(3)).triangle_labels();
        assert_eq!(t, vec![([0, 1, 2], [f(2), f(3), f(3)])]);
        assert_eq!(LabeledGraph::from_fn(4, |_, _| Label::TWO).triangle_labels().len(), 4);
        let ex = worked_example();
        let [e, fv, g] = ["e", "f", "g"].map(|s| ex.index_of(s).unwrap());
        assert_eq!(ex.triangle(e, fv, g), [f(4), Label::Infinity, Label::Infinity]);
    }

    #[test]
    fn subsets_enumeration() {
        let s = VertexSet::from_iter([1, 3, 4]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|x| x.is_subset(s)));
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
    }
}
