//! Graph enumeration and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use artin_core::{Label, LabeledGraph, VertexSet};
use rand::Rng;

pub const INF: Label = Label::Infinity;

pub fn f(n: u32) -> Label {
    Label::Finite(n)
}

pub fn labels(values: &[u32], infinity: bool) -> Vec<Label> {
    let mut out: Vec<Label> = values.iter().map(|&v| f(v)).collect();
    if infinity {
        out.push(INF);
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Graph stored as label indices over the pairs `(i, j)`, `i < j`, in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Code {
    pub n: usize,
    pub cells: Vec<u8>,
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

impl Code {
    pub fn from_index(n: usize, alphabet: usize, mut index: u64) -> Code {
        let cells = (0..n * (n - 1) / 2)
            .map(|_| {
                let c = (index % alphabet as u64) as u8;
                index /= alphabet as u64;
                c
            })
            .collect();
        Code { n, cells }
    }

    pub fn cell(&self, i: usize, j: usize) -> u8 {
        self.cells[pair_index(self.n, i, j)]
    }

    pub fn graph(&self, alphabet: &[Label]) -> LabeledGraph {
        LabeledGraph::from_fn(self.n, |i, j| alphabet[self.cell(i, j) as usize])
    }

    fn permuted(&self, perm: &[usize]) -> Code {
        let mut cells = vec![0; self.cells.len()];
        for i in 0..self.n {
            for j in i + 1..self.n {
                cells[pair_index(self.n, perm[i], perm[j])] = self.cell(i, j);
            }
        }
        Code { n: self.n, cells }
    }

    /// Whether no relabeling gives a lexicographically smaller code.
    pub fn is_canonical(&self, perms: &[Vec<usize>]) -> bool {
        perms.iter().all(|p| {
            for i in 0..self.n {
                for j in i + 1..self.n {
                    // ranges over all relabelings since inverses are included
                    let c = self.cell(p[i], p[j]);
                    let own = self.cell(i, j);
                    if c != own {
                        return c > own;
                    }
                }
            }
            true
        })
    }

    pub fn canonical(&self, perms: &[Vec<usize>]) -> Code {
        perms.iter().map(|p| self.permuted(p)).min().expect("at least one permutation")
    }

    /// Adds a vertex `n` joined to vertex `i` by `extension[i]`.
    pub fn extended(&self, extension: &[u8]) -> Code {
        let n = self.n + 1;
        let mut cells = vec![0; n * (n - 1) / 2];
        for i in 0..n {
            for j in i + 1..n {
                cells[pair_index(n, i, j)] = if j == self.n { extension[i] } else { self.cell(i, j) };
            }
        }
        Code { n, cells }
    }
}

/// One representative per isomorphism class of complete graphs on `n`
/// vertices labeled from `alphabet` that satisfy `keep`.
pub fn iso_classes(n: usize, alphabet: &[Label], mut keep: impl FnMut(&LabeledGraph) -> bool) -> Vec<LabeledGraph> {
    let perms = permutations(n);
    let total = (alphabet.len() as u64).pow((n * n.saturating_sub(1) / 2) as u32);
    let mut out = Vec::new();
    for index in 0..total {
        let code = Code::from_index(n, alphabet.len(), index);
        if !code.is_canonical(&perms) {
            continue;
        }
        let g = code.graph(alphabet);
        if keep(&g) {
            out.push(g);
        }
    }
    out
}

/// Representatives for all graphs with at most `max_n` vertices satisfying
/// `keep`.
pub fn iso_classes_upto(max_n: usize, alphabet: &[Label], mut keep: impl FnMut(&LabeledGraph) -> bool) -> Vec<LabeledGraph> {
    (1..=max_n).flat_map(|n| iso_classes(n, alphabet, &mut keep)).collect()
}

/// Every way of adding one vertex to `parent`.
pub fn extensions(parent: &Code, alphabet: usize) -> impl Iterator<Item = Code> + '_ {
    let count = (alphabet as u64).pow(parent.n as u32);
    (0..count).map(move |mut index| {
        let ext: Vec<u8> = (0..parent.n)
            .map(|_| {
                let c = (index % alphabet as u64) as u8;
                index /= alphabet as u64;
                c
            })
            .collect();
        parent.extended(&ext)
    })
}

/// Dedupes codes up to isomorphism.
pub fn dedupe(codes: impl IntoIterator<Item = Code>, perms: &[Vec<usize>]) -> Vec<Code> {
    let mut seen = HashSet::new();
    codes.into_iter().map(|c| c.canonical(perms)).filter(|c| seen.insert(c.clone())).collect()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, alphabet: &[Label]) -> LabeledGraph {
    LabeledGraph::from_fn(n, |_, _| alphabet[rng.gen_range(0..alphabet.len())])
}

/// Simple graph given as adjacency sets, with edges present independently.
pub fn random_adjacency(rng: &mut impl Rng, n: usize, density: f64) -> Vec<VertexSet> {
    let mut adj = vec![VertexSet::EMPTY; n];
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    adj
}

pub fn all_adjacencies(n: usize) -> impl Iterator<Item = Vec<VertexSet>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0..1u64 << pairs.len()).map(move |mask| {
        let mut adj = vec![VertexSet::EMPTY; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
        adj
    })
}

/// Whether `set` induces a single cycle: connected and 2-regular.
pub fn induces_cycle(adj: &[VertexSet], set: VertexSet) -> bool {
    if set.len() < 3 || set.iter().any(|v| adj[v].intersection(set).len() != 2) {
        return false;
    }
    let start = set.first().expect("nonempty");
    let mut seen = VertexSet::singleton(start);
    let mut frontier = vec![start];
    while let Some(v) = frontier.pop() {
        for w in adj[v].intersection(set).difference(seen).iter() {
            seen.insert(w);
            frontier.push(w);
        }
    }
    seen == set
}

/// Chordality by checking every vertex subset of size at least 4.
pub fn chordal_by_brute_force(adj: &[VertexSet]) -> bool {
    VertexSet::full(adj.len()).subsets().all(|s| s.len() < 4 || !induces_cycle(adj, s))
}

pub fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    VertexSet::full(n).subsets()
}

/// Uniformly random word over the first `generators` generators and their
/// inverses, of length drawn from `0..=max_len`.
pub fn random_word(rng: &mut impl Rng, generators: usize, max_len: usize) -> artin_core::Word {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| artin_core::Letter { generator: rng.gen_range(0..generators), inverse: rng.gen_bool(0.5) })
        .collect()
}

/// Graph with an edge labeled 2 for each adjacency and ∞ elsewhere.
pub fn raag_from_adjacency(adj: &[VertexSet]) -> LabeledGraph {
    LabeledGraph::from_fn(adj.len(), |i, j| if adj[i].contains(j) { f(2) } else { INF })
}

/// Random graph built one vertex at a time, retrying each new vertex's
/// labels until `keep` holds; falls back to joining it to all earlier
/// vertices by `fallback`. Suits properties inherited by induced subgraphs.
pub fn random_grown(
    rng: &mut impl Rng,
    n: usize,
    alphabet: &[Label],
    fallback: Label,
    keep: impl Fn(&LabeledGraph) -> bool,
) -> LabeledGraph {
    let fallback = alphabet.iter().position(|&l| l == fallback).expect("fallback in alphabet") as u8;
    let mut code = Code { n: 1, cells: vec![] };
    while code.n < n {
        let default = code.extended(&vec![fallback; code.n]);
        code = (0..64)
            .map(|_| {
                let ext: Vec<u8> = (0..code.n).map(|_| rng.gen_range(0..alphabet.len()) as u8).collect();
                code.extended(&ext)
            })
            .find(|c| keep(&c.graph(alphabet)))
            .unwrap_or(default);
    }
    code.graph(alphabet)
}

pub mod strategies {
    use super::*;
    use proptest::prelude::*;
    use proptest::sample::select;

    pub fn graph(n: std::ops::RangeInclusive<usize>, alphabet: Vec<Label>) -> impl Strategy<Value = LabeledGraph> {
        n.prop_flat_map(move |n| {
            proptest::collection::vec(select(alphabet.clone()), n * n.saturating_sub(1) / 2)
                .prop_map(move |cells| LabeledGraph::from_fn(n, |i, j| cells[pair_index(n, i, j)]))
        })
    }

    pub fn word(generators: usize, max_len: usize) -> impl Strategy<Value = artin_core::Word> {
        proptest::collection::vec((0..generators, any::<bool>()), 0..=max_len).prop_map(|letters| {
            letters.into_iter().map(|(generator, inverse)| artin_core::Letter { generator, inverse }).collect()
        })
    }

    /// Graph with a subset of its vertices.
    pub fn graph_and_subset(
        n: std::ops::RangeInclusive<usize>,
        alphabet: Vec<Label>,
    ) -> impl Strategy<Value = (LabeledGraph, VertexSet)> {
        graph(n, alphabet).prop_flat_map(|g| {
            let full = g.vertices().bits();
            (Just(g), any::<u64>().prop_map(move |bits| VertexSet::from_bits(bits & full)))
        })
    }
}
