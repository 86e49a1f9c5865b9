//! Coherence of Artin groups: the general three-condition test, the chordality
//! test for FC-type groups with retractions, and the right-angled case.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::finite_type::is_fc_type;
use crate::graph::{is_chordal_adjacency, Label, LabeledGraph, VertexSet};
use crate::retraction::admits_retractions_fc;

/// The condition that failed, with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FailedCondition {
    /// An induced cycle of length at least 4. `restricted` is set when the
    /// cycle lives in the graph of 2-labels only.
    NotChordal { cycle: Vec<usize>, restricted: bool },
    /// A 3- or 4-clique of finite labels with two or more labels other than 2.
    BadCompleteSubgraph(VertexSet),
    /// `[a, b, c, d]` with `ab = bc = cd = da = 2`, `bd` finite above 2 and
    /// `ac` infinite.
    ForbiddenSquare([usize; 4]),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Via {
    GeneralLemma,
    FcTheorem,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoherenceReport {
    pub coherent: bool,
    pub failed_condition: Option<FailedCondition>,
    pub via: Via,
}

impl CoherenceReport {
    fn new(failed_condition: Option<FailedCondition>, via: Via) -> Self {
        CoherenceReport { coherent: failed_condition.is_none(), failed_condition, via }
    }
}

/// An induced cycle of length at least 4, if the graph has one.
///
/// For every vertex `v` and non-adjacent neighbours `u`, `w`, a shortest
/// `u`–`w` path avoiding the rest of `N[v]` closes a chordless cycle.
pub fn chordless_cycle(adj: &[VertexSet]) -> Option<Vec<usize>> {
    if is_chordal_adjacency(adj) {
        return None;
    }
    let n = adj.len();
    for v in 0..n {
        let nbrs = adj[v];
        for u in nbrs.iter() {
            for w in nbrs.iter().filter(|&w| w > u && !adj[u].contains(w)) {
                let allowed = VertexSet::full(n).difference(nbrs.with(v)).with(u).with(w);
                if let Some(path) = shortest_path(adj, allowed, u, w) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    unreachable!("non-chordal graph without a chordless cycle")
}

fn shortest_path(adj: &[VertexSet], allowed: VertexSet, from: usize, to: usize) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; adj.len()];
    let mut seen = VertexSet::singleton(from);
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in adj[x].intersection(allowed).difference(seen).iter() {
            seen.insert(y);
            prev[y] = x;
            queue.push_back(y);
        }
    }
    None
}

fn two_adjacency(g: &LabeledGraph) -> Vec<VertexSet> {
    (0..g.len())
        .map(|u| (0..g.len()).filter(|&v| v != u && g.label(u, v).is_two()).collect())
        .collect()
}

fn not_chordal(adj: &[VertexSet], restricted: bool) -> Option<FailedCondition> {
    chordless_cycle(adj).map(|cycle| FailedCondition::NotChordal { cycle, restricted })
}

fn bad_complete_subgraph(g: &LabeledGraph) -> Option<VertexSet> {
    let n = g.len();
    let non_two = |set: &[usize]| {
        let mut count = 0;
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                match g.label(u, v) {
                    Label::Infinity => return None,
                    l if !l.is_two() => count += 1,
                    _ => {}
                }
            }
        }
        Some(count)
    };
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if non_two(&[a, b, c]).is_some_and(|k| k > 1) {
                    return Some([a, b, c].into_iter().collect());
                }
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if non_two(&[a, b, c, d]).is_some_and(|k| k > 1) {
                        return Some([a, b, c, d].into_iter().collect());
                    }
                }
            }
        }
    }
    None
}

/// Orders a 4-subset as `[a, b, c, d]` matching the forbidden square, if it
/// does.
pub fn match_forbidden_square(g: &LabeledGraph, quad: [usize; 4]) -> Option<[usize; 4]> {
    let [p, q, r, s] = quad;
    // the three ways to split four vertices into two diagonals
    for ((a, c), (b, d)) in [((p, q), (r, s)), ((p, r), (q, s)), ((p, s), (q, r))] {
        let sides = [(a, b), (b, c), (c, d), (d, a)].iter().all(|&(x, y)| g.label(x, y).is_two());
        if !sides {
            continue;
        }
        let (ac, bd) = (g.label(a, c), g.label(b, d));
        let heavy = |l: Label| l.is_finite() && !l.is_two();
        if ac == Label::Infinity && heavy(bd) {
            return Some([a, b, c, d]);
        }
        if bd == Label::Infinity && heavy(ac) {
            return Some([b, a, d, c]);
        }
    }
    None
}

fn forbidden_square(g: &LabeledGraph) -> Option<[usize; 4]> {
    let n = g.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if let Some(w) = match_forbidden_square(g, [a, b, c, d]) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

/// Coherence by the three conditions: chordal finite-label graph, no 3- or
/// 4-clique with two labels above 2, no forbidden square.
pub fn coherence_general(g: &LabeledGraph) -> CoherenceReport {
    let failed = not_chordal(g.finite_adjacency(), false)
        .or_else(|| bad_complete_subgraph(g).map(FailedCondition::BadCompleteSubgraph))
        .or_else(|| forbidden_square(g).map(FailedCondition::ForbiddenSquare));
    CoherenceReport::new(failed, Via::GeneralLemma)
}

/// Coherence of an FC-type graph admitting retractions: the graph and its
/// 2-label subgraph must both be chordal.
pub fn coherence_fc(g: &LabeledGraph) -> Result<CoherenceReport> {
    if !is_fc_type(g) {
        return Err(Error::NotInScope("graph is not of FC type".into()));
    }
    let report = admits_retractions_fc(g)?;
    if !report.admits {
        return Err(Error::NotInScope("graph does not admit retractions".into()));
    }
    let failed = not_chordal(g.finite_adjacency(), false).or_else(|| not_chordal(&two_adjacency(g), true));
    Ok(CoherenceReport::new(failed, Via::FcTheorem))
}

/// Droms' criterion for right-angled Artin groups.
pub fn droms_raag(g: &LabeledGraph) -> Result<bool> {
    for u in 0..g.len() {
        for v in u + 1..g.len() {
            let l = g.label(u, v);
            if !l.is_two() && l != Label::Infinity {
                return Err(Error::NotRaag);
            }
        }
    }
    Ok(g.is_chordal())
}
