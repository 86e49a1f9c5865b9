//! Graphs shared by the unit tests.

use crate::graph::{Convention, Label, LabeledGraph};

fn f(n: u32) -> Label {
    Label::Finite(n)
}

/// Triangle on `a, b, c` with the given labels on `ab`, `bc`, `ca`.
pub fn triangle(ab: Label, bc: Label, ca: Label) -> LabeledGraph {
    LabeledGraph::from_edges(
        ["a", "b", "c"],
        [("a", "b", ab), ("b", "c", bc), ("c", "a", ca)],
        Convention::FullEdge,
    )
    .unwrap()
}

/// Two vertices `a, b` joined by `label`.
pub fn dihedral(label: Label) -> LabeledGraph {
    LabeledGraph::from_edges(["a", "b"], [("a", "b", label)], Convention::FullEdge).unwrap()
}

/// The seven-vertex FC example used to illustrate intersections, drawn with
/// the no-2-edge convention.
pub fn worked_example() -> LabeledGraph {
    LabeledGraph::from_edges(
        ["a", "b", "c", "d", "e", "f", "g"],
        [
            ("a", "b", f(3)),
            ("c", "d", f(3)),
            ("d", "e", Label::Infinity),
            ("e", "f", f(4)),
            ("e", "g", Label::Infinity),
            ("f", "g", Label::Infinity),
        ],
        Convention::NoTwoEdge,
    )
    .unwrap()
}

/// 4-cycle `a-b-c-d` of 2-edges, chord `b-d` labeled `m`, `a-c` infinity.
pub fn chorded_square(m: u32) -> LabeledGraph {
    LabeledGraph::from_edges(
        ["a", "b", "c", "d"],
        [
            ("a", "b", f(2)),
            ("b", "c", f(2)),
            ("c", "d", f(2)),
            ("d", "a", f(2)),
            ("b", "d", f(m)),
            ("a", "c", Label::Infinity),
        ],
        Convention::FullEdge,
    )
    .unwrap()
}

/// Triangle with `ab = ac = 2m` and `bc = 2n + 1`.
pub fn even_even_odd(m: u32, n: u32) -> LabeledGraph {
    triangle(f(2 * m), f(2 * n + 1), f(2 * m))
}
