//! Labeled Coxeter graphs and their Artin groups: normal forms in small
//! parabolics, retractions onto standard parabolic subgroups, parabolic
//! intersections and coherence tests.

pub mod coherence;
pub mod dihedral;
pub mod equality;
pub mod error;
pub mod finite_type;
pub mod graph;
pub mod oracles;
pub mod parabolic;
pub mod retraction;
pub mod word;

#[cfg(test)]
mod fixtures;

pub use error::{Error, Result};
pub use graph::{Convention, Label, LabeledGraph, VertexSet};
pub use word::{Letter, Word};
