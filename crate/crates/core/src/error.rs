use thiserror::Error;

use crate::graph::Label;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("a label needs two distinct vertices, got `{0}` twice")]
    SelfPair(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge `{0}`–`{1}`")]
    DuplicateEdge(String, String),
    #[error("invalid label {0}: labels are integers >= 2 or infinity")]
    BadLabel(u64),
    #[error("missing label for `{0}`–`{1}` under the full-edge convention")]
    MissingEdge(String, String),
    #[error("graphs are limited to {max} vertices, got {got}")]
    TooManyVertices { got: usize, max: usize },
    #[error("invalid vertex name `{0}`")]
    BadName(String),

    #[error("graph has more than one irreducible component")]
    NotIrreducible,
    #[error("graph is not of FC type")]
    NotFcType,
    #[error("`{0}` has at least two odd edges into the target set")]
    AmbiguousOddTarget(String),
    #[error("graph has two odd edges sharing a vertex")]
    NotOddOddFree,
    #[error("graph does not admit ordinary retractions ({0})")]
    NotAdmissible(String),
    #[error("graph is outside the hypotheses of this check: {0}")]
    NotInScope(String),
    #[error("graph has a label other than 2 or infinity")]
    NotRaag,
    #[error("label {0} is too small for an elementary ribbon (needs > 2)")]
    LabelTooSmall(Label),
    #[error("`{0}`–`{1}` has label infinity")]
    InfiniteLabel(String, String),
    #[error("input too large: {0}")]
    TooLarge(String),
}
