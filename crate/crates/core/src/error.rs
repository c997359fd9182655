use thiserror::Error;

use crate::arith::Backend;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("backend mismatch: {0} vs {1}")]
    BackendMismatch(Backend, Backend),

    #[error("zero triple is not a projective point or line")]
    ZeroTriple,

    #[error("degenerate pair: the two inputs coincide")]
    DegeneratePair,

    #[error("duplicate line: index {first} and index {second} coincide")]
    DuplicateLine { first: usize, second: usize },

    #[error("duplicate point: index {first} and index {second} coincide")]
    DuplicatePoint { first: usize, second: usize },

    #[error("empty arrangement")]
    Empty,

    #[error("fat point support coincides with a point of the configuration or another support")]
    Overlap,

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("linear system is not one-dimensional (dimension {dimension})")]
    NotUnique { dimension: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error(
        "addition-deletion inapplicable at step {step}: restriction count {count} matches neither a+1 nor b+1 for ({a},{b})"
    )]
    AdditionDeletionInapplicable {
        step: usize,
        count: usize,
        a: usize,
        b: usize,
    },

    #[error(
        "nearly supersolvable formula leaves the even case unresolved (d = {d}, m = {m}): floor(d/2) twice does not sum to d-1"
    )]
    UnresolvedEvenCase { d: usize, m: usize },

    #[error("field error: {0}")]
    Field(String),

    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },

    #[error("render error: {0}")]
    Render(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("search exceeded its cutoff: {0}")]
    SearchCutoff(String),
}
