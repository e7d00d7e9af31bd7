use std::path::PathBuf;

use crate::face::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("triple {0:?} repeats a vertex")]
    RepeatedVertex([Vertex; 3]),

    #[error("label {0} appears more than once")]
    DuplicateLabel(Vertex),

    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },

    #[error("label {0} collides with a boundary label")]
    BoundaryCollision(Vertex),

    #[error("labels must be strictly ascending")]
    LabelsNotAscending,

    #[error("k = {k} exceeds the enumeration limit {limit}")]
    EnumerationLimit { k: usize, limit: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("face set does not form a triangulated disk of the boundary cycle")]
    NotADisk,

    #[error("edge {0:?} lies in more than two faces")]
    EdgeDegree((Vertex, Vertex)),

    #[error("face set has nonzero second homology (not embeddable in a disk)")]
    NotPlanar,

    #[error("face set is empty")]
    EmptyFaceSet,

    #[error("S must be a proper nonempty subset of the parent triangulation")]
    NotProperSubset,

    #[error("v_outer would be negative (k = {k}, v_boundary + v_internal = {used})")]
    NegativeOuter { k: usize, used: usize },

    #[error("probability {0} outside [0, 1]")]
    Probability(f64),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: vertex {vertex} outside 1..={n}")]
    OutOfRange { line: usize, vertex: i64, n: u32 },

    #[error("family of {members} triangulations exceeds the pair budget ({limit} members)")]
    PairBudget { members: usize, limit: usize },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("search budget exhausted after {states} states")]
    BudgetExhausted { states: u64 },

    #[error("certificate rejected: {0}")]
    CertificateRejected(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
