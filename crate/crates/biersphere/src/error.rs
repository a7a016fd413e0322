//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set must have between 1 and {max} elements, got {got}")]
    GroundSetSize { got: usize, max: usize },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("complex is not proper (it contains the full ground set)")]
    ImproperComplex,

    #[error("complex has ghost vertices {0:?}")]
    GhostVertices(Vec<usize>),

    #[error("face {face:?} cannot be added: {reason}")]
    FaceNotAddable { face: Vec<usize>, reason: String },

    #[error("{op}: ground set too large for exhaustive enumeration (n = {n}, limit {limit})")]
    TooLarge { op: &'static str, n: usize, limit: usize },

    #[error("complex is not a valid Bier sphere facet list: {0}")]
    InvalidBierFacets(String),

    #[error("ridge {0} lies in {1} facets; not a pseudomanifold")]
    NotPseudomanifold(String, usize),

    #[error("facet adjacency graph is not connected")]
    NotConnected,

    #[error("facet orientations cannot be made coherent")]
    NonOrientable,

    #[error("system has {expected} variables, witness has {got}")]
    WitnessWidth { expected: usize, got: usize },

    #[error("point configuration is degenerate: {0}")]
    DegenerateConfiguration(String),

    #[error("point {0} is not a vertex of the convex hull")]
    NonExtremalPoint(String),

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("quota {0} outside the open interval (0, 1)")]
    QuotaRange(String),

    #[error("certificate does not match the complex: {0}")]
    CertificateMismatch(String),

    #[error("{0:?} is not a minimal circuit: {1}")]
    DegenerateCircuit(Vec<String>, String),

    #[error("vector does not lie in the hyperplane sum(x) = 0 (sum = {0})")]
    NotInHyperplane(String),

    #[error("complex is threshold; nothing to remove")]
    ThresholdInput,

    #[error("complex is not threshold")]
    NotThreshold,

    #[error("parse error at {path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(path: &str, line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            path: path.to_string(),
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            source,
        }
    }
}
