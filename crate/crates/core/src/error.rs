use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: malformed edge-list entry {text:?}")]
    MalformedLine { line: usize, text: String },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },

    #[error("line {line}: vertex {vertex} is out of range for n = {n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },

    #[error("line {line}: header `n <count>` must precede all edges")]
    LateHeader { line: usize },

    #[error("invalid edge ({u}, {v}) for a simple graph on {n} vertices")]
    InvalidEdge { u: usize, v: usize, n: usize },

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),

    #[error("random generation failed: {0}")]
    Generation(String),

    #[error("unknown transform {0:?} (expected sk or rk)")]
    UnknownTransform(String),

    #[error("unknown output format {0:?} (expected json, csv or markdown)")]
    UnknownFormat(String),

    #[error("malformed report: {0}")]
    Report(String),

    #[error("unknown index kind {0:?}")]
    UnknownIndex(String),

    #[error("unknown formula id {0:?}")]
    UnknownFormula(String),

    #[error("formula {id} needs k >= {k_min}, got k = {k}")]
    BelowKMin { id: String, k: u32, k_min: u32 },

    #[error("formula {0} needs the regular degree r")]
    MissingRegularDegree(String),

    #[error("formula {0} needs the indices of the base graph")]
    MissingBase(String),

    #[error("formula {0} needs the indices of the previous level")]
    MissingPrevious(String),

    #[error("regular context inconsistent: m = {m} but n*r/2 = {n}*{r}/2")]
    InconsistentRegular { n: u64, m: u64, r: u64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("logarithm of non-positive value {0}")]
    NonPositiveLog(String),

    #[error("cannot parse exact number {0:?}")]
    ParseNumber(String),

    #[error("empty audit suite: {0}")]
    EmptySuite(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}
