use thiserror::Error;

/// Errors surfaced by graph construction, parsing, and the solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("family parameter out of range: {0}")]
    FamilyParameter(String),

    #[error("malformed edge list at line {line}: {reason}")]
    EdgeListParse { line: usize, reason: String },

    #[error("malformed family spec `{spec}`: {reason}")]
    FamilySpecParse { spec: String, reason: String },

    #[error("graph is disconnected (no path between `{0}` and `{1}`)")]
    Disconnected(String, String),

    #[error("partition error: {0}")]
    Partition(String),

    #[error("vertex `{0}` is not covered by the partition")]
    UncoveredVertex(String),

    #[error("unknown vertex label `{0}` in partition")]
    UnknownLabel(String),

    #[error("class count {k} out of range 1..={order}")]
    ClassCountRange { k: usize, order: usize },

    #[error("order {order} exceeds the naive enumeration cap {cap}")]
    NaiveCapExceeded { order: usize, cap: usize },

    #[error("construction requires {0}")]
    Construction(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
