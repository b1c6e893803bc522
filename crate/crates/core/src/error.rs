use thiserror::Error;

/// Errors raised by graph windows, catalog construction and searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The oracle broke one of its contracts (asymmetric adjacency, self-loop, ...).
    #[error("structural error: {0}")]
    Structural(String),
    /// A breadth-first window grew past the vertex cap.
    #[error("resource error: window exceeds vertex cap of {cap} vertices")]
    Resource { cap: usize },
    #[error("invalid graph spec: {0}")]
    InvalidSpec(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("ratio of an empty vertex set is undefined")]
    EmptySet,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("shape `{shape}` is not defined for graph `{graph}`")]
    UnsupportedShape { shape: String, graph: String },
    #[error("graph `{0}` does not expose group multiplication")]
    UnsupportedOracle(String),
    #[error("orbit index {index} out of range (graph has {orbits} orbits)")]
    InvalidOrbit { index: usize, orbits: usize },
}

impl Error {
    /// Stable machine-readable code, used by the CLI for payloads and exit codes.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Structural(_) => "structural-error",
            Error::Resource { .. } => "resource-error",
            Error::InvalidSpec(_) => "invalid-spec",
            Error::Parse(_) => "parse-error",
            Error::EmptySet => "empty-set-error",
            Error::InvalidInput(_) => "invalid-input",
            Error::UnsupportedShape { .. } => "unsupported-shape",
            Error::UnsupportedOracle(_) => "unsupported-oracle",
            Error::InvalidOrbit { .. } => "invalid-orbit",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
