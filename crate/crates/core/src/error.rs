use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph6: {0}")]
    Graph6(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("adjacency matrix is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),

    #[error("graph on {0} vertices exceeds the supported maximum of 65536")]
    TooManyVertices(usize),

    #[error("invalid size for {family}: {detail}")]
    InvalidSize { family: &'static str, detail: String },

    #[error("vertex coloring has {got} entries, expected {expected}")]
    ColoringLength { expected: usize, got: usize },

    #[error("not a latin square: {0}")]
    NotLatinSquare(String),

    #[error("{what} limited to {cap} vertices, got {n}")]
    SizeCap { what: &'static str, cap: usize, n: usize },

    #[error("graphs have different vertex counts ({0} vs {1})")]
    SizeMismatch(usize, usize),

    #[error("ported graphs are incompatible: {0}")]
    PortMismatch(String),

    #[error("non-integral intermediate value in {0}")]
    NonIntegral(&'static str),

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}
