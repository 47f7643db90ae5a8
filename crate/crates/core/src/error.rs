use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity {arity} exceeds the cap of {cap}")]
    ArityCap { arity: usize, cap: usize },

    #[error("essential arity {ess} exceeds the permutation-canonicalization cap of {cap}")]
    CanonicalCap { ess: usize, cap: usize },

    #[error("{what} has {size} vertices, over the cap of {cap}")]
    VertexCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("index {index} out of range for {size} positions")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("truth table needs {expected} bits, got {found}")]
    TableLength { expected: usize, found: usize },

    #[error("invalid vertex pair {{{0}, {1}}}")]
    InvalidPair(usize, usize),

    #[error("arity gap is undefined for essential arity {ess} (needs at least 2)")]
    GapUndefined { ess: usize },

    #[error("graph has loops; this analysis runs on the loopless part only")]
    LoopsPresent,

    #[error("edge of size {size} is not allowed in a graph")]
    NotAGraph { size: usize },

    #[error("not a Steiner system: {0}")]
    NotSteiner(String),

    #[error("{0}")]
    TooSmall(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}
