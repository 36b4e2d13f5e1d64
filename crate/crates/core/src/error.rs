use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime power")]
    NotAPrimePower(u32),
    #[error("field order {0} is outside the supported set")]
    Unsupported(u32),
    #[error("built-in modulus for F_{0} is reducible")]
    ReducibleModulus(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("shape mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    ShapeMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("entry code {code} is not an element of F_{q}")]
    BadEntry { code: u32, q: u32 },
    #[error("bad dimension: subspace dimension {i} exceeds ambient dimension {n}")]
    BadDimension { n: usize, i: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("bad arguments: {0}")]
    BadArgs(String),
    #[error("malformed polynomial: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{n} vertices exceeds the limit of {limit}")]
    TooManyVertices { n: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("generator {index} is not alternating: u^T B u = {value} for u = {witness:?}")]
    NotAlternating {
        index: usize,
        witness: Vec<u32>,
        value: u32,
    },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("field mismatch: F_{0} vs F_{1}")]
    FieldMismatch(u32, u32),
    #[error("enumeration too large: about {estimate} candidates, limit {limit}")]
    TooLarge { estimate: u128, limit: u128 },
    #[error("basis matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StratumError {
    #[error("bad arguments: {0}")]
    BadArgs(String),
    #[error("(P, Q) = ({p:?}, {q:?}) is not a valid stratum")]
    InvalidStratum { p: Vec<usize>, q: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}
