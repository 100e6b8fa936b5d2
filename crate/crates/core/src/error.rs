use thiserror::Error;

/// Errors raised by group construction, lattice and complex computations,
/// the construction language and the cache.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("table is not a Latin square: {0}")]
    NotLatinSquare(String),
    #[error("no two-sided identity: {0}")]
    NoIdentity(String),
    #[error("operation is not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative { x: u32, y: u32, z: u32 },
    #[error("group order exceeds cap {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("inconsistent polycyclic presentation: {0}")]
    InconsistentPresentation(String),
    #[error("action is not a homomorphism into Aut(N): {0}")]
    ActionNotHomomorphism(String),
    #[error("action image is not an automorphism: {0}")]
    ActionNotAutomorphism(String),
    #[error("search budget of {budget} nodes exhausted")]
    SearchBudgetExceeded { budget: u64 },
    #[error("face budget of {budget} faces exhausted")]
    FaceBudgetExceeded { budget: u64 },
    #[error("group is not a {p}-group")]
    NotAPGroup { p: u32 },
    #[error("group is not abelian")]
    NotAbelian,
    #[error("group is not solvable")]
    NotSolvable,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("syntax error at line {line}, column {column}: {message}")]
    SyntaxError {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("cache version mismatch: found {found}, expected {expected}")]
    CacheVersionMismatch { found: u32, expected: u32 },
    #[error("corrupt cache: {0}")]
    CorruptCache(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
