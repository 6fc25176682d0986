use thiserror::Error;

/// Errors raised across the crate.
///
/// `InvariantViolation` is reserved for outcomes that a correct implementation
/// can never produce on valid input (a falsified identity or theorem). The CLI
/// maps it to exit code 3.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported field order {0}")]
    UnsupportedField(u32),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("singular matrix")]
    Singular,
    #[error("graph is not regular: vertex {vertex} has degree {degree}, expected {expected}")]
    NotRegular { vertex: usize, degree: usize, expected: usize },
    #[error("graph is not strongly regular: pair ({0}, {1}) breaks the common-neighbour count")]
    NotStronglyRegular(usize, usize),
    #[error("eigenvalues are irrational (conference graph); h1-h2 must be an integer eigenvalue")]
    IrrationalEigenvalues,
    #[error("permutation {index} is not an automorphism: edge ({u}, {v}) is not preserved")]
    NotAutomorphism { index: usize, u: usize, v: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("empty vertex set")]
    EmptySet,
    #[error("vertex set is the whole vertex set")]
    FullSet,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("search exhausted without a solution")]
    Exhausted,
    #[error("node budget of {0} exhausted")]
    BudgetExhausted(u64),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io error: {0}")]
    Io(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
