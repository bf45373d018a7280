use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid board: {0}")]
    InvalidBoard(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("polynomial of degree {degree} does not fit a falling-factorial basis of depth {depth}")]
    BasisTooShallow { degree: u32, depth: usize },
    #[error("variable sets differ: [{left}] vs [{right}]")]
    VariableMismatch { left: String, right: String },
    #[error("bounce path did not terminate: {0}")]
    NonTermination(String),
}

pub type Result<T> = std::result::Result<T, Error>;
