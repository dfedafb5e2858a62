use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("alphabet mismatch: {0} vs {1}")]
    AlphabetMismatch(String, String),
    #[error("degree cap mismatch: {0} vs {1}")]
    CapMismatch(usize, usize),
    #[error("generator set mismatch")]
    GeneratorMismatch,
    #[error("constant term must be {expected}, found {found}")]
    ConstantTerm { expected: String, found: String },
    #[error("word of length {len} exceeds degree cap {cap}")]
    WordTooLong { len: usize, cap: usize },
    #[error("unknown letter or generator `{0}`")]
    UnknownLetter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("element is not in {0}")]
    NotInSubalgebra(&'static str),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("linear system inconsistent at degree {degree}")]
    Inconsistent { degree: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
