use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("the zero polynomial has no unit normalization")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeifertError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("not of Seifert type: det(A - A^t) = {0}")]
    NotSeifertType(BigInt),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("enlargement kind must be 1 or 2, got {0}")]
    InvalidKind(u8),
    #[error("no elementary reduction of kind {kind} at indices ({first}, {second})")]
    InvalidReductionSite { kind: u8, first: usize, second: usize },
    #[error("congruence matrix is not unimodular: det = {0}")]
    NotUnimodular(BigInt),
    #[error("move {index} failed: {source}")]
    ChainFailed {
        index: usize,
        #[source]
        source: Box<SeifertError>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlanchfieldError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("generator map does not carry relations into relations (column {column})")]
    RelationsNotPreserved { column: usize },
    #[error("pairing not respected on basis pair ({i}, {j})")]
    PairingMismatch { i: usize, j: usize },
    #[error("surjectivity certificate does not hold")]
    BadCertificate,
    #[error(transparent)]
    Seifert(#[from] SeifertError),
}
