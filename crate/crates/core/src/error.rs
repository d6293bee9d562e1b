use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("infinitesimal character is not regular: {0}")]
    NotRegular(String),
    #[error("total infinitesimal character is irregular")]
    IrregularTotalCharacter,
    #[error("invalid representation: {0}")]
    InvalidRep(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("shape is not {0}")]
    NotGsk(&'static str),
    #[error("no Arthur-SL2 type is compatible with the representation")]
    EmptyDelta,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
