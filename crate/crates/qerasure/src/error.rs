use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {actual}")]
    DimMismatch {
        context: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("{name} = {value} outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("invalid channel: {0}")]
    InvalidChannel(String),

    #[error("invalid ensemble: {0}")]
    InvalidEnsemble(String),

    #[error("invalid classical channel: {0}")]
    InvalidClassicalChannel(String),

    #[error("POVM incomplete: deviates from identity by {0}")]
    IncompletePovm(f64),

    #[error("invalid stabilizer code: {0}")]
    InvalidCode(String),

    #[error("did not converge: {0}")]
    NoConvergence(&'static str),

    #[error("random sampling aborted after {0} rejections")]
    RngExhausted(usize),
}
