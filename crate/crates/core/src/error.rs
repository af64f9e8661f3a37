use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("division by non-unit series")]
    NonUnitDivision,
    #[error("exp requires a zero constant term")]
    ExpConstantTerm,
    #[error("log requires constant term 1")]
    LogConstantTerm,
    #[error("factor {m} differs from 1 below degree {m}")]
    FactorDegree { m: usize },
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown series name `{0}`")]
    UnknownSeries(String),
    #[error("insufficient truncation order: need at least {needed}, got {got}")]
    InsufficientOrder { needed: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
