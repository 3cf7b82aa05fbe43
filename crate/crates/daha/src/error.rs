use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DahaError {
    #[error("parameter error: {0}")]
    Param(String),
    #[error("order of vanishing of zero is undefined")]
    UndefinedOrder,
    #[error("pole at the specialization (zeta = {zeta})")]
    Pole { zeta: i32 },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, DahaError>;
