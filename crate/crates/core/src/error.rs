use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("weight is not integral: {0}")]
    NotIntegral(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
