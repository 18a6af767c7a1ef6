use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("size cap exceeded: {0}")]
    Cap(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("inexact result: {0}")]
    Inexact(String),
    #[error("internal: {0}")]
    Internal(String),
    #[error("not found: {0}")]
    NotFound(String),
}

pub type Result<T> = std::result::Result<T, Error>;
