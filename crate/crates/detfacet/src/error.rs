//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Operands built over different variable layouts.
    #[error("layout mismatch: {0}")]
    Layout(String),

    /// Operands built over different fields or term orders.
    #[error("configuration mismatch: {0}")]
    Config(String),

    /// An operation that needs a nonzero/nonempty input got none.
    #[error("empty input: {0}")]
    EmptyInput(String),

    /// A configured limit was hit; the message names the limit.
    #[error("resource limit exceeded: {what} (limit {limit})")]
    Resource { what: String, limit: u64 },

    /// The input lacks the combinatorial structure the operation needs.
    #[error("structural error: {0}")]
    Structure(String),

    /// An argument violates a precondition.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// Input document could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// The request is outside what the operation supports.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
