use thiserror::Error;

/// Errors raised by the graph operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A size cap (vertex cap, enumeration cap, exact-treewidth cap) was exceeded.
    #[error("resource limit: {0}")]
    Resource(String),
    /// The input lies outside the domain of the operation (e.g. a pattern outside class C).
    #[error("domain error: {0}")]
    Domain(String),
    #[error("search budget exhausted after {0} node expansions")]
    BudgetExhausted(u64),
    /// Two routes that must agree did not.
    #[error("inconsistent results: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
