use thiserror::Error;

/// Errors raised by the library. Search exhaustion is not an error: it is
/// reported through [`crate::SearchStatus::Inconclusive`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("resource limit: {what} = {value} exceeds cap {cap}")]
    ResourceLimit {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("graph is not bipartite; odd cycle {cycle:?}")]
    NotBipartite { cycle: Vec<usize> },
    #[error("graph is not connected")]
    Disconnected,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
