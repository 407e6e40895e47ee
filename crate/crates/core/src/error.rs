use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("log requires a group-like input with constant term 1, found {0}")]
    NotGroupLike(String),

    #[error("truncation degree {0} is out of range (supported: 1..={max})", max = crate::algebra::MAX_DEGREE)]
    Degree(usize),

    #[error("genus must be at least 1")]
    Genus,

    #[error("invalid fatgraph: {0}")]
    InvalidGraph(String),

    #[error("invalid marking: {0}")]
    InvalidMarking(String),

    #[error("invalid whitehead move on edge {edge}: {reason}")]
    Move { edge: usize, reason: String },

    #[error("move {step} of path failed: {source}")]
    PathStep {
        step: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("graphs are not combinatorially isomorphic")]
    NotIsomorphic,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Other(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
