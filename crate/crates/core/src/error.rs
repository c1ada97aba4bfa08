use thiserror::Error;

use crate::slope::Slope;

/// Errors raised by the arithmetic kernels.
///
/// Every variant is a domain or input error; none of them indicates an
/// internal inconsistency.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse slope literal `{0}`")]
    Parse(String),

    #[error("slopes {0} and {1} are not joined by a Farey edge")]
    NotAdjacent(Slope, Slope),

    #[error("degenerate arc: both endpoints are {0}")]
    DegenerateArc(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("{0} is not defined at infinity")]
    InfiniteInput(&'static str),

    #[error("out of domain: {0}")]
    OutOfDomain(String),

    #[error("malformed continued fraction {0:?}: {1}")]
    MalformedTerms(Vec<i64>, &'static str),

    #[error("contact 0-surgery has no stabilization count")]
    ZeroCoefficient,

    #[error("surgery yields an overtwisted structure: {0}")]
    Overtwisted(String),

    #[error("unsupported case: {0}")]
    UnsupportedCase(String),

    #[error("unknown twist curve symbol `{0}`")]
    UnknownSymbol(String),

    #[error("matrix ({0}, {1}; {2}, {3}) does not have determinant 1")]
    NotUnimodular(i64, i64, i64, i64),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn out_of_domain(msg: impl Into<String>) -> Error {
    Error::OutOfDomain(msg.into())
}
