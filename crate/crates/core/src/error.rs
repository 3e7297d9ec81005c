use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parity not admissible: {0}")]
    Parity(String),
    #[error("division by a non-monomial or zero value")]
    NonMonomialDivision,
    #[error("series error: {0}")]
    Series(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("consistency check failed: {0}")]
    Consistency(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
