use alloc::string::String;

use crate::operator::OpError;
use crate::series::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("index {n} exceeds truncation order {order}")]
    OrderTooSmall { n: usize, order: usize },
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: String, reason: String },
    #[error("unknown pair `{0}`")]
    UnknownPair(String),
    #[error("unknown reduction `{0}`")]
    UnknownReduction(String),
    #[error("unknown explicit family `{0}`")]
    UnknownRow(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Operator(#[from] OpError),
}

impl Error {
    pub(crate) fn param(name: &str, reason: &str) -> Error {
        Error::InvalidParameter {
            name: name.into(),
            reason: reason.into(),
        }
    }
}

pub(crate) fn check_order(n: usize, order: usize) -> Result<(), Error> {
    if n > order {
        Err(Error::OrderTooSmall { n, order })
    } else {
        Ok(())
    }
}
