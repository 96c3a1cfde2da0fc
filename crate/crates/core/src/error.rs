use thiserror::Error;

use crate::oracle::Resolution;
use crate::words::DimSeries;

/// Partial output carried by a capacity error.
#[derive(Debug, Clone)]
pub enum Partial {
    Series(DimSeries),
    Resolution(Resolution),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("capacity exceeded: {what} needs {needed}, limit is {limit}")]
    Capacity {
        what: String,
        needed: usize,
        limit: usize,
        partial: Option<Box<Partial>>,
    },

    #[error("insufficient data: need at least {needed} terms, got {got}")]
    InsufficientData { needed: usize, got: usize },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn capacity(what: impl Into<String>, needed: usize, limit: usize) -> Self {
        Error::Capacity {
            what: what.into(),
            needed,
            limit,
            partial: None,
        }
    }

    pub(crate) fn with_partial(self, p: Partial) -> Self {
        match self {
            Error::Capacity {
                what,
                needed,
                limit,
                ..
            } => Error::Capacity {
                what,
                needed,
                limit,
                partial: Some(Box::new(p)),
            },
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
