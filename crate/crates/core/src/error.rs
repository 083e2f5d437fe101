use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("{what}: {requested} exceeds the limit of {limit}")]
    CapExceeded {
        what: &'static str,
        requested: String,
        limit: u64,
    },

    #[error("invalid composition pair: {0}")]
    InvalidPair(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("the zero polynomial has no well-defined root count")]
    ZeroPolynomial,

    /// A closed formula produced a non-integer where an integer is guaranteed.
    #[error("internal error: {0} is not exactly divisible")]
    NotDivisible(String),

    #[error("internal error: graph is disconnected")]
    Disconnected,
}

impl Error {
    pub(crate) fn cap(what: &'static str, requested: impl ToString, limit: u64) -> Self {
        Error::CapExceeded {
            what,
            requested: requested.to_string(),
            limit,
        }
    }

    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
