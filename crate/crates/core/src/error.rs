use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An input outside the domain of the operation (negative radicand,
    /// division by zero, a word of the wrong shape, ...).
    Domain(String),
    /// Slope and discriminant are undefined for rank zero characters.
    RankZero,
    /// Interval descent did not terminate within the order bound.
    NotFound { max_order: u32 },
    /// A derived quantity violated an identity that must hold for valid input.
    Internal(String),
    /// Text could not be parsed.
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::RankZero => f.write_str("slope and discriminant are undefined in rank zero"),
            Error::NotFound { max_order } => write!(
                f,
                "no exceptional interval found up to order {max_order}"
            ),
            Error::Internal(msg) => write!(f, "internal consistency error: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
