use crate::Count;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed or out-of-range input (bad word, diagram, index, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// Input is well formed but the requested formula does not apply.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("too many paths: {count} exceeds the enumeration cap of {cap}")]
    TooManyPaths { count: Count, cap: u64 },

    /// A fixed-width scalar could not hold an intermediate value.
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
