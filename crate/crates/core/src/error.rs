use std::fmt;

/// Errors produced by the engine.
#[derive(Debug)]
pub enum Error {
    /// Tensor shapes or dimensions incompatible with the requested operation.
    Dim(String),
    /// A caller-side precondition was violated.
    Contract(String),
    /// Invalid configuration values.
    Config(String),
    /// Dataset-level problem (missing classes, insufficient samples).
    Data(String),
    /// Malformed binary file; `offset` is the byte position where parsing failed.
    Format { offset: u64, msg: String },
    /// Non-finite values or numeric breakdown.
    Numeric(String),
    /// Underlying I/O failure.
    Io(std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dim(msg) => write!(f, "dimension error: {msg}"),
            Error::Contract(msg) => write!(f, "contract error: {msg}"),
            Error::Config(msg) => write!(f, "config error: {msg}"),
            Error::Data(msg) => write!(f, "data error: {msg}"),
            Error::Format { offset, msg } => {
                write!(f, "format error at byte {offset}: {msg}")
            }
            Error::Numeric(msg) => write!(f, "numeric error: {msg}"),
            Error::Io(err) => write!(f, "io error: {err}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(err) => Some(err),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err)
    }
}
