//! Error type shared across the crate.

/// Errors produced by registry loading, metric evaluation and sweeps.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A registry or table document could not be parsed.
    #[error("parse error at line {line}, field `{field}`: {message}")]
    Parse {
        line: usize,
        field: String,
        message: String,
    },

    /// A value failed one of its declared invariants.
    #[error("validation failed for `{subject}`: {rule}")]
    Validation { subject: String, rule: String },

    /// Lookup of a protocol name that is not in the registry.
    #[error("unknown protocol `{name}`; available: {}", available.join(", "))]
    UnknownProtocol {
        name: String,
        available: Vec<String>,
    },

    /// An argument outside the mathematical domain of an operation.
    #[error("{0}")]
    Domain(String),

    /// A malformed command-line invocation.
    #[error("{0}")]
    Usage(String),

    /// A figure identifier that no sweep maps to.
    #[error("unknown figure id `{given}`; valid ids are fig2..fig13")]
    UnknownFigure { given: String },

    /// A sweep specification incompatible with its figure.
    #[error("invalid sweep for {figure}: {message}")]
    Sweep { figure: String, message: String },

    /// Two tables that cannot be compared cell by cell.
    #[error("table shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 1 for domain/computation errors,
    /// 2 for usage and input errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
