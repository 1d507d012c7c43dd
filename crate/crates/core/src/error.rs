use alloc::string::String;

use crate::expr::ParseError;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} columns, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("domain error: {0}")]
    Domain(String),

    /// An invariant of a graded piece does not hold. `degree` is `None` for
    /// errors that are not tied to one piece.
    #[error("{}{field}: {message}", match degree { Some(d) => alloc::format!("degree {d}: "), None => String::new() })]
    Validation {
        degree: Option<i64>,
        field: String,
        message: String,
    },

    #[error("enumeration needs {needed} tuples, above the bound of {bound}")]
    Resource { needed: u128, bound: u64 },

    #[error("non-isolated critical locus: the Jacobian ideal of {0} is not zero-dimensional")]
    NonIsolated(String),

    #[error("not vanishing at origin: {0} has a nonzero constant term")]
    NotVanishingAtOrigin(String),

    #[error("unsupported summand {0}: only c*x^a summands are evaluated (the milnor command still applies)")]
    UnsupportedSummand(String),

    #[error("unknown atom \"{0}\"")]
    UnknownAtom(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn validation(
        degree: Option<i64>,
        field: impl Into<String>,
        message: impl Into<String>,
    ) -> Self {
        Error::Validation {
            degree,
            field: field.into(),
            message: message.into(),
        }
    }
}
