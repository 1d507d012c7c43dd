use std::path::PathBuf;

use sebthom_core::Error;

/// Failure of a command, carrying its exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    /// Malformed or invalid atom file. `message` already includes the
    /// degree and field when they are known.
    #[error("{}: {message}", path.display())]
    AtomFile { path: PathBuf, message: String },

    #[error("atom \"{name}\" is defined twice ({} and {})", first.display(), second.display())]
    DuplicateAtom {
        name: String,
        first: PathBuf,
        second: PathBuf,
    },

    #[error("{0} oracle check(s) disagree with the join computation")]
    Mismatch(usize),
}

impl CliError {
    /// 0 ok, 2 input error, 3 unsupported summand, 4 oracle mismatch,
    /// 5 non-isolated critical locus, 6 enumeration bound exceeded.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => match e {
                Error::UnsupportedSummand(_) => 3,
                Error::NonIsolated(_) => 5,
                Error::Resource { .. } => 6,
                _ => 2,
            },
            CliError::Mismatch(_) => 4,
            CliError::Io { .. } | CliError::AtomFile { .. } | CliError::DuplicateAtom { .. } => 2,
        }
    }
}
