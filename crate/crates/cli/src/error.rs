use std::path::PathBuf;

use mvgoppa::ErrorClass;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] mvgoppa::Error),
    /// A library error raised while reading one flag or job field.
    #[error("{what}: {source}")]
    Arg { what: String, source: mvgoppa::Error },
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: {message}", path.display())]
    Job { path: PathBuf, message: String },
}

impl CliError {
    pub fn arg(what: impl Into<String>) -> impl FnOnce(mvgoppa::Error) -> CliError {
        let what = what.into();
        move |source| CliError::Arg { what, source }
    }

    pub fn exit_code(&self) -> u8 {
        let class = match self {
            CliError::Lib(e) | CliError::Arg { source: e, .. } => e.class(),
            CliError::Usage(_) | CliError::Io { .. } | CliError::Job { .. } => ErrorClass::Input,
        };
        match class {
            ErrorClass::Input => 2,
            ErrorClass::Precondition => 3,
            ErrorClass::Mismatch => 4,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
