use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{}: {source}", path.display())]
    InFile {
        path: PathBuf,
        #[source]
        source: Box<CliError>,
    },

    #[error("{0}")]
    Usage(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error(transparent)]
    Core(#[from] proprep_core::Error),
}

impl CliError {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        CliError::Parse { line, msg: msg.into() }
    }

    pub fn in_file(self, path: impl Into<PathBuf>) -> Self {
        CliError::InFile {
            path: path.into(),
            source: Box::new(self),
        }
    }

    /// Process exit code: 1 for failed checks, 2 for bad input, 3 for an
    /// exhausted budget.
    pub fn exit_code(&self) -> u8 {
        use proprep_core::Error as E;
        match self {
            CliError::InFile { source, .. } => source.exit_code(),
            CliError::Parse { .. } | CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Core(E::Budget(_)) => 3,
            CliError::Core(E::Internal(_)) => 1,
            CliError::Core(_) => 2,
        }
    }
}
