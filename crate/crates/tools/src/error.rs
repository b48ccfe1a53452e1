use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, malformed input files, non-dominant weights.
    #[error("{0}")]
    Usage(String),
    #[error("node budget of {budget} exceeded ({explored} nodes explored)")]
    Budget { budget: usize, explored: usize },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    /// Process exit code: 2 for usage and IO errors, 3 for the node budget.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Budget { .. } => 3,
        }
    }
}
