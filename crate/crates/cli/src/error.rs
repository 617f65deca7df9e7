use thiserror::Error;

/// Input, parse and I/O failures. All map to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("CSV output: {0}")]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Core(#[from] qfasym_core::Error),

    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Self::Io {
            path: path.into(),
            source,
        }
    }
}
