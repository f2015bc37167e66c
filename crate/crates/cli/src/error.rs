use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{location}: {source}")]
    Graph {
        location: String,
        #[source]
        source: covreg_core::Error,
    },
    #[error(transparent)]
    Core(#[from] covreg_core::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> CliError {
        CliError::Input(msg.into())
    }

    /// 2 for bad input, 3 for exceeded capacity.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) | CliError::Graph { source: e, .. } if e.is_capacity() => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
