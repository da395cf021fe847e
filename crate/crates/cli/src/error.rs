use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const HYPOTHESIS: i32 = 2;
    pub const VERIFICATION: i32 = 3;
    pub const IO: i32 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] mexpart_core::Error),

    #[error("{0}")]
    Usage(String),

    #[error("{path}: {1}", path = .0)]
    Io(String, #[source] std::io::Error),

    #[error("csv: {0}")]
    Csv(#[source] csv::Error),

    #[error("json: {0}")]
    Json(#[source] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_hypothesis_violation() => exit::HYPOTHESIS,
            CliError::Core(e) if e.is_verification_failure() => exit::VERIFICATION,
            CliError::Core(_) | CliError::Usage(_) => exit::USAGE,
            CliError::Io(..) | CliError::Csv(_) | CliError::Json(_) => exit::IO,
        }
    }
}
