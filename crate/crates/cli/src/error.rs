use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("non-dyadic denominator {denominator} at {line}:{column}")]
    NonDyadicDenominator {
        line: usize,
        column: usize,
        denominator: String,
    },
    #[error("invalid state at line {line}: {message}")]
    InvalidState { line: usize, message: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Engine(#[from] cgt_diamond_core::Error),
}

impl CliError {
    /// Stable upper-case tag used in JSON output.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "PARSE_ERROR",
            CliError::NonDyadicDenominator { .. } => "NON_DYADIC_DENOMINATOR",
            CliError::InvalidState { .. } => "INVALID_STATE",
            CliError::Io { .. } => "IO_ERROR",
            CliError::Engine(_) => "ENGINE_ERROR",
        }
    }
}
