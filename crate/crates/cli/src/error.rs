use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] braidkit::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("corpus line {line}: {msg}")]
    Corpus { line: usize, msg: String },
    #[error("{0}")]
    Usage(String),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use braidkit::Error as E;
        match self {
            CliError::Core(E::BudgetExceeded { .. }) => EXIT_UNKNOWN,
            CliError::Core(E::BennequinViolation { .. } | E::NegativeGenus(_)) => EXIT_VIOLATION,
            CliError::Io { .. } => EXIT_USAGE,
            _ => EXIT_USAGE,
        }
    }
}
