use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: i64, strands: usize },
    #[error("band b({i},{j}) invalid on {strands} strands")]
    InvalidBand { i: usize, j: usize, strands: usize },
    #[error("braid group needs at least one strand")]
    NoStrands,
    #[error("strand mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("not destabilizable")]
    NotDestabilizable,
    #[error("parse error{}: {msg}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Parse { line: Option<usize>, msg: String },
    #[error("resource budget exceeded after {nodes} nodes")]
    BudgetExceeded { nodes: usize },
    #[error("zero polynomial has no degrees")]
    ZeroPolynomial,
    #[error("Bennequin violation: a(B) = {writhe} exceeds n(B) - chi = {bound}")]
    BennequinViolation { writhe: i64, bound: i64 },
    #[error("negative genus {0}: quasi-positivity assertion is false")]
    NegativeGenus(i64),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("invalid slope ({0}, {1})")]
    InvalidSlope(i64, i64),
    #[error("malformed move at step {step}: {reason}")]
    MalformedMove { step: usize, reason: String },
}

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse { line: None, msg: msg.into() }
    }

    pub fn with_line(self, line: usize) -> Self {
        match self {
            Error::Parse { msg, .. } => Error::Parse { line: Some(line), msg },
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
