use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors split into two families: malformed input (`Shape`, `Parse`,
/// `DegreeCap`, `Budget`) and mathematical preconditions that the supplied
/// data does not satisfy (everything else).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("generation budget exhausted: {0}")]
    Budget(String),
    #[error("not a Leibniz algebra: {0}")]
    NotLeibniz(String),
    #[error("not a representation: {0}")]
    NotRepresentation(String),
    #[error("not a Nijenhuis operator: {0}")]
    NotNijenhuis(String),
    #[error("not a cocycle: {0}")]
    NotCocycle(String),
    #[error("not a twisted relative Rota-Baxter operator: {0}")]
    NotTwistedRotaBaxter(String),
    #[error("not an NS-Leibniz algebra: {0}")]
    NotNsLeibniz(String),
    #[error("not a Nijenhuis element: {0}")]
    NotNijenhuisElement(String),
    #[error("singular map: {0}")]
    Singular(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    /// True for errors caused by malformed input rather than by the
    /// mathematics of well-formed data.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Shape(_) | Error::Parse(_) | Error::DegreeCap { .. } | Error::Budget(_))
    }
}
