use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid family spec: {0}")]
    Spec(String),

    /// The maximal-geodesic catalog hit its cap, so nothing exact can be said.
    #[error("maximal geodesic enumeration exceeded the cap of {cap}")]
    EnumerationOverflow { cap: usize },

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("outside the domain: {0}")]
    Domain(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Search limits ran out. Both bounds are certified.
    #[error("search budget exceeded (certified bounds {lower}..={upper})")]
    BudgetExceeded { lower: usize, upper: usize },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
