use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid folding data: {0}")]
    InvalidFolding(String),

    #[error("invalid chamber system: {0}")]
    InvalidChamberSystem(String),

    #[error("group has more than {cutoff} elements")]
    GroupTooLarge { cutoff: usize },

    #[error("{what} budget of {budget} exhausted")]
    BudgetExhausted { what: &'static str, budget: u64 },

    #[error("input is not a building: {0}")]
    NotABuilding(String),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable machine-readable code, used by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidArgument(_) => "invalid-argument",
            Error::InvalidMatrix(_) => "invalid-matrix",
            Error::InvalidFolding(_) => "invalid-folding",
            Error::InvalidChamberSystem(_) => "invalid-chamber-system",
            Error::GroupTooLarge { .. } => "group-too-large",
            Error::BudgetExhausted { .. } => "budget-exhausted",
            Error::NotABuilding(_) => "not-a-building",
            Error::Json(_) => "malformed-json",
        }
    }
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
