use modtop_core::formula::ParseError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ToolError {
    #[error(transparent)]
    Core(#[from] modtop_core::Error),
    #[error("formula: {0}")]
    Parse(#[from] ParseError),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{what} is capped at {cap}, got {got}")]
    Cap { what: &'static str, cap: usize, got: usize },
    #[error("{0}")]
    Usage(String),
}

impl ToolError {
    /// Process exit code: 3 for cap violations (including the valuation
    /// bit budget), 2 for everything the caller got wrong.
    pub fn exit_code(&self) -> i32 {
        match self {
            ToolError::Cap { .. } | ToolError::Core(modtop_core::Error::BudgetExceeded { .. }) => 3,
            _ => 2,
        }
    }
}

pub type Result<T, E = ToolError> = std::result::Result<T, E>;
