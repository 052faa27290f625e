use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied value violates an operation's precondition.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An edge coloring does not fit the graph it is paired with.
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    /// An exact search ran past its configured node budget. The result is
    /// indeterminate, never silently wrong.
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    /// No coloring with at most `k_max` colors satisfies the requested
    /// connectivity property.
    #[error("no valid coloring with at most {k_max} colors")]
    PaletteExhausted { k_max: usize },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed input file (JSON or edge-list text).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
