use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("no edges")]
    NoEdges,

    #[error("graph not connected")]
    NotConnected,

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    InvalidVertex { vertex: u32, n: usize },

    #[error("{what} needs {needed} {unit} but the budget allows {limit}; pass force to override")]
    BudgetExceeded {
        what: &'static str,
        needed: u64,
        limit: u64,
        unit: &'static str,
    },

    #[error(
        "exact four-point scan over {n} vertices exceeds the quadruple budget ({limit}); \
         use the sampling mode for an approximate lower bound or force the exact scan"
    )]
    QuadrupleBudget { n: usize, limit: usize },

    #[error("requires exact profile")]
    RequiresProfile,

    #[error("distance estimator contract violated: {0}")]
    ContractViolation(String),

    #[error("invalid format: {0}")]
    InvalidFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for refusals caused by a size or work budget rather than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. } | Error::QuadrupleBudget { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
