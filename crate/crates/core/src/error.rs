use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An input violates the precondition of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The realization solver did not reach the requested residual.
    #[error(
        "solver did not converge after {iterations} iterations (best residual {best_residual:.3e})"
    )]
    Solver {
        iterations: usize,
        best_residual: f64,
    },

    /// Cycle enumeration ran past its node budget.
    #[error("search budget of {budget} nodes exhausted after {cycles_checked} cycles (complete up to length {complete_len})")]
    Budget {
        budget: u64,
        cycles_checked: u64,
        complete_len: usize,
    },

    /// Geometric data disagrees with the combinatorics it was computed from.
    #[error("inconsistent data for faces ({0}, {1}): {2}")]
    Inconsistent(usize, usize, String),

    /// The ideal-tetrahedron decomposition degenerated for every apex.
    #[error("decomposition error: {0}")]
    Decomposition(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
