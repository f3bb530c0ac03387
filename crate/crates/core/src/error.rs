use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The operation is undefined at this point (θ at the all-zero word, its
    /// inverse at the all-(s-1) word).
    #[error("outside the operator domain: {0}")]
    Domain(String),

    #[error("no predecessor: {0}")]
    NoPredecessor(String),

    #[error("capacity exceeded: {what} (limit {limit})")]
    Capacity { what: String, limit: u128 },

    #[error("search budget exhausted after {visited} nodes (budget {budget})")]
    Budget { visited: u64, budget: u64 },

    #[error("search exhausted without finding a perfect necklace")]
    SearchExhausted,
}

pub type Result<T> = std::result::Result<T, Error>;
