use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("group of order {order} exceeds the cap of {cap} ({what})")]
    OrderCap { order: u128, cap: u128, what: &'static str },

    #[error("search node budget of {budget} exhausted: {context}")]
    NodeBudget { budget: u64, context: String },

    #[error("group has a nontrivial centre of order {order}")]
    NontrivialCentre { order: usize },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("trivial group not allowed: {0}")]
    TrivialGroup(&'static str),

    #[error("invalid table: {0}")]
    InvalidTable(String),

    #[error("invalid construction: {0}")]
    Construction(String),

    #[error("contradictory constraints: {0}")]
    Constraints(String),

    #[error("syntax error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

impl Error {
    /// Errors that come from a size, step or node cap rather than bad input.
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::OrderCap { .. } | Error::NodeBudget { .. })
    }

    /// Errors caused by an input outside an operation's preconditions.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::NontrivialCentre { .. }
                | Error::OutOfRange(..)
                | Error::TrivialGroup(..)
                | Error::Parse { .. }
                | Error::DegreeMismatch { .. }
                | Error::InvalidPermutation(..)
        )
    }
}
