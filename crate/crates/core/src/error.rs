use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("element is not in the group")]
    NotInGroup,

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("character tables do not match: {0}")]
    TableMismatch(String),

    #[error("group order {order} exceeds the budget {limit}")]
    BudgetExceeded { order: u128, limit: u128 },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("unrecognized type label: {0}")]
    InvalidType(String),

    #[error("{0} is not coprime to the conductor")]
    NotCoprime(u64),

    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    #[error("invalid places: {0}")]
    InvalidPlaces(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
