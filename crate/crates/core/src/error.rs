use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("image vector is not a bijection")]
    InvalidPermutation,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("permutation pair does not generate a transitive group")]
    NotTransitive,
    #[error("{what} exceeds cap ({value} > {cap})")]
    CapExceeded {
        what: &'static str,
        value: u128,
        cap: u128,
    },
    #[error("search budget exceeded at {frontier}")]
    BudgetExceeded { frontier: String },
    #[error("not a subgroup")]
    NotASubgroup,
    #[error("not a block system")]
    NotABlockSystem,
    #[error("no subgroup matching the predicate was found")]
    SubgroupNotFound,
    #[error("internal verification failed: {0}")]
    Verification(String),
    #[error("result is not a nonnegative integer: {0}")]
    NonInteger(String),
    #[error("unsupported query: {0}")]
    Unsupported(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
