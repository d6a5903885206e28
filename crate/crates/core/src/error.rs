//! Error type shared by the numeric modules.

/// Errors produced by population operations, selection, metrics, and problems.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("operation requires a nonempty population")]
    EmptyPopulation,

    #[error("objective vectors have mismatched lengths ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },

    #[error("the selected set is empty")]
    EmptySelectedSet,

    #[error("selection budget {requested} exceeds the {available} available candidates")]
    BudgetExceedsCandidates { requested: usize, available: usize },

    #[error("budget {budget} does not truncate a candidate set of size {candidates}")]
    NoTruncationNeeded { budget: usize, candidates: usize },

    #[error("need {requested} survivors but the combined population holds only {available}")]
    InsufficientSolutions { requested: usize, available: usize },

    #[error("parent count {0} must be even")]
    OddParentCount(usize),

    #[error("invalid decision vector: {0}")]
    InvalidDecisionVector(String),

    #[error("problem `{0}` has no analytic Pareto-front sampler")]
    NoAnalyticFront(String),

    #[error("operation requires a nonempty set")]
    EmptySet,

    #[error("operation supports {supported}-objective input only, got {actual}")]
    DimensionUnsupported { supported: usize, actual: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
