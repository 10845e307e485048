use thiserror::Error;

/// Crate-wide error type. Every fallible operation reports its failure mode
/// through one of these variants; none of them is ever produced by a passing
/// identity check (a refuted identity is a `bool`, not an error).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// A function of the limit variable has a pole at 0 after reduction.
    #[error("not regular at eps = 0")]
    NotRegular,

    /// A rational function in q has a pole at the requested point.
    #[error("pole at q = {point}")]
    Pole { point: String },

    /// A baxterized factor was requested with coinciding spectral parameters.
    #[error("singular baxterized factor: x^-1 y = 1")]
    SingularFactor,

    /// The fusion limit kept hitting poles after exhausting the retry budget.
    /// This cannot happen for standard tableaux unless the arithmetic is wrong.
    #[error("fusion limit failed for every line direction tried")]
    FusionLimitFailed,

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("bad rank: {detail}")]
    BadRank { detail: String },

    /// Transport across an adjacent transposition needs the swapped tableau
    /// to be standard, i.e. a content separation of at least 2.
    #[error("non-transportable swap at k = {k}: content separation {separation}")]
    NonTransportable { k: usize, separation: i64 },

    #[error("not a partition: {detail}")]
    NotAPartition { detail: String },

    #[error("not a standard tableau: {detail}")]
    NotStandard { detail: String },

    #[error("invalid insertion sequence: {detail}")]
    InvalidInsertionSequence { detail: String },

    /// Inner diagram is not contained in the outer one.
    #[error("diagram containment failed: {detail}")]
    NotContained { detail: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// An identity that the construction guarantees failed to hold.
    #[error("invariant violation: {what}")]
    InvariantViolation { what: String },

    #[error("invalid argument: {detail}")]
    InvalidArgument { detail: String },
}

impl Error {
    pub fn invariant(what: impl Into<String>) -> Self {
        Error::InvariantViolation { what: what.into() }
    }

    pub fn argument(detail: impl Into<String>) -> Self {
        Error::InvalidArgument { detail: detail.into() }
    }
}
