//! Error type shared across the library.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("invalid permutation image vector")]
    InvalidPermutation,

    #[error("cycle point {point} outside 1..={degree}")]
    CyclePoint { point: usize, degree: usize },

    #[error("point {point} repeated within one generator")]
    CycleRepeat { point: usize },

    #[error("group document: {0}")]
    GroupDoc(String),

    #[error("group order exceeds cap {cap} during generation")]
    OrderCap { cap: usize },

    #[error("subgroup count exceeds cap {cap}")]
    SubgroupCap { cap: usize },

    #[error("element index {index} out of range for group of order {order}")]
    ElementIndex { index: usize, order: usize },

    #[error("mask is not closed under multiplication")]
    NotASubgroup,

    #[error("subgroup is not contained in the ambient subgroup")]
    NotContained,

    #[error("subgroup is not normal in the ambient subgroup")]
    NotNormal,

    #[error("subgroups belong to different parent groups")]
    ParentMismatch,

    #[error("class {0} is not closed under the operations this use requires (needs: {1})")]
    ClassNotApplicable(String, &'static str),

    #[error("class document: {0}")]
    ClassDoc(String),

    #[error("fitting set document: {0}")]
    FittingDoc(String),

    #[error("candidate member family violates axiom {axiom}: {detail}")]
    AxiomViolation { axiom: &'static str, detail: String },

    #[error("empty seed or member family")]
    EmptyFamily,

    #[error("prime set must be nonempty here")]
    EmptyPrimeSet,

    #[error("h-function must assign a set to every prime of pi (missing {missing})")]
    MissingAssignment { missing: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
