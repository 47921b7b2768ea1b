//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// The empty set is rejected as `L` or `S` in every equation operation.
    #[error("empty subset: the equation operations are defined on non-empty subsets only")]
    EmptySubset,

    #[error("group {0} is not abelian")]
    NotAbelian(String),

    #[error("group {group} of order {order} is not a p-group for p = {p}")]
    NotPGroup { group: String, p: u64, order: usize },

    #[error("the power map x \u{21a6} x^{n} on {group} is not an endomorphism")]
    NotEndomorphism { group: String, n: u64 },

    #[error("n = {n} is not coprime to the group exponent {exponent}")]
    CoprimeRequired { n: u64, exponent: u64 },

    #[error("the given element set is not a subgroup")]
    NotSubgroup,

    #[error("requires a normal subset (a union of conjugacy classes)")]
    NotNormalSubset,

    #[error("group {group} is not tagged as an extraspecial family member")]
    NotExtraspecial { group: String },

    #[error("subgroup lattice too large: order {order} exceeds bound {bound}")]
    LatticeTooLarge { order: usize, bound: usize },

    #[error("oracle bound exceeded: preimage has {preimage} elements, bound is {bound}")]
    OracleBoundExceeded { preimage: usize, bound: usize },

    #[error("requested order {requested} exceeds the supported bound {bound}")]
    MaxOrderExceeded { requested: usize, bound: usize },

    /// Two independent computations of the same quantity disagreed, or a
    /// computed result contradicts a proven classification. Either way the
    /// build is wrong and the result must not be trusted.
    #[error("verification conflict: {detail}")]
    VerificationConflict { detail: String },

    #[error("construction error: {0}")]
    Construction(String),

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
