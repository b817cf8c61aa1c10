use thiserror::Error;

use crate::arith::Count;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order n must be at least {min}, got {n}")]
    OrderTooSmall { n: u64, min: u64 },

    #[error("order n = {n} exceeds the supported maximum {max}")]
    OrderTooLarge { n: u64, max: u64 },

    #[error("edge count m = {m} out of range for n = {n} (need {min} <= m <= {max})")]
    EdgeCountOutOfRange { n: u64, m: u64, min: u64, max: u64 },

    #[error("size r = {r} out of range (need {min} <= r)")]
    SizeOutOfRange { r: u64, min: u64 },

    #[error("size r = {r} exceeds the order n = {n}")]
    SizeExceedsOrder { r: u64, n: u64 },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: u64, n: u64 },

    #[error("self-loop on vertex {vertex}")]
    SelfLoop { vertex: u64 },

    #[error("zero has no decomposition C(s,2) + t with 0 < t <= s")]
    ZeroDecomposition,

    #[error("enumeration of {required} graphs exceeds the budget of {budget}")]
    BudgetExceeded { required: Count, budget: u64 },
}
