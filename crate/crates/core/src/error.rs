use alloc::string::String;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A numeric argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An integer index (degree, interval endpoint) is out of range.
    #[error("{what} = {value} outside [{lo}, {hi}]")]
    Range {
        what: &'static str,
        value: u64,
        lo: u64,
        hi: u64,
    },
    /// ζ(β) requested for β ≤ 1.
    #[error("zeta diverges for beta = {0} (needs beta > 1)")]
    Divergence(f64),
    /// An exact integer sum exceeded 128 bits.
    #[error("integer overflow in exact sum")]
    Overflow,
    /// A structural precondition of an operation does not hold.
    #[error("contract violation: {0}")]
    Contract(String),
    /// The graph has no edges, so the quantity is undefined.
    #[error("graph has no edges")]
    EmptyGraph,
    /// The exact solver refuses a connected component above its size limit.
    #[error("exact solver refuses a component of {size} vertices (limit {limit})")]
    OracleLimit { size: usize, limit: usize },
    /// The reduction cannot realize the requested degree sequence.
    #[error("reduction infeasible: {0}")]
    Infeasible(String),
    /// The generator would need more matching copies than its budget allows.
    #[error("generator needs {needed} copies, budget is {budget}")]
    CopyBudget { needed: u128, budget: u64 },
}

pub type Result<T> = core::result::Result<T, Error>;
