//! Error type shared across the crate.
//!
//! Parameter errors carry a message naming the violated invariant, so CLI
//! users see exactly which precondition failed rather than a generic code.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Graph orders outside 1..=64 cannot be represented by the bitmask rows.
    #[error("graph order {0} out of range (1..=64)")]
    OrderOutOfRange(usize),

    #[error("vertex {index} out of range for graph of order {order}")]
    VertexOutOfRange { index: usize, order: usize },

    #[error("self-loop at vertex {0} rejected (graphs here are simple)")]
    SelfLoop(usize),

    #[error("vector length {got} does not match graph order {want}")]
    DimensionMismatch { got: usize, want: usize },

    #[error("graphs have different orders: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    /// The message names the violated invariant, e.g.
    /// "t-1 >= kappa required for family B".
    #[error("{0}")]
    InvalidParams(String),

    #[error("negative discriminant {disc} for quartic {label}")]
    NegativeDiscriminant { disc: f64, label: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("edge list: {0}")]
    EdgeList(String),

    #[error("order {n} exceeds the exhaustive-enumeration limit {max}")]
    EnumerationTooLarge { n: usize, max: usize },

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
