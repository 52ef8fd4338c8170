use thiserror::Error;

/// Errors surfaced by group parsing, graph construction and invariant
/// computation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group spec `{spec}`: {reason}")]
    InvalidSpec { spec: String, reason: String },

    #[error("group order {order} exceeds the configured cap of {cap}")]
    OrderCapExceeded { order: u64, cap: u64 },

    #[error("order must be a positive integer")]
    ZeroOrder,

    #[error("element does not belong to this group")]
    ElementGroupMismatch,

    #[error("operation is undefined on the empty graph")]
    EmptyGraph,

    #[error("the center is undefined for disconnected graphs")]
    DisconnectedCenter,

    #[error("vertex connectivity requires at least two vertices")]
    TooFewVertices,

    #[error("oracle refused the instance: {0}")]
    OracleTooLarge(String),

    #[error("unknown export format `{0}` (expected dot, json or edgelist)")]
    UnknownFormat(String),

    #[error("unknown planarity family `{0}`")]
    UnknownFamily(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("invalid graph json: {0}")]
    InvalidGraphJson(String),
}
