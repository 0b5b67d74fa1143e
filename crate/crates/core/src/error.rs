use thiserror::Error;

/// Errors produced by the exact-computation kernels.
#[derive(Debug, Error)]
pub enum Error {
    /// Attempt to compose maps whose objects do not line up.
    #[error("non-composable: target of inner map is {inner_target}, source of outer map is {outer_source}")]
    NonComposable {
        inner_target: usize,
        outer_source: usize,
    },

    /// A map table violates the invariants of its category.
    #[error("invalid map: {0}")]
    InvalidMap(String),

    /// Boundary matrices do not compose to zero.
    #[error("not a complex: d_{degree} . d_{} != 0", degree + 1)]
    NotAComplex { degree: i64 },

    /// Matrix dimensions do not match the requested operation.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A relation of a presented group fails on supplied generator matrices.
    #[error("representation relation violated: {0}")]
    BadRepresentation(String),

    /// A tabulated module violates a category relation.
    #[error("functoriality violated: {0}")]
    BadModule(String),

    /// An operation needs module values in degrees that were not tabulated.
    #[error("insufficient degrees: requires max_degree >= {required}, module has {available}")]
    InsufficientDegrees { required: usize, available: usize },

    /// Input outside the meaningful range of an operation.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// Relation supplied to a nerve constructor is not a strict partial order.
    #[error("cyclic relation: the supplied order relation is not a strict partial order")]
    CyclicRelation,

    /// Group action fails to be free where freeness is required.
    #[error("equivariant cochains require free action: {0}")]
    NonFreeAction(String),

    /// Quotient requested along a basis subset that is not boundary-closed.
    #[error("subset not closed under boundary: {0}")]
    NotBoundaryClosed(String),

    /// An internal exactness assertion failed; always a bug.
    #[error("internal assertion failed: {0}")]
    Internal(String),

    /// Schema violation in an input file, with a JSON-pointer to the fault.
    #[error("schema violation at {pointer}: {message}")]
    Schema { pointer: String, message: String },
}
