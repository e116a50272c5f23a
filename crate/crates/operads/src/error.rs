use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("bilinear form is degenerate")]
    DegenerateForm,

    #[error("images do not define a permutation")]
    NotAPermutation,

    #[error("invalid rational literal `{0}`")]
    BadRational(String),

    #[error("arity {arity} exceeds the configured bound {max} (raise max_arity to force it)")]
    ArityBound { arity: usize, max: usize },

    #[error("slot {slot} out of range 1..={arity}")]
    SlotOutOfRange { slot: usize, arity: usize },

    #[error("operation requires a {expected} presentation, got {got}")]
    KindMismatch {
        expected: &'static str,
        got: &'static str,
    },

    #[error("unknown zoo entry `{name}`; available: {available}")]
    UnknownZooEntry { name: String, available: String },

    #[error("generator map is not equivariant")]
    NotEquivariant,

    #[error("generator map is not invertible")]
    NotInvertible,

    #[error("relations are not stable under the S3 action")]
    NotS3Stable,

    #[error("relation vector lies outside the weight-2 ambient space")]
    RelationOutsideAmbient,

    #[error("structure maps do not satisfy the relations: {0} is not killed")]
    NotAnAlgebra(String),

    #[error("series has no linear term; composition inverse undefined")]
    NoLinearTerm,

    #[error("dimension table is missing arity {0}")]
    MissingDimension(usize),

    #[error("convolution elements live over different contexts")]
    ContextMismatch,

    #[error("invalid presentation file: {0}")]
    BadPresentationFile(String),

    #[error("invalid algebra file: {0}")]
    BadAlgebraFile(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
