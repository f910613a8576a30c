use thiserror::Error;

/// Errors shared by the lattice, surface and verdict layers.
///
/// The variants separate malformed inputs ([`Error::Schema`], dimension
/// mismatches) from violated mathematical preconditions (degenerate forms,
/// missing embeddings, zero vectors) so that callers can map them onto
/// distinct exit statuses.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate form")]
    DegenerateForm,

    #[error("gram matrix not symmetric")]
    NotSymmetric,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("zero vector not allowed")]
    ZeroVector,

    #[error("glue not integral")]
    GlueNotIntegral,

    #[error("discriminant group not Z/2")]
    DiscriminantNotOrderTwo,

    #[error("extension would be odd")]
    OddExtension,

    #[error("unknown standard lattice `{0}`")]
    UnknownStandardLattice(String),

    #[error("full embedding required")]
    FullEmbeddingRequired,

    #[error("invalid target for this surface kind: {0}")]
    InvalidTarget(String),

    #[error("invalid surface model: {0}")]
    InvalidModel(String),

    #[error("mathematical precondition violated: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
