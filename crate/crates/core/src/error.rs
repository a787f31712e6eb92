use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient domains differ: {0}")]
    DomainMismatch(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("elements belong to different algebras")]
    AlgebraMismatch,

    #[error("algebra has no symmetrizing form")]
    NotSymmetric,

    #[error("subspace is not stable under both multiplications: {0}")]
    NotABimodule(String),

    #[error("{what}: dimension {dim} exceeds the limit {limit}")]
    ScaleLimitExceeded {
        what: &'static str,
        dim: usize,
        limit: usize,
    },

    #[error("no derivation {0} exists for these parameters")]
    NoSuchDerivation(String),

    #[error("invalid socle-valued map: {0}")]
    InvalidSocleMap(String),

    #[error("map is not a derivation: {0}")]
    NotADerivation(String),

    #[error("no dual pairing basis found in the second socle layer")]
    PairingNotFound,

    #[error("elements belong to different Lie structures")]
    StructureMismatch,

    #[error("element is not central")]
    NotCentral,

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("constructor-supplied data failed verification: {0}")]
    VerificationFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
