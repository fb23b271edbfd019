use crate::paramwords::TypeCatalog;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed or inconsistent input (unknown vertex, language mismatch, ...).
    #[error("input error: {0}")]
    Input(String),

    /// A class specification violates its own invariants.
    #[error("invalid class spec: {0}")]
    Spec(String),

    /// A configured resource cap would be exceeded.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Type enumeration stopped early; the partial catalogue is attached and
    /// flagged as not stabilized.
    #[error("capacity exceeded after length bound {}: {reason}", .partial.bound)]
    CatalogCapacity {
        reason: String,
        partial: Box<TypeCatalog>,
    },

    /// An outcome that should be impossible for a class satisfying the
    /// cycle-completion hypothesis (exhausted completion search, failed
    /// extension of the target by a duplicated vertex).
    #[error("spec-validity alarm: {0}")]
    Alarm(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn spec(msg: impl Into<String>) -> Self {
        Error::Spec(msg.into())
    }

    pub(crate) fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }
}
