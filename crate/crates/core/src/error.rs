use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotAPrimePower(u32),

    #[error("field order {order} is above the supported maximum {max}")]
    UnsupportedFieldOrder { order: u32, max: u32 },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("vector is zero")]
    ZeroVector,

    #[error("matrix is singular")]
    Singular,

    #[error("{what}: size {actual} exceeds limit {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("vertex {0} is out of range")]
    InvalidVertex(usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("construction unavailable: {0}")]
    ConstructionUnavailable(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("homomorphism witness could not be translated into a valid code: {0}")]
    TranslationFailed(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn size(what: &'static str, limit: usize, actual: usize) -> Self {
        Error::SizeLimitExceeded {
            what,
            limit,
            actual,
        }
    }

    pub(crate) fn check_size(what: &'static str, limit: usize, actual: usize) -> Result<()> {
        if actual > limit {
            Err(Self::size(what, limit, actual))
        } else {
            Ok(())
        }
    }
}
