use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),

    #[error("weight mismatch: context has weight {expected}, call used {got}")]
    WeightMismatch { expected: String, got: String },

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: String, right: String },

    #[error("operator must annihilate the identity, but q(1) = {0}")]
    IdentityNotAnnihilated(String),

    #[error("a seed is required for randomized runs")]
    MissingSeed,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_error(what: &'static str, input: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        what,
        input: input.to_string(),
        reason: reason.into(),
    }
}
