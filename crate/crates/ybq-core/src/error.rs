use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("half-dimension N must be at least 1")]
    EmptySpace,

    #[error("half-dimension N = {0} is too large (limit {1})")]
    SpaceTooLarge(u32, u32),

    #[error("basis index 0 is not valid, use signed indices in 1..=N or -N..=-1")]
    ZeroIndex,

    #[error("basis index {index} outside the signed range for N = {n}")]
    IndexOutOfRange { index: i64, n: u32 },

    #[error("expected a multi-index with {expected} legs, got {found}")]
    LegMismatch { expected: u32, found: u32 },

    #[error("operators live on different spaces: N = {left} vs N = {right}")]
    SpaceMismatch { left: u32, right: u32 },

    #[error("operators have different leg counts: {left} vs {right}")]
    LegCountMismatch { left: u32, right: u32 },

    #[error("{legs} legs over dimension {dim} exceeds the addressable index range")]
    AddressOverflow { legs: u32, dim: u32 },

    #[error("invalid embedding of a {legs}-leg operator at positions {positions:?} in {total} legs")]
    BadEmbedding {
        positions: Vec<u32>,
        legs: u32,
        total: u32,
    },

    #[error("leg {leg} out of range for a {legs}-leg operator")]
    BadLeg { leg: u32, legs: u32 },

    #[error("evaluation point too close to a pole of {what} (|denominator| = {abs:.3e})")]
    PoleProximity { what: &'static str, abs: f64 },

    #[error(
        "cross-check failed for {family}: the two construction routes deviate by {deviation:.3e} \
         (tolerance {tolerance:.1e})"
    )]
    CrossCheckFailed {
        family: &'static str,
        deviation: f64,
        tolerance: f64,
    },

    #[error(
        "sampler found no admissible point after {attempts} attempts (pole margin {margin}); \
         try a smaller --pole-margin"
    )]
    SamplingExhausted { attempts: u32, margin: f64 },

    #[error("cannot parse {input:?} as a complex number: {reason}")]
    BadComplex { input: String, reason: &'static str },

    #[error("identity {identity} is not applicable to family {family}")]
    NotApplicable { identity: String, family: String },

    #[error("identity {0} requires a --family argument")]
    FamilyRequired(String),

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
}
