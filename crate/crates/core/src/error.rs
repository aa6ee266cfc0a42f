use thiserror::Error;

/// Errors produced by construction, parsing, and factorization routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("domain size must be positive")]
    EmptyDomain,

    #[error("image value {value} out of range for domain size {n}")]
    ImageOutOfRange { value: usize, n: usize },

    #[error("point {point} out of range for domain size {n}")]
    PointOutOfRange { point: usize, n: usize },

    #[error("images do not form a bijection")]
    NotABijection,

    #[error("transposition endpoints must differ, got ({x} {y})")]
    InvalidTransposition { x: usize, y: usize },

    #[error("map is not idempotent")]
    NotIdempotent,

    #[error("input must be singular (rank < n)")]
    NotSingular,

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("invalid idempotent pattern: {0}")]
    InvalidPattern(String),

    #[error("invalid cross-section: {0}")]
    InvalidCrossSection(String),

    #[error("cannot parse {what}: {text:?}")]
    Parse { what: &'static str, text: String },

    #[error("malformed word: {0}")]
    MalformedWord(String),

    #[error("rank bound {k} out of range for domain size {n}")]
    RankOutOfRange { k: usize, n: usize },

    #[error("generator set is empty")]
    EmptyGenerators,

    #[error("domain size {n} exceeds enumeration bound {max_n}")]
    DomainTooLarge { n: usize, max_n: usize },

    #[error("target is not a member of the generated semigroup")]
    NotAMember,
}

pub type Result<T> = std::result::Result<T, Error>;
