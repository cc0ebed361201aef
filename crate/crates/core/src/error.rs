use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("orbit size {size} is not a positive power of {p}")]
    NotPowerOfPrime { p: u64, size: u64 },

    #[error("degree must be at least {min}, got {got}")]
    DegreeTooSmall { min: usize, got: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group of order {order} exceeds the materialization cap {cap}")]
    MaterializationCap { order: u128, cap: u128 },

    #[error("group order overflowed 128 bits")]
    OrderOverflow,

    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("color {color} out of range for a {k}-colored graph")]
    ColorOutOfRange { color: usize, k: usize },

    #[error("a pair needs two distinct vertices, got {0} twice")]
    SelfPair(usize),

    #[error("brute force is capped at {cap} vertices, graph has {n}")]
    BruteForceCap { n: usize, cap: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("spec does not fit this construction: {0}")]
    Shape(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("malformed graph file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
