use thiserror::Error;

/// Errors produced by semigroup construction, closure computation and tree
/// enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator set is empty")]
    EmptyGenerators,
    #[error("generator 0 is not allowed")]
    ZeroGenerator,
    #[error("generators are not coprime (gcd = {gcd})")]
    NonCoprime { gcd: u64 },
    #[error("{0} is not a minimal generator")]
    NotMinimalGenerator(u64),
    #[error("generator {m} does not exceed the Frobenius number {frobenius}")]
    NotAboveFrobenius { m: u64, frobenius: i64 },
    #[error("gap set is not the complement of a numerical semigroup")]
    NotASemigroup,
    #[error("X must be non-empty")]
    EmptyX,
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("instance has no solution")]
    Infeasible,
    #[error("arithmetic overflow")]
    Overflow,
    #[error("resource limit exceeded after {nodes} nodes (depth reached {depth})")]
    ResourceLimit { nodes: usize, depth: usize },
    #[error("instance too large for the brute-force oracle (r + g = {scale}, bound {bound})")]
    ScaleTooLarge { scale: u64, bound: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
