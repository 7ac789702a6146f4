//! Error types shared across the engine.

use alloc::string::String;
use thiserror::Error;

/// Everything that can go wrong when driving the engine with bad
/// parameters, plus the internal closure assertion.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order parameter n must be at least 1")]
    InvalidGroupOrder,
    #[error("operands belong to different dihedral contexts")]
    ContextMismatch,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("lattice is not contained in the claimed superlattice")]
    NotASublattice,
    #[error("{0} does not divide {1}")]
    NotADivisor(u64, u64),
    #[error("{0} is not coprime to {1}")]
    NotCoprime(u64, u64),
    #[error("invalid quintuple: {0}")]
    InvalidQuintuple(QuintupleViolation),
    #[error("quintuple components must be odd in positions 1 and 4: {0}")]
    OddnessRequired(QuintupleViolation),
    #[error("module is not closed under the group action (internal realization bug)")]
    ActionClosureViolated,
    #[error("operation requires a submodule of the rank-one free module")]
    AmbientRankNotOne,
    #[error("integer overflow in quintuple arithmetic")]
    QuintupleOverflow,
    #[error("quintuple reduction exceeded its step budget")]
    ReductionBudgetExceeded,
    #[error("unknown check id `{0}`")]
    UnknownCheckId(String),
}

/// The specific clause of the surjection predicate a quintuple violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum QuintupleViolation {
    #[error("s1, s2, s3 are not coprime")]
    FirstTripleNotCoprime,
    #[error("s4, s5 are not coprime")]
    SecondPairNotCoprime,
    #[error("s1 is even")]
    S1Even,
    #[error("s4 is even")]
    S4Even,
}
