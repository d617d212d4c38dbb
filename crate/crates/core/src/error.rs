use thiserror::Error;

use crate::rootsys::Family;

/// Errors raised by the root-system, Weyl-group and Picard-group calculus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("type {family}{rank} is out of range: {bound}")]
    InvalidRank {
        family: Family,
        rank: usize,
        bound: &'static str,
    },

    #[error("simple index {index} is out of range 1..={rank}")]
    SimpleIndexOutOfRange { index: usize, rank: usize },

    #[error("positive-root index {index} is out of range (have {count} positive roots)")]
    RootIndexOutOfRange { index: usize, count: usize },

    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error(
        "word is not reduced: letter {letter} at position {position} does not lengthen the element"
    )]
    NotReduced { position: usize, letter: usize },

    #[error("word is not a Coxeter word (each simple reflection exactly once)")]
    NotCoxeter,

    #[error("element support {support:?} is not the full set of simple roots")]
    SupportNotFull { support: Vec<usize> },

    #[error("theorem excludes type A2")]
    ExcludedTypeA2,

    #[error("operation requires rank >= 2")]
    RankTooSmall,

    #[error("fundamental weight omega_{index} is not minuscule")]
    NotMinuscule { index: usize },

    #[error("words represent different Weyl group elements")]
    MixedElements,

    #[error("Picard class is in the {got} basis, expected {expected}")]
    BasisMismatch {
        expected: &'static str,
        got: &'static str,
    },

    #[error("vector {0:?} is not a root of this system")]
    NotARoot(Vec<i64>),

    #[error("weight {0:?} is not in the root lattice")]
    NotInRootLattice(Vec<i64>),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
