use num_bigint::BigInt;
use thiserror::Error;

use crate::weight::Weight;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidCartanType(String),
    #[error("expected a weight of rank {expected}, got rank {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("{0:?} is not a root (simple-root coordinates)")]
    NotARoot(Vec<i64>),
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("weight {weight} is singular for p = {p}")]
    Singular { weight: Weight, p: i64 },
    #[error("p = {0} must be at least 2")]
    InvalidPrime(i64),
    #[error("p = {p} is smaller than the Coxeter number h = {h}")]
    PrimeBelowCoxeter { p: i64, h: i64 },
    #[error("wall indices {0:?} do not describe an alcove")]
    UnrealizableAlcove(Vec<i64>),
    #[error("weight {0} is not in the dot orbit of 0")]
    NotInPrincipalOrbit(Weight),
    #[error("not an ideal: {missing} lies below {member} but is missing")]
    NotAnIdeal { member: Weight, missing: Weight },
    #[error("character is not W-invariant near weight {0}")]
    NotWInvariant(Weight),
    #[error("formula output at {weight} is not a character: multiplicity {mult} at {at}")]
    NotACharacter { weight: Weight, at: Weight, mult: BigInt },
    #[error("simple root index {index} out of range 1..={rank}")]
    SimpleIndexOutOfRange { index: usize, rank: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("index d = {d} out of range {lo}..={hi}")]
    IndexOutOfRange { d: usize, lo: usize, hi: usize },
    #[error("partition sizes differ: {left} vs {right}")]
    SizeMismatch { left: i64, right: i64 },
    #[error("partition has {parts} nonzero parts, more than n = {n}")]
    TooManyParts { parts: usize, n: usize },
    #[error("two independent computations disagree: {0}")]
    Disagreement(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable tag, used in JSON error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidCartanType(_) => "invalid_cartan_type",
            Error::RankMismatch { .. } => "rank_mismatch",
            Error::NotARoot(_) => "not_a_root",
            Error::NotDominant(_) => "not_dominant",
            Error::Singular { .. } => "singular",
            Error::InvalidPrime(_) => "invalid_prime",
            Error::PrimeBelowCoxeter { .. } => "prime_below_coxeter",
            Error::UnrealizableAlcove(_) => "unrealizable_alcove",
            Error::NotInPrincipalOrbit(_) => "not_in_principal_orbit",
            Error::NotAnIdeal { .. } => "not_an_ideal",
            Error::NotWInvariant(_) => "not_w_invariant",
            Error::NotACharacter { .. } => "not_a_character",
            Error::SimpleIndexOutOfRange { .. } => "simple_index_out_of_range",
            Error::InvalidPartition(_) => "invalid_partition",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::SizeMismatch { .. } => "size_mismatch",
            Error::TooManyParts { .. } => "too_many_parts",
            Error::Disagreement(_) => "disagreement",
            Error::Parse(_) => "parse",
        }
    }
}
