use alloc::string::String;

use thiserror::Error;

use crate::element::GroupElement;
use crate::params::GroupParams;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank r = {0} is below the minimum of 5")]
    RankTooSmall(usize),
    #[error("rank r = {0} exceeds the supported maximum of {max}", max = crate::element::MAX_RANK)]
    RankTooLarge(usize),
    #[error("parameter {name} = {value} is not in {{0,1,2}}")]
    BadParameter { name: &'static str, value: u8 },
    #[error("{0} is not one of the canonical parameter triples for its rank")]
    NonCanonical(GroupParams),
    #[error("element has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("exponent {value} at position {index} is not in {{0,1,2}}")]
    BadExponent { index: usize, value: u8 },
    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("subgroup index {index} out of range 1..={max}")]
    GammaIndexOutOfRange { index: usize, max: usize },
    #[error("subgroup closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },
    #[error("brute-force scan needs r <= {limit}, got r = {rank}")]
    ScanLimitExceeded { rank: usize, limit: usize },
    #[error("automorphism parameter {name} = {value} out of range")]
    BadAutParameter { name: &'static str, value: u8 },
    #[error("{name} = {element} is not in gamma_2(S)")]
    NotInGamma2 { name: &'static str, element: GroupElement },
    #[error("theta({e},{d},{f}; ..) does not define an automorphism")]
    NotAnAutomorphism { e: u8, d: u8, f: u8 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
