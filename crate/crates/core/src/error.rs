use alloc::string::String;
use num_bigint::BigInt;
use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Variants fall in three groups: bad input (`InvalidParams`, `Precondition`,
/// residue and primality violations), failed congruence hypotheses, and
/// verification failures, where a result contradicts something that is
/// supposed to be a theorem.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: m = {m}, t = {t} (both must be >= 1)")]
    InvalidParams { m: u64, t: u64 },

    #[error("precondition violated: {0}")]
    Precondition(&'static str),

    #[error("{name} = {value} is not congruent to {expected} mod {modulus}")]
    ResidueClass {
        name: &'static str,
        value: u64,
        expected: u64,
        modulus: u64,
    },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("constant term {0} is not a unit; series is not invertible")]
    NotInvertible(BigInt),

    #[error("n = {n} exceeds the enumeration oracle ceiling {ceiling}")]
    OracleCeiling { n: u64, ceiling: u64 },

    #[error("partition table holds {len} values, {needed} required")]
    TableTooShort { needed: usize, len: usize },

    #[error("modulus {modulus} is not coprime to {value}")]
    NotCoprime { value: u64, modulus: u64 },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("hypothesis fails: p({argument}) = {residue} mod {modulus} at n = {n}")]
    Hypothesis {
        n: u64,
        argument: u64,
        residue: u64,
        modulus: u64,
    },

    #[error(
        "routes disagree at n = {n}: oracle = {oracle:?}, series = {series}, identity = {identity}"
    )]
    RouteDisagreement {
        n: u64,
        oracle: Option<BigInt>,
        series: BigInt,
        identity: BigInt,
    },

    #[error("verification failure: {0}")]
    Verification(String),
}

impl Error {
    /// True for errors that contradict a proven statement rather than
    /// reporting bad input.
    pub fn is_verification_failure(&self) -> bool {
        matches!(
            self,
            Error::RouteDisagreement { .. } | Error::Verification(_)
        )
    }

    pub fn is_hypothesis_violation(&self) -> bool {
        matches!(self, Error::Hypothesis { .. })
    }
}

pub type Result<T> = core::result::Result<T, Error>;
