use thiserror::Error;

/// Errors raised by field construction, transforms and the verification sweeps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("extension degree {0} is outside the supported range 1..=24")]
    DegreeOutOfRange(u32),

    #[error("modulus {modulus:#x} is not an irreducible polynomial of degree {n}")]
    InvalidModulus { n: u32, modulus: u64 },

    #[error("division by zero: 0 has no multiplicative inverse")]
    DivisionByZero,

    #[error("{m} does not divide the extension degree {n}")]
    InvalidSubfield { n: u32, m: u32 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("function is not bent; its dual is undefined")]
    NotBent,

    #[error("sweep at n = {n} exceeds the limit n <= {limit}; use the coset-reduced or sampled mode")]
    SweepTooLarge { n: u32, limit: u32 },

    #[error("argument outside the domain of the formula: {0}")]
    Domain(String),

    #[error("malformed hex string: {0}")]
    InvalidHex(String),

    #[error("could not write the report: {0}")]
    Output(String),
}

pub type Result<T> = std::result::Result<T, Error>;
