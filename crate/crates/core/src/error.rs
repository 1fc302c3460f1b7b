use thiserror::Error;

/// Errors raised by semigroup construction and the decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no generators given")]
    EmptyInput,
    #[error("generators must be positive integers")]
    ZeroGenerator,
    #[error("gcd of generators is {gcd}, not 1")]
    GcdNotOne { gcd: u64 },
    #[error("{element} is not a nonzero element of the semigroup")]
    NotAMember { element: u64 },
    #[error("negative exponent {value} in polynomial generating function")]
    NegativeExponent { value: i64 },
    #[error("invalid arithmetic Apery form: {0}")]
    InvalidForm(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("{what} needs a table of {size} entries, above the limit of {limit}")]
    TooLarge {
        what: &'static str,
        size: u64,
        limit: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
