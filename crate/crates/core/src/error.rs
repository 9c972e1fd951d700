use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid cardinal `{0}`")]
    InvalidCardinal(String),

    #[error("syntax error at column {}: {message}", .position + 1)]
    Syntax { position: usize, message: String },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("cyclic factor exponent must be at least 1")]
    ZeroExponent,

    #[error("factors of primes {0} and {1} mixed where a single primary component was expected")]
    MixedPrimes(u64, u64),

    #[error("{0} must be non-trivial")]
    Trivial(&'static str),

    #[error("{0} must be finite")]
    Infinite(&'static str),

    #[error("expected a {expected}-group, found prime {found}")]
    WrongPrime { expected: u64, found: u64 },

    #[error("wreath product is not nilpotent: {0}")]
    NotNilpotent(String),

    #[error("unknown passive preset `{0}`")]
    UnknownPreset(String),

    #[error("invalid lower central profile: {0}")]
    InvalidProfile(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("K_p-series too long: d = {0} terms")]
    ChainTooLong(u64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("element budget exceeded: {what} needs {needed} elements, budget is {budget}")]
    BudgetExceeded {
        what: String,
        needed: String,
        budget: usize,
    },

    #[error("group is not a {0}-group")]
    NotPGroup(u64),

    #[error("spec does not describe the concrete group: {0}")]
    SpecMismatch(String),
}
