use num_bigint::BigInt;
use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("factorization of {value} exceeded the effort budget of {budget} steps")]
    FactorBudgetExceeded { value: BigInt, budget: u64 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("cannot parse {input:?} as {kind}")]
    Parse { input: String, kind: &'static str },
    #[error("({a}, {b}, {c}) is not a Pythagorean triple")]
    InvalidTriple { a: BigInt, b: BigInt, c: BigInt },
    #[error("exponent {0} is invalid for this construction (must be >= 3 and not divisible by 3)")]
    InvalidModulus(u32),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("2^{0} - 1 is not prime")]
    NotMersenne(u32),
    #[error("not a witness: {0}")]
    NotAWitness(WitnessFailure),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("{0} is not a composite number >= 4")]
    NotComposite(u32),
    #[error("n = {n} is below the construction threshold for k = {k} (need n >= {minimum})")]
    BelowThreshold { n: BigInt, k: u32, minimum: BigInt },
    #[error("operands live in different quadratic fields: Q(sqrt({0})) vs Q(sqrt({1}))")]
    MixedField(BigInt, BigInt),
    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("k = {0} is degenerate (k must not be 0 or -1)")]
    DegenerateK(String),
}

/// The first condition a candidate witness fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessFailure {
    #[error("exponent {0} is not a prime > 3")]
    Exponent(u32),
    #[error("a + b = 0")]
    ZeroSum,
    #[error("a + b = {sum} is not a perfect {n}-th power")]
    SumNotPower { sum: BigInt, n: u32 },
    #[error("p = {0} is not an odd prime")]
    NotOddPrime(BigInt),
    #[error("p = n = {0}")]
    EqualsExponent(BigInt),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
