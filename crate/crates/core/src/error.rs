//! Error type shared by all modules.

use thiserror::Error;

/// Domain and guard errors.
///
/// Guard violations are reported through [`Error::GuardExceeded`] so callers
/// (notably the CLI) can distinguish "the input is invalid" from "the
/// requested exhaustive search is too large".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be >= 1")]
    ZeroDegree,
    #[error("modulus must be a monic polynomial of degree {expected}")]
    BadModulus { expected: usize },
    #[error("modulus is reducible: divisible by {factor}")]
    ReducibleModulus { factor: String },
    #[error("digit {digit} out of range for characteristic {p}")]
    DigitOutOfRange { digit: u64, p: u64 },
    #[error("encoding {value} out of range for a field of order {order}")]
    EncodingOutOfRange { value: u64, order: u64 },
    #[error("frobenius exponent {exp} out of range [0, {n})")]
    FrobeniusOutOfRange { exp: usize, n: usize },
    #[error("inner derivation requires a non-identity automorphism")]
    InnerNeedsNonIdentity,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("right division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials")]
    GcdOfZeros,
    #[error("the zero polynomial cannot be a right-divisor candidate")]
    ZeroDivisorCandidate,
    #[error("degree {got} outside the valid range [{min}, {max}]")]
    DegreeOutOfRange { got: String, min: String, max: String },
    #[error("search space of {needed} candidates exceeds the limit {limit}")]
    GuardExceeded { needed: u128, limit: u64 },
    #[error("polynomial {poly} is not monic")]
    NotMonic { poly: String },
    #[error("{g} is not a monic right divisor of {f}")]
    NotRightDivisor { g: String, f: String },
    #[error("operation requires f = t^m - d with delta = 0")]
    NotConstacyclicShape,
    #[error("element is zero")]
    ZeroElement,
    #[error("automorphism must have order >= 2")]
    IdentityAutomorphism,
    #[error("message length {got} does not match code dimension {expected}")]
    MessageLength { got: usize, expected: usize },
    #[error("word length {got} does not match code length {expected}")]
    WordLength { got: usize, expected: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for guard violations (the CLI maps these to exit code 2).
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. })
    }
}
