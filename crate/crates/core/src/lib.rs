//! Skew-polynomial rings `K[t;sigma,delta]` over finite fields, the
//! nonassociative quotient algebras `S_f` obtained by reducing modulo a monic
//! polynomial under right division, and sigma-constacyclic linear codes built
//! from monic right divisors of `f`.
//!
//! Everything is exact and desk-scale: exhaustive searches are guarded by
//! explicit candidate limits and never truncate silently.

pub mod codes;
pub mod error;
pub mod field;
mod linalg;
pub mod petit;
pub mod skew;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Default guard for exhaustive searches (candidates or codewords).
pub const DEFAULT_LIMIT: u64 = 1_000_000;
