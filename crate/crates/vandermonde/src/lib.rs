//! Exact computational commutative algebra for the determinantal ideals of
//! non-square Vandermonde matrices.
//!
//! The ideal `I_{n,k}` is generated by the maximal minors of the `(k+1) × n`
//! matrix whose rows are the power sums `x_j^0, …, x_j^k`. This crate builds
//! those ideals over ℚ and machine-checks their structure: Krull dimension `k`,
//! degree `S(n,k)` (Stirling numbers of the second kind), radicality via the
//! set-partition prime decomposition, the degree recurrence, and the closed-form
//! graded Betti numbers coming from the Eagon–Northcott rank bookkeeping.
//!
//! Everything is exact: arbitrary-precision rational coefficients, a Buchberger
//! engine with reduced Gröbner bases, Hilbert series of leading-term ideals,
//! and ideal intersection by elimination.

pub mod betti;
pub mod combinatorics;
pub mod groebner;
pub mod hilbert;
pub mod idealgen;
pub mod poly;
pub mod verify;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
