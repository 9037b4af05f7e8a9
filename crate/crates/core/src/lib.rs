//! Exact q-series arithmetic and representation counts.
//!
//! - [`series`]: truncated Laurent series over exact rationals and the
//!   generating-function builders (theta, Lambert, infinite products).
//! - [`arith`]: factorization and the divisor-sum arithmetic functions.
//! - [`repcount`]: closed-form representation counts and brute-force oracles.
//! - [`identities`]: a registry of product/series identities checked coefficientwise.
//! - [`residues`]: quadratic congruence counting and residue classification.
//! - [`cli`]: the `qforms` command line.

pub mod arith;
pub mod cli;
pub mod identities;
pub mod poly;
pub mod rational;
pub mod repcount;
pub mod residues;
pub mod series;

pub use arith::seq::ArithSeq;
pub use rational::Rational;
pub use series::LaurentSeries;
