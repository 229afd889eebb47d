//! Seaweed subalgebras of `sl(n)` and their meanders.
//!
//! A seaweed is named by a pair of compositions of `n`, written `a1|a2|.../b1|b2|...`.
//! This crate builds the associated meander graph, reads off the index
//! (`2C + P - 1` over cycles `C` and paths `P`), winds a meander down to its
//! homotopy type, and runs the exhaustive censuses and exact closed forms that
//! count seaweeds by index.
//!
//! Exact arithmetic is generic over the integer type (see [`scalar`]); the
//! aliases below fix the arbitrary-precision defaults.

pub mod compositions;
pub mod enumeration;
pub mod error;
pub mod formulas;
pub mod genfunc;
pub mod golden;
pub mod meander;
pub mod render;
pub mod scalar;
pub mod winding;

pub use compositions::{Composition, SeaweedType};
pub use enumeration::{IndexTable, Oracle, TableKind};
pub use error::{Error, Result};
pub use meander::{ComponentSummary, Meander};
pub use winding::{HomotopyType, Move, Signature};

/// Arbitrary-precision non-negative count.
pub type ExactCount = num_bigint::BigUint;

/// Arbitrary-precision signed coefficient.
pub type ExactInt = num_bigint::BigInt;

/// Polynomial with arbitrary-precision integer coefficients.
pub type IntPolynomial = genfunc::Polynomial<ExactInt>;

/// Rational generating function with arbitrary-precision coefficients.
pub type RationalGf = genfunc::RationalGf<ExactInt>;

/// Fixed-width count; formulas evaluated at this type report overflow instead of wrapping.
pub type WordCount = u128;
