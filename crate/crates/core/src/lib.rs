//! Exact Weyl-chamber projections, the `lambda_a` / `lambda_u` parameter maps,
//! unitarily small K-types, theta-stable parabolic data, and spin/Dirac
//! combinatorics for real reductive groups, all over the rationals.

pub mod error;
pub mod exact;
pub mod kstruct;
pub mod chamber;
pub mod cli;
pub mod rootsys;
pub mod spin;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{GramForm, Rational, WeightVector};
