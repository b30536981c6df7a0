//! Exact computation of Bernoulli, Euler, Genocchi, ordered Bell and
//! degenerate ordered Bell polynomial families, expansion of arbitrary
//! polynomials in (degenerate, higher-order) ordered Bell bases, and
//! finite-instance verification of the identities those expansions yield.

pub mod error;
pub mod exact;
pub mod families;
pub mod identities;
pub mod operators;
pub mod parallel;
pub mod represent;

pub use error::{Error, Result};

