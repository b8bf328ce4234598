//! Exact verification of the local L-factor identities of the degree-3
//! Miyawaki lift of `Delta` and the weight-20 newform.
//!
//! Everything is computed over exact integers, rationals, Gaussian rationals
//! and Laurent polynomials; no floating point is used anywhere.

pub mod arith;
pub mod error;
pub mod local;
pub mod primes;
pub mod qexp;
pub mod report;
pub mod satake;

pub use error::{Error, Result};
