//! Exact truncated q-series arithmetic, partition traces, Bell polynomials,
//! and coefficientwise checks of the identities linking them.
//!
//! All arithmetic is over exact rationals. A series realized to order `N`
//! carries coefficients `0..=N`, and every check or recognition result holds
//! only through that order.

pub mod arith;
pub mod bell;
pub mod error;
pub mod partitions;
pub mod ring;
pub mod series;
pub mod verify;
pub mod zoo;

pub use arith::Rational;
pub use error::{Error, Result};
pub use ring::CoefficientRing;
pub use series::{QSeries, Series};
