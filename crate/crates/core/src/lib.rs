//! Exact arithmetic for q-binomial identities.
//!
//! Everything here is integral and allocation-only: Laurent polynomials in
//! `u = q^(1/2)` with big-integer coefficients, polynomials in `x` over them,
//! and truncated power series over any of these rings. No floating point is
//! used anywhere.
//!
//! The crate is `no_std` and needs only `alloc`; IO, parsing of user input and
//! the identity harness live in the `gaussq` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;
mod half;

pub mod laurent;
pub mod qcore;
pub mod qdiff;
pub mod qpolyx;
pub mod rational;
pub mod series;
pub mod xpoly;

pub use crate::error::{Error, Result};
pub use crate::half::HalfInt;
pub use crate::laurent::LaurentPoly;
pub use crate::rational::RationalFunction;
pub use crate::series::{Ring, TruncSeries};
pub use crate::xpoly::XPoly;
