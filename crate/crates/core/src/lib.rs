//! Exact-arithmetic kernel for certifying a one-sided concentration bound
//! for log-concave distributions.
//!
//! Everything in this crate computes over arbitrary-precision rationals;
//! there is no floating point on any certification path. The crate is
//! `no_std` (with `alloc`) so the kernel can be embedded anywhere; IO,
//! report formats, and the CLI live in the companion `logconc` crate.
//!
//! Layout:
//! * [`rational`] — exact scalars and parsing helpers
//! * [`poly`] / [`bipoly`] — dense univariate and bivariate polynomials
//! * [`interval`] — rational-endpoint intervals
//! * [`roots`] — Sturm sequences, root counting/isolation, sign certificates
//! * [`resultant`] — Sylvester resultants and discriminants
//! * [`bounds`] — the closed-form bound functions p, p₁, p₂, b_δ, the ratio,
//!   and the shifted family
//! * [`certify`] — one machine-checked certificate per proof step

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bipoly;
pub mod bounds;
pub mod certify;
pub mod error;
pub mod interval;
pub mod poly;
pub mod rational;
pub mod resultant;
pub mod roots;

pub use bipoly::BiPoly;
pub use error::Error;
pub use interval::{Endpoint, Interval};
pub use poly::{Poly, Var};
pub use rational::Rational;
