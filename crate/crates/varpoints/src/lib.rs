//! Rational and geometric points on affine varieties over finite fields.
//!
//! The crate hunts for points of `V(I)` for an ideal `I` in a polynomial
//! ring over `F_q`, estimates variety dimension by cutting with random
//! linear spaces, builds generic projections, and extracts matrix minors
//! that are nonsingular at a found point. Everything runs on a
//! self-contained exact-arithmetic core: finite fields, multivariate
//! polynomials, and a Buchberger Gröbner engine.
//!
//! The narrative guide lives in `book/`; its code blocks compile and run as
//! doc-tests of this crate.

pub mod dimension;
pub mod error;
pub mod ff;
pub mod gb;
pub mod guide;
pub mod minors;
pub mod parse;
pub mod points;
pub mod poly;
pub mod selftest;
pub mod solve;
pub mod transform;

mod linalg;
pub mod rng;

pub use error::{Error, Result};
