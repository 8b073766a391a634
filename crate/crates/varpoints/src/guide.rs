//! The narrative guide, one module per book chapter.
//!
//! Each module's documentation is the corresponding chapter of `book/`, so
//! `cargo test --doc` compiles and runs every fenced Rust block the book
//! shows and the two can never drift apart. `mdbook build book` renders
//! the same files standalone.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/finite-fields.md")]
pub mod finite_fields {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/groebner.md")]
pub mod groebner {}

#[doc = include_str!("../../../book/src/solving.md")]
pub mod solving {}

#[doc = include_str!("../../../book/src/points.md")]
pub mod points_guide {}

#[doc = include_str!("../../../book/src/dimension.md")]
pub mod dimension_guide {}

#[doc = include_str!("../../../book/src/projections.md")]
pub mod projections {}

#[doc = include_str!("../../../book/src/minors.md")]
pub mod minors_guide {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
