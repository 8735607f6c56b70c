//! The user guide, one module per chapter.
//!
//! The chapters live in `book/src/` at the repository root and render with
//! `mdbook build book`; including them here makes every Rust example in the
//! guide compile and run as a documentation test.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/trees.md")]
pub mod trees {}

#[doc = include_str!("../../../book/src/deformation.md")]
pub mod deformation {}

#[doc = include_str!("../../../book/src/postlie.md")]
pub mod post_lie {}

#[doc = include_str!("../../../book/src/envelope.md")]
pub mod envelope {}

#[doc = include_str!("../../../book/src/multiindices.md")]
pub mod multiindices {}

#[doc = include_str!("../../../book/src/morphism.md")]
pub mod morphism {}

#[doc = include_str!("../../../book/src/planar.md")]
pub mod planar {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}
