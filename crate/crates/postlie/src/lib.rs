//! Exact symbolic algebra for post-Lie structures arising from decorated
//! rooted trees and multi-indices.
//!
//! The library provides, with exact rational coefficients throughout:
//!
//! - decorated rooted trees with `ℕ^{d+1}` node decorations, noise edges and
//!   kernel edges, together with grafting `↷ᵃ`, its deformation `↷̂ᵃ`, and the
//!   decoration-insertion operators `↑ⁱ` ([`tree`], [`graft`]);
//! - a generic universal-envelope layer over two-sorted post-Lie algebras:
//!   PBW normal forms, the concatenation coproduct, the extension of the
//!   post-Lie product to words, and the Grossman-Larson style product `*`
//!   ([`envelope`]);
//! - the post-Lie algebra of planted decorated trees and the recentering
//!   product `⋆₂` with its identification against the envelope action
//!   ([`tree_postlie`]);
//! - multi-index monomials with the derivations `D⁽ⁿ⁾` and `∂ᵢ`, their
//!   matrix coefficients, and the post-Lie structure they span
//!   ([`multiindex`]);
//! - the dictionary `Ψ` from trees with node-level noise to multi-indices,
//!   and its envelope-level extension ([`morphism`]);
//! - planar decorated trees with left-most grafting and the rewriting system
//!   that maps them onto non-planar trees ([`planar`]);
//! - deterministic enumeration of all these families at desk scale and named
//!   verification suites for every identity the library implements
//!   ([`enumerate`], [`suites`]).
//!
//! Every operation returns a [`lincomb::LinComb`] over canonical basis values,
//! so equality of algebraic expressions is decidable equality of values.

pub mod dec;
pub mod enumerate;
pub mod envelope;
pub mod graft;
pub mod guide;
pub mod lincomb;
pub mod morphism;
pub mod multiindex;
pub mod planar;
pub mod suites;
pub mod tree;
pub mod tree_postlie;

// Keeps the README's example honest: its code blocks run as doc-tests.
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
pub struct ReadmeDoctests;
