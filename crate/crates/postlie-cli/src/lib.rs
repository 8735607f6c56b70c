//! Parsing, formatting, and evaluation behind the `postlie` binary.
//!
//! [`syntax`] holds the tree-language grammar and canonical printers,
//! [`mi`] the multi-index language, and [`eval`] the evaluators that turn
//! parsed expressions into library values.

pub mod eval;
pub mod mi;
pub mod syntax;
