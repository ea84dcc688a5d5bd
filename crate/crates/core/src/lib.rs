//! Symbolic word calculus for R. Thompson's group F and comparison groups.
//!
//! The crate provides:
//!
//! - [`words`]: parsing, syllable normal form, the minimal-subscript
//!   extraction with its iterated core sequence, Thompson normal forms,
//!   the height function, and the abelianization coloring;
//! - [`classes`]: classification and exhaustive enumeration of odd,
//!   semi-odd, and unbalanced words, with family-level non-triviality
//!   verification and collision search;
//! - [`backends`]: a uniform group interface with implementations for F,
//!   Z^2, the wreath product Z wr Z, the free metabelian group on two
//!   generators, plus an exact piecewise-linear homeomorphism oracle for F;
//! - [`criteria`]: instance and family checkers for the alternating-word
//!   and height-growth conditions used in non-amenability arguments;
//! - [`combinatorics`]: balanced integer segments, colored triples, and
//!   brute-force covering oracles;
//! - [`gbt`]: generalized binary trees, zigzags, group windows with
//!   partner assignment, and the tree-building procedure.

pub mod backends;
pub mod classes;
pub mod combinatorics;
pub mod criteria;
pub mod gbt;
pub mod util;
pub mod words;
