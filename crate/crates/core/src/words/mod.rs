//! Word calculus for Thompson's group F: parsing, reduced words, the
//! minimal-subscript extraction, normal forms, heights, and the
//! abelianization coloring.

pub mod abelian;
pub mod core;
pub mod letters;
pub mod normal;
pub mod syllables;

pub use abelian::{abelian_image, AbelianImage, Color};
pub use core::{core_decompose, core_sequence, CoreDecomposition};
pub use letters::{parse_word, Letter, LetterString, Sign};
pub use normal::{equals, invert, multiply, normalize, normalize_word, ThompsonNormalForm};
pub use syllables::{Syllable, SyllableWord};

use thiserror::Error;

/// Errors from parsing and word-level operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("zero exponent in syllable {index}")]
    ZeroExponent { index: usize },
    #[error("adjacent syllables share a subscript at position {index}")]
    NotReduced { index: usize },
    #[error("shift by {shift} drives subscript {subscript} below zero")]
    NegativeSubscript { subscript: i64, shift: i64 },
    #[error("subscript exceeds the representable range")]
    SubscriptOverflow,
    #[error("operation requires a nonempty word")]
    EmptyWord,
}
