//! Abelianization coordinates and the two-coloring they induce.
//!
//! The defining relations `x_n x_m = x_m x_{n+1}` (n > m >= 0) identify all
//! generators with subscript >= 1 in the abelianization, so the image of a
//! word is the pair `(a, b)`: total `x0` exponent and total exponent of all
//! higher generators. A pair is white when the coordinates have different
//! parity and black when they agree.

use serde::{Deserialize, Serialize};

use super::letters::LetterString;

/// Chessboard color of an abelianized element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }

    pub fn of_pair(a: i64, b: i64) -> Color {
        if (a.rem_euclid(2)) == (b.rem_euclid(2)) {
            Color::Black
        } else {
            Color::White
        }
    }
}

impl std::fmt::Display for Color {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Color::Black => write!(f, "black"),
            Color::White => write!(f, "white"),
        }
    }
}

/// Image of a word in the abelianization of F, with its color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianImage {
    /// Total `x0` exponent.
    pub a: i64,
    /// Total exponent over all `x_n`, n >= 1.
    pub b: i64,
}

impl AbelianImage {
    pub fn color(&self) -> Color {
        Color::of_pair(self.a, self.b)
    }
}

/// Abelianization of an arbitrary word; invariant under the relations and
/// hence under normalization.
pub fn abelian_image(w: &LetterString) -> AbelianImage {
    let (a, b) = w.exponent_sums();
    AbelianImage { a, b }
}
