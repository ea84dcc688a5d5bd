//! Syllable normal form for free words: nonzero exponents, distinct
//! adjacent subscripts. This is the canonical form of an element of the
//! free group on `x0, x1, x2, ...` and the working representation for the
//! rewriting machinery.

use serde::{Deserialize, Serialize};
use std::fmt;

use super::letters::LetterString;
use super::WordError;

/// A maximal run `x_n^e` inside a reduced word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Syllable {
    pub subscript: u32,
    pub exponent: i64,
}

impl Syllable {
    pub fn new(subscript: u32, exponent: i64) -> Self {
        Syllable { subscript, exponent }
    }
}

/// A reduced word: every exponent nonzero, adjacent subscripts distinct.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SyllableWord {
    syllables: Vec<Syllable>,
}

impl SyllableWord {
    pub fn empty() -> Self {
        SyllableWord { syllables: Vec::new() }
    }

    /// Validates an already-reduced sequence.
    pub fn new(syllables: Vec<Syllable>) -> Result<Self, WordError> {
        for (i, s) in syllables.iter().enumerate() {
            if s.exponent == 0 {
                return Err(WordError::ZeroExponent { index: i });
            }
            if i > 0 && syllables[i - 1].subscript == s.subscript {
                return Err(WordError::NotReduced { index: i });
            }
        }
        Ok(SyllableWord { syllables })
    }

    pub fn from_pairs(pairs: &[(u32, i64)]) -> Result<Self, WordError> {
        Self::new(pairs.iter().map(|&(s, e)| Syllable::new(s, e)).collect())
    }

    /// Free reduction: merges equal-subscript neighbours, drops zeros,
    /// and cascades cancellations.
    pub fn reduce<I: IntoIterator<Item = (u32, i64)>>(items: I) -> Self {
        let mut stack: Vec<Syllable> = Vec::new();
        for (sub, exp) in items {
            if exp == 0 {
                continue;
            }
            match stack.last_mut() {
                Some(top) if top.subscript == sub => {
                    top.exponent = top
                        .exponent
                        .checked_add(exp)
                        .expect("syllable exponent overflow");
                    if top.exponent == 0 {
                        stack.pop();
                    }
                }
                _ => stack.push(Syllable::new(sub, exp)),
            }
        }
        SyllableWord { syllables: stack }
    }

    pub fn from_letters(w: &LetterString) -> Self {
        Self::reduce(w.runs().iter().copied())
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    /// Smallest subscript occurring in the word.
    pub fn min_subscript(&self) -> Option<u32> {
        self.syllables.iter().map(|s| s.subscript).min()
    }

    pub fn max_subscript(&self) -> Option<u32> {
        self.syllables.iter().map(|s| s.subscript).max()
    }

    /// Shifts every subscript by `i` (down shifts must stay non-negative).
    pub fn shift(&self, i: i64) -> Result<Self, WordError> {
        let mut out = Vec::with_capacity(self.syllables.len());
        for s in &self.syllables {
            let sub = i64::from(s.subscript) + i;
            if sub < 0 {
                return Err(WordError::NegativeSubscript {
                    subscript: i64::from(s.subscript),
                    shift: i,
                });
            }
            let sub = u32::try_from(sub).map_err(|_| WordError::SubscriptOverflow)?;
            out.push(Syllable::new(sub, s.exponent));
        }
        Ok(SyllableWord { syllables: out })
    }

    /// Group inverse; the inverse of a reduced word is reduced.
    pub fn inverse(&self) -> Self {
        SyllableWord {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable::new(s.subscript, -s.exponent))
                .collect(),
        }
    }

    pub fn to_letters(&self) -> LetterString {
        LetterString::from_runs(self.syllables.iter().map(|s| (s.subscript, s.exponent)).collect())
    }

    /// Concatenates and re-reduces.
    pub fn concat(&self, other: &SyllableWord) -> Self {
        Self::reduce(
            self.syllables
                .iter()
                .chain(other.syllables.iter())
                .map(|s| (s.subscript, s.exponent)),
        )
    }

    pub fn exponents(&self) -> impl Iterator<Item = i64> + '_ {
        self.syllables.iter().map(|s| s.exponent)
    }

    /// Differences of adjacent subscripts `n_{i+1} - n_i`.
    pub fn adjacent_differences(&self) -> impl Iterator<Item = i64> + '_ {
        self.syllables
            .windows(2)
            .map(|w| i64::from(w[1].subscript) - i64::from(w[0].subscript))
    }
}

impl fmt::Display for SyllableWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_letters())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::letters::parse_word;

    fn w(text: &str) -> SyllableWord {
        SyllableWord::from_letters(&parse_word(text).unwrap())
    }

    #[test]
    fn merges_adjacent_syllables() {
        assert_eq!(w("x0 x0 x1^-1").syllables(), &[Syllable::new(0, 2), Syllable::new(1, -1)]);
    }

    #[test]
    fn free_cancellation() {
        assert!(w("x2 x2^-1").is_empty());
        assert!(w("x1 x2 x2^-1 x1^-1").is_empty());
    }

    #[test]
    fn alias_expansion() {
        assert_eq!(w("b^3 a^-1").syllables(), &[Syllable::new(1, 3), Syllable::new(0, -1)]);
    }

    #[test]
    fn cascading_cancellation() {
        // x0 x1 x1^-1 x0 collapses to x0^2
        assert_eq!(w("x0 x1 x1^-1 x0").syllables(), &[Syllable::new(0, 2)]);
    }

    #[test]
    fn shift_examples() {
        let v = w("x1 x3^2");
        assert_eq!(v.shift(1).unwrap(), w("x2 x4^2"));
        assert_eq!(w("x2").shift(2).unwrap(), w("x4"));
        assert!(matches!(
            w("x0").shift(-1),
            Err(WordError::NegativeSubscript { .. })
        ));
    }

    #[test]
    fn inverse_is_reduced_involution() {
        let v = w("x0^2 x3^-1 x1");
        assert_eq!(v.inverse().inverse(), v);
        assert!(v.concat(&v.inverse()).is_empty());
    }

    #[test]
    fn rejects_invalid_constructions() {
        assert!(SyllableWord::from_pairs(&[(0, 0)]).is_err());
        assert!(SyllableWord::from_pairs(&[(0, 1), (0, 2)]).is_err());
        assert!(SyllableWord::from_pairs(&[(0, 1), (1, 2)]).is_ok());
    }
}
