//! Raw words over the infinite generating family `x0, x1, x2, ...`.
//!
//! A [`LetterString`] is a free word as typed: runs of a generator with an
//! integer exponent, in input order, with no reduction applied. Surface
//! syntax (see [`parse_word`]):
//!
//! ```text
//! word := term*          terms separated by whitespace or juxtaposed
//! term := gen ("^" int)?
//! gen  := "x" nat | "a" | "b" | "A" | "B"
//! ```
//!
//! `a`/`b` alias `x0`/`x1`; the capitals are their inverses (`A^k` means
//! `x0^-k`). The bare token `1` denotes the empty word.

use serde::{Deserialize, Serialize};
use std::fmt;

use super::WordError;

/// Sign of a single letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

/// One letter `x_n` or `x_n^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub subscript: u32,
    pub sign: Sign,
}

/// An unreduced free word, stored as exponent runs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LetterString {
    runs: Vec<(u32, i64)>,
}

impl LetterString {
    pub fn empty() -> Self {
        LetterString { runs: Vec::new() }
    }

    /// Word consisting of a single power `x_sub^exp`.
    pub fn power(sub: u32, exp: i64) -> Self {
        let mut w = Self::empty();
        w.push_power(sub, exp);
        w
    }

    pub fn from_runs(runs: Vec<(u32, i64)>) -> Self {
        let mut w = Self::empty();
        for (s, e) in runs {
            w.push_power(s, e);
        }
        w
    }

    /// Appends `x_sub^exp`; a zero exponent is a no-op.
    pub fn push_power(&mut self, sub: u32, exp: i64) {
        if exp != 0 {
            self.runs.push((sub, exp));
        }
    }

    pub fn push(&mut self, l: Letter) {
        let e = match l.sign {
            Sign::Plus => 1,
            Sign::Minus => -1,
        };
        self.push_power(l.subscript, e);
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &LetterString) -> LetterString {
        let mut runs = self.runs.clone();
        runs.extend_from_slice(&other.runs);
        LetterString { runs }
    }

    /// The formal inverse: runs reversed with negated exponents.
    pub fn inverse(&self) -> LetterString {
        LetterString {
            runs: self
                .runs
                .iter()
                .rev()
                .map(|&(s, e)| (s, -e))
                .collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Number of unit letters (sum of |exponents|).
    pub fn len(&self) -> usize {
        self.runs.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn runs(&self) -> &[(u32, i64)] {
        &self.runs
    }

    /// Iterates unit letters left to right.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.runs.iter().flat_map(|&(s, e)| {
            let sign = if e > 0 { Sign::Plus } else { Sign::Minus };
            std::iter::repeat(Letter { subscript: s, sign }).take(e.unsigned_abs() as usize)
        })
    }

    /// Exponent sums `(x0-total, total over all x_n with n >= 1)`.
    pub fn exponent_sums(&self) -> (i64, i64) {
        let mut a = 0i64;
        let mut b = 0i64;
        for &(s, e) in &self.runs {
            if s == 0 {
                a = a.checked_add(e).expect("exponent sum overflow");
            } else {
                b = b.checked_add(e).expect("exponent sum overflow");
            }
        }
        (a, b)
    }
}

impl fmt::Display for LetterString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.runs.is_empty() {
            return write!(f, "1");
        }
        for (i, &(s, e)) in self.runs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "x{s}")?;
            } else {
                write!(f, "x{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Parses the word grammar. Reports the byte offset of the first error.
pub fn parse_word(text: &str) -> Result<LetterString, WordError> {
    let bytes = text.as_bytes();
    let mut i = 0usize;
    let mut word = LetterString::empty();
    let n = bytes.len();

    fn read_nat(bytes: &[u8], i: &mut usize) -> Option<u64> {
        let start = *i;
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
        if *i == start {
            return None;
        }
        std::str::from_utf8(&bytes[start..*i]).ok()?.parse().ok()
    }

    while i < n {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let pos = i;
        let (sub, inverted): (u32, bool) = match c {
            b'x' => {
                i += 1;
                let Some(v) = read_nat(bytes, &mut i) else {
                    return Err(WordError::Syntax {
                        position: pos,
                        message: "expected subscript digits after 'x'".into(),
                    });
                };
                let sub = u32::try_from(v).map_err(|_| WordError::Syntax {
                    position: pos,
                    message: "subscript out of range".into(),
                })?;
                (sub, false)
            }
            b'a' => {
                i += 1;
                (0, false)
            }
            b'b' => {
                i += 1;
                (1, false)
            }
            b'A' => {
                i += 1;
                (0, true)
            }
            b'B' => {
                i += 1;
                (1, true)
            }
            b'1' => {
                i += 1;
                continue; // identity token
            }
            _ => {
                return Err(WordError::Syntax {
                    position: pos,
                    message: format!("unexpected character '{}'", c as char),
                });
            }
        };
        let mut exp: i64 = 1;
        if i < n && bytes[i] == b'^' {
            i += 1;
            let neg = if i < n && bytes[i] == b'-' {
                i += 1;
                true
            } else {
                false
            };
            let Some(v) = read_nat(bytes, &mut i) else {
                return Err(WordError::Syntax {
                    position: pos,
                    message: "expected integer after '^'".into(),
                });
            };
            let v = i64::try_from(v).map_err(|_| WordError::Syntax {
                position: pos,
                message: "exponent out of range".into(),
            })?;
            exp = if neg { -v } else { v };
        }
        if inverted {
            exp = -exp;
        }
        word.push_power(sub, exp);
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_basic_words() {
        let w = parse_word("x0 x0 x1^-1").unwrap();
        assert_eq!(w.runs(), &[(0, 1), (0, 1), (1, -1)]);
    }

    #[test]
    fn parses_aliases() {
        let w = parse_word("b^3 a^-1").unwrap();
        assert_eq!(w.runs(), &[(1, 3), (0, -1)]);
        let w = parse_word("A B").unwrap();
        assert_eq!(w.runs(), &[(0, -1), (1, -1)]);
        // capitals with explicit exponents invert the exponent
        let w = parse_word("A^2").unwrap();
        assert_eq!(w.runs(), &[(0, -2)]);
    }

    #[test]
    fn parses_juxtaposed_commutator_words() {
        let w = parse_word("ab^-1a^-1b").unwrap();
        assert_eq!(w.runs(), &[(0, 1), (1, -1), (0, -1), (1, 1)]);
    }

    #[test]
    fn identity_token() {
        assert!(parse_word("1").unwrap().is_empty());
        assert!(parse_word("  ").unwrap().is_empty());
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(
            parse_word("x0 y3"),
            Err(WordError::Syntax { position: 3, .. })
        ));
        assert!(parse_word("x").is_err());
        assert!(parse_word("x2^").is_err());
    }

    #[test]
    fn display_round_trips() {
        let w = parse_word("x0^2 x3^-1 b").unwrap();
        let again = parse_word(&w.to_string()).unwrap();
        assert_eq!(w, again);
    }

    #[test]
    fn zero_exponent_dropped() {
        let w = parse_word("x4^0 x1").unwrap();
        assert_eq!(w.runs(), &[(1, 1)]);
    }
}
