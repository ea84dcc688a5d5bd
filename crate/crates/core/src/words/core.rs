//! Extraction of minimal-subscript syllables.
//!
//! For a nonempty reduced word `W` with minimal subscript `m`, write
//!
//! ```text
//! W = W_0 x_m^{e_1} W_1 x_m^{e_2} ... x_m^{e_l} W_l
//! ```
//!
//! where each chunk `W_i` is reduced with all subscripts `> m`. Using the
//! relations `V x_m = x_m S(V)` and `x_m^-1 V = S(V) x_m^-1` (valid when
//! `min(V) > m`), the positive `x_m` syllables move to the far left and the
//! negative ones to the far right, at the cost of upward shifts of the
//! chunks. The residue between `x_m^pos` and `x_m^neg` is the core. Chunk
//! `W_i` is shifted by the sum of the positive `x_m` exponents to its right
//! plus the absolute value of the sum of the negative ones to its left.

use serde::Serialize;

use super::syllables::SyllableWord;
use super::WordError;

/// Result of pulling the minimal-subscript syllables out of a word:
/// the word equals `x_m^pos · core · x_m^neg` in the group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreDecomposition {
    /// Minimal subscript of the input.
    pub min_subscript: u32,
    /// Sum of the positive `x_m` exponents (>= 0).
    pub pos: i64,
    /// Sum of the negative `x_m` exponents (<= 0).
    pub neg: i64,
    /// The shifted residue, re-reduced to syllable normal form.
    pub core: SyllableWord,
}

impl CoreDecomposition {
    /// One cancellation/downshift step: when the decomposition reads
    /// `x_m ... x_m^-1` and the core stays above `m+1`, an outer pair
    /// cancels and the core shifts down.
    pub fn cancel_step(&self) -> Option<CoreDecomposition> {
        if self.pos <= 0 || self.neg >= 0 {
            return None;
        }
        match self.core.min_subscript() {
            None => None,
            Some(cmin) if cmin > self.min_subscript + 1 => Some(CoreDecomposition {
                min_subscript: self.min_subscript,
                pos: self.pos - 1,
                neg: self.neg + 1,
                core: self.core.shift(-1).expect("core min > m+1 permits downshift"),
            }),
            Some(_) => None,
        }
    }
}

/// Decomposes a nonempty reduced word around its minimal subscript.
pub fn core_decompose(w: &SyllableWord) -> Result<CoreDecomposition, WordError> {
    let m = w.min_subscript().ok_or(WordError::EmptyWord)?;

    // Split into chunks and the x_m exponents that separate them.
    let mut chunks: Vec<Vec<(u32, i64)>> = vec![Vec::new()];
    let mut exps: Vec<i64> = Vec::new();
    for s in w.syllables() {
        if s.subscript == m {
            exps.push(s.exponent);
            chunks.push(Vec::new());
        } else {
            chunks.last_mut().unwrap().push((s.subscript, s.exponent));
        }
    }

    let pos: i64 = exps.iter().filter(|&&e| e > 0).sum();
    let neg: i64 = exps.iter().filter(|&&e| e < 0).sum();

    // chunk i is preceded by exps[..i] and followed by exps[i..].
    let mut shifted: Vec<(u32, i64)> = Vec::new();
    for (i, chunk) in chunks.iter().enumerate() {
        if chunk.is_empty() {
            continue;
        }
        let pos_right: i64 = exps[i..].iter().filter(|&&e| e > 0).sum();
        let neg_left: i64 = exps[..i].iter().filter(|&&e| e < 0).sum();
        let shift = pos_right
            .checked_add(neg_left.checked_neg().expect("shift overflow"))
            .expect("shift overflow");
        for &(sub, exp) in chunk {
            let new_sub = i64::from(sub) + shift;
            shifted.push((
                u32::try_from(new_sub).map_err(|_| WordError::SubscriptOverflow)?,
                exp,
            ));
        }
    }

    Ok(CoreDecomposition {
        min_subscript: m,
        pos,
        neg,
        core: SyllableWord::reduce(shifted),
    })
}

/// The iterated core sequence `W, Core(W), Core(Core(W)), ...`, halting at
/// a single syllable or the empty word.
pub fn core_sequence(w: &SyllableWord) -> Result<Vec<SyllableWord>, WordError> {
    if w.is_empty() {
        return Err(WordError::EmptyWord);
    }
    let mut seq = vec![w.clone()];
    loop {
        let last = seq.last().unwrap();
        if last.len() <= 1 {
            break;
        }
        let next = core_decompose(last)?.core;
        if next.is_empty() {
            break;
        }
        seq.push(next);
    }
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::letters::parse_word;

    fn w(text: &str) -> SyllableWord {
        SyllableWord::from_letters(&parse_word(text).unwrap())
    }

    #[test]
    fn single_syllable() {
        let d = core_decompose(&w("x5^3")).unwrap();
        assert_eq!(d.min_subscript, 5);
        assert_eq!(d.pos, 3);
        assert_eq!(d.neg, 0);
        assert!(d.core.is_empty());
    }

    #[test]
    fn conjugated_generator() {
        // x1^-1 x2 x1 = x1 x4 x1^-1 in the group
        let d = core_decompose(&w("x1^-1 x2 x1")).unwrap();
        assert_eq!(d.min_subscript, 1);
        assert_eq!(d.pos, 1);
        assert_eq!(d.neg, -1);
        assert_eq!(d.core, w("x4"));
    }

    #[test]
    fn worked_long_example() {
        // x2^-3 x5^2 x0^4 x1^5 x3^-2 x0^-1 x1^7 x0^2 x3 x4
        let d = core_decompose(&w("x2^-3 x5^2 x0^4 x1^5 x3^-2 x0^-1 x1^7 x0^2 x3 x4")).unwrap();
        assert_eq!(d.min_subscript, 0);
        assert_eq!(d.pos, 6);
        assert_eq!(d.neg, -1);
        // a syllable merge occurs: x4^7 · x4 -> x4^8
        assert_eq!(d.core, w("x8^-3 x11^2 x3^5 x5^-2 x4^8 x5"));
    }

    #[test]
    fn cancel_step_on_worked_example() {
        let d = core_decompose(&w("x2^-3 x5^2 x0^4 x1^5 x3^-2 x0^-1 x1^7 x0^2 x3 x4")).unwrap();
        let next = d.cancel_step().unwrap();
        assert_eq!(next.pos, 5);
        assert_eq!(next.neg, 0);
        assert_eq!(next.core, w("x7^-3 x10^2 x2^5 x4^-2 x3^8 x4"));
        // neg hit zero, no further cancellation
        assert!(next.cancel_step().is_none());
    }

    #[test]
    fn empty_input_rejected() {
        assert!(matches!(core_decompose(&SyllableWord::empty()), Err(WordError::EmptyWord)));
        assert!(core_sequence(&SyllableWord::empty()).is_err());
    }

    #[test]
    fn sequence_of_single_syllable() {
        assert_eq!(core_sequence(&w("x5^3")).unwrap(), vec![w("x5^3")]);
    }
}
