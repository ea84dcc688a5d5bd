//! The canonical form for elements of Thompson's group F.
//!
//! Every element has a unique representative
//!
//! ```text
//! x_{n_0}^{e_0} ... x_{n_k}^{e_k} x_{m_l}^{-f_l} ... x_{m_0}^{-f_0}
//! ```
//!
//! with positive `e`/`f`, strictly increasing `n_0 < ... < n_k` and
//! `m_0 < ... < m_l`, subject to the extra restriction that whenever a
//! subscript `n` occurs in both the positive and the negative part,
//! subscript `n+1` occurs in at least one of them. Normalization extracts
//! minimal-subscript syllables recursively and then cancels outer pairs
//! `x_m ... x_m^-1` (with a downshift of everything in between) until the
//! restriction holds.

use serde::{Deserialize, Serialize};
use std::fmt;

use super::core::core_decompose;
use super::letters::LetterString;
use super::syllables::{Syllable, SyllableWord};
use super::WordError;

/// Normal form of an element of F. The negative part is stored with
/// increasing subscripts and positive magnitudes `f_j`; rendering reverses
/// it and negates the exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ThompsonNormalForm {
    positive: Vec<(u32, u64)>,
    negative: Vec<(u32, u64)>,
}

impl ThompsonNormalForm {
    pub fn identity() -> Self {
        Self::default()
    }

    /// `x_m^e` as a normal form; `e = 0` gives the identity.
    pub fn single(subscript: u32, exponent: i64) -> Self {
        if exponent == 0 {
            Self::identity()
        } else if exponent > 0 {
            ThompsonNormalForm {
                positive: vec![(subscript, exponent as u64)],
                negative: Vec::new(),
            }
        } else {
            ThompsonNormalForm {
                positive: Vec::new(),
                negative: vec![(subscript, exponent.unsigned_abs())],
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        self.positive.is_empty() && self.negative.is_empty()
    }

    /// Positive part `(n_i, e_i)` with `n_i` strictly increasing.
    pub fn positive_part(&self) -> &[(u32, u64)] {
        &self.positive
    }

    /// Negative part `(m_j, f_j)` with `m_j` strictly increasing; denotes
    /// the suffix `x_{m_l}^{-f_l} ... x_{m_0}^{-f_0}`.
    pub fn negative_part(&self) -> &[(u32, u64)] {
        &self.negative
    }

    pub fn min_subscript(&self) -> Option<u32> {
        match (self.positive.first(), self.negative.first()) {
            (Some(&(p, _)), Some(&(n, _))) => Some(p.min(n)),
            (Some(&(p, _)), None) => Some(p),
            (None, Some(&(n, _))) => Some(n),
            (None, None) => None,
        }
    }

    /// Total exponent mass: the sum of all `e_i` and `f_j`.
    pub fn height(&self) -> u64 {
        self.positive
            .iter()
            .chain(self.negative.iter())
            .map(|&(_, e)| e)
            .fold(0u64, |acc, e| acc.checked_add(e).expect("height overflow"))
    }

    /// `Some(k)` iff the element is `x0^k` (the identity gives 0).
    pub fn x0_exponent(&self) -> Option<i64> {
        self.axis_exponent(0)
    }

    /// `Some(k)` iff the element is `x1^k`.
    pub fn x1_exponent(&self) -> Option<i64> {
        self.axis_exponent(1)
    }

    fn axis_exponent(&self, sub: u32) -> Option<i64> {
        match (self.positive.as_slice(), self.negative.as_slice()) {
            ([], []) => Some(0),
            ([(s, e)], []) if *s == sub => i64::try_from(*e).ok(),
            ([], [(s, e)]) if *s == sub => i64::try_from(*e).ok().map(|v| -v),
            _ => None,
        }
    }

    fn downshift(&self) -> Self {
        let drop = |part: &[(u32, u64)]| {
            part.iter()
                .map(|&(s, e)| (s.checked_sub(1).expect("downshift below zero"), e))
                .collect()
        };
        ThompsonNormalForm {
            positive: drop(&self.positive),
            negative: drop(&self.negative),
        }
    }

    /// The reduced word spelling the normal form. The junction between the
    /// parts never merges: the largest subscript cannot occur on both sides.
    pub fn to_word(&self) -> SyllableWord {
        let mut syllables: Vec<Syllable> = Vec::new();
        for &(s, e) in &self.positive {
            syllables.push(Syllable::new(s, i64::try_from(e).expect("exponent overflow")));
        }
        for &(s, e) in self.negative.iter().rev() {
            syllables.push(Syllable::new(s, -i64::try_from(e).expect("exponent overflow")));
        }
        SyllableWord::new(syllables).expect("normal form renders reduced")
    }

    pub fn to_letters(&self) -> LetterString {
        self.to_word().to_letters()
    }

    /// Structural validity: orderings, positivity, and the subscript
    /// restriction on repeated subscripts.
    pub fn check_invariants(&self) -> Result<(), String> {
        for part in [&self.positive, &self.negative] {
            for (i, &(s, e)) in part.iter().enumerate() {
                if e == 0 {
                    return Err(format!("zero exponent at subscript {s}"));
                }
                if i > 0 && part[i - 1].0 >= s {
                    return Err(format!("subscripts not strictly increasing at {s}"));
                }
            }
        }
        let has = |part: &[(u32, u64)], sub: u32| part.iter().any(|&(s, _)| s == sub);
        for &(s, _) in &self.positive {
            if has(&self.negative, s) && !has(&self.positive, s + 1) && !has(&self.negative, s + 1)
            {
                return Err(format!(
                    "subscript {s} occurs in both parts without {} in either",
                    s + 1
                ));
            }
        }
        Ok(())
    }
}

impl fmt::Display for ThompsonNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

/// Computes the normal form of the element represented by a reduced word.
pub fn normalize_word(w: &SyllableWord) -> ThompsonNormalForm {
    if w.is_empty() {
        return ThompsonNormalForm::identity();
    }
    let dec = core_decompose(w).expect("nonempty word");
    let m = dec.min_subscript;
    let mut pos = dec.pos;
    let mut neg = dec.neg;
    // Chunks strictly decrease the syllable count, so this recursion
    // terminates.
    let mut core = normalize_word(&dec.core);

    while pos > 0 && neg < 0 {
        if core.is_identity() {
            return ThompsonNormalForm::single(m, pos + neg);
        }
        let cmin = core.min_subscript().unwrap();
        if cmin > m + 1 {
            pos -= 1;
            neg += 1;
            core = core.downshift();
        } else {
            break;
        }
    }
    if core.is_identity() {
        return ThompsonNormalForm::single(m, pos + neg);
    }

    let mut out = core;
    if pos > 0 {
        out.positive.insert(0, (m, pos as u64));
    }
    if neg < 0 {
        out.negative.insert(0, (m, neg.unsigned_abs()));
    }
    out
}

/// Normal form of an arbitrary (unreduced) word.
pub fn normalize(w: &LetterString) -> ThompsonNormalForm {
    normalize_word(&SyllableWord::from_letters(w))
}

/// Equality in F.
pub fn equals(u: &LetterString, v: &LetterString) -> bool {
    normalize(u) == normalize(v)
}

/// Group product of two normal forms.
pub fn multiply(u: &ThompsonNormalForm, v: &ThompsonNormalForm) -> ThompsonNormalForm {
    normalize_word(&u.to_word().concat(&v.to_word()))
}

/// Group inverse of a normal form.
pub fn invert(u: &ThompsonNormalForm) -> ThompsonNormalForm {
    normalize_word(&u.to_word().inverse())
}
