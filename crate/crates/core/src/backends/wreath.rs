//! The wreath product Z wr Z: pairs (lamp configuration, shift) with
//! `eta` the lamp generator at the origin and `xi` the shift. Alternating
//! words with odd exponents can collapse here, which is what makes this
//! backend a useful foil for F.

use serde::Serialize;
use std::collections::BTreeMap;

use super::{BackendError, GroupBackend};
use crate::words::LetterString;

/// Element of Z wr Z: a finitely supported lamp function Z -> Z and an
/// integer shift. Composition: `(f, t)(g, s) = (f + g(. - t), t + s)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct WreathElement {
    /// Nonzero lamp values, keyed by position.
    pub lamp: BTreeMap<i64, i64>,
    pub shift: i64,
}

impl WreathElement {
    pub fn identity() -> Self {
        Self::default()
    }

    fn add_lamp(&mut self, pos: i64, value: i64) {
        if value == 0 {
            return;
        }
        let entry = self.lamp.entry(pos).or_insert(0);
        *entry = entry.checked_add(value).expect("lamp overflow");
        if *entry == 0 {
            self.lamp.remove(&pos);
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct WreathBackend;

impl GroupBackend for WreathBackend {
    type Elem = WreathElement;

    fn name(&self) -> &'static str {
        "wreath"
    }

    fn identity(&self) -> Self::Elem {
        WreathElement::identity()
    }

    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = a.clone();
        out.shift = a.shift.checked_add(b.shift).expect("shift overflow");
        for (&pos, &val) in &b.lamp {
            out.add_lamp(pos.checked_add(a.shift).expect("position overflow"), val);
        }
        out
    }

    fn invert(&self, a: &Self::Elem) -> Self::Elem {
        let mut out = WreathElement {
            lamp: BTreeMap::new(),
            shift: -a.shift,
        };
        for (&pos, &val) in &a.lamp {
            out.add_lamp(pos - a.shift, -val);
        }
        out
    }

    fn eta(&self) -> Self::Elem {
        let mut e = WreathElement::identity();
        e.add_lamp(0, 1);
        e
    }

    fn xi(&self) -> Self::Elem {
        WreathElement { lamp: BTreeMap::new(), shift: 1 }
    }

    fn abelian_image(&self, a: &Self::Elem) -> (i64, i64) {
        let total: i64 = a.lamp.values().sum();
        (total, a.shift)
    }

    fn height(&self, _a: &Self::Elem) -> Option<u64> {
        None
    }

    fn eta_exponent(&self, a: &Self::Elem) -> Option<i64> {
        if a.shift != 0 {
            return None;
        }
        match a.lamp.len() {
            0 => Some(0),
            1 => a.lamp.get(&0).copied(),
            _ => None,
        }
    }

    fn xi_exponent(&self, a: &Self::Elem) -> Option<i64> {
        a.lamp.is_empty().then_some(a.shift)
    }

    fn eval_word(&self, w: &LetterString) -> Result<Self::Elem, BackendError> {
        let mut e = self.identity();
        for &(sub, exp) in w.runs() {
            let step = match sub {
                0 => self.pow(&self.eta(), exp),
                1 => self.pow(&self.xi(), exp),
                s => {
                    return Err(BackendError::UnsupportedSubscript {
                        backend: self.name(),
                        subscript: s,
                    })
                }
            };
            e = self.multiply(&e, &step);
        }
        Ok(e)
    }

    fn render(&self, a: &Self::Elem) -> String {
        let lamps: Vec<String> = a
            .lamp
            .iter()
            .map(|(p, v)| format!("{p}:{v}"))
            .collect();
        format!("lamps{{{}}} shift {}", lamps.join(","), a.shift)
    }

    fn pow(&self, a: &Self::Elem, k: i64) -> Self::Elem {
        // direct forms for the generators keep large powers cheap
        if a.lamp.is_empty() {
            return WreathElement {
                lamp: BTreeMap::new(),
                shift: a.shift.checked_mul(k).expect("shift overflow"),
            };
        }
        if a.shift == 0 && a.lamp.len() == 1 {
            let (&pos, &val) = a.lamp.iter().next().unwrap();
            let mut e = WreathElement::identity();
            e.add_lamp(pos, val.checked_mul(k).expect("lamp overflow"));
            return e;
        }
        let base = if k < 0 { self.invert(a) } else { a.clone() };
        let mut out = self.identity();
        for _ in 0..k.unsigned_abs() {
            out = self.multiply(&out, &base);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backends::law_tests::check_group_laws;
    use crate::words::parse_word;

    #[test]
    fn laws() {
        check_group_laws(&WreathBackend, 31, 300);
    }

    #[test]
    fn basic_commutator_is_nontrivial() {
        let b = WreathBackend;
        let w = parse_word("x0 x1 x0^-1 x1^-1").unwrap();
        let e = b.eval_word(&w).unwrap();
        assert!(!b.is_identity(&e));
        assert_eq!(e.shift, 0);
        assert_eq!(e.lamp.get(&0), Some(&1));
        assert_eq!(e.lamp.get(&1), Some(&-1));
    }

    #[test]
    fn four_block_alternating_word_collapses() {
        // eta xi eta xi^-1 eta^-1 xi eta^-1 xi^-1: trivial lamp configuration
        let b = WreathBackend;
        let w = parse_word("x0 x1 x0 x1^-1 x0^-1 x1 x0^-1 x1^-1").unwrap();
        assert!(b.is_identity(&b.eval_word(&w).unwrap()));
    }

    #[test]
    fn membership() {
        let b = WreathBackend;
        assert_eq!(b.eta_exponent(&b.eta_pow(4)), Some(4));
        assert_eq!(b.xi_exponent(&b.xi_pow(-2)), Some(-2));
        let mixed = b.multiply(&b.eta(), &b.xi());
        assert_eq!(b.eta_exponent(&mixed), None);
        assert_eq!(b.xi_exponent(&mixed), None);
    }
}
