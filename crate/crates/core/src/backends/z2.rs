//! The free abelian group Z^2 with `eta = (1,0)`, `xi = (0,1)` and the
//! taxicab height. Useful as the simplest group with independent
//! abelianized generators, and as a source of counterexamples: alternating
//! words collapse here.

use super::{BackendError, GroupBackend};
use crate::words::LetterString;

#[derive(Debug, Clone, Copy, Default)]
pub struct Z2Backend;

impl GroupBackend for Z2Backend {
    type Elem = (i64, i64);

    fn name(&self) -> &'static str {
        "z2"
    }

    fn identity(&self) -> Self::Elem {
        (0, 0)
    }

    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (
            a.0.checked_add(b.0).expect("coordinate overflow"),
            a.1.checked_add(b.1).expect("coordinate overflow"),
        )
    }

    fn invert(&self, a: &Self::Elem) -> Self::Elem {
        (-a.0, -a.1)
    }

    fn eta(&self) -> Self::Elem {
        (1, 0)
    }

    fn xi(&self) -> Self::Elem {
        (0, 1)
    }

    fn abelian_image(&self, a: &Self::Elem) -> (i64, i64) {
        *a
    }

    fn height(&self, a: &Self::Elem) -> Option<u64> {
        Some(a.0.unsigned_abs() + a.1.unsigned_abs())
    }

    fn eta_exponent(&self, a: &Self::Elem) -> Option<i64> {
        (a.1 == 0).then_some(a.0)
    }

    fn xi_exponent(&self, a: &Self::Elem) -> Option<i64> {
        (a.0 == 0).then_some(a.1)
    }

    fn eval_word(&self, w: &LetterString) -> Result<Self::Elem, BackendError> {
        let mut e = self.identity();
        for &(sub, exp) in w.runs() {
            match sub {
                0 => e.0 = e.0.checked_add(exp).expect("coordinate overflow"),
                1 => e.1 = e.1.checked_add(exp).expect("coordinate overflow"),
                s => {
                    return Err(BackendError::UnsupportedSubscript {
                        backend: self.name(),
                        subscript: s,
                    })
                }
            }
        }
        Ok(e)
    }

    fn render(&self, a: &Self::Elem) -> String {
        format!("({},{})", a.0, a.1)
    }

    fn pow(&self, a: &Self::Elem, k: i64) -> Self::Elem {
        (
            a.0.checked_mul(k).expect("coordinate overflow"),
            a.1.checked_mul(k).expect("coordinate overflow"),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backends::law_tests::{check_group_laws, check_height_laws};
    use crate::words::parse_word;

    #[test]
    fn laws() {
        check_group_laws(&Z2Backend, 21, 300);
        check_height_laws(&Z2Backend, 22, 300);
    }

    #[test]
    fn eval_and_membership() {
        let b = Z2Backend;
        let w = parse_word("x0^2 x1^-3 x0").unwrap();
        assert_eq!(b.eval_word(&w).unwrap(), (3, -3));
        assert!(b.eval_word(&parse_word("x2").unwrap()).is_err());
        assert_eq!(b.eta_exponent(&(5, 0)), Some(5));
        assert_eq!(b.eta_exponent(&(5, 1)), None);
    }
}
