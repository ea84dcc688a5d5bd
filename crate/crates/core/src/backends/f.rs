//! Thompson's group F as a backend, with `eta = x0`, `xi = x1`, elements
//! kept in normal form, and the exponent-mass height.

use super::{BackendError, GroupBackend};
use crate::words::{abelian_image, normalize, LetterString, ThompsonNormalForm};

#[derive(Debug, Clone, Copy, Default)]
pub struct FBackend;

impl GroupBackend for FBackend {
    type Elem = ThompsonNormalForm;

    fn name(&self) -> &'static str {
        "f"
    }

    fn identity(&self) -> Self::Elem {
        ThompsonNormalForm::identity()
    }

    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        crate::words::multiply(a, b)
    }

    fn invert(&self, a: &Self::Elem) -> Self::Elem {
        crate::words::invert(a)
    }

    fn eta(&self) -> Self::Elem {
        ThompsonNormalForm::single(0, 1)
    }

    fn xi(&self) -> Self::Elem {
        ThompsonNormalForm::single(1, 1)
    }

    fn abelian_image(&self, a: &Self::Elem) -> (i64, i64) {
        let img = abelian_image(&a.to_letters());
        (img.a, img.b)
    }

    fn height(&self, a: &Self::Elem) -> Option<u64> {
        Some(a.height())
    }

    fn eta_exponent(&self, a: &Self::Elem) -> Option<i64> {
        a.x0_exponent()
    }

    fn xi_exponent(&self, a: &Self::Elem) -> Option<i64> {
        a.x1_exponent()
    }

    fn eval_word(&self, w: &LetterString) -> Result<Self::Elem, BackendError> {
        Ok(normalize(w))
    }

    fn render(&self, a: &Self::Elem) -> String {
        a.to_string()
    }

    fn is_identity(&self, a: &Self::Elem) -> bool {
        a.is_identity()
    }

    fn pow(&self, a: &Self::Elem, k: i64) -> Self::Elem {
        if let Some(e) = a.x0_exponent() {
            return ThompsonNormalForm::single(0, e.checked_mul(k).expect("power overflow"));
        }
        if let Some(e) = a.x1_exponent() {
            return ThompsonNormalForm::single(1, e.checked_mul(k).expect("power overflow"));
        }
        let base = if k < 0 { self.invert(a) } else { a.clone() };
        let mut out = self.identity();
        for _ in 0..k.unsigned_abs() {
            out = self.multiply(&out, &base);
        }
        out
    }

    fn eta_pow(&self, k: i64) -> Self::Elem {
        ThompsonNormalForm::single(0, k)
    }

    fn xi_pow(&self, k: i64) -> Self::Elem {
        ThompsonNormalForm::single(1, k)
    }

    fn step_eta(&self, a: &Self::Elem, k: i64) -> Self::Elem {
        let mut w = a.to_letters();
        w.push_power(0, k);
        normalize(&w)
    }

    fn step_xi(&self, a: &Self::Elem, k: i64) -> Self::Elem {
        let mut w = a.to_letters();
        w.push_power(1, k);
        normalize(&w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backends::law_tests::{check_group_laws, check_height_laws};
    use crate::backends::pl::pl_equal;
    use crate::words::parse_word;

    #[test]
    fn group_and_height_laws() {
        check_group_laws(&FBackend, 11, 200);
        check_height_laws(&FBackend, 12, 200);
    }

    #[test]
    fn subgroup_membership() {
        let b = FBackend;
        assert_eq!(b.eta_exponent(&b.eta_pow(-7)), Some(-7));
        assert_eq!(b.xi_exponent(&b.xi_pow(3)), Some(3));
        assert_eq!(b.eta_exponent(&b.identity()), Some(0));
        let mixed = b.multiply(&b.eta(), &b.xi());
        assert_eq!(b.eta_exponent(&mixed), None);
        assert_eq!(b.xi_exponent(&mixed), None);
    }

    #[test]
    fn condition_a_coordinates() {
        let b = FBackend;
        assert_eq!(b.abelian_image(&b.eta()), (1, 0));
        assert_eq!(b.abelian_image(&b.xi()), (0, 1));
    }

    #[test]
    fn eval_agrees_with_pl() {
        let b = FBackend;
        for text in ["x1^-1 x2 x1", "x0 x1 x0^-1", "x2 x2^-1", "x0^3 x4^-1"] {
            let w = parse_word(text).unwrap();
            let e = b.eval_word(&w).unwrap();
            assert_eq!(
                b.is_identity(&e),
                pl_equal(&w, &LetterString::empty()),
                "identity verdicts must agree on {text}"
            );
        }
    }
}
