//! The free metabelian group on two generators, represented through
//! abelianized free derivatives: an element is the pair of its derivatives
//! with respect to `a` and `b` (Laurent polynomials in the commuting images
//! `x`, `y`) together with its abelianization. The representation is
//! faithful, so triviality is decided exactly.
//!
//! Derivative rules: `d(uv) = du + u*dv` with `u*` the abelianized monomial
//! of `u`; `da/da = 1`, `da^-1/da = -x^-1` at the current prefix, and the
//! symmetric rules for `b`.

use serde::Serialize;
use std::collections::BTreeMap;

use super::{BackendError, GroupBackend};
use crate::words::LetterString;

/// Laurent polynomial in two commuting variables with integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Laurent2 {
    terms: BTreeMap<(i64, i64), i64>,
}

impl Laurent2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(x: i64, y: i64, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(x, y, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, x: i64, y: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry((x, y)).or_insert(0);
        *entry = entry.checked_add(coeff).expect("coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&(x, y));
        }
    }

    pub fn add(&self, other: &Laurent2) -> Laurent2 {
        let mut out = self.clone();
        for (&(x, y), &c) in &other.terms {
            out.add_term(x, y, c);
        }
        out
    }

    /// Multiplication by a single monomial.
    pub fn mul_monomial(&self, x: i64, y: i64, coeff: i64) -> Laurent2 {
        let mut out = Laurent2::zero();
        for (&(px, py), &c) in &self.terms {
            out.add_term(
                px.checked_add(x).expect("degree overflow"),
                py.checked_add(y).expect("degree overflow"),
                c.checked_mul(coeff).expect("coefficient overflow"),
            );
        }
        out
    }

    pub fn mul(&self, other: &Laurent2) -> Laurent2 {
        let mut out = Laurent2::zero();
        for (&(x, y), &c) in &other.terms {
            out = out.add(&self.mul_monomial(x, y, c));
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<(i64, i64), i64> {
        &self.terms
    }
}

/// Element of the free metabelian group on `{a, b}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MetabelianElement {
    /// Abelianized derivative with respect to `a`.
    pub da: Laurent2,
    /// Abelianized derivative with respect to `b`.
    pub db: Laurent2,
    /// Exponent sums `(alpha, beta)`.
    pub ab: (i64, i64),
}

impl MetabelianElement {
    /// The derivative identity `da (x-1) + db (y-1) = x^alpha y^beta - 1`
    /// holds for every group element; exposed for validation.
    pub fn fundamental_identity_holds(&self) -> bool {
        let x_minus_1 = {
            let mut p = Laurent2::monomial(1, 0, 1);
            p.add_term(0, 0, -1);
            p
        };
        let y_minus_1 = {
            let mut p = Laurent2::monomial(0, 1, 1);
            p.add_term(0, 0, -1);
            p
        };
        let lhs = self.da.mul(&x_minus_1).add(&self.db.mul(&y_minus_1));
        let mut rhs = Laurent2::monomial(self.ab.0, self.ab.1, 1);
        rhs.add_term(0, 0, -1);
        lhs == rhs
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct MetabelianBackend;

impl MetabelianBackend {
    /// Evaluates a two-generator word (`a = x0`, `b = x1`) to its image.
    pub fn eval(&self, w: &LetterString) -> Result<MetabelianElement, BackendError> {
        let mut e = MetabelianElement::default();
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

    /// Triviality in the free metabelian group: zero abelianization and
    /// both derivatives vanishing.
    pub fn is_trivial_word(&self, w: &LetterString) -> Result<bool, BackendError> {
        Ok(self.is_identity(&self.eval(w)?))
    }
}

impl GroupBackend for MetabelianBackend {
    type Elem = MetabelianElement;

    fn name(&self) -> &'static str {
        "metab"
    }

    fn identity(&self) -> Self::Elem {
        MetabelianElement::default()
    }

    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (ax, ay) = a.ab;
        MetabelianElement {
            da: a.da.add(&b.da.mul_monomial(ax, ay, 1)),
            db: a.db.add(&b.db.mul_monomial(ax, ay, 1)),
            ab: (
                ax.checked_add(b.ab.0).expect("exponent overflow"),
                ay.checked_add(b.ab.1).expect("exponent overflow"),
            ),
        }
    }

    fn invert(&self, a: &Self::Elem) -> Self::Elem {
        let (ax, ay) = a.ab;
        MetabelianElement {
            da: a.da.mul_monomial(-ax, -ay, -1),
            db: a.db.mul_monomial(-ax, -ay, -1),
            ab: (-ax, -ay),
        }
    }

    fn eta(&self) -> Self::Elem {
        MetabelianElement {
            da: Laurent2::monomial(0, 0, 1),
            db: Laurent2::zero(),
            ab: (1, 0),
        }
    }

    fn xi(&self) -> Self::Elem {
        MetabelianElement {
            da: Laurent2::zero(),
            db: Laurent2::monomial(0, 0, 1),
            ab: (0, 1),
        }
    }

    fn abelian_image(&self, a: &Self::Elem) -> (i64, i64) {
        a.ab
    }

    fn height(&self, _a: &Self::Elem) -> Option<u64> {
        None
    }

    fn eta_exponent(&self, a: &Self::Elem) -> Option<i64> {
        let candidate = self.pow(&self.eta(), a.ab.0);
        (a.ab.1 == 0 && *a == candidate).then_some(a.ab.0)
    }

    fn xi_exponent(&self, a: &Self::Elem) -> Option<i64> {
        let candidate = self.pow(&self.xi(), a.ab.1);
        (a.ab.0 == 0 && *a == candidate).then_some(a.ab.1)
    }

    fn eval_word(&self, w: &LetterString) -> Result<Self::Elem, BackendError> {
        self.eval(w)
    }

    fn render(&self, a: &Self::Elem) -> String {
        format!("ab({},{}) da{:?} db{:?}", a.ab.0, a.ab.1, a.da.terms(), a.db.terms())
    }

    fn pow(&self, a: &Self::Elem, k: i64) -> Self::Elem {
        // geometric-sum forms for the pure generators
        if *a == self.eta() {
            let mut da = Laurent2::zero();
            if k >= 0 {
                for j in 0..k {
                    da.add_term(j, 0, 1);
                }
            } else {
                for j in 1..=(-k) {
                    da.add_term(-j, 0, -1);
                }
            }
            return MetabelianElement { da, db: Laurent2::zero(), ab: (k, 0) };
        }
        if *a == self.xi() {
            let mut db = Laurent2::zero();
            if k >= 0 {
                for j in 0..k {
                    db.add_term(0, j, 1);
                }
            } else {
                for j in 1..=(-k) {
                    db.add_term(0, -j, -1);
                }
            }
            return MetabelianElement { da: Laurent2::zero(), db, ab: (0, k) };
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
    use crate::backends::law_tests::{check_group_laws, random_element};
    use crate::words::parse_word;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn laws() {
        check_group_laws(&MetabelianBackend, 41, 300);
    }

    #[test]
    fn fundamental_identity() {
        let b = MetabelianBackend;
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..300 {
            let e = random_element(&b, &mut rng);
            assert!(e.fundamental_identity_holds());
        }
    }

    #[test]
    fn commutator_nontrivial() {
        let b = MetabelianBackend;
        // [a, b]: da = 1 - y after abelianization, so nontrivial
        let w = parse_word("a b a^-1 b^-1").unwrap();
        assert!(!b.is_trivial_word(&w).unwrap());
    }

    #[test]
    fn second_derived_word_vanishes() {
        let b = MetabelianBackend;
        let w = parse_word(
            "ab^-1a^-1b^4ab^-1a^-1b^-1ab^-1a^-1b^-1ab^4a^-1b^-1ab^-1a^-1b^-1",
        )
        .unwrap();
        assert!(b.is_trivial_word(&w).unwrap());
    }

    #[test]
    fn membership() {
        let b = MetabelianBackend;
        assert_eq!(b.eta_exponent(&b.eta_pow(5)), Some(5));
        assert_eq!(b.eta_exponent(&b.eta_pow(-5)), Some(-5));
        assert_eq!(b.xi_exponent(&b.xi_pow(-3)), Some(-3));
        let mixed = b.multiply(&b.eta(), &b.xi());
        assert_eq!(b.eta_exponent(&mixed), None);
    }
}
