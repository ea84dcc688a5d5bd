//! Uniform group interface and concrete backends.
//!
//! Every backend exposes the group operations, a distinguished pair
//! `(eta, xi)`, the abelianization onto a pair of integer coordinates, an
//! optional height function, and exact membership tests for the cyclic
//! subgroups generated by `eta` and `xi`. Backends are stateless values.

pub mod f;
pub mod metabelian;
pub mod pl;
pub mod wreath;
pub mod z2;

pub use f::FBackend;
pub use metabelian::MetabelianBackend;
pub use wreath::WreathBackend;
pub use z2::Z2Backend;

use std::fmt::Debug;
use std::hash::Hash;
use thiserror::Error;

use crate::words::{Color, LetterString};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BackendError {
    #[error("backend '{backend}' cannot evaluate subscript {subscript} (only x0/x1 map to eta/xi)")]
    UnsupportedSubscript { backend: &'static str, subscript: u32 },
    #[error("backend '{backend}' has no height function")]
    NoHeight { backend: &'static str },
}

/// A group with distinguished elements `eta`, `xi` and the auxiliary
/// structure used by the condition checkers.
pub trait GroupBackend {
    type Elem: Clone + Eq + Ord + Hash + Debug;

    fn name(&self) -> &'static str;
    fn identity(&self) -> Self::Elem;
    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn invert(&self, a: &Self::Elem) -> Self::Elem;
    fn eta(&self) -> Self::Elem;
    fn xi(&self) -> Self::Elem;

    /// Image in the abelianization, projected to the `(eta, xi)` plane.
    fn abelian_image(&self, a: &Self::Elem) -> (i64, i64);

    /// Height, when the backend carries a height function.
    fn height(&self, a: &Self::Elem) -> Option<u64>;

    /// `Some(k)` iff `a = eta^k`; the identity reports 0.
    fn eta_exponent(&self, a: &Self::Elem) -> Option<i64>;
    /// `Some(k)` iff `a = xi^k`.
    fn xi_exponent(&self, a: &Self::Elem) -> Option<i64>;

    /// Evaluates a word over the generating family. `x0` maps to `eta` and
    /// `x1` to `xi`; whether higher subscripts are meaningful is up to the
    /// backend.
    fn eval_word(&self, w: &LetterString) -> Result<Self::Elem, BackendError>;

    fn render(&self, a: &Self::Elem) -> String;

    fn is_identity(&self, a: &Self::Elem) -> bool {
        *a == self.identity()
    }

    fn color(&self, a: &Self::Elem) -> Color {
        let (x, y) = self.abelian_image(a);
        Color::of_pair(x, y)
    }

    fn in_eta_subgroup(&self, a: &Self::Elem) -> bool {
        self.eta_exponent(a).is_some()
    }

    fn in_xi_subgroup(&self, a: &Self::Elem) -> bool {
        self.xi_exponent(a).is_some()
    }

    fn pow(&self, a: &Self::Elem, k: i64) -> Self::Elem {
        let base = if k < 0 { self.invert(a) } else { a.clone() };
        let mut out = self.identity();
        for _ in 0..k.unsigned_abs() {
            out = self.multiply(&out, &base);
        }
        out
    }

    fn eta_pow(&self, k: i64) -> Self::Elem {
        self.pow(&self.eta(), k)
    }

    fn xi_pow(&self, k: i64) -> Self::Elem {
        self.pow(&self.xi(), k)
    }

    /// `a * eta^k` — the horizontal step.
    fn step_eta(&self, a: &Self::Elem, k: i64) -> Self::Elem {
        self.multiply(a, &self.eta_pow(k))
    }

    /// `a * xi^k` — the vertical step.
    fn step_xi(&self, a: &Self::Elem, k: i64) -> Self::Elem {
        self.multiply(a, &self.xi_pow(k))
    }
}

#[cfg(test)]
pub(crate) mod law_tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// Random short word over eta/xi.
    pub fn random_element<B: GroupBackend>(b: &B, rng: &mut StdRng) -> B::Elem {
        let len = rng.gen_range(0..8);
        let mut e = b.identity();
        for _ in 0..len {
            let gen = if rng.gen_bool(0.5) { b.eta() } else { b.xi() };
            let gen = if rng.gen_bool(0.5) { b.invert(&gen) } else { gen };
            e = b.multiply(&e, &gen);
        }
        e
    }

    /// Associativity, identity, and inverse laws on random triples.
    pub fn check_group_laws<B: GroupBackend>(b: &B, seed: u64, samples: usize) {
        let mut rng = StdRng::seed_from_u64(seed);
        for _ in 0..samples {
            let x = random_element(b, &mut rng);
            let y = random_element(b, &mut rng);
            let z = random_element(b, &mut rng);
            assert_eq!(
                b.multiply(&b.multiply(&x, &y), &z),
                b.multiply(&x, &b.multiply(&y, &z)),
                "associativity failed in {}",
                b.name()
            );
            assert_eq!(b.multiply(&x, &b.identity()), x);
            assert_eq!(b.multiply(&b.identity(), &x), x);
            assert!(b.is_identity(&b.multiply(&x, &b.invert(&x))));
            assert!(b.is_identity(&b.multiply(&b.invert(&x), &x)));
        }
    }

    /// Subadditivity and unit heights, when a height is present.
    pub fn check_height_laws<B: GroupBackend>(b: &B, seed: u64, samples: usize) {
        if b.height(&b.identity()).is_none() {
            return;
        }
        assert_eq!(b.height(&b.identity()), Some(0));
        for g in [b.eta(), b.invert(&b.eta()), b.xi(), b.invert(&b.xi())] {
            assert_eq!(b.height(&g), Some(1), "unit height in {}", b.name());
        }
        let mut rng = StdRng::seed_from_u64(seed);
        for _ in 0..samples {
            let x = random_element(b, &mut rng);
            let y = random_element(b, &mut rng);
            let hx = b.height(&x).unwrap();
            let hy = b.height(&y).unwrap();
            let hxy = b.height(&b.multiply(&x, &y)).unwrap();
            assert!(hxy <= hx + hy, "subadditivity failed in {}", b.name());
            if !b.is_identity(&x) {
                assert!(hx > 0);
            }
        }
    }
}
