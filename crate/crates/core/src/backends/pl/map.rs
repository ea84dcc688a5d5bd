//! Piecewise-linear homeomorphisms of [0,1] with dyadic breakpoints and
//! power-of-two slopes, composed exactly. This realizes Thompson's group F
//! as maps and serves as the independent correctness oracle for the word
//! calculus: two words name the same element iff their maps are equal.

use std::fmt;

use super::dyadic::Dyadic;
use crate::words::{Letter, LetterString, Sign};

/// An increasing PL bijection of [0,1]: breakpoints `(x, y)` including the
/// endpoints `(0,0)` and `(1,1)`, with power-of-two slopes in between.
/// Words act on the right: `(w v)(t) = v(w(t))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlMap {
    points: Vec<(Dyadic, Dyadic)>,
}

impl PlMap {
    pub fn identity() -> Self {
        PlMap {
            points: vec![(Dyadic::zero(), Dyadic::zero()), (Dyadic::one(), Dyadic::one())],
        }
    }

    /// Builds a map from breakpoints, dropping collinear interior points.
    /// Panics if the data does not describe an increasing dyadic PL
    /// bijection with power-of-two slopes.
    fn from_points(points: Vec<(Dyadic, Dyadic)>) -> Self {
        assert!(points.len() >= 2, "need at least the endpoints");
        assert_eq!(points.first().unwrap(), &(Dyadic::zero(), Dyadic::zero()));
        assert_eq!(points.last().unwrap(), &(Dyadic::one(), Dyadic::one()));
        let mut cleaned: Vec<(Dyadic, Dyadic)> = Vec::with_capacity(points.len());
        for (x, y) in points {
            if let Some((px, py)) = cleaned.last() {
                assert!(*px < x && *py < y, "breakpoints must strictly increase");
            }
            cleaned.push((x, y));
        }
        // drop interior points where the slope does not change
        let mut out: Vec<(Dyadic, Dyadic)> = Vec::with_capacity(cleaned.len());
        for point in cleaned {
            while out.len() >= 2 {
                let a = &out[out.len() - 2];
                let b = &out[out.len() - 1];
                let s1 = slope(a, b);
                let s2 = slope(b, &point);
                if s1 == s2 {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push(point);
        }
        PlMap { points: out }
    }

    /// The generator `x0`: t/2 on [0,1/2], t-1/4 on [1/2,3/4], 2t-1 on
    /// [3/4,1].
    pub fn generator_a() -> Self {
        PlMap::from_points(vec![
            (Dyadic::zero(), Dyadic::zero()),
            (Dyadic::half_power(1), Dyadic::half_power(2)),
            (Dyadic::new(3, 2), Dyadic::half_power(1)),
            (Dyadic::one(), Dyadic::one()),
        ])
    }

    /// The generator `x1`: identity on [0,1/2], a half-scale copy of `x0`
    /// on [1/2,1].
    pub fn generator_b() -> Self {
        let a = Self::generator_a();
        let half = Dyadic::half_power(1);
        let mut points = vec![(Dyadic::zero(), Dyadic::zero())];
        for (x, y) in &a.points {
            let sx = &half + &x.scale_pow2(-1);
            let sy = &half + &y.scale_pow2(-1);
            points.push((sx, sy));
        }
        PlMap::from_points(points)
    }

    pub fn breakpoints(&self) -> &[(Dyadic, Dyadic)] {
        &self.points
    }

    /// Exact evaluation.
    pub fn apply(&self, t: &Dyadic) -> Dyadic {
        assert!(
            !t.is_negative() && *t <= Dyadic::one(),
            "argument outside [0,1]"
        );
        let idx = match self.points.binary_search_by(|(x, _)| x.cmp(t)) {
            Ok(i) => return self.points[i].1.clone(),
            Err(i) => i - 1,
        };
        let (x0, y0) = &self.points[idx];
        let (x1, y1) = &self.points[idx + 1];
        let k = slope(&(x0.clone(), y0.clone()), &(x1.clone(), y1.clone()));
        y0 + &(t - x0).scale_pow2(k)
    }

    /// Exact preimage.
    pub fn apply_inverse(&self, t: &Dyadic) -> Dyadic {
        self.inverse().apply(t)
    }

    pub fn inverse(&self) -> PlMap {
        PlMap {
            points: self.points.iter().map(|(x, y)| (y.clone(), x.clone())).collect(),
        }
    }

    /// Composition in word order: the result maps `t` to `other(self(t))`.
    pub fn then(&self, other: &PlMap) -> PlMap {
        let mut xs: Vec<Dyadic> = self.points.iter().map(|(x, _)| x.clone()).collect();
        for (x, _) in &other.points {
            xs.push(self.apply_inverse(x));
        }
        xs.sort();
        xs.dedup();
        let points = xs
            .into_iter()
            .map(|x| {
                let y = other.apply(&self.apply(&x));
                (x, y)
            })
            .collect();
        PlMap::from_points(points)
    }

    pub fn is_identity(&self) -> bool {
        self.points.len() == 2
    }
}

fn slope(a: &(Dyadic, Dyadic), b: &(Dyadic, Dyadic)) -> i64 {
    let dx = &b.0 - &a.0;
    let dy = &b.1 - &a.1;
    dy.log2_ratio(&dx)
        .expect("slope must be a power of two")
}

impl fmt::Display for PlMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (x, y)) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({x},{y})")?;
        }
        write!(f, "]")
    }
}

/// The PL realization of a single letter. Subscripts above 1 are realized
/// by conjugation: `x_n = x0^-(n-1) x1 x0^(n-1)` for n >= 2.
fn letter_map(l: Letter) -> PlMap {
    let a = PlMap::generator_a();
    let b = PlMap::generator_b();
    let base = match l.subscript {
        0 => a,
        1 => b,
        n => {
            let shift = n - 1;
            let mut m = PlMap::identity();
            let a_inv = a.inverse();
            for _ in 0..shift {
                m = m.then(&a_inv);
            }
            m = m.then(&b);
            for _ in 0..shift {
                m = m.then(&a);
            }
            m
        }
    };
    match l.sign {
        Sign::Plus => base,
        Sign::Minus => base.inverse(),
    }
}

/// Evaluates a word to its PL map, exactly.
pub fn pl_oracle(w: &LetterString) -> PlMap {
    let mut cache: Vec<Option<(PlMap, PlMap)>> = Vec::new();
    let mut out = PlMap::identity();
    for &(sub, exp) in w.runs() {
        let idx = sub as usize;
        if cache.len() <= idx {
            cache.resize(idx + 1, None);
        }
        if cache[idx].is_none() {
            let m = letter_map(Letter { subscript: sub, sign: Sign::Plus });
            let inv = m.inverse();
            cache[idx] = Some((m, inv));
        }
        let (m, inv) = cache[idx].as_ref().unwrap();
        let step = if exp > 0 { m } else { inv };
        for _ in 0..exp.unsigned_abs() {
            out = out.then(step);
        }
    }
    out
}

/// Map equality of two words: the exact equality oracle for F.
pub fn pl_equal(u: &LetterString, v: &LetterString) -> bool {
    pl_oracle(u) == pl_oracle(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn w(text: &str) -> LetterString {
        parse_word(text).unwrap()
    }

    #[test]
    fn generators_are_sane() {
        let a = PlMap::generator_a();
        assert_eq!(a.apply(&Dyadic::half_power(1)), Dyadic::half_power(2));
        assert_eq!(a.apply(&Dyadic::one()), Dyadic::one());
        assert!(!a.is_identity());
        assert!(a.then(&a.inverse()).is_identity());
        let b = PlMap::generator_b();
        assert_eq!(b.apply(&Dyadic::half_power(2)), Dyadic::half_power(2));
        assert!(b.then(&b.inverse()).is_identity());
    }

    #[test]
    fn identity_words() {
        assert!(pl_oracle(&w("x0 x0^-1")).is_identity());
        assert!(pl_oracle(&w("1")).is_identity());
    }

    #[test]
    fn defining_relations() {
        // x_n x_m = x_m x_{n+1} for n > m
        for (n, m) in [(1u32, 0u32), (2, 0), (2, 1), (3, 1), (4, 2)] {
            let lhs = w(&format!("x{n} x{m}"));
            let rhs = w(&format!("x{m} x{}", n + 1));
            assert!(pl_equal(&lhs, &rhs), "relation failed for n={n}, m={m}");
        }
    }

    #[test]
    fn presentation_relators() {
        // [a b^-1, a^-1 b a] and [a b^-1, a^-2 b a^2]
        for s in ["a^-1ba", "a^-2ba^2"] {
            let t = w("ab^-1");
            let u = w(s);
            let comm = t.concat(&u).concat(&t.inverse()).concat(&u.inverse());
            assert!(pl_oracle(&comm).is_identity(), "relator with {s}");
        }
    }

    #[test]
    fn collision_pair() {
        assert!(pl_equal(&w("x1^-1 x2 x1"), &w("x3")));
        assert!(!pl_equal(&w("x0"), &w("x1")));
    }
}
