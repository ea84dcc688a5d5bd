//! Exact dyadic rationals `n / 2^k` with arbitrary-precision numerators.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `num / 2^exp`, kept normalized: `num` is odd or zero, and `exp = 0`
/// when `num` is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    pub fn new(num: impl Into<BigInt>, exp: u32) -> Self {
        Dyadic { num: num.into(), exp }.normalized()
    }

    pub fn zero() -> Self {
        Dyadic { num: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic { num: BigInt::one(), exp: 0 }
    }

    pub fn integer(n: i64) -> Self {
        Dyadic::new(n, 0)
    }

    /// `1 / 2^k`.
    pub fn half_power(k: u32) -> Self {
        Dyadic { num: BigInt::one(), exp: k }
    }

    fn normalized(mut self) -> Self {
        if self.num.is_zero() {
            self.exp = 0;
            return self;
        }
        while self.exp > 0 && (&self.num % 2) == BigInt::zero() {
            self.num /= 2;
            self.exp -= 1;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    /// Multiplies by `2^k` (k may be negative).
    pub fn scale_pow2(&self, k: i64) -> Dyadic {
        if self.num.is_zero() {
            return Dyadic::zero();
        }
        let e = i64::from(self.exp) - k;
        if e >= 0 {
            Dyadic {
                num: self.num.clone(),
                exp: u32::try_from(e).expect("dyadic exponent overflow"),
            }
            .normalized()
        } else {
            let shift = u32::try_from(-e).expect("dyadic exponent overflow");
            Dyadic { num: &self.num << shift, exp: 0 }
        }
    }

    /// If `self / other = 2^k` for an integer `k`, returns `k`.
    pub fn log2_ratio(&self, other: &Dyadic) -> Option<i64> {
        if self.num.is_zero() || other.num.is_zero() {
            return None;
        }
        if self.num != other.num {
            return None;
        }
        Some(i64::from(other.exp) - i64::from(self.exp))
    }

    fn with_common_exp<'a>(&'a self, other: &'a Dyadic) -> (BigInt, BigInt, u32) {
        let exp = self.exp.max(other.exp);
        let a = &self.num << (exp - self.exp);
        let b = &other.num << (exp - other.exp);
        (a, b, exp)
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, exp) = self.with_common_exp(rhs);
        Dyadic { num: a + b, exp }.normalized()
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, exp) = self.with_common_exp(rhs);
        Dyadic { num: a - b, exp }.normalized()
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic {
            num: &self.num * &rhs.num,
            exp: self.exp.checked_add(rhs.exp).expect("dyadic exponent overflow"),
        }
        .normalized()
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { num: -self.num.clone(), exp: self.exp }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.with_common_exp(other);
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        assert_eq!(Dyadic::new(4, 2), Dyadic::integer(1));
        assert_eq!(Dyadic::new(6, 3), Dyadic::new(3, 2));
        assert_eq!(Dyadic::new(0, 7), Dyadic::zero());
    }

    #[test]
    fn arithmetic() {
        let half = Dyadic::half_power(1);
        let quarter = Dyadic::half_power(2);
        assert_eq!(&half + &quarter, Dyadic::new(3, 2));
        assert_eq!(&half - &quarter, quarter);
        assert_eq!(&half * &half, quarter);
        assert!(quarter < half);
        assert_eq!(half.scale_pow2(1), Dyadic::one());
        assert_eq!(half.scale_pow2(-2), Dyadic::half_power(3));
    }

    #[test]
    fn log2_ratio() {
        let a = Dyadic::new(3, 4);
        let b = Dyadic::new(3, 2);
        // a / b = (3/16) / (3/4) = 2^-2
        assert_eq!(a.log2_ratio(&b), Some(-2));
        assert_eq!(b.log2_ratio(&a), Some(2));
        assert_eq!(a.log2_ratio(&Dyadic::new(5, 2)), None);
    }
}
