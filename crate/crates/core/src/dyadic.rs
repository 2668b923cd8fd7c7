//! Exact rationals whose denominator is a power of two.
//!
//! Every Fourier coefficient, influence and probability of a function on the
//! n-cube is an integer divided by `2^k` for some `k <= 2n`, so a numerator and
//! a denominator exponent are enough to carry all of them without rounding.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// `numerator / 2^log2_den`, always kept in lowest terms.
///
/// Normal form: the exponent is zero or the numerator is odd; zero is `0/2^0`.
/// Two equal values therefore have identical fields, so the derived
/// `PartialEq`/`Hash` agree with numeric equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Dyadic {
    num: i128,
    log2_den: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic {
        num: 0,
        log2_den: 0,
    };
    pub const ONE: Dyadic = Dyadic {
        num: 1,
        log2_den: 0,
    };

    /// Builds `num / 2^log2_den` and normalizes it.
    pub fn new(num: i128, log2_den: u32) -> Self {
        if num == 0 {
            return Self::ZERO;
        }
        let shift = num.trailing_zeros().min(log2_den);
        Dyadic {
            num: num >> shift,
            log2_den: log2_den - shift,
        }
    }

    pub fn from_int(value: i64) -> Self {
        Dyadic::new(value as i128, 0)
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn log2_denominator(&self) -> u32 {
        self.log2_den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    /// Divides by `2^k` exactly.
    pub fn div_pow2(self, k: u32) -> Self {
        Dyadic::new(self.num, self.log2_den + k)
    }

    /// Multiplies by an integer.
    pub fn scale(self, k: i64) -> Self {
        let num = self
            .num
            .checked_mul(k as i128)
            .expect("dyadic numerator overflow");
        Dyadic::new(num, self.log2_den)
    }

    /// Numerators of `self` and `other` over the common denominator
    /// `2^max(log2_den)`.
    fn aligned(self, other: Self) -> (i128, i128, u32) {
        let den = self.log2_den.max(other.log2_den);
        let lift = |v: Dyadic| {
            v.num
                .checked_shl(den - v.log2_den)
                .filter(|s| s >> (den - v.log2_den) == v.num)
                .expect("dyadic numerator overflow")
        };
        (lift(self), lift(other), den)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        let (a, b, den) = self.aligned(rhs);
        Dyadic::new(a.checked_add(b).expect("dyadic numerator overflow"), den)
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        self + (-rhs)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            num: -self.num,
            log2_den: self.log2_den,
        }
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Dyadic) -> Dyadic {
        let num = self
            .num
            .checked_mul(rhs.num)
            .expect("dyadic numerator overflow");
        Dyadic::new(num, self.log2_den + rhs.log2_den)
    }
}

impl AddAssign for Dyadic {
    fn add_assign(&mut self, rhs: Dyadic) {
        *self = *self + rhs;
    }
}

impl SubAssign for Dyadic {
    fn sub_assign(&mut self, rhs: Dyadic) {
        *self = *self - rhs;
    }
}

impl Sum for Dyadic {
    fn sum<I: Iterator<Item = Dyadic>>(iter: I) -> Dyadic {
        iter.fold(Dyadic::ZERO, Add::add)
    }
}

impl<'a> Sum<&'a Dyadic> for Dyadic {
    fn sum<I: Iterator<Item = &'a Dyadic>>(iter: I) -> Dyadic {
        iter.copied().sum()
    }
}

impl From<i64> for Dyadic {
    fn from(value: i64) -> Self {
        Dyadic::from_int(value)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(*other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log2_den == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, 1u128 << self.log2_den)
        }
    }
}

/// Serialized as `{"num": .., "log2_den": .., "display": "3/2"}`.
impl Serialize for Dyadic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Dyadic", 3)?;
        s.serialize_field("num", &self.num)?;
        s.serialize_field("log2_den", &self.log2_den)?;
        s.serialize_field("display", &self.to_string())?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(num: i128, k: u32) -> Dyadic {
        Dyadic::new(num, k)
    }

    #[test]
    fn normal_form() {
        assert_eq!(d(4, 3), d(1, 1));
        assert_eq!(d(0, 7), Dyadic::ZERO);
        assert_eq!(d(0, 7).log2_denominator(), 0);
        assert_eq!(d(-6, 2).numerator(), -3);
        assert_eq!(d(-6, 2).log2_denominator(), 1);
        assert_eq!(d(8, 0).numerator(), 8);
    }

    #[test]
    fn arithmetic() {
        assert_eq!(d(1, 1) + d(1, 1), Dyadic::ONE);
        assert_eq!(d(3, 3) - d(1, 1), d(-1, 3));
        assert_eq!(d(3, 1) * d(1, 2), d(3, 3));
        assert_eq!(d(3, 2).scale(4), Dyadic::from_int(3));
        assert_eq!(Dyadic::from_int(3).div_pow2(1), d(3, 1));
        assert!(d(3, 1) > Dyadic::ONE);
        assert!(d(-1, 5) < Dyadic::ZERO);
        assert!(d(15, 3) < d(2, 0));
    }

    #[test]
    fn display() {
        assert_eq!(d(3, 1).to_string(), "3/2");
        assert_eq!(d(-15, 3).to_string(), "-15/8");
        assert_eq!(Dyadic::ZERO.to_string(), "0");
        assert_eq!(d(8, 2).to_string(), "2");
    }

    #[test]
    fn serializes_exact_fields() {
        let json = serde_json::to_string(&d(3, 1)).unwrap();
        assert_eq!(json, r#"{"num":3,"log2_den":1,"display":"3/2"}"#);
    }

    fn arb() -> impl Strategy<Value = Dyadic> {
        (-(1i128 << 40)..(1i128 << 40), 0u32..48).prop_map(|(n, k)| Dyadic::new(n, k))
    }

    proptest! {
        #[test]
        fn stays_normalized(a in arb(), b in arb()) {
            for v in [a + b, a - b, a * b] {
                prop_assert!(v.numerator() % 2 != 0 || v.log2_denominator() == 0);
                if v.is_zero() {
                    prop_assert_eq!(v.log2_denominator(), 0);
                }
            }
        }

        #[test]
        fn order_matches_cross_multiplication(a in arb(), b in arb()) {
            // |num| < 2^40 and k < 48, so both products fit in i128
            let lhs = a.numerator() << b.log2_denominator();
            let rhs = b.numerator() << a.log2_denominator();
            prop_assert_eq!(a.cmp(&b), lhs.cmp(&rhs));
            prop_assert_eq!((a - b).is_negative(), a < b);
        }

        #[test]
        fn add_sub_inverse(a in arb(), b in arb()) {
            prop_assert_eq!(a + b - b, a);
            prop_assert_eq!(a + b, b + a);
        }
    }
}
