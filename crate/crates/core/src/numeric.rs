//! Exact rational arithmetic.
//!
//! [`Rational`] wraps an arbitrary-precision fraction that is always kept in
//! lowest terms with a positive denominator, so derived equality, ordering and
//! hashing are value-based. The textual form is `p/q`, or just `p` when the
//! denominator is one.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal {0:?}: expected \"p/q\" or \"p\"")]
    Parse(String),
}

/// An exact fraction in lowest terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, NumericError> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// `2^exp`, for any integer exponent.
    pub fn pow2(exp: i64) -> Self {
        let mag = BigInt::one() << exp.unsigned_abs();
        if exp >= 0 {
            Rational::from_integer(mag)
        } else {
            Rational(BigRational::new_raw(BigInt::one(), mag))
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Greatest integer `<= self`.
    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    /// Least integer `>= self`.
    pub fn ceil(&self) -> BigInt {
        -((-self.numer()).div_floor(self.denom()))
    }

    /// `self - floor(self)`, in `[0, 1)`.
    pub fn fract(&self) -> Self {
        self - &Rational::from_integer(self.floor())
    }

    pub fn recip(&self) -> Result<Self, NumericError> {
        if self.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self, NumericError> {
        if rhs.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// `(p1 + p2) / (q1 + q2)` of the two reduced fractions.
    pub fn mediant(&self, other: &Rational) -> Self {
        Rational(BigRational::new(
            self.numer() + other.numer(),
            self.denom() + other.denom(),
        ))
    }

    /// True when the denominator is a power of two.
    pub fn is_dyadic(&self) -> bool {
        is_power_of_two_int(self.denom())
    }

    /// True when the value is `2^k` for some integer `k` (negative `k` allowed).
    pub fn is_power_of_two(&self) -> bool {
        self.is_positive() && is_power_of_two_int(self.numer()) && is_power_of_two_int(self.denom())
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.0.to_f64()
    }
}

fn is_power_of_two_int(n: &BigInt) -> bool {
    n.sign() == Sign::Plus && n.magnitude().count_ones() == 1
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = NumericError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || NumericError::Parse(s.to_string());
        let text = s.trim();
        let parse_int = |t: &str, signed: bool| -> Result<BigInt, NumericError> {
            let digits = if signed {
                t.strip_prefix('-').unwrap_or(t)
            } else {
                t
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            t.parse::<BigInt>().map_err(|_| err())
        };
        match text.split_once('/') {
            None => Ok(Rational::from_integer(parse_int(text, true)?)),
            Some((p, q)) => {
                let p = parse_int(p, true)?;
                let q = parse_int(q, false)?;
                Rational::new(p, q)
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.is_integer() && self.numer() == &BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Rational::from(*other)))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(&self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

// Panics on a zero divisor, like integer division; use `checked_div` otherwise.
impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

/// A rational whose denominator is a power of two.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dyadic(Rational);

impl Dyadic {
    pub fn new(value: Rational) -> Option<Self> {
        value.is_dyadic().then_some(Dyadic(value))
    }

    /// The `k` with denominator `2^k`.
    pub fn exponent(&self) -> u64 {
        self.0.denom().bits() - 1
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_inner(self) -> Rational {
        self.0
    }
}

/// Shorthand for building literals in tests and examples. Panics on a bad literal.
pub fn q(text: &str) -> Rational {
    text.parse().unwrap_or_else(|e| panic!("{e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn add_reduces() {
        assert_eq!(q("1/3") + q("1/6"), q("1/2"));
        assert_eq!(q("2/4"), q("1/2"));
        assert_eq!(q("2/4").to_string(), "1/2");
    }

    #[test]
    fn floor_is_not_truncation() {
        assert_eq!(q("24/7").floor(), BigInt::from(3));
        assert_eq!(q("-1/2").floor(), BigInt::from(-1));
        assert_eq!(q("-2").floor(), BigInt::from(-2));
        assert_eq!(q("-1/2").ceil(), BigInt::from(0));
        assert_eq!(q("7/2").ceil(), BigInt::from(4));
        assert_eq!(q("-1/4").fract(), q("3/4"));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            q("1").checked_div(&q("0")),
            Err(NumericError::DivisionByZero)
        );
        assert_eq!(Rational::new(1, 0), Err(NumericError::DivisionByZero));
        assert_eq!("3/0".parse::<Rational>(), Err(NumericError::DivisionByZero));
    }

    #[test]
    fn mediants() {
        assert_eq!(q("0").mediant(&q("1")), q("1/2"));
        assert_eq!(q("1/2").mediant(&q("1")), q("2/3"));
        assert_eq!(q("1/3").mediant(&q("1/2")), q("2/5"));
    }

    #[test]
    fn dyadic_predicates() {
        assert!(q("3/8").is_dyadic());
        assert!(!q("1/3").is_dyadic());
        assert!(q("5").is_dyadic());
        assert!(q("1/4").is_power_of_two());
        assert!(q("8").is_power_of_two());
        assert!(q("1").is_power_of_two());
        assert!(!q("3/4").is_power_of_two());
        assert!(!q("-1/4").is_power_of_two());
        assert!(!q("0").is_power_of_two());
        assert_eq!(Rational::pow2(-3), q("1/8"));
        assert_eq!(Dyadic::new(q("5/16")).unwrap().exponent(), 4);
        assert!(Dyadic::new(q("1/6")).is_none());
    }

    #[test]
    fn text_form() {
        assert_eq!(q("-3/6").to_string(), "-1/2");
        assert_eq!(q("4/2").to_string(), "2");
        assert!("1/-2".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
        assert!("1.5".parse::<Rational>().is_err());
        assert!("+1".parse::<Rational>().is_err());
        assert_eq!(serde_json::to_string(&q("3/4")).unwrap(), "\"3/4\"");
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..200).prop_map(|(p, q)| Rational::new(p, q).unwrap())
    }

    proptest! {
        #[test]
        fn floor_brackets(a in small()) {
            let f = Rational::from_integer(a.floor());
            prop_assert!(f <= a);
            prop_assert!(a < f + Rational::one());
        }

        #[test]
        fn mediant_is_strictly_between(a in small(), b in small()) {
            prop_assume!(a < b);
            let m = a.mediant(&b);
            prop_assert!(a < m && m < b);
        }

        #[test]
        fn add_sub_round_trip(a in small(), b in small()) {
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn display_parse_round_trip(a in small()) {
            prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
        }
    }
}
