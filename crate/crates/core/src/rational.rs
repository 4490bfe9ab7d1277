//! Exact rational numbers.
//!
//! A thin wrapper around an arbitrary-precision `num`-style ratio that
//! guarantees the canonical form used throughout this crate: the fraction is
//! always reduced, the denominator is always positive, and all arithmetic is
//! exact. Values serialize as `"num/den"` strings (`"num"` when the
//! denominator is 1), never as floats.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RationalError {
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

/// An exact rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numerator / denominator`, reducing and normalizing the sign.
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self, RationalError> {
        let den = denominator.into();
        if den.is_zero() {
            return Err(RationalError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numerator.into(), den)))
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

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Returns the numerator when the value is an integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.numerator().clone())
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }

        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "{}/{}", self.numerator(), self.denominator())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rational({})", self)
    }
}

impl FromStr for Rational {
    type Err = RationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse_int = |t: &str| BigInt::from_str(t.trim()).map_err(|_| RationalError::Parse(s.to_owned()));
        match s.split_once('/') {
            None => Ok(Rational::from_integer(parse_int(s)?)),
            Some((num, den)) => {
                let den = parse_int(den)?;
                if den.is_zero() {
                    return Err(RationalError::ZeroDenominator);
                }
                Rational::new(parse_int(num)?, den)
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e: RationalError| D::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(r(2, 4), r(1, 2));
        assert_eq!(r(3, -6), r(-1, 2));
        assert_eq!(*r(3, -6).denominator(), BigInt::from(2));
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn exact_arithmetic() {
        assert_eq!(r(1, 2) + r(1, 3), r(5, 6));
        assert_eq!(r(1, 2) - r(1, 3), r(1, 6));
        assert_eq!(r(2, 3) * r(3, 4), r(1, 2));
        assert_eq!(r(1, 2) / r(3, 2), r(1, 3));
        assert_eq!(-r(1, 2), r(-1, 2));
        assert!(r(1, 3) < r(1, 2));
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(r(14, 27).to_string(), "14/27");
        assert_eq!(r(-9, 2).to_string(), "-9/2");
        assert_eq!(Rational::from_integer(5).to_string(), "5");
        assert_eq!("14/27".parse::<Rational>().unwrap(), r(14, 27));
        assert_eq!("-3".parse::<Rational>().unwrap(), Rational::from_integer(-3));
        assert_eq!(" 2/6 ".parse::<Rational>().unwrap(), r(1, 3));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn integer_detection() {
        assert!(r(48, 48).is_integer());
        assert_eq!(r(48, 48).to_integer(), Some(BigInt::from(1)));
        assert_eq!(r(1, 2).to_integer(), None);
    }
}
