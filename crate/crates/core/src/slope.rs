//! Surgery slopes and slope pairs.
//!
//! A surgery slope on a knot in an integral homology sphere is a reduced
//! fraction `p/q`. The canonical form used here carries the sign in `p` and
//! keeps `q >= 1`; the meridian `1/0` is representable (with `q = 0`) but is
//! only meaningful where an operation explicitly allows it. The distance
//! between slopes `p/q` and `p'/q'` is the minimal geometric intersection
//! number `|p q' - p' q|`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SlopeError {
    #[error("slope 0/0 is undefined")]
    Indeterminate,
    #[error("cannot parse slope from {0:?}")]
    Parse(String),
    #[error("slope pair {0} and {1} violates |p| = |p'|")]
    NumeratorMismatch(String, String),
}

/// A reduced surgery slope `p/q` with `q >= 1`, or the meridian `1/0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slope {
    p: BigInt,
    q: BigInt,
}

impl Slope {
    /// Reduces `(p, q)` to canonical form. The sign ends up on `p`; the
    /// meridian is normalized to `1/0`. Rejects `(0, 0)`.
    pub fn reduce(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self, SlopeError> {
        let (p, q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(SlopeError::Indeterminate);
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / &g, q / &g);
        if q.is_negative() || (q.is_zero() && p.is_negative()) {
            p = -p;
            q = -q;
        }
        Ok(Slope { p, q })
    }

    pub fn integral(p: impl Into<BigInt>) -> Self {
        Slope { p: p.into(), q: BigInt::from(1) }
    }

    pub fn meridian() -> Self {
        Slope { p: BigInt::from(1), q: BigInt::zero() }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_meridian(&self) -> bool {
        self.q.is_zero()
    }

    /// Minimal geometric intersection number `|p q' - p' q|`.
    pub fn distance(&self, other: &Slope) -> BigInt {
        (&self.p * &other.q - &other.p * &self.q).abs()
    }

    /// The slope `-p/q`, i.e. the image under mirroring the knot.
    pub fn mirror(&self) -> Slope {
        Slope::reduce(-&self.p, self.q.clone()).expect("mirror of a valid slope is valid")
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == BigInt::from(1) {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Slope({})", self)
    }
}

impl FromStr for Slope {
    type Err = SlopeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse_int = |t: &str| BigInt::from_str(t.trim()).map_err(|_| SlopeError::Parse(s.to_owned()));
        match s.split_once('/') {
            None => Slope::reduce(parse_int(s)?, 1),
            Some((p, q)) => Slope::reduce(parse_int(p)?, parse_int(q)?),
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e: SlopeError| D::Error::custom(e.to_string()))
    }
}

/// A candidate chirally cosmetic pair of slopes `p/q`, `p/q'`.
///
/// The homological condition forces the numerators to agree; under the
/// canonical sign convention (sign on `p`, `q >= 1`) the slope `p/(-q)` is
/// stored as `(-p)/q`, so the condition enforced here is `|p| = |p'|`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "(Slope, Slope)", into = "(Slope, Slope)")]
pub struct SlopePair {
    first: Slope,
    second: Slope,
}

impl SlopePair {
    pub fn new(first: Slope, second: Slope) -> Result<Self, SlopeError> {
        if first.p().abs() != second.p().abs() {
            return Err(SlopeError::NumeratorMismatch(first.to_string(), second.to_string()));
        }
        Ok(SlopePair { first, second })
    }

    pub fn first(&self) -> &Slope {
        &self.first
    }

    pub fn second(&self) -> &Slope {
        &self.second
    }

    pub fn distance(&self) -> BigInt {
        self.first.distance(&self.second)
    }

    /// True for pairs of the form `(r, -r)` with `r` nonzero.
    pub fn is_mirror_pair(&self) -> bool {
        !self.first.p().is_zero() && self.second == self.first.mirror()
    }
}

impl fmt::Display for SlopePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

impl TryFrom<(Slope, Slope)> for SlopePair {
    type Error = SlopeError;
    fn try_from((first, second): (Slope, Slope)) -> Result<Self, Self::Error> {
        SlopePair::new(first, second)
    }
}

impl From<SlopePair> for (Slope, Slope) {
    fn from(pair: SlopePair) -> Self {
        (pair.first, pair.second)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(p: i64, q: i64) -> Slope {
        Slope::reduce(p, q).unwrap()
    }

    #[test]
    fn reduction() {
        assert_eq!(s(18, 4), s(9, 2));
        assert_eq!(s(9, -2).to_string(), "-9/2");
        assert_eq!(s(0, 5).to_string(), "0");
        assert_eq!(Slope::reduce(0, 0), Err(SlopeError::Indeterminate));
        assert_eq!(s(3, 0), Slope::meridian());
        assert_eq!(s(-3, 0), Slope::meridian());
    }

    #[test]
    fn distance_examples() {
        assert_eq!(s(9, 1).distance(&s(9, 2)), BigInt::from(9));
        assert_eq!(s(1, 1).distance(&s(-1, 1)), BigInt::from(2));
        // p = 7 family at s = 0: slopes 7/1 and 7/(-2), distance 7(14*0 + 3).
        assert_eq!(s(7, 1).distance(&s(7, -2)), BigInt::from(21));
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(s(4, 1).mirror(), s(-4, 1));
        assert_eq!(s(1, 2).mirror(), s(-1, 2));
        assert_eq!(s(0, 1).mirror(), s(0, 1));
        assert_eq!(Slope::meridian().mirror(), Slope::meridian());
    }

    #[test]
    fn parsing() {
        assert_eq!("9".parse::<Slope>().unwrap(), s(9, 1));
        assert_eq!("9/2".parse::<Slope>().unwrap(), s(9, 2));
        assert_eq!("-1/3".parse::<Slope>().unwrap(), s(-1, 3));
        assert_eq!("37/2".parse::<Slope>().unwrap(), s(37, 2));
        assert_eq!("1/0".parse::<Slope>().unwrap(), Slope::meridian());
        assert!("0/0".parse::<Slope>().is_err());
        assert!("".parse::<Slope>().is_err());
    }

    #[test]
    fn pair_numerator_condition() {
        assert!(SlopePair::new(s(9, 1), s(9, 2)).is_ok());
        assert!(SlopePair::new(s(4, 1), s(-4, 1)).is_ok());
        assert!(SlopePair::new(s(0, 1), s(1, 1)).is_err());
        let pair = SlopePair::new(s(4, 1), s(-4, 1)).unwrap();
        assert!(pair.is_mirror_pair());
        assert!(!SlopePair::new(s(9, 1), s(9, 2)).unwrap().is_mirror_pair());
    }

    proptest! {
        #[test]
        fn distance_symmetric_and_reflexive(p1 in -50i64..50, q1 in 0i64..50, p2 in -50i64..50, q2 in 0i64..50) {
            prop_assume!((p1, q1) != (0, 0) && (p2, q2) != (0, 0));
            let a = s(p1, q1);
            let b = s(p2, q2);
            prop_assert_eq!(a.distance(&b), b.distance(&a));
            prop_assert_eq!(a.distance(&a), BigInt::from(0));
        }

        #[test]
        fn distance_invariant_under_representatives(p in -30i64..30, q in 1i64..30, k in 1i64..5) {
            prop_assume!(p != 0);
            // Scaling both entries does not change the reduced slope.
            let a = s(p, q);
            let b = s(p * k, q * k);
            prop_assert_eq!(a.clone(), b);
            prop_assert_eq!(a.distance(&s(1, 1)), s(p * k, q * k).distance(&s(1, 1)));
        }

        #[test]
        fn mirror_is_involution(p in -50i64..50, q in 0i64..50) {
            prop_assume!((p, q) != (0, 0));
            let a = s(p, q);
            prop_assert_eq!(a.mirror().mirror(), a);
        }

        #[test]
        fn mirror_pair_distance_is_2pq(p in 1i64..40, q in 1i64..40) {
            let a = s(p, q);
            let b = a.mirror();
            // distance(p/q, -p/q) = 2pq after reduction of p/q.
            let g = num_integer::gcd(p, q);
            prop_assert_eq!(a.distance(&b), BigInt::from(2 * (p / g) * (q / g)));
        }

        #[test]
        fn display_parse_roundtrip(p in -99i64..99, q in 0i64..99) {
            prop_assume!((p, q) != (0, 0));
            let a = s(p, q);
            prop_assert_eq!(a.to_string().parse::<Slope>().unwrap(), a);
        }
    }
}
