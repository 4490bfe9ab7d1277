//! Integer Laurent polynomials and Alexander-polynomial invariants.
//!
//! An Alexander polynomial is accepted in its symmetric normalized form:
//! `Δ(t) = Δ(1/t)` and `Δ(1) = 1`. From such a polynomial we extract
//! `Δ''(1) = sum_e c_e e(e-1)` and the second Conway coefficient
//! `a_2 = Δ''(1)/2`.
//!
//! The Alexander polynomial of an L-space knot has a very rigid shape:
//!
//! ```text
//! Δ(t) = (-1)^k + sum_{j=1}^{k} (-1)^{k-j} (t^{n_j} + t^{-n_j})
//! ```
//!
//! for a strictly increasing *gap sequence* `0 < n_1 < ... < n_k`, with
//! `n_k` the Seifert genus. [`lspace_gaps`] recognizes this shape, and
//! `a_2 = sum_j (-1)^{k-j} n_j^2` is bounded above by `n_k^2`, with equality
//! exactly when `k = 1` (pair the terms from the top: each
//! `-n_l^2 + n_{l-1}^2` is negative).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlexanderError {
    #[error("second derivative at 1 is odd; not an Alexander polynomial")]
    OddSecondDerivative,
    #[error("not of L-space form: {0}")]
    NotLSpaceForm(String),
    #[error("polynomial cannot be symmetrically normalized: {0}")]
    NotNormalizable(String),
    #[error("gap sequence must be strictly increasing and positive")]
    InvalidGapSequence,
}

/// A finitely supported integer Laurent polynomial in `t`.
///
/// Zero coefficients are never stored, so the support, minimum and maximum
/// exponents are well defined for nonzero polynomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_terms([(0i64, c.into())])
    }

    /// Builds a polynomial from `(exponent, coefficient)` terms, summing
    /// repeats and dropping zeros.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            let c = c.into();
            let entry = coeffs.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(&e);
            }
        }
        LaurentPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn evaluate_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Multiplies by `t^shift`.
    pub fn shifted(&self, shift: i64) -> Self {
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    pub fn negated(&self) -> Self {
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    /// True iff `c_e = c_{-e}` for all exponents and the value at 1 is 1.
    pub fn is_symmetric_normalized(&self) -> bool {
        self.coeffs.iter().all(|(e, c)| self.coeff(-e) == *c) && self.evaluate_at_one().is_one()
    }

    /// Multiplies by `±t^e` to reach the symmetric normalized form, when one
    /// exists.
    pub fn symmetric_normalize(&self) -> Result<Self, AlexanderError> {
        let (min, max) = match (self.min_exponent(), self.max_exponent()) {
            (Some(min), Some(max)) => (min, max),
            _ => return Err(AlexanderError::NotNormalizable("zero polynomial".into())),
        };
        if (min + max).is_odd() {
            return Err(AlexanderError::NotNormalizable(
                "exponent span is odd, no centering shift exists".into(),
            ));
        }
        let mut candidate = self.shifted(-(min + max) / 2);
        let at_one = candidate.evaluate_at_one();
        if at_one == BigInt::from(-1) {
            candidate = candidate.negated();
        } else if !at_one.is_one() {
            return Err(AlexanderError::NotNormalizable(format!(
                "value at 1 is {at_one}, not ±1"
            )));
        }
        if candidate.is_symmetric_normalized() {
            Ok(candidate)
        } else {
            Err(AlexanderError::NotNormalizable("coefficients are not symmetric".into()))
        }
    }

    /// `Δ''(1) = sum_e c_e e(e-1)`.
    pub fn second_derivative_at_one(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|(e, c)| c * BigInt::from(*e) * BigInt::from(e - 1))
            .sum()
    }

    /// The second Conway coefficient `a_2 = Δ''(1)/2`.
    pub fn a2(&self) -> Result<BigInt, AlexanderError> {
        let dd = self.second_derivative_at_one();
        if dd.is_odd() {
            return Err(AlexanderError::OddSecondDerivative);
        }
        Ok(dd / 2)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{mag}t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({})", self)
    }
}

// Serialized as a sorted list of [exponent, coefficient] pairs, e.g.
// [[-1,1],[0,-1],[1,1]] for the trefoil polynomial.
impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::Error;
        let pairs: Result<Vec<(i64, i64)>, S::Error> = self
            .coeffs
            .iter()
            .map(|(e, c)| {
                let c = i64::try_from(c).map_err(|_| S::Error::custom("coefficient exceeds i64 range"))?;
                Ok((*e, c))
            })
            .collect();
        pairs?.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs = Vec::<(i64, i64)>::deserialize(deserializer)?;
        let mut seen = std::collections::BTreeSet::new();
        for (e, _) in &pairs {
            if !seen.insert(*e) {
                return Err(D::Error::custom(format!("duplicate exponent {e}")));
            }
        }
        Ok(LaurentPolynomial::from_terms(pairs))
    }
}

/// The exponent gaps `0 < n_1 < ... < n_k` of an L-space-form Alexander
/// polynomial; `n_k` is the Seifert genus of the (fibered) knot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct GapSequence {
    gaps: Vec<i64>,
}

impl GapSequence {
    pub fn new(gaps: Vec<i64>) -> Result<Self, AlexanderError> {
        if gaps.is_empty() || gaps[0] < 1 || gaps.windows(2).any(|w| w[0] >= w[1]) {
            return Err(AlexanderError::InvalidGapSequence);
        }
        Ok(GapSequence { gaps })
    }

    pub fn values(&self) -> &[i64] {
        &self.gaps
    }

    pub fn k(&self) -> usize {
        self.gaps.len()
    }

    /// `n_k`, the Seifert genus when the sequence comes from a fibered knot.
    pub fn genus(&self) -> i64 {
        *self.gaps.last().expect("gap sequence is nonempty")
    }

    /// Rebuilds `(-1)^k + sum_j (-1)^{k-j} (t^{n_j} + t^{-n_j})`.
    pub fn reconstruct(&self) -> LaurentPolynomial {
        let k = self.k();
        let mut terms: Vec<(i64, BigInt)> = vec![(0, sign_pow(k))];
        for (j, n) in self.gaps.iter().enumerate() {
            let s = sign_pow(k - (j + 1));
            terms.push((*n, s.clone()));
            terms.push((-n, s));
        }
        LaurentPolynomial::from_terms(terms)
    }
}

impl TryFrom<Vec<i64>> for GapSequence {
    type Error = AlexanderError;
    fn try_from(gaps: Vec<i64>) -> Result<Self, Self::Error> {
        GapSequence::new(gaps)
    }
}

impl From<GapSequence> for Vec<i64> {
    fn from(g: GapSequence) -> Self {
        g.gaps
    }
}

fn sign_pow(exp: usize) -> BigInt {
    if exp % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Recognizes the alternating ±1-coefficient form of an L-space knot
/// polynomial and returns its gap sequence.
pub fn lspace_gaps(f: &LaurentPolynomial) -> Result<GapSequence, AlexanderError> {
    if !f.is_symmetric_normalized() {
        return Err(AlexanderError::NotLSpaceForm(
            "polynomial is not symmetric normalized".into(),
        ));
    }
    let gaps: Vec<i64> = f.terms().map(|(e, _)| e).filter(|e| *e > 0).collect();
    let k = gaps.len();
    if k == 0 {
        return Err(AlexanderError::NotLSpaceForm("no positive-exponent terms".into()));
    }
    // Coefficients must alternate down from +1 at the top gap, with
    // constant term (-1)^k; symmetry covers the negative exponents.
    let constant = f.coeff(0);
    if constant != sign_pow(k) {
        return Err(AlexanderError::NotLSpaceForm(format!(
            "coefficient {constant} at exponent 0"
        )));
    }
    for (j, n) in gaps.iter().enumerate() {
        let expected = sign_pow(k - (j + 1));
        let actual = f.coeff(*n);
        if actual != expected {
            return Err(AlexanderError::NotLSpaceForm(format!(
                "coefficient {actual} at exponent {n}"
            )));
        }
    }
    GapSequence::new(gaps)
}

/// `a_2 = sum_j (-1)^{k-j} n_j^2` straight from a gap sequence.
pub fn a2_from_gaps(g: &GapSequence) -> BigInt {
    let k = g.k();
    g.values()
        .iter()
        .enumerate()
        .map(|(j, n)| sign_pow(k - (j + 1)) * BigInt::from(*n) * BigInt::from(*n))
        .sum()
}

/// Verifies `a_2 <= g^2` (with `g = n_k`) for a gap sequence. Always true;
/// exposed so the bound can be checked on concrete data.
pub fn check_claim_bound(g: &GapSequence) -> bool {
    let genus = BigInt::from(g.genus());
    a2_from_gaps(g) <= &genus * &genus
}
