//! Seifert fibered spaces: homology of knot exteriors over a disk, Dehn
//! fillings, and orientation-sensitive comparison over the sphere.
//!
//! For a Seifert fibered space over a disk with unnormalized invariants
//! `(alpha_i, beta_i)` and a chosen section, the first homology is presented
//! on the section boundaries `c_0, ..., c_n` and a regular fiber `h` by
//!
//! ```text
//! alpha_i c_i - beta_i h = 0   (i = 1..n)
//! c_0 + c_1 + ... + c_n = 0
//! ```
//!
//! The fiber-relation sign is pinned by a worked example: the invariants
//! `{-1/3, 1/5, -1/5, 1/2}` must give `H_1 = Z` with `c_0 = 5z` and
//! `h = -30z`. Dehn filling kills one further primitive class `a mu + b
//! lambda` expressed in the `(c_0, h)` basis. All cokernels are computed by
//! Smith normal form rather than by hand-elimination.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::{cokernel_from_diagonal, smith_normal_form, AbelianGroup, IntegerMatrix};
use crate::rational::Rational;
use crate::slope::{Slope, SlopePair};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeifertError {
    #[error("fiber multiplicity alpha must be nonzero")]
    ZeroAlpha,
    #[error("fiber invariants must be coprime: gcd({0}, {1}) != 1")]
    FiberNotCoprime(BigInt, BigInt),
    #[error("operation requires base {expected}, got {got}")]
    WrongBase { expected: BaseSurface, got: BaseSurface },
    #[error("filling class ({0}, {1}) is not primitive")]
    NonPrimitiveFilling(BigInt, BigInt),
    #[error("unsupported: comparison handles at most {limit} singular fibers, got {got}")]
    TooManyFibers { limit: usize, got: usize },
}

/// Base orbifold surface of the fibration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseSurface {
    Disk,
    Sphere,
}

impl fmt::Display for BaseSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSurface::Disk => write!(f, "disk"),
            BaseSurface::Sphere => write!(f, "sphere"),
        }
    }
}

/// Unnormalized Seifert invariants over a disk or sphere base.
///
/// Entries with `|alpha| = 1` are permitted as section-twist bookkeeping
/// (they carry integer parts of the Euler term); genuine singular fibers
/// have `|alpha| >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeifertDataRepr", into = "SeifertDataRepr")]
pub struct SeifertData {
    base: BaseSurface,
    fibers: Vec<(BigInt, BigInt)>,
}

#[derive(Serialize, Deserialize)]
struct SeifertDataRepr {
    base: BaseSurface,
    fibers: Vec<(i64, i64)>,
}

impl TryFrom<SeifertDataRepr> for SeifertData {
    type Error = SeifertError;
    fn try_from(repr: SeifertDataRepr) -> Result<Self, Self::Error> {
        SeifertData::new(repr.base, repr.fibers)
    }
}

impl From<SeifertData> for SeifertDataRepr {
    fn from(data: SeifertData) -> Self {
        SeifertDataRepr {
            base: data.base,
            fibers: data
                .fibers
                .iter()
                .map(|(a, b)| {
                    (
                        i64::try_from(a).expect("alpha exceeds i64 in serialization"),
                        i64::try_from(b).expect("beta exceeds i64 in serialization"),
                    )
                })
                .collect(),
        }
    }
}

impl SeifertData {
    pub fn new<A: Into<BigInt>, B: Into<BigInt>>(
        base: BaseSurface,
        fibers: impl IntoIterator<Item = (A, B)>,
    ) -> Result<Self, SeifertError> {
        let fibers: Vec<(BigInt, BigInt)> =
            fibers.into_iter().map(|(a, b)| (a.into(), b.into())).collect();
        for (alpha, beta) in &fibers {
            if alpha.is_zero() {
                return Err(SeifertError::ZeroAlpha);
            }
            if !alpha.gcd(beta).is_one() {
                return Err(SeifertError::FiberNotCoprime(alpha.clone(), beta.clone()));
            }
        }
        Ok(SeifertData { base, fibers })
    }

    pub fn disk<A: Into<BigInt>, B: Into<BigInt>>(
        fibers: impl IntoIterator<Item = (A, B)>,
    ) -> Result<Self, SeifertError> {
        Self::new(BaseSurface::Disk, fibers)
    }

    pub fn sphere<A: Into<BigInt>, B: Into<BigInt>>(
        fibers: impl IntoIterator<Item = (A, B)>,
    ) -> Result<Self, SeifertError> {
        Self::new(BaseSurface::Sphere, fibers)
    }

    pub fn base(&self) -> BaseSurface {
        self.base
    }

    pub fn fibers(&self) -> &[(BigInt, BigInt)] {
        &self.fibers
    }

    /// The orientation-reversed space: every `beta_i/alpha_i` negated.
    pub fn mirror(&self) -> SeifertData {
        SeifertData {
            base: self.base,
            fibers: self.fibers.iter().map(|(a, b)| (a.clone(), -b)).collect(),
        }
    }

    fn require_base(&self, expected: BaseSurface) -> Result<(), SeifertError> {
        if self.base != expected {
            return Err(SeifertError::WrongBase { expected, got: self.base });
        }
        Ok(())
    }

    /// Relation matrix on generators `c_0, ..., c_n, h` for a disk base.
    fn exterior_presentation(&self) -> IntegerMatrix {
        let n = self.fibers.len();
        let gens = n + 2; // c_0..c_n, h
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
        for (i, (alpha, beta)) in self.fibers.iter().enumerate() {
            let mut row = vec![BigInt::zero(); gens];
            row[i + 1] = alpha.clone();
            row[gens - 1] = -beta;
            rows.push(row);
        }
        let mut sum_row = vec![BigInt::one(); gens];
        sum_row[gens - 1] = BigInt::zero();
        rows.push(sum_row);
        IntegerMatrix::from_rows(rows).expect("presentation matrix is rectangular and nonempty")
    }
}

/// Coordinates of a group element in the canonical basis of an
/// [`AbelianGroup`]: one entry per torsion factor (reduced into `[0, d)`)
/// followed by one per free factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupElement {
    #[serde(with = "bigint_vec_strings")]
    pub torsion: Vec<BigInt>,
    #[serde(with = "bigint_vec_strings")]
    pub free: Vec<BigInt>,
}

mod bigint_vec_strings {
    use num_bigint::BigInt;
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        strings.into_iter().map(|s| s.parse().map_err(D::Error::custom)).collect()
    }
}

/// First homology of the exterior together with the classes of the section
/// boundary `c_0` and the regular fiber `h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExteriorHomology {
    pub group: AbelianGroup,
    pub section_class: GroupElement,
    pub fiber_class: GroupElement,
}

/// H_1 of the Seifert fibered exterior over a disk, with generator images.
pub fn h1_exterior(data: &SeifertData) -> Result<ExteriorHomology, SeifertError> {
    data.require_base(BaseSurface::Disk)?;
    let relations = data.exterior_presentation();
    let snf = smith_normal_form(&relations);
    let group = cokernel_from_diagonal(&snf.d);

    let gens = relations.cols();
    let diag = snf.d.diagonal();
    let class_of = |gen_index: usize| -> GroupElement {
        // The quotient map sends e_i to row i of V, coordinates j then taken
        // modulo d_j (torsion) or kept (free).
        let mut torsion = Vec::new();
        let mut free = Vec::new();
        for j in 0..gens {
            let coord = snf.v[(gen_index, j)].clone();
            match diag.get(j) {
                Some(d) if d.is_one() => {}
                Some(d) if !d.is_zero() => torsion.push(coord.mod_floor(d)),
                _ => free.push(coord),
            }
        }
        GroupElement { torsion, free }
    };

    Ok(ExteriorHomology {
        group,
        section_class: class_of(0),
        fiber_class: class_of(gens - 1),
    })
}

/// A meridian/longitude pair on the boundary torus, written in the
/// `(c_0, h)` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeripheralBasis {
    pub meridian: (BigInt, BigInt),
    pub longitude: (BigInt, BigInt),
}

impl PeripheralBasis {
    pub fn new<T: Into<BigInt>>(meridian: (T, T), longitude: (T, T)) -> Self {
        PeripheralBasis {
            meridian: (meridian.0.into(), meridian.1.into()),
            longitude: (longitude.0.into(), longitude.1.into()),
        }
    }
}

/// H_1 after Dehn filling along the primitive class `a mu + b lambda`.
pub fn h1_filled(
    data: &SeifertData,
    basis: &PeripheralBasis,
    filling: (&BigInt, &BigInt),
) -> Result<AbelianGroup, SeifertError> {
    data.require_base(BaseSurface::Disk)?;
    let (a, b) = filling;
    if !a.gcd(b).is_one() {
        return Err(SeifertError::NonPrimitiveFilling(a.clone(), b.clone()));
    }
    let c0_coeff = a * &basis.meridian.0 + b * &basis.longitude.0;
    let h_coeff = a * &basis.meridian.1 + b * &basis.longitude.1;

    let presentation = data.exterior_presentation();
    let gens = presentation.cols();
    let mut rows: Vec<Vec<BigInt>> =
        (0..presentation.rows()).map(|i| presentation.row(i).to_vec()).collect();
    let mut filling_row = vec![BigInt::zero(); gens];
    filling_row[0] = c0_coeff;
    filling_row[gens - 1] = h_coeff;
    rows.push(filling_row);
    let filled = IntegerMatrix::from_rows(rows).expect("filled presentation is rectangular");
    Ok(crate::matrix::cokernel(&filled))
}

/// One admissible exterior for an integral/half-integral cosmetic pair on a
/// two-singular-fiber Seifert space: `K(p) = -K(p/2)` forces
/// `p = alpha^2 (2m+1) / ((alpha(2m+1) - 1)/2)` and
/// `p/2 = alpha^2 (2m+1) / ((alpha(2m+1) + 1)/2)` for some integer `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm2Solution {
    pub alpha: BigInt,
    pub m: BigInt,
    pub p: BigInt,
}

/// Enumerates all `(alpha, m)` with `2 <= |alpha| <= alpha_range` and
/// `|m| <= m_range` satisfying both surgery-coefficient formulas, reporting
/// the positive surgery coefficient `p`.
///
/// Both denominators must be integral (so `alpha(2m+1)` must be odd) and the
/// two formulas must name the same pair `(p, p/2)` up to overall
/// orientation; the returned `p` is positive. Enlarging the ranges past
/// `(3, 1)` never adds solutions.
pub fn thm2_solve(alpha_range: i64, m_range: i64) -> Vec<Thm2Solution> {
    let mut out = Vec::new();
    for alpha in -alpha_range..=alpha_range {
        if alpha.abs() < 2 {
            continue;
        }
        for m in -m_range..=m_range {
            let alpha_big = BigInt::from(alpha);
            let odd = BigInt::from(2) * BigInt::from(m) + BigInt::from(1);
            let n: BigInt = &alpha_big * &odd;
            if n.is_even() {
                continue; // denominators (n -+ 1)/2 would not be integral
            }
            let den1: BigInt = (&n - BigInt::from(1)) / BigInt::from(2);
            let den2: BigInt = (&n + BigInt::from(1)) / BigInt::from(2);
            if den1.is_zero() || den2.is_zero() {
                continue;
            }
            let numerator = Rational::from(&alpha_big * &alpha_big * &odd);
            let p_formula = numerator.clone() / Rational::from(den1);
            let half_formula = numerator / Rational::from(den2);
            let Some(p_raw) = p_formula.to_integer() else { continue };
            if p_raw.is_zero() {
                continue;
            }
            if half_formula * Rational::from_integer(2) != Rational::from(p_raw.clone()) {
                continue;
            }
            out.push(Thm2Solution { alpha: BigInt::from(alpha), m: BigInt::from(m), p: p_raw.abs() });
        }
    }
    out.sort_by_key(|s| (s.p.clone(), s.alpha.abs(), s.alpha.is_negative(), s.m.clone()));
    out
}

/// The chirally cosmetic slope pair on the knot constructed from the
/// `{-1/3, 1/5, -1/5, 1/2}` exterior: `gamma_1 = (18m+9)/(3m+1)` and
/// `gamma_2 = (18m+9)/(3m+2)`, reduced. At `m = 0` this is `(9, 9/2)`.
pub fn remark_slopes(m: i64) -> SlopePair {
    let m = BigInt::from(m);
    let numerator: BigInt = BigInt::from(18) * &m + BigInt::from(9);
    let den1: BigInt = BigInt::from(3) * &m + BigInt::from(1);
    let den2: BigInt = BigInt::from(3) * &m + BigInt::from(2);
    let gamma1 = Slope::reduce(numerator.clone(), den1).expect("3m+1 != 0 for integer m");
    let gamma2 = Slope::reduce(numerator, den2).expect("3m+2 != 0 for integer m");
    SlopePair::new(gamma1, gamma2).expect("both slopes share the numerator 18m+9")
}

/// Canonical form of a closed Seifert fibered space over the sphere:
/// integer Euler term `e0` plus fibers with `0 < beta < alpha`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizedSfs {
    #[serde(with = "bigint_string")]
    pub e0: BigInt,
    pub fibers: Vec<(i64, i64)>,
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

impl NormalizedSfs {
    /// Multiset of fiber multiplicities.
    pub fn multiplicities(&self) -> Vec<i64> {
        let mut alphas: Vec<i64> = self.fibers.iter().map(|(a, _)| *a).collect();
        alphas.sort_unstable();
        alphas
    }

    /// Re-expresses the canonical form as raw Seifert data (the Euler term
    /// becomes a `(1, e0)` bookkeeping entry).
    pub fn to_seifert_data(&self) -> SeifertData {
        let mut fibers: Vec<(BigInt, BigInt)> = self
            .fibers
            .iter()
            .map(|(a, b)| (BigInt::from(*a), BigInt::from(*b)))
            .collect();
        fibers.push((BigInt::one(), self.e0.clone()));
        SeifertData { base: BaseSurface::Sphere, fibers }
    }
}

impl fmt::Display for NormalizedSfs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fibers: Vec<String> = self.fibers.iter().map(|(a, b)| format!("{b}/{a}")).collect();
        write!(f, "(e0 = {}; {})", self.e0, fibers.join(", "))
    }
}

/// Normalizes sphere-base Seifert data: integer parts shift into `e0`,
/// each fraction lands in `(0, 1)`, fibers are sorted. Invariant under the
/// standard moves, hence idempotent.
pub fn normalize_closed_sfs(data: &SeifertData) -> Result<NormalizedSfs, SeifertError> {
    data.require_base(BaseSurface::Sphere)?;
    let mut e0 = BigInt::zero();
    let mut fibers: Vec<(i64, i64)> = Vec::new();
    for (alpha, beta) in data.fibers() {
        let (alpha, beta) =
            if alpha.is_negative() { (-alpha, -beta.clone()) } else { (alpha.clone(), beta.clone()) };
        if alpha.is_one() {
            e0 += beta;
            continue;
        }
        let k = beta.div_floor(&alpha);
        let reduced = beta - &k * &alpha; // in (0, alpha) since gcd = 1
        e0 += k;
        fibers.push((
            i64::try_from(&alpha).expect("fiber multiplicity exceeds i64"),
            i64::try_from(&reduced).expect("normalized beta exceeds i64"),
        ));
    }
    fibers.sort_unstable();
    Ok(NormalizedSfs { e0, fibers })
}

/// Outcome of comparing two oriented Seifert fibered spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SfsComparison {
    OrientationPreservingHomeo,
    OrientationReversingHomeo,
    Distinct,
}

impl fmt::Display for SfsComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SfsComparison::OrientationPreservingHomeo => write!(f, "orientation_preserving_homeo"),
            SfsComparison::OrientationReversingHomeo => write!(f, "orientation_reversing_homeo"),
            SfsComparison::Distinct => write!(f, "distinct"),
        }
    }
}

/// Compares two small Seifert fibered spaces over the sphere (at most three
/// singular fibers) as oriented Seifert-fibered structures.
///
/// Differing multiplicity multisets force `Distinct`; otherwise the
/// canonical forms decide, with the orientation-reversing check running
/// against the mirrored second space.
pub fn sfs_chiral_compare(
    a: &SeifertData,
    b: &SeifertData,
) -> Result<SfsComparison, SeifertError> {
    let na = normalize_closed_sfs(a)?;
    let nb = normalize_closed_sfs(b)?;
    for n in [&na, &nb] {
        if n.fibers.len() > 3 {
            return Err(SeifertError::TooManyFibers { limit: 3, got: n.fibers.len() });
        }
    }
    if na.multiplicities() != nb.multiplicities() {
        return Ok(SfsComparison::Distinct);
    }
    if na == nb {
        return Ok(SfsComparison::OrientationPreservingHomeo);
    }
    let nb_mirror = normalize_closed_sfs(&b.mirror())?;
    if na == nb_mirror {
        return Ok(SfsComparison::OrientationReversingHomeo);
    }
    Ok(SfsComparison::Distinct)
}
