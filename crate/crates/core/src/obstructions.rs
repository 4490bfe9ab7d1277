//! Slope-level obstructions to chirally cosmetic surgeries.
//!
//! Four checkers live here:
//!
//! - [`thm1_check`] / [`thm1_candidate_ps`]: the necessary conditions for an
//!   integral/half-integral pair `K(p) = -K(p/2)` on a genus-`g` knot —
//!   `p` odd and positive, `a_2 = (p-1)(p-3)/48` a nonzero integer,
//!   `a_2 <= g^2`, and the resulting bound `p <= 7g + 2`;
//! - [`thm3_enumerate`]: the admissible slopes for chirally cosmetic
//!   *exceptional* pairs on hyperbolic knots. The distance bound `<= 8`, the
//!   `p > 2` hypothesis (killing the `q' < 0, q' != -q` branch) and the
//!   `p = 7` family contradiction (killing the `q' > 0` branch) leave
//!   exactly the mirror pairs `(r, -r)` with `r` among `1, 2, 3, 4, 1/2,
//!   1/3, 1/4`;
//! - [`p7_family_distances`]: the distances `7|14s + 3|` of the excluded
//!   `p = 7` families, all exceeding 8;
//! - [`cor6_classify`]: structure of the surgered manifolds for an
//!   admissible mirror pair — irreducible with infinite fundamental group,
//!   and possibly toroidal only for `(4, -4)` and `(1, -1)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dedekind::a2_required_by_surgery;
use crate::provenance::Axiom;
use crate::rational::Rational;
use crate::slope::{Slope, SlopePair};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ObstructionError {
    #[error("genus must be at least 1")]
    GenusTooSmall,
    #[error("pair {0} is not of the mirror form (r, -r)")]
    NotMirrorPair(String),
}

/// Verdict of the integral/half-integral necessary-condition check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm1Verdict {
    pub p_positive_odd: bool,
    /// `a_2` equals `(p-1)(p-3)/48` and is nonzero.
    pub a2_matches: bool,
    /// `a_2 <= g^2`.
    pub a2_within_genus_bound: bool,
    /// `p <= 7g + 2`.
    pub p_within_bound: bool,
    pub passes: bool,
    /// Empty iff `passes`.
    pub reasons: Vec<String>,
    pub provenance: Vec<Axiom>,
}

/// Checks the four necessary conditions for `K(p) = -K(p/2)` on a knot of
/// the given genus with second Conway coefficient `a2`.
pub fn thm1_check(genus: u32, a2: &BigInt, p: &BigInt) -> Result<Thm1Verdict, ObstructionError> {
    if genus == 0 {
        return Err(ObstructionError::GenusTooSmall);
    }
    let mut reasons = Vec::new();

    let p_positive_odd = p.is_positive() && p.is_odd();
    if !p_positive_odd {
        reasons.push(format!("p = {p} must be a positive odd integer"));
    }

    let required = Rational::new((p - 1) * (p - 3), 48).expect("48 != 0");
    let a2_nonzero = !a2.is_zero();
    let a2_matches = a2_nonzero && Rational::from(a2.clone()) == required;
    if !a2_nonzero {
        reasons.push("L-space surgery forces a2 != 0".to_owned());
    } else if !a2_matches {
        reasons.push(format!("a2 = {a2} differs from the required value (p-1)(p-3)/48 = {required}"));
    }

    let genus_sq = BigInt::from(genus) * BigInt::from(genus);
    let a2_within_genus_bound = *a2 <= genus_sq;
    if !a2_within_genus_bound {
        reasons.push(format!("a2 = {a2} exceeds g^2 = {genus_sq}"));
    }

    let bound = BigInt::from(7) * BigInt::from(genus) + 2;
    let p_within_bound = *p <= bound;
    if !p_within_bound {
        reasons.push(format!("p = {p} exceeds 7g + 2 = {bound}"));
    }

    let passes = p_positive_odd && a2_matches && a2_within_genus_bound && p_within_bound;
    Ok(Thm1Verdict {
        p_positive_odd,
        a2_matches,
        a2_within_genus_bound,
        p_within_bound,
        passes,
        reasons,
        provenance: vec![
            Axiom::PositivePairForcesLSpace,
            Axiom::LSpaceNonzeroSecondDerivative,
            Axiom::CassonDedekindSurgeryIdentity,
            Axiom::LSpaceKnotFibered,
        ],
    })
}

/// A surgery coefficient surviving the necessary conditions, with the
/// Casson invariant it would force.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateP {
    #[serde(with = "crate::obstructions::bigint_string")]
    pub p: BigInt,
    #[serde(with = "crate::obstructions::bigint_string")]
    pub required_a2: BigInt,
}

pub(crate) mod bigint_string {
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

/// All odd `p` in `[1, 7g+2]` for which `(p-1)(p-3)/48` is a nonzero
/// integer at most `g^2`. For `g = 1` the only candidate is `(9, 1)`.
pub fn thm1_candidate_ps(genus: u32) -> Result<Vec<CandidateP>, ObstructionError> {
    if genus == 0 {
        return Err(ObstructionError::GenusTooSmall);
    }
    let genus_sq = BigInt::from(genus) * BigInt::from(genus);
    let bound = 7 * u64::from(genus) + 2;
    let mut out = Vec::new();
    let mut p = 1u64;
    while p <= bound {
        let required = a2_required_by_surgery(&BigInt::from(p))
            .expect("odd positive p is valid input");
        if let Some(required) = required.to_integer() {
            if !required.is_zero() && required <= genus_sq {
                out.push(CandidateP { p: BigInt::from(p), required_a2: required });
            }
        }
        p += 2;
    }
    Ok(out)
}

/// Result of the exceptional-slope enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm3Enumeration {
    /// Surviving pairs, sorted by `(p, q)` of the first slope.
    pub pairs: Vec<SlopePair>,
    /// Why the `q' > 0` branch is empty.
    pub positive_branch_note: String,
    pub provenance: Vec<Axiom>,
}

pub const DEFAULT_DELTA_MAX: u64 = 8;
pub const DEFAULT_P_MIN: u64 = 3;

/// Enumerates candidate chirally cosmetic exceptional pairs `(p/q, p/q')`
/// with `q >= q'` under the distance bound `p|q' - q| <= delta_max`.
///
/// Branches, following the structure of the exclusion argument:
///
/// - `q' = -q`: survives whenever `2pq <= delta_max`; these mirror pairs are
///   the output (with the defaults: `r` in `{1, 2, 3, 4, 1/2, 1/3, 1/4}`).
/// - `q' < 0`, `q' != -q`: here `|q' - q| >= 3`, so the distance bound
///   forces `p <= delta_max / 3`; every such candidate with `p < p_min` is
///   discarded (the `p > 2` hypothesis, with the default `p_min = 3`).
/// - `q' > 0`: excluded outright; such a pair would have to lie in the
///   `p = 7` families, whose members have `q' < 0` and distance
///   `7|14s+3| >= 21`, a contradiction. See [`p7_family_distances`].
pub fn thm3_enumerate(delta_max: u64, p_min: u64) -> Thm3Enumeration {
    thm3_enumerate_with_scan(delta_max, p_min, delta_max.max(DEFAULT_DELTA_MAX))
}

/// Enumeration with an explicit scan bound on `q`; results are stable for
/// any `q_scan` large enough for the distance bound (`>= delta_max`).
pub fn thm3_enumerate_with_scan(delta_max: u64, p_min: u64, q_scan: u64) -> Thm3Enumeration {
    let delta = BigInt::from(delta_max);
    let mut pairs = Vec::new();
    for p in 1..=delta_max {
        for q in 1..=q_scan {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            let first = Slope::reduce(BigInt::from(p), BigInt::from(q)).expect("q > 0");
            // Branch q' = -q: distance 2pq.
            if BigInt::from(2) * p * q <= delta {
                pairs.push(
                    SlopePair::new(first.clone(), first.mirror())
                        .expect("mirror pair shares |p|"),
                );
            }
            // Branch q' < 0, q' != -q: here |q' - q| >= 3, so with the
            // default p_min = 3 the distance bound kills every candidate;
            // lowering p_min below 3 lets p <= 2 pairs through.
            if p < p_min {
                continue;
            }
            let q_signed = i64::try_from(q).expect("scan bound fits i64");
            for q_prime in -(q_scan as i64)..0 {
                if q_prime == -q_signed || num_integer::gcd(p as i64, q_prime) != 1 {
                    continue;
                }
                let dist = BigInt::from(p as i64) * BigInt::from(q_signed - q_prime);
                if dist.abs() <= delta {
                    let second = Slope::reduce(p as i64, q_prime).expect("q' != 0");
                    pairs.push(SlopePair::new(first.clone(), second).expect("same |p|"));
                }
            }
            // Branch q' > 0 (q' < q): excluded by the p = 7 family
            // contradiction; nothing to scan.
        }
    }
    pairs.sort_by(|a, b| {
        (a.first().p(), a.first().q(), a.second().p(), a.second().q())
            .cmp(&(b.first().p(), b.first().q(), b.second().p(), b.second().q()))
    });
    pairs.dedup();
    Thm3Enumeration {
        pairs,
        positive_branch_note: format!(
            "pairs with q' > 0 would lie in the p = 7 families, whose members have \
             q' < 0 and distance 7|14s+3| >= 21 > {delta_max}; no such pair exists"
        ),
        provenance: vec![
            Axiom::ExceptionalDistanceBound,
            Axiom::CosmeticNumeratorExceedsTwo,
            Axiom::PositivePairForcesLSpace,
            Axiom::LSpaceNonzeroSecondDerivative,
            Axiom::PositivePairSevenFamilies,
        ],
    }
}

/// The seven admissible slopes under the default bounds, one per surviving
/// mirror pair.
pub fn admissible_slopes() -> Vec<Slope> {
    thm3_enumerate(DEFAULT_DELTA_MAX, DEFAULT_P_MIN)
        .pairs
        .into_iter()
        .map(|pair| pair.first().clone())
        .collect()
}

/// One excluded `p = 7` family member: both families at parameter `s` have
/// distance `7|14s + 3|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct P7Row {
    pub s: i64,
    pub distance: u64,
}

/// Distances of the `p = 7` families for `|s| <= s_range`, verified against
/// the closed form `7|14s + 3|` and against the distance bound 8.
pub fn p7_family_distances(s_range: u32) -> Vec<P7Row> {
    let range = i64::from(s_range);
    let mut out = Vec::with_capacity(2 * s_range as usize + 1);
    for s in -range..=range {
        // family 1: q = 7s+1, q' = -7s-2; family 2: q = 7s+2, q' = -7s-1
        let d1 = 7 * ((-7 * s - 2) - (7 * s + 1)).abs();
        let d2 = 7 * ((-7 * s - 1) - (7 * s + 2)).abs();
        let closed = 7 * (14 * s + 3).abs();
        assert_eq!(d1, closed, "family 1 distance mismatch at s = {s}");
        assert_eq!(d2, closed, "family 2 distance mismatch at s = {s}");
        assert!(closed > 8, "family distance must exceed the bound at s = {s}");
        out.push(P7Row { s, distance: closed as u64 });
    }
    out
}

/// Structural classification of the manifolds obtained from an admissible
/// mirror pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairClassification {
    pub irreducible: bool,
    pub infinite_pi1: bool,
    pub toroidal_possible: bool,
    pub notes: String,
    pub provenance: Vec<Axiom>,
}

/// Classifies the pair `(r, -r)`: always irreducible with infinite
/// fundamental group; toroidal is possible only for `(4, -4)` (realized by
/// the figure-eight knot) and `(1, -1)`.
pub fn cor6_classify(pair: &SlopePair) -> Result<PairClassification, ObstructionError> {
    if !pair.is_mirror_pair() {
        return Err(ObstructionError::NotMirrorPair(pair.to_string()));
    }
    let distance = pair.distance();
    let r = if pair.first().p().is_positive() { pair.first() } else { pair.second() };
    let four = Slope::integral(4);
    let one = Slope::integral(1);

    let mut provenance = vec![Axiom::ReducibleOrCyclicDistanceOne, Axiom::FiniteNoncyclicSlopesExcluded];
    let (toroidal_possible, notes) = if *r == four {
        (true, "distance 8; toroidal pair realized by the figure-eight knot".to_owned())
    } else if *r == one {
        (true, format!("distance {distance}; below the classified range, toroidal realization undecided"))
    } else {
        provenance.push(Axiom::ToroidalDistanceAtLeastFour);
        (false, format!("distance {distance} >= 4; toroidal excluded by classification"))
    };
    if *r == four {
        provenance.push(Axiom::ToroidalDistanceAtLeastFour);
    }

    Ok(PairClassification {
        irreducible: true,
        infinite_pi1: true,
        toroidal_possible,
        notes,
        provenance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn slope(p: i64, q: i64) -> Slope {
        Slope::reduce(p, q).unwrap()
    }

    fn mirror_pair(p: i64, q: i64) -> SlopePair {
        SlopePair::new(slope(p, q), slope(-p, q)).unwrap()
    }

    #[test]
    fn thm1_trefoil_data_passes() {
        let v = thm1_check(1, &big(1), &big(9)).unwrap();
        assert!(v.passes, "reasons: {:?}", v.reasons);
        assert!(v.reasons.is_empty());
        assert!(!v.provenance.is_empty());
    }

    #[test]
    fn thm1_bound_obstruction() {
        let v = thm1_check(1, &big(1), &big(11)).unwrap();
        assert!(!v.passes);
        assert!(!v.p_within_bound);
        assert!(v.reasons.iter().any(|r| r.contains("7g + 2")));
    }

    #[test]
    fn thm1_nonintegral_requirement() {
        let v = thm1_check(2, &big(1), &big(7)).unwrap();
        assert!(!v.passes);
        assert!(!v.a2_matches);
        // The other three conditions hold here.
        assert!(v.p_positive_odd && v.a2_within_genus_bound && v.p_within_bound);
    }

    #[test]
    fn thm1_zero_a2_is_obstructed() {
        let v = thm1_check(1, &big(0), &big(3)).unwrap();
        assert!(!v.passes);
        assert!(v.reasons.iter().any(|r| r.contains("a2 != 0")));
    }

    #[test]
    fn thm1_even_p_is_obstructed() {
        let v = thm1_check(1, &big(1), &big(8)).unwrap();
        assert!(!v.p_positive_odd);
        assert!(!v.passes);
    }

    #[test]
    fn thm1_candidates_genus_one() {
        let cands = thm1_candidate_ps(1).unwrap();
        assert_eq!(cands, vec![CandidateP { p: big(9), required_a2: big(1) }]);
        assert!(thm1_candidate_ps(0).is_err());
    }

    #[test]
    fn thm1_candidates_pass_their_own_check() {
        for genus in 1..=4u32 {
            let bound = big(7 * i64::from(genus) + 2);
            for cand in thm1_candidate_ps(genus).unwrap() {
                assert!(cand.p <= bound);
                assert!(cand.required_a2 <= big(i64::from(genus)) * big(i64::from(genus)));
                let v = thm1_check(genus, &cand.required_a2, &cand.p).unwrap();
                assert!(v.passes, "candidate {cand:?} fails its own check");
                // Cross-check through the Dedekind-sum route.
                let via_sums = crate::dedekind::a2_required_via_dedekind(&cand.p).unwrap();
                assert_eq!(via_sums, Rational::from(cand.required_a2.clone()));
            }
        }
    }

    #[test]
    fn thm3_default_pairs() {
        let result = thm3_enumerate(DEFAULT_DELTA_MAX, DEFAULT_P_MIN);
        let expected: Vec<SlopePair> = vec![
            mirror_pair(1, 1),
            mirror_pair(1, 2),
            mirror_pair(1, 3),
            mirror_pair(1, 4),
            mirror_pair(2, 1),
            mirror_pair(3, 1),
            mirror_pair(4, 1),
        ];
        assert_eq!(result.pairs, expected);
        assert!(result.provenance.contains(&Axiom::ExceptionalDistanceBound));
    }

    #[test]
    fn thm3_small_delta() {
        let result = thm3_enumerate(2, DEFAULT_P_MIN);
        assert_eq!(result.pairs, vec![mirror_pair(1, 1)]);
    }

    #[test]
    fn thm3_low_p_min_admits_non_mirror_pairs() {
        let relaxed = thm3_enumerate(DEFAULT_DELTA_MAX, 1);
        let default = thm3_enumerate(DEFAULT_DELTA_MAX, DEFAULT_P_MIN);
        assert!(relaxed.pairs.len() > default.pairs.len());
        for pair in &default.pairs {
            assert!(relaxed.pairs.contains(pair));
        }
        // The extra pairs demonstrate the role of the p > 2 hypothesis.
        let extras: Vec<&SlopePair> =
            relaxed.pairs.iter().filter(|p| !default.pairs.contains(p)).collect();
        assert!(!extras.is_empty());
        for pair in extras {
            assert!(!pair.is_mirror_pair());
            assert!(pair.first().p().abs() <= big(2));
        }
    }

    #[test]
    fn thm3_scan_bound_stability() {
        let base = thm3_enumerate_with_scan(8, 3, 8);
        for scan in [9u64, 16, 40, 100] {
            assert_eq!(thm3_enumerate_with_scan(8, 3, scan).pairs, base.pairs);
        }
        let relaxed = thm3_enumerate_with_scan(8, 1, 8);
        for scan in [16u64, 100] {
            assert_eq!(thm3_enumerate_with_scan(8, 1, scan).pairs, relaxed.pairs);
        }
    }

    #[test]
    fn thm3_pairs_satisfy_invariants() {
        let delta = big(8);
        for pair in thm3_enumerate(8, 3).pairs {
            assert_eq!(pair.first().p().abs(), pair.second().p().abs());
            assert!(pair.distance() <= delta);
            assert!(pair.is_mirror_pair());
        }
    }

    #[test]
    fn p7_distances() {
        let rows = p7_family_distances(1);
        assert_eq!(
            rows,
            vec![
                P7Row { s: -1, distance: 77 },
                P7Row { s: 0, distance: 21 },
                P7Row { s: 1, distance: 119 },
            ]
        );
    }

    #[test]
    fn cor6_figure_eight_pair() {
        let c = cor6_classify(&mirror_pair(4, 1)).unwrap();
        assert!(c.irreducible && c.infinite_pi1 && c.toroidal_possible);
        assert!(c.notes.contains("figure-eight"));
    }

    #[test]
    fn cor6_half_slope_pair() {
        let c = cor6_classify(&mirror_pair(1, 2)).unwrap();
        assert!(c.irreducible && c.infinite_pi1);
        assert!(!c.toroidal_possible);
        assert!(c.provenance.contains(&Axiom::ToroidalDistanceAtLeastFour));
    }

    #[test]
    fn cor6_unit_pair() {
        let c = cor6_classify(&mirror_pair(1, 1)).unwrap();
        assert!(c.toroidal_possible);
        assert!(c.notes.contains("distance 2"));
    }

    #[test]
    fn cor6_rejects_non_mirror_pairs() {
        let pair = SlopePair::new(slope(9, 1), slope(9, 2)).unwrap();
        assert!(matches!(cor6_classify(&pair), Err(ObstructionError::NotMirrorPair(_))));
    }

    #[test]
    fn cor6_toroidal_only_for_designated_pairs() {
        for pair in thm3_enumerate(8, 3).pairs {
            let c = cor6_classify(&pair).unwrap();
            let designated = pair == mirror_pair(4, 1) || pair == mirror_pair(1, 1);
            assert_eq!(c.toroidal_possible, designated, "pair {pair}");
        }
    }
}
