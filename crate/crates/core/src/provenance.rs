//! Provenance for assumed results.
//!
//! The checkers in this crate mix genuine computation with appeals to
//! established classification theorems from the Dehn surgery literature.
//! Every verdict carries the list of [`Axiom`]s it invoked, so output
//! distinguishes computed facts from assumed ones.

use serde::{Deserialize, Serialize};
use std::fmt;

/// An external result assumed (not re-proved) by a checker.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    /// Two exceptional slopes on a hyperbolic knot have distance at most 8
    /// (Lackenby-Meyerhoff).
    ExceptionalDistanceBound,
    /// A chirally cosmetic pair along two positive slopes yields L-spaces,
    /// so the knot is an L-space knot.
    PositivePairForcesLSpace,
    /// An L-space knot has nonvanishing second derivative of its Alexander
    /// polynomial at 1, hence nonzero Casson invariant a_2.
    LSpaceNonzeroSecondDerivative,
    /// For an integral/half-integral chirally cosmetic pair on slopes p and
    /// p/2, the Casson invariant satisfies 6 a_2 = p (s(1,p) + s(2,p)).
    CassonDedekindSurgeryIdentity,
    /// An L-space knot is fibered, so the top gap exponent equals the genus
    /// (Ni).
    LSpaceKnotFibered,
    /// A chirally cosmetic exceptional pair has numerator p > 2.
    CosmeticNumeratorExceedsTwo,
    /// A chirally cosmetic pair along two positive slopes with p <= 8 and
    /// a_2 != 0 must lie in the p = 7 families q = 7s+1, q' = -7s-2 or
    /// q = 7s+2, q' = -7s-1.
    PositivePairSevenFamilies,
    /// Surgeries producing reducible manifolds or cyclic fundamental groups
    /// force slope distance at most 1 (Gordon-Luecke; CGLS).
    ReducibleOrCyclicDistanceOne,
    /// The classified finite noncyclic surgery pairs do not include any of
    /// the admissible mirror pairs (Ni-Zhang).
    FiniteNoncyclicSlopesExcluded,
    /// Toroidal surgeries at distance at least 4 are completely classified;
    /// among them only the +-4 pair on the figure-eight knot is chirally
    /// cosmetic (Gordon-Wu).
    ToroidalDistanceAtLeastFour,
    /// The exceptional-slope case list for hyperbolic alternating knots
    /// (Ichihara-Masai).
    AlternatingExceptionalClassification,
    /// The tabulated Seifert surgeries on hyperbolic Montesinos knots
    /// (Ichihara-Masai).
    MontesinosSeifertTable,
    /// The classification of Montesinos knots with exactly two toroidal and
    /// no Seifert exceptional slopes (Wu).
    MontesinosToroidalOnly,
    /// A nonzero degree-3 Vassiliev invariant v_3 obstructs +-1 surgeries
    /// from being cosmetic (Ito).
    V3ObstructsUnitCosmetic,
    /// Surgery-coefficient formulas for cosmetic pairs on knots with small
    /// Seifert fibered exteriors.
    HalfIntegralSurgeryFormulas,
}

impl Axiom {
    /// One-line statement of the assumed result.
    pub fn statement(&self) -> &'static str {
        match self {
            Axiom::ExceptionalDistanceBound => {
                "distance between exceptional slopes on a hyperbolic knot is at most 8 (Lackenby-Meyerhoff)"
            }
            Axiom::PositivePairForcesLSpace => {
                "a chirally cosmetic pair along two positive slopes yields L-spaces"
            }
            Axiom::LSpaceNonzeroSecondDerivative => {
                "an L-space knot has Delta''(1) != 0, hence a_2 != 0"
            }
            Axiom::CassonDedekindSurgeryIdentity => {
                "a pair on slopes p and p/2 forces 6 a_2 = p (s(1,p) + s(2,p))"
            }
            Axiom::LSpaceKnotFibered => {
                "an L-space knot is fibered, so the top Alexander gap equals the genus (Ni)"
            }
            Axiom::CosmeticNumeratorExceedsTwo => {
                "a chirally cosmetic exceptional pair has numerator p > 2"
            }
            Axiom::PositivePairSevenFamilies => {
                "a positive-slope pair with p <= 8 and a_2 != 0 lies in the p = 7 families (q, q') = (7s+1, -7s-2) or (7s+2, -7s-1)"
            }
            Axiom::ReducibleOrCyclicDistanceOne => {
                "reducible or cyclic surgery pairs have slope distance at most 1 (Gordon-Luecke; CGLS)"
            }
            Axiom::FiniteNoncyclicSlopesExcluded => {
                "the classified finite noncyclic surgery pairs exclude the admissible mirror pairs (Ni-Zhang)"
            }
            Axiom::ToroidalDistanceAtLeastFour => {
                "toroidal surgeries at distance >= 4 are classified; only the figure-eight +-4 pair is chirally cosmetic among them (Gordon-Wu)"
            }
            Axiom::AlternatingExceptionalClassification => {
                "exceptional slopes of hyperbolic alternating knots follow the two-bridge/pretzel case list (Ichihara-Masai)"
            }
            Axiom::MontesinosSeifertTable => {
                "Seifert surgeries on hyperbolic Montesinos knots are tabulated (Ichihara-Masai)"
            }
            Axiom::MontesinosToroidalOnly => {
                "Montesinos knots with two toroidal and no Seifert exceptional slopes are classified (Wu)"
            }
            Axiom::V3ObstructsUnitCosmetic => {
                "v_3 != 0 obstructs +-1 surgeries from being cosmetic (Ito)"
            }
            Axiom::HalfIntegralSurgeryFormulas => {
                "surgery coefficients of a cosmetic pair on a two-fiber Seifert exterior satisfy the (alpha, m) formulas"
            }
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.statement())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serializes_as_snake_case() {
        assert_eq!(
            serde_json::to_string(&Axiom::ExceptionalDistanceBound).unwrap(),
            "\"exceptional_distance_bound\""
        );
        let back: Axiom = serde_json::from_str("\"v3_obstructs_unit_cosmetic\"").unwrap();
        assert_eq!(back, Axiom::V3ObstructsUnitCosmetic);
    }
}
