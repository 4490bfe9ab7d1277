//! Knot records and the classification pipeline for chirally cosmetic
//! exceptional surgeries.
//!
//! A [`KnotRecord`] stores the catalog data for one knot: its family, the
//! known exceptional slopes (with a per-row provenance note), and optional
//! invariants (genus, Alexander polynomial, `v_3`, amphicheirality). The
//! bundled data files carry the Seifert-surgery table for Montesinos knots,
//! the alternating case list representatives, and the two toroidal-only
//! knots; code never hard-codes a row.
//!
//! [`thm4_pipeline`] runs the slope filter over a catalog: candidate pairs
//! are the mirror pairs `{r, -r}` contained in the record's exceptional
//! slopes with `r` among the admissible slopes `1, 2, 3, 4, 1/2, 1/3, 1/4`;
//! a nonzero `v_3` then removes the `(1, -1)` pair. Over the bundled data
//! the sole survivor is the figure-eight knot, with pairs `(±1, ±2, ±3,
//! ±4)` realized by amphicheirality.

use std::collections::BTreeSet;
use std::io::Read;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::alexander::{lspace_gaps, LaurentPolynomial};
use crate::obstructions::admissible_slopes;
use crate::provenance::Axiom;
use crate::rational::Rational;
use crate::slope::{Slope, SlopePair};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("malformed catalog JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("record {index} ({name}), field {field}: {message}")]
    Validation { index: usize, name: String, field: &'static str, message: String },
    #[error("family parameters match no case: {0}")]
    NoMatchingCase(String),
}

/// Knot family, tagged the way the JSON schema spells it:
/// `{"torus":[p,q]}`, `{"two_bridge":[b1,b2]}`, `{"pretzel":[q1,q2,q3]}`,
/// `{"montesinos":["-1/2","1/3","2/7"]}`, `"figure_eight"`, `"other"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Torus(i64, i64),
    TwoBridge(Vec<i64>),
    Pretzel(Vec<i64>),
    Montesinos(Vec<Rational>),
    FigureEight,
    Other,
}

/// One catalog entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotRecord {
    pub name: String,
    pub family: Family,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub genus: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub alexander: Option<LaurentPolynomial>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub v3: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub amphicheiral: Option<bool>,
    pub exceptional_slopes: Vec<Slope>,
    pub slope_provenance: String,
}

/// Parses and validates a JSON catalog.
///
/// Validation enforces: pairwise distinct slopes; slope-list symmetry under
/// negation for amphicheiral records; agreement of a stored genus with the
/// top Alexander gap when the polynomial has L-space form; unique names.
pub fn load_catalog(mut source: impl Read) -> Result<Vec<KnotRecord>, CatalogError> {
    let mut raw = String::new();
    source
        .read_to_string(&mut raw)
        .map_err(|e| CatalogError::Validation {
            index: 0,
            name: String::new(),
            field: "source",
            message: e.to_string(),
        })?;
    let records: Vec<KnotRecord> = serde_json::from_str(&raw)?;

    let mut names = BTreeSet::new();
    for (index, record) in records.iter().enumerate() {
        let fail = |field: &'static str, message: String| CatalogError::Validation {
            index,
            name: record.name.clone(),
            field,
            message,
        };
        if record.name.is_empty() {
            return Err(fail("name", "empty name".into()));
        }
        if !names.insert(record.name.clone()) {
            return Err(fail("name", "duplicate name".into()));
        }
        let mut seen = BTreeSet::new();
        for slope in &record.exceptional_slopes {
            if !seen.insert(slope.clone()) {
                return Err(fail("exceptional_slopes", format!("duplicate slope {slope}")));
            }
        }
        if record.amphicheiral == Some(true) {
            for slope in &record.exceptional_slopes {
                if !seen.contains(&slope.mirror()) {
                    return Err(fail(
                        "exceptional_slopes",
                        format!("amphicheiral record lacks the mirror of {slope}"),
                    ));
                }
            }
        }
        if let (Some(genus), Some(poly)) = (record.genus, &record.alexander) {
            if let Ok(gaps) = lspace_gaps(poly) {
                if gaps.genus() != i64::from(genus) {
                    return Err(fail(
                        "genus",
                        format!(
                            "stored genus {genus} disagrees with the top Alexander gap {}",
                            gaps.genus()
                        ),
                    ));
                }
            }
        }
    }
    Ok(records)
}

const TABLE1_JSON: &str = include_str!("../data/table1.json");
const CATALOG_JSON: &str = include_str!("../data/catalog.json");

/// The Seifert-surgery table for hyperbolic Montesinos knots (13 rows).
pub fn bundled_table1() -> Vec<KnotRecord> {
    load_catalog(TABLE1_JSON.as_bytes()).expect("bundled table data validates")
}

/// The full bundled catalog: the Seifert-surgery table, the alternating
/// case-list representatives, and the two toroidal-only Montesinos knots.
pub fn bundled_catalog() -> Vec<KnotRecord> {
    load_catalog(CATALOG_JSON.as_bytes()).expect("bundled catalog data validates")
}

#[cfg(test)]
pub(crate) fn bundled_table1_source() -> &'static str {
    TABLE1_JSON
}

#[cfg(test)]
pub(crate) fn bundled_catalog_source() -> &'static str {
    CATALOG_JSON
}

/// Exceptional slopes of a hyperbolic alternating knot, by case:
///
/// - figure-eight: `-4, ..., 4`;
/// - two-bridge `K[2n, 2]` with `|n| > 2`: `-4, -3, -2, -1, 0`
///   (resp. `K[2n, -2]`: `0, 1, 2, 3, 4`);
/// - two-bridge `K[b1, b2]` with `|b1|, |b2| > 2`: `0` when both are even,
///   `2 b2` when `b1` is odd and `b2` even;
/// - pretzel `P(q1, q2, q3)` with every `q_j` not in `{0, ±1}`: `0` when all
///   are odd, `2(q_i + q_j)` over the two odd entries when exactly one is
///   even.
///
/// Anything else matches no case and is rejected.
pub fn alternating_exceptional_slopes(family: &Family) -> Result<Vec<Slope>, CatalogError> {
    let ints = |values: &[i64]| -> Vec<Slope> {
        values.iter().map(|&v| Slope::integral(v)).collect()
    };
    match family {
        Family::FigureEight => Ok(ints(&[-4, -3, -2, -1, 0, 1, 2, 3, 4])),
        Family::TwoBridge(b) => {
            let [b1, b2] = b.as_slice() else {
                return Err(CatalogError::NoMatchingCase(format!(
                    "two-bridge parameter list must have length 2, got {b:?}"
                )));
            };
            let (b1, b2) = (*b1, *b2);
            if b2.abs() == 2 {
                // K[2n, ±2] with |n| > 2.
                if b1 % 2 != 0 || (b1 / 2).abs() <= 2 {
                    return Err(CatalogError::NoMatchingCase(format!(
                        "K[{b1}, {b2}] needs b1 = 2n with |n| > 2"
                    )));
                }
                if b2 == 2 {
                    Ok(ints(&[-4, -3, -2, -1, 0]))
                } else {
                    Ok(ints(&[0, 1, 2, 3, 4]))
                }
            } else if b1.abs() > 2 && b2.abs() > 2 {
                if b1 % 2 == 0 && b2 % 2 == 0 {
                    Ok(ints(&[0]))
                } else if b1 % 2 != 0 && b2 % 2 == 0 {
                    Ok(ints(&[2 * b2]))
                } else {
                    Err(CatalogError::NoMatchingCase(format!(
                        "K[{b1}, {b2}] has no listed parity case"
                    )))
                }
            } else {
                Err(CatalogError::NoMatchingCase(format!("K[{b1}, {b2}] parameters too small")))
            }
        }
        Family::Pretzel(q) => {
            let [q1, q2, q3] = q.as_slice() else {
                return Err(CatalogError::NoMatchingCase(format!(
                    "pretzel parameter list must have length 3, got {q:?}"
                )));
            };
            let qs = [*q1, *q2, *q3];
            if qs.iter().any(|v| *v == 0 || v.abs() == 1) {
                return Err(CatalogError::NoMatchingCase(format!(
                    "pretzel parameters must avoid 0 and ±1, got {qs:?}"
                )));
            }
            let evens: Vec<i64> = qs.iter().copied().filter(|v| v % 2 == 0).collect();
            match evens.len() {
                0 => Ok(ints(&[0])),
                1 => {
                    let odd_sum: i64 = qs.iter().filter(|v| *v % 2 != 0).sum();
                    Ok(ints(&[2 * odd_sum]))
                }
                _ => Err(CatalogError::NoMatchingCase(format!(
                    "pretzel {qs:?} with two even parameters is not a knot case"
                ))),
            }
        }
        other => Err(CatalogError::NoMatchingCase(format!("{other:?} is not an alternating case"))),
    }
}

/// One filter application in a per-knot report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterEvent {
    pub filter: String,
    pub action: String,
}

/// Pipeline outcome for one knot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotReport {
    pub name: String,
    /// Mirror pairs `{r, -r}` found among the record's exceptional slopes
    /// with `r` admissible.
    pub candidate_pairs: Vec<SlopePair>,
    pub filters: Vec<FilterEvent>,
    pub surviving_pairs: Vec<SlopePair>,
    /// True when amphicheirality realizes the surviving pairs.
    pub realized: bool,
    pub notes: Vec<String>,
}

/// Aggregated pipeline report, order-normalized by knot name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub survivors: Vec<String>,
    pub knots: Vec<KnotReport>,
    pub provenance: Vec<Axiom>,
}

/// Scans one record for chirally cosmetic exceptional candidates and
/// applies the slope and `v_3` filters.
pub fn chirally_cosmetic_candidates(record: &KnotRecord) -> KnotReport {
    let mut filters = Vec::new();
    let mut notes = Vec::new();

    let slopes: BTreeSet<&Slope> = record.exceptional_slopes.iter().collect();
    if slopes.is_empty() {
        notes.push("record has no exceptional slopes".to_owned());
    }
    let candidate_pairs: Vec<SlopePair> = admissible_slopes()
        .into_iter()
        .filter(|r| slopes.contains(r) && slopes.contains(&r.mirror()))
        .map(|r| {
            let mirror = r.mirror();
            SlopePair::new(r, mirror).expect("mirror pair shares |p|")
        })
        .collect();
    filters.push(FilterEvent {
        filter: "admissible_slopes".to_owned(),
        action: format!(
            "kept mirror pairs with slope in {{1, 2, 3, 4, 1/2, 1/3, 1/4}}: {} found",
            candidate_pairs.len()
        ),
    });

    let unit_pair = SlopePair::new(Slope::integral(1), Slope::integral(-1))
        .expect("unit mirror pair is valid");
    let mut surviving = candidate_pairs.clone();
    if candidate_pairs.contains(&unit_pair) {
        match record.v3 {
            Some(v) if v != 0 => {
                surviving.retain(|p| *p != unit_pair);
                filters.push(FilterEvent {
                    filter: "v3".to_owned(),
                    action: format!("removed pair (1, -1): v3 = {v} obstructs ±1 cosmetic surgeries"),
                });
            }
            Some(_) => filters.push(FilterEvent {
                filter: "v3".to_owned(),
                action: "v3 = 0: no obstruction on the pair (1, -1)".to_owned(),
            }),
            None => filters.push(FilterEvent {
                filter: "v3".to_owned(),
                action: "filter skipped: datum absent".to_owned(),
            }),
        }
    }

    let mut realized = false;
    if !surviving.is_empty() {
        match record.amphicheiral {
            Some(true) => {
                realized = true;
                filters.push(FilterEvent {
                    filter: "amphicheiral".to_owned(),
                    action: "surviving pairs realized by mirror symmetry".to_owned(),
                });
            }
            Some(false) => {}
            None => filters.push(FilterEvent {
                filter: "amphicheiral".to_owned(),
                action: "filter skipped: datum absent".to_owned(),
            }),
        }
    }

    KnotReport {
        name: record.name.clone(),
        candidate_pairs,
        filters,
        surviving_pairs: surviving,
        realized,
        notes,
    }
}

/// Runs the candidate scan over a whole catalog. The report is sorted by
/// knot name and therefore independent of catalog order.
pub fn thm4_pipeline(catalog: &[KnotRecord]) -> PipelineReport {
    let mut knots: Vec<KnotReport> = catalog.iter().map(chirally_cosmetic_candidates).collect();
    knots.sort_by(|a, b| a.name.cmp(&b.name));
    let survivors: Vec<String> = knots
        .iter()
        .filter(|k| !k.surviving_pairs.is_empty())
        .map(|k| k.name.clone())
        .collect();
    let mut provenance = vec![
        Axiom::ExceptionalDistanceBound,
        Axiom::CosmeticNumeratorExceedsTwo,
        Axiom::PositivePairSevenFamilies,
        Axiom::AlternatingExceptionalClassification,
        Axiom::MontesinosSeifertTable,
        Axiom::MontesinosToroidalOnly,
    ];
    if knots.iter().any(|k| k.filters.iter().any(|f| f.filter == "v3" && f.action.starts_with("removed"))) {
        provenance.push(Axiom::V3ObstructsUnitCosmetic);
    }
    provenance.sort();
    PipelineReport { survivors, knots, provenance }
}
