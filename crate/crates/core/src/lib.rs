//! Exact-arithmetic computations around chirally cosmetic Dehn surgeries.
//!
//! A pair of Dehn surgeries on a knot is *chirally cosmetic* if the two
//! surgered manifolds are orientation-reversingly homeomorphic. This crate
//! implements the integer and rational computations that obstruct such
//! pairs:
//!
//! - [`rational`] / [`slope`] — exact fractions and surgery-slope
//!   conventions (reduced `p/q`, slope distance `|pq' - p'q|`, mirrors);
//! - [`dedekind`] — Dedekind sums with closed forms for `s(1,p)`, `s(2,p)`
//!   and the surgery constraint `6 a_2 = p(s(1,p) + s(2,p))`;
//! - [`alexander`] — integer Laurent polynomials, `a_2 = Δ''(1)/2`, and the
//!   alternating-coefficient gap sequences of L-space knots;
//! - [`matrix`] — integer Smith normal form and cokernels of finitely
//!   presented abelian groups;
//! - [`seifert`] — first homology of Seifert fibered knot exteriors and
//!   their Dehn fillings, plus orientation-sensitive comparison of small
//!   Seifert fibered spaces over the sphere;
//! - [`obstructions`] — the slope-level checkers and enumerators (the
//!   `p <= 7g+2` bound, exceptional-slope enumeration, the `p = 7` family
//!   contradiction, and the structural classification of the resulting
//!   manifolds);
//! - [`catalog`] — knot-record ingestion and the classification pipeline
//!   over the bundled alternating/Montesinos data.
//!
//! Everything is computed over arbitrary-precision integers and rationals;
//! no floating point is used anywhere.

#![forbid(unsafe_code)]

pub mod alexander;
pub mod catalog;
pub mod dedekind;
pub mod matrix;
pub mod obstructions;
pub mod provenance;
pub mod rational;
pub mod seifert;
pub mod slope;

pub use matrix::{AbelianGroup, IntegerMatrix, SmithDecomposition};
pub use rational::Rational;
pub use slope::{Slope, SlopePair};
