//! Numeric tolerances shared by the whole crate.
//!
//! All bodies handled here have O(1) coordinates, so the tolerances are
//! absolute unless a call site says otherwise.

/// Predicate tolerance (containment, ties in support queries, gauge checks).
pub const EPS_NUM: f64 = 1e-9;

/// Twice-area threshold below which three consecutive vertices are collinear.
pub const EPS_COLLINEAR: f64 = 1e-12;

/// Distance below which two boundary crossing points are the same point.
pub const EPS_MERGE: f64 = 1e-7;

/// Tolerance for containment certificates (0 in the hull of normals/points).
pub const EPS_CERT: f64 = 1e-7;

/// Default relative tolerance of the completeness predicates on exact polygons.
pub const COMPLETENESS_TOL: f64 = 1e-6;

/// Default relative tolerance of the completeness predicates on arc-approximated bodies.
pub const COMPLETENESS_TOL_APPROX: f64 = 1e-3;

/// Name of the environment variable that overrides the completeness tolerance in the CLI.
pub const TOL_ENV_VAR: &str = "ASYM_TOL";
