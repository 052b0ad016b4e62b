//! Verification suites over seeded random bodies and the named family grids,
//! plus the CSV/SVG region diagrams.

pub mod diagram;
pub mod sample;
mod suites;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::GeomError;
use crate::geom::ConvexPolygon;

pub use suites::{crossing_points_with_endpoints, inline_polygon, k_rho_resolution, run, KRhoForm, KRhoSample};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    AlphaRegion,
    Crossings,
    DwPseudo,
    DwEuclidean,
    Families,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::AlphaRegion,
        Suite::Crossings,
        Suite::DwPseudo,
        Suite::DwEuclidean,
        Suite::Families,
        Suite::All,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::AlphaRegion => "alpha-region",
            Suite::Crossings => "crossings",
            Suite::DwPseudo => "dw-pseudo",
            Suite::DwEuclidean => "dw-euclidean",
            Suite::Families => "families",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = GeomError;

    fn from_str(s: &str) -> Result<Self, GeomError> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| GeomError::Parse(format!("unknown suite `{s}`")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub samples: usize,
    pub seed: u64,
    /// Overrides the completeness tolerances (1e-6 exact, 1e-3 for the hood).
    pub tol: Option<f64>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            samples: 500,
            seed: 1,
            tol: None,
        }
    }
}

/// One failed check. `body` replays through `compute`: a family spec or `--random seed:index`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub body: String,
    pub vertices: Vec<[f64; 2]>,
    pub quantity: String,
    pub expected: String,
    pub observed: f64,
    pub tol: f64,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} expected {} (tol {:e}), observed {}",
            self.body, self.quantity, self.expected, self.tol, self.observed
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifySummary {
    pub suite: String,
    pub checks: usize,
    pub failures: Vec<Failure>,
    /// Recorded outcomes that are reported but not asserted.
    pub notes: Vec<String>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A body tag that `compute` accepts.
#[derive(Debug, Clone, PartialEq)]
pub struct BodyRef {
    pub label: String,
    pub vertices: Vec<[f64; 2]>,
}

impl BodyRef {
    pub fn new(label: impl Into<String>, k: &ConvexPolygon) -> Self {
        BodyRef {
            label: label.into(),
            vertices: k.vertices().iter().map(|v| [v.x, v.y]).collect(),
        }
    }

    pub fn random(seed: u64, index: usize, k: &ConvexPolygon) -> Self {
        BodyRef::new(format!("--random {seed}:{index}"), k)
    }
}

/// Check counter and failure log.
#[derive(Debug, Default, Clone, PartialEq)]
pub struct Log {
    pub checks: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
}

impl Log {
    fn record(&mut self, body: &BodyRef, quantity: &str, ok: bool, expected: String, observed: f64, tol: f64) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure {
                body: body.label.clone(),
                vertices: body.vertices.clone(),
                quantity: quantity.to_string(),
                expected,
                observed,
                tol,
            });
        }
    }

    /// `observed <= bound + tol`.
    pub fn le(&mut self, body: &BodyRef, quantity: &str, observed: f64, bound: f64, tol: f64) {
        let ok = observed <= bound + tol;
        self.record(body, quantity, ok, format!("<= {bound}"), observed, tol);
    }

    /// `observed >= bound - tol`.
    pub fn ge(&mut self, body: &BodyRef, quantity: &str, observed: f64, bound: f64, tol: f64) {
        let ok = observed >= bound - tol;
        self.record(body, quantity, ok, format!(">= {bound}"), observed, tol);
    }

    /// `|observed - expected| <= tol`.
    pub fn near(&mut self, body: &BodyRef, quantity: &str, observed: f64, expected: f64, tol: f64) {
        let ok = (observed - expected).abs() <= tol;
        self.record(body, quantity, ok, format!("= {expected}"), observed, tol);
    }

    pub fn holds(&mut self, body: &BodyRef, quantity: &str, ok: bool) {
        self.record(body, quantity, ok, "true".into(), if ok { 1.0 } else { 0.0 }, 0.0);
    }

    /// A computation that should have succeeded.
    pub fn error(&mut self, body: &BodyRef, quantity: &str, err: &GeomError) {
        self.record(body, &format!("{quantity}: {err}"), false, "no error".into(), f64::NAN, 0.0);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn merge(&mut self, other: Log) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }

    pub fn into_summary(self, suite: Suite) -> VerifySummary {
        VerifySummary {
            suite: suite.to_string(),
            checks: self.checks,
            failures: self.failures,
            notes: self.notes,
        }
    }
}

/// Gauge data of one `(K, C)` pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DwEntry {
    pub gauge: String,
    pub diameter: f64,
    pub width: f64,
    pub inradius: f64,
    pub circumradius: f64,
    pub pseudo_complete: bool,
    pub complete: bool,
}

/// One point of a region diagram.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleRecord {
    pub family: String,
    pub params: String,
    pub s: f64,
    pub alpha: f64,
    pub tau: f64,
    /// Isolated crossing points, or -1 when the boundaries share a segment.
    pub crossings: i64,
    pub dw: Option<Vec<DwEntry>>,
}

/// `n` equally spaced values from `a` to `b`; a single `a` for `n = 1`.
pub fn grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => (0..n)
            .map(|i| if i + 1 == n { b } else { a + (b - a) * i as f64 / (n - 1) as f64 })
            .collect(),
    }
}

