use thiserror::Error;

/// Errors raised by the geometry kernel and everything built on it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("degenerate input: convex hull is a point or a segment")]
    DegenerateInput,
    #[error("polygons do not share interior points")]
    EmptyIntersection,
    #[error("linear map is singular (det = {0:e})")]
    SingularMatrix(f64),
    #[error("gauge body is not marked symmetric")]
    AsymmetricGauge,
    #[error("gauge body does not contain the origin in its interior")]
    OriginNotInterior,
    #[error("gauge body is not symmetric about the origin")]
    NotSymmetric,
    #[error("linear program failed: {0}")]
    LpFailure(String),
    #[error("no well-spread triple of asymmetry points found")]
    NoTriple,
    #[error("touching point ({x}, {y}) fits neither case of the classification")]
    UnclassifiedPoint { x: f64, y: f64 },
    #[error("parameter outside domain: {0}")]
    Domain(String),
    #[error("pseudo-completeness characterizations disagree: {0}")]
    InconsistentCharacterization(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, GeomError>;

impl From<std::io::Error> for GeomError {
    fn from(e: std::io::Error) -> Self {
        GeomError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for GeomError {
    fn from(e: serde_json::Error) -> Self {
        GeomError::Parse(e.to_string())
    }
}
