use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Result;

use super::polygon::ConvexPolygon;
use super::vec2::Vec2;

#[derive(Debug, Serialize, Deserialize)]
struct PolygonFile {
    vertices: Vec<Vec2>,
}

/// Parses `{"vertices": [[x, y], ...]}` and canonicalizes the hull.
pub fn polygon_from_json(text: &str) -> Result<ConvexPolygon> {
    let f: PolygonFile = serde_json::from_str(text)?;
    ConvexPolygon::new(&f.vertices)
}

pub fn polygon_to_json(p: &ConvexPolygon) -> String {
    let f = PolygonFile {
        vertices: p.vertices().to_vec(),
    };
    serde_json::to_string_pretty(&f).expect("vertex list serializes")
}

pub fn read_polygon(path: &Path) -> Result<ConvexPolygon> {
    polygon_from_json(&std::fs::read_to_string(path)?)
}

pub fn write_polygon(path: &Path, p: &ConvexPolygon) -> Result<()> {
    std::fs::write(path, polygon_to_json(p) + "\n")?;
    Ok(())
}
