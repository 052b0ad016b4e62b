//! Planar convex polygon kernel.

mod crossings;
mod gauge_body;
mod io;
mod ops;
mod polygon;
mod vec2;

pub use crossings::{boundary_intersections, CrossingSet};
pub use gauge_body::{is_centrally_symmetric, GaugeBody};
pub use io::{polygon_from_json, polygon_to_json, read_polygon, write_polygon};
pub use ops::{contains, hausdorff, hull_union, intersect, minkowski_sum, polygon_from_halfplanes};
pub use polygon::{ConvexPolygon, Face, Support};
pub use vec2::{Mat2, Vec2};

pub(crate) use ops::clip;
pub(crate) use polygon::wrap_angle;

/// Halfplane-clipping intersection without the sorted sweep; for cross-checks.
pub fn intersect_by_clipping(p: &ConvexPolygon, q: &ConvexPolygon) -> crate::Result<ConvexPolygon> {
    ConvexPolygon::new(&clip(p, q)).map_err(|_| crate::GeomError::EmptyIntersection)
}

/// Convex hull by checking every ordered pair of points as a candidate edge; O(n^3).
pub fn hull_brute_force(points: &[Vec2]) -> crate::Result<ConvexPolygon> {
    let mut keep = Vec::new();
    for (i, &a) in points.iter().enumerate() {
        for (j, &b) in points.iter().enumerate() {
            if i == j || a == b {
                continue;
            }
            let d = b - a;
            if points.iter().all(|&c| d.cross(c - a) >= -1e-12) {
                keep.push(a);
                keep.push(b);
            }
        }
    }
    ConvexPolygon::new(&keep)
}

/// `conv(P ∪ -P)`; exactly symmetric vertex list, equal to `P` when `P` is symmetric.
pub fn symmetric_closure(p: &ConvexPolygon) -> ConvexPolygon {
    hull_union(p, &p.negate())
}
