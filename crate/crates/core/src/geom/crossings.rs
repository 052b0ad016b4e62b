use serde::Serialize;

use crate::tol::{EPS_MERGE, EPS_NUM};

use super::polygon::ConvexPolygon;
use super::vec2::Vec2;

/// Common points of two polygon boundaries.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct CrossingSet {
    /// Isolated points, sorted by polar angle.
    pub points: Vec<Vec2>,
    /// Maximal shared boundary segments as endpoint pairs, sorted by the polar angle of their midpoints.
    pub segments: Vec<(Vec2, Vec2)>,
}

impl CrossingSet {
    /// Number of connected components (points plus segments).
    pub fn components(&self) -> usize {
        self.points.len() + self.segments.len()
    }

    pub fn has_overlap(&self) -> bool {
        !self.segments.is_empty()
    }

    /// Point count, or -1 when a shared segment makes the set infinite.
    pub fn encoded_count(&self) -> i64 {
        if self.has_overlap() {
            -1
        } else {
            self.points.len() as i64
        }
    }
}

enum Contact {
    Point(Vec2),
    Segment(Vec2, Vec2),
}

fn edge_contact(a0: Vec2, a1: Vec2, b0: Vec2, b1: Vec2) -> Option<Contact> {
    let d1 = a1 - a0;
    let d2 = b1 - b0;
    let l1 = d1.norm();
    let l2 = d2.norm();
    let dist_a = |p: Vec2| d1.cross(p - a0).abs() / l1;
    if dist_a(b0) <= EPS_NUM && dist_a(b1) <= EPS_NUM {
        let u = (1.0 / l1) * d1;
        let (t0, t1) = (u.dot(b0 - a0), u.dot(b1 - a0));
        let lo = t0.min(t1).max(0.0);
        let hi = t0.max(t1).min(l1);
        if hi - lo > EPS_MERGE {
            return Some(Contact::Segment(a0 + lo * u, a0 + hi * u));
        }
        if hi - lo >= -EPS_MERGE {
            return Some(Contact::Point(a0 + (0.5 * (lo + hi)) * u));
        }
        return None;
    }
    let denom = d1.cross(d2);
    if denom.abs() <= 1e-15 * l1 * l2 {
        return None;
    }
    let w = b0 - a0;
    let t = w.cross(d2) / denom;
    let s = w.cross(d1) / denom;
    let ta = EPS_NUM / l1;
    let tb = EPS_NUM / l2;
    if t < -ta || t > 1.0 + ta || s < -tb || s > 1.0 + tb {
        return None;
    }
    Some(Contact::Point(a0 + t.clamp(0.0, 1.0) * d1))
}

fn seg_dist(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let d = b - a;
    let t = ((p - a).dot(d) / d.norm_sq()).clamp(0.0, 1.0);
    p.dist(a + t * d)
}

/// `bd(P) ∩ bd(Q)` as isolated points and shared segments.
pub fn boundary_intersections(p: &ConvexPolygon, q: &ConvexPolygon) -> CrossingSet {
    let mut raw_points = Vec::new();
    let mut segments = Vec::new();
    for i in 0..p.len() {
        let (a0, a1) = p.edge(i);
        for j in 0..q.len() {
            let (b0, b1) = q.edge(j);
            match edge_contact(a0, a1, b0, b1) {
                Some(Contact::Point(x)) => raw_points.push(x),
                Some(Contact::Segment(x, y)) => segments.push(if x.lex_cmp(&y).is_le() { (x, y) } else { (y, x) }),
                None => {}
            }
        }
    }
    raw_points.retain(|x| segments.iter().all(|(a, b)| seg_dist(*x, *a, *b) > EPS_MERGE));
    raw_points.sort_by(|a, b| a.lex_cmp(b));
    let mut clusters: Vec<(Vec2, usize)> = Vec::new();
    for x in raw_points {
        match clusters
            .iter_mut()
            .find(|(c, k)| ((1.0 / *k as f64) * *c).dist(x) <= EPS_MERGE)
        {
            Some((c, k)) => {
                *c += x;
                *k += 1;
            }
            None => clusters.push((x, 1)),
        }
    }
    let mut points: Vec<Vec2> = clusters
        .into_iter()
        .map(|(c, k)| (1.0 / k as f64) * c)
        .collect();
    points.sort_by(|a, b| a.angle().total_cmp(&b.angle()));
    segments.sort_by(|a, b| (0.5 * (a.0 + a.1)).angle().total_cmp(&(0.5 * (b.0 + b.1)).angle()));
    CrossingSet { points, segments }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, TAU};

    #[test]
    fn self_intersection_is_all_segments() {
        let sq = ConvexPolygon::new(&[
            Vec2::new(-1.0, -1.0),
            Vec2::new(1.0, -1.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(-1.0, 1.0),
        ])
        .unwrap();
        let cs = boundary_intersections(&sq, &sq);
        assert!(cs.points.is_empty());
        assert_eq!(cs.segments.len(), 4);
        let total: f64 = cs.segments.iter().map(|(a, b)| a.dist(*b)).sum();
        assert!((total - 8.0).abs() < 1e-12);
        assert_eq!(cs.encoded_count(), -1);
    }

    #[test]
    fn regular_pentagon_meets_negation_ten_times() {
        let pts: Vec<Vec2> = (0..5)
            .map(|k| Vec2::from_angle(FRAC_PI_2 + k as f64 * TAU / 5.0))
            .collect();
        let p = ConvexPolygon::new(&pts).unwrap();
        let cs = boundary_intersections(&p, &p.negate());
        assert_eq!(cs.points.len(), 10);
        assert!(cs.segments.is_empty());
    }

    #[test]
    fn vertex_touching_counts_once() {
        let a = ConvexPolygon::new(&[Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)]).unwrap();
        let b = ConvexPolygon::new(&[Vec2::new(1.0, 0.0), Vec2::new(2.0, -1.0), Vec2::new(2.0, 1.0)]).unwrap();
        let cs = boundary_intersections(&a, &b);
        assert_eq!(cs.points, vec![Vec2::new(1.0, 0.0)]);
        assert!(cs.segments.is_empty());
    }
}
