use std::collections::VecDeque;
use std::f64::consts::TAU;

use crate::error::{GeomError, Result};
use crate::tol::EPS_NUM;

use super::polygon::ConvexPolygon;
use super::vec2::Vec2;

#[derive(Debug, Clone, Copy)]
struct HalfPlane {
    n: Vec2,
    b: f64,
    angle: f64,
}

impl HalfPlane {
    fn meet(&self, o: &HalfPlane) -> Option<Vec2> {
        let det = self.n.cross(o.n);
        if det.abs() < 1e-300 {
            return None;
        }
        Some(Vec2::new(
            (self.b * o.n.y - o.b * self.n.y) / det,
            (self.n.x * o.b - o.n.x * self.b) / det,
        ))
    }

    fn outside(&self, p: Vec2) -> bool {
        self.n.dot(p) > self.b + 1e-12
    }
}

fn half_planes(p: &ConvexPolygon) -> impl Iterator<Item = HalfPlane> + '_ {
    p.normals()
        .iter()
        .zip(p.offsets())
        .map(|(n, b)| HalfPlane {
            n: *n,
            b: *b,
            angle: n.angle(),
        })
}

/// Intersection of two polygons.
pub fn intersect(p: &ConvexPolygon, q: &ConvexPolygon) -> Result<ConvexPolygon> {
    let hs: Vec<HalfPlane> = half_planes(p).chain(half_planes(q)).collect();
    let res = match halfplane_intersection(hs) {
        Some(pts) if verify_inside(&pts, p, q) => pts,
        _ => clip(p, q),
    };
    let poly = ConvexPolygon::new(&res).map_err(|_| GeomError::EmptyIntersection)?;
    let perimeter: f64 = (0..poly.len())
        .map(|i| poly.vertex(i).dist(poly.vertex(i + 1)))
        .sum();
    if poly.area() <= EPS_NUM * perimeter {
        return Err(GeomError::EmptyIntersection);
    }
    Ok(poly)
}

fn verify_inside(pts: &[Vec2], p: &ConvexPolygon, q: &ConvexPolygon) -> bool {
    pts.len() >= 3
        && pts
            .iter()
            .all(|x| p.max_violation(*x) <= 1e-9 && q.max_violation(*x) <= 1e-9)
}

// Sorted-angle deque algorithm; `None` when the region is empty or the
// sweep breaks down numerically.
fn halfplane_intersection(mut hs: Vec<HalfPlane>) -> Option<Vec<Vec2>> {
    hs.sort_by(|a, b| a.angle.total_cmp(&b.angle).then(a.b.total_cmp(&b.b)));
    let mut lines: Vec<HalfPlane> = Vec::with_capacity(hs.len());
    for h in hs {
        match lines.last() {
            Some(l) if l.n.cross(h.n).abs() < 1e-14 && l.n.dot(h.n) > 0.0 => {}
            _ => lines.push(h),
        }
    }
    let mut dq: VecDeque<HalfPlane> = VecDeque::with_capacity(lines.len());
    for h in lines {
        while dq.len() >= 2 {
            let x = dq[dq.len() - 1].meet(&dq[dq.len() - 2])?;
            if h.outside(x) {
                dq.pop_back();
            } else {
                break;
            }
        }
        while dq.len() >= 2 {
            let x = dq[0].meet(&dq[1])?;
            if h.outside(x) {
                dq.pop_front();
            } else {
                break;
            }
        }
        if let Some(back) = dq.back() {
            if back.n.cross(h.n) <= 0.0 {
                return None;
            }
        }
        dq.push_back(h);
    }
    while dq.len() >= 3 {
        let x = dq[dq.len() - 1].meet(&dq[dq.len() - 2])?;
        if dq[0].outside(x) {
            dq.pop_back();
        } else {
            break;
        }
    }
    while dq.len() >= 3 {
        let x = dq[0].meet(&dq[1])?;
        if dq[dq.len() - 1].outside(x) {
            dq.pop_front();
        } else {
            break;
        }
    }
    if dq.len() < 3 {
        return None;
    }
    let k = dq.len();
    (0..k).map(|i| dq[i].meet(&dq[(i + 1) % k])).collect()
}

/// Sutherland-Hodgman clipping of `p` by every edge of `q`; O(|p| |q|).
pub(crate) fn clip(p: &ConvexPolygon, q: &ConvexPolygon) -> Vec<Vec2> {
    let mut poly: Vec<Vec2> = p.vertices().to_vec();
    for (n, b) in q.normals().iter().zip(q.offsets()) {
        if poly.is_empty() {
            break;
        }
        poly = clip_by(&poly, *n, *b);
    }
    poly
}

/// Bounded region `{x : n_i.x <= b_i}` as a polygon.
pub fn polygon_from_halfplanes(hs: &[(Vec2, f64)]) -> Result<ConvexPolygon> {
    let lines: Vec<HalfPlane> = hs
        .iter()
        .map(|(n, b)| {
            let l = n.norm();
            let n = (1.0 / l) * *n;
            HalfPlane { n, b: b / l, angle: n.angle() }
        })
        .collect();
    let violation = |x: &Vec2| {
        lines
            .iter()
            .map(|h| h.n.dot(*x) - h.b)
            .fold(f64::NEG_INFINITY, f64::max)
    };
    if let Some(pts) = halfplane_intersection(lines.clone()) {
        if pts.len() >= 3 && pts.iter().all(|x| violation(x) <= 1e-9) {
            return ConvexPolygon::new(&pts).map_err(|_| GeomError::EmptyIntersection);
        }
    }
    let big = 1e4;
    let mut poly = vec![
        Vec2::new(-big, -big),
        Vec2::new(big, -big),
        Vec2::new(big, big),
        Vec2::new(-big, big),
    ];
    for h in &lines {
        poly = clip_by(&poly, h.n, h.b);
        if poly.is_empty() {
            return Err(GeomError::EmptyIntersection);
        }
    }
    if poly.iter().any(|p| p.x.abs() >= 0.5 * big || p.y.abs() >= 0.5 * big) {
        return Err(GeomError::Domain("halfplane system is unbounded".into()));
    }
    ConvexPolygon::new(&poly).map_err(|_| GeomError::EmptyIntersection)
}

/// `{x : n.x <= b}` applied to a convex vertex loop.
fn clip_by(poly: &[Vec2], n: Vec2, b: f64) -> Vec<Vec2> {
    let k = poly.len();
    let mut out = Vec::with_capacity(k + 1);
    for i in 0..k {
        let a = poly[i];
        let c = poly[(i + 1) % k];
        let fa = n.dot(a) - b;
        let fc = n.dot(c) - b;
        if fa <= 0.0 {
            out.push(a);
        }
        if (fa < 0.0 && fc > 0.0) || (fa > 0.0 && fc < 0.0) {
            let t = fa / (fa - fc);
            out.push(a + t * (c - a));
        }
    }
    out
}

/// Convex hull of the union.
pub fn hull_union(p: &ConvexPolygon, q: &ConvexPolygon) -> ConvexPolygon {
    let pts: Vec<Vec2> = p.vertices().iter().chain(q.vertices()).copied().collect();
    ConvexPolygon::new(&pts).expect("hull of two bodies is a body")
}

// Edges as (direction angle in [0, 2pi), vector), starting at the smallest angle,
// together with the vertex where that edge starts.
fn sorted_edges(poly: &ConvexPolygon) -> (Vec2, Vec<(f64, Vec2)>) {
    let edges: Vec<(f64, Vec2)> = (0..poly.len())
        .map(|i| {
            let (a, b) = poly.edge(i);
            ((b - a).angle().rem_euclid(TAU), b - a)
        })
        .collect();
    let start = (0..edges.len())
        .min_by(|&i, &j| edges[i].0.total_cmp(&edges[j].0))
        .unwrap_or(0);
    let mut rotated = edges[start..].to_vec();
    rotated.extend_from_slice(&edges[..start]);
    (poly.vertex(start), rotated)
}

/// Minkowski sum by merging the edge sequences.
pub fn minkowski_sum(p: &ConvexPolygon, q: &ConvexPolygon) -> ConvexPolygon {
    let (p0, ep) = sorted_edges(p);
    let (q0, eq) = sorted_edges(q);
    let mut cur = p0 + q0;
    let mut pts = Vec::with_capacity(ep.len() + eq.len());
    pts.push(cur);
    let (mut i, mut j) = (0, 0);
    while i < ep.len() || j < eq.len() {
        let take_p = j >= eq.len() || (i < ep.len() && ep[i].0 <= eq[j].0);
        if take_p {
            cur += ep[i].1;
            i += 1;
        } else {
            cur += eq[j].1;
            j += 1;
        }
        pts.push(cur);
    }
    pts.pop();
    ConvexPolygon::new(&pts).expect("sum of two bodies is a body")
}

/// Every vertex of `q` satisfies every edge inequality of `p` within `tol`.
pub fn contains(p: &ConvexPolygon, q: &ConvexPolygon, tol: f64) -> bool {
    q.vertices().iter().all(|v| p.contains_point(*v, tol))
}

/// Exact Hausdorff distance `max_{|u|=1} |h_P(u) - h_Q(u)|`.
pub fn hausdorff(p: &ConvexPolygon, q: &ConvexPolygon) -> f64 {
    let mut angles: Vec<f64> = p
        .normals()
        .iter()
        .chain(q.normals())
        .map(|n| n.angle().rem_euclid(TAU))
        .collect();
    angles.sort_by(f64::total_cmp);
    angles.dedup();
    let k = angles.len();
    let gap = |u: Vec2| (p.support_value(u) - q.support_value(u)).abs();
    let mut best: f64 = 0.0;
    for i in 0..k {
        let a0 = angles[i];
        let a1 = if i + 1 < k { angles[i + 1] } else { angles[0] + TAU };
        best = best.max(gap(Vec2::from_angle(a0)));
        if a1 - a0 <= 0.0 {
            continue;
        }
        // Inside the cone both supports are attained at fixed vertices.
        let mid = Vec2::from_angle(0.5 * (a0 + a1));
        let w = p.support_point(mid) - q.support_point(mid);
        if w.norm() == 0.0 {
            continue;
        }
        for dir in [w, -w] {
            let mut t = dir.angle().rem_euclid(TAU);
            if t < a0 {
                t += TAU;
            }
            if t > a0 && t < a1 {
                best = best.max(w.norm());
            }
        }
    }
    best
}
