use std::f64::consts::{PI, TAU};

use crate::error::{GeomError, Result};
use crate::tol::{EPS_COLLINEAR, EPS_NUM};

use super::vec2::{Mat2, Vec2};

/// Which part of the boundary attains a support value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Face {
    Vertex(usize),
    /// Edge `i` runs from vertex `i` to vertex `i + 1`.
    Edge(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Support {
    pub value: f64,
    pub face: Face,
}

/// A full-dimensional compact convex polygon.
///
/// Vertices are stored counter-clockwise, strictly convex, starting at the
/// lexicographically smallest vertex. Every constructor goes through the same
/// hull routine, so two polygons built from the same point set are identical.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Vec2>,
    normals: Vec<Vec2>,
    offsets: Vec<f64>,
    // Outer normal angle of edge i, unwrapped so the sequence is increasing and
    // spans less than 2*pi starting from normal_angles[0].
    normal_angles: Vec<f64>,
}

impl ConvexPolygon {
    /// Convex hull of `points`, canonicalized.
    pub fn new(points: &[Vec2]) -> Result<Self> {
        if points.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
            return Err(GeomError::Parse("non-finite coordinate".into()));
        }
        let hull = convex_hull(points);
        if hull.len() < 3 {
            return Err(GeomError::DegenerateInput);
        }
        Ok(Self::from_canonical(hull))
    }

    fn from_canonical(vertices: Vec<Vec2>) -> Self {
        let n = vertices.len();
        let mut normals = Vec::with_capacity(n);
        let mut offsets = Vec::with_capacity(n);
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let nrm = (b - a).perp_cw().normalized();
            normals.push(nrm);
            offsets.push(nrm.dot(a));
        }
        let mut normal_angles = Vec::with_capacity(n);
        normal_angles.push(normals[0].angle());
        for i in 1..n {
            let turn = normals[i - 1].cross(normals[i]).atan2(normals[i - 1].dot(normals[i]));
            let turn = if turn <= 0.0 { turn + TAU } else { turn };
            normal_angles.push(normal_angles[i - 1] + turn);
        }
        ConvexPolygon {
            vertices,
            normals,
            offsets,
            normal_angles,
        }
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> Vec2 {
        self.vertices[i % self.vertices.len()]
    }

    /// Edge `i` as (start, end).
    pub fn edge(&self, i: usize) -> (Vec2, Vec2) {
        (self.vertex(i), self.vertex(i + 1))
    }

    /// Unit outer normals, one per edge.
    pub fn normals(&self) -> &[Vec2] {
        &self.normals
    }

    /// Edge offsets: edge `i` lies on `{x : normals[i] . x = offsets[i]}`.
    pub fn offsets(&self) -> &[f64] {
        &self.offsets
    }

    pub fn normal_angles(&self) -> &[f64] {
        &self.normal_angles
    }

    /// Index of the vertex whose normal cone contains direction `u`.
    fn cone_vertex(&self, u: Vec2) -> usize {
        let n = self.len();
        let t0 = self.normal_angles[0];
        let mut phi = u.angle();
        while phi < t0 {
            phi += TAU;
        }
        while phi >= t0 + TAU {
            phi -= TAU;
        }
        self.normal_angles.partition_point(|&t| t < phi) % n
    }

    /// Support value `max_v u.v` and the face attaining it.
    pub fn support(&self, u: Vec2) -> Support {
        let n = self.len();
        let i = self.cone_vertex(u);
        // Re-evaluate the neighbours; angle rounding can land one cone off.
        let prev = (i + n - 1) % n;
        let next = (i + 1) % n;
        let mut best = i;
        let mut best_val = u.dot(self.vertices[i]);
        for j in [prev, next] {
            let v = u.dot(self.vertices[j]);
            if v > best_val {
                best = j;
                best_val = v;
            }
        }
        let tie = EPS_NUM * u.norm().max(1e-300);
        let bp = (best + n - 1) % n;
        let bn = (best + 1) % n;
        let face = if best_val - u.dot(self.vertices[bn]) <= tie {
            Face::Edge(best)
        } else if best_val - u.dot(self.vertices[bp]) <= tie {
            Face::Edge(bp)
        } else {
            Face::Vertex(best)
        };
        Support {
            value: best_val,
            face,
        }
    }

    #[inline]
    pub fn support_value(&self, u: Vec2) -> f64 {
        self.support(u).value
    }

    /// A boundary point attaining the support value in direction `u`.
    pub fn support_point(&self, u: Vec2) -> Vec2 {
        match self.support(u).face {
            Face::Vertex(i) | Face::Edge(i) => self.vertices[i],
        }
    }

    /// Brute-force support value; O(n).
    pub fn support_value_linear(&self, u: Vec2) -> f64 {
        self.vertices
            .iter()
            .map(|v| u.dot(*v))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn signed_area(&self) -> f64 {
        let n = self.len();
        (0..n)
            .map(|i| self.vertices[i].cross(self.vertices[(i + 1) % n]))
            .sum::<f64>()
            * 0.5
    }

    pub fn area(&self) -> f64 {
        self.signed_area().abs()
    }

    /// Area centroid.
    pub fn centroid(&self) -> Vec2 {
        let n = self.len();
        let o = self.vertices[0];
        let mut acc = Vec2::ZERO;
        let mut area2 = 0.0;
        for i in 1..n - 1 {
            let a = self.vertices[i] - o;
            let b = self.vertices[i + 1] - o;
            let w = a.cross(b);
            area2 += w;
            acc += (w / 3.0) * (a + b);
        }
        o + (1.0 / area2) * acc
    }

    /// Largest Euclidean distance between two vertices.
    pub fn euclidean_diameter(&self) -> f64 {
        let mut best: f64 = 0.0;
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                best = best.max(a.dist(*b));
            }
        }
        best
    }

    /// Signed slack of the worst edge inequality at `p` (positive means outside).
    pub fn max_violation(&self, p: Vec2) -> f64 {
        self.normals
            .iter()
            .zip(&self.offsets)
            .map(|(n, b)| n.dot(p) - b)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn contains_point(&self, p: Vec2, tol: f64) -> bool {
        self.max_violation(p) <= tol
    }

    pub fn negate(&self) -> ConvexPolygon {
        self.map_vertices(|v| -v)
    }

    /// Dilatation by `rho`; panics in debug builds for non-positive factors.
    pub fn scale(&self, rho: f64) -> ConvexPolygon {
        debug_assert!(rho > 0.0);
        self.map_vertices(|v| rho * v)
    }

    /// Dilatation with validation of the factor.
    pub fn try_scale(&self, rho: f64) -> Result<ConvexPolygon> {
        if !(rho > 0.0 && rho.is_finite()) {
            return Err(GeomError::Domain(format!("scale factor {rho} must be positive")));
        }
        Ok(self.scale(rho))
    }

    pub fn translate(&self, t: Vec2) -> ConvexPolygon {
        self.map_vertices(|v| v + t)
    }

    /// Image under `m`; orientation is restored when `det(m) < 0`.
    pub fn linear_map(&self, m: &Mat2) -> Result<ConvexPolygon> {
        let det = m.det();
        if det.abs() <= 1e-14 || !det.is_finite() {
            return Err(GeomError::SingularMatrix(det));
        }
        let mut pts: Vec<Vec2> = self.vertices.iter().map(|v| m.apply(*v)).collect();
        if det < 0.0 {
            pts.reverse();
        }
        ConvexPolygon::new(&pts)
    }

    fn map_vertices(&self, f: impl Fn(Vec2) -> Vec2) -> ConvexPolygon {
        let pts: Vec<Vec2> = self.vertices.iter().map(|v| f(*v)).collect();
        // Similarities keep strict convexity; only the starting vertex moves.
        ConvexPolygon::new(&pts).expect("similarity image of a body is a body")
    }
}

/// Andrew's monotone chain; drops duplicates and (near-)collinear points.
/// Output is counter-clockwise and starts at the lexicographic minimum.
fn convex_hull(points: &[Vec2]) -> Vec<Vec2> {
    let mut pts: Vec<Vec2> = points.to_vec();
    pts.sort_by(|a, b| a.lex_cmp(b));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let (lo, hi) = pts.iter().fold(
        (Vec2::new(f64::INFINITY, f64::INFINITY), Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY)),
        |(lo, hi), p| {
            (
                Vec2::new(lo.x.min(p.x), lo.y.min(p.y)),
                Vec2::new(hi.x.max(p.x), hi.y.max(p.y)),
            )
        },
    );
    let scale = (hi - lo).norm_sq().max(1.0);
    let thresh = EPS_COLLINEAR * scale;
    let turn = |o: Vec2, a: Vec2, b: Vec2| (a - o).cross(b - o);

    // Exact turn tests keep the chain in boundary order even when nearly
    // collinear points are sorted out of order; flat vertices go afterwards.
    let mut hull: Vec<Vec2> = Vec::with_capacity(pts.len() + 1);
    for &p in &pts {
        while hull.len() >= 2 && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    loop {
        let n = hull.len();
        if n < 3 {
            break;
        }
        let flat = (0..n).find(|&i| turn(hull[(i + n - 1) % n], hull[i], hull[(i + 1) % n]) <= thresh);
        match flat {
            Some(i) => {
                hull.remove(i);
            }
            None => break,
        }
    }
    if hull.len() >= 3 {
        let start = (0..hull.len())
            .min_by(|&i, &j| hull[i].lex_cmp(&hull[j]))
            .unwrap_or(0);
        hull.rotate_left(start);
    }
    hull
}

/// Wraps an angle difference into `(-pi, pi]`.
pub(crate) fn wrap_angle(a: f64) -> f64 {
    let mut a = a % TAU;
    if a <= -PI {
        a += TAU;
    } else if a > PI {
        a -= TAU;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> ConvexPolygon {
        ConvexPolygon::new(&[
            Vec2::new(-1.0, -1.0),
            Vec2::new(1.0, -1.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(-1.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn interior_point_dropped() {
        let p = ConvexPolygon::new(&[
            Vec2::new(0.0, 0.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(0.0, 1.0),
            Vec2::new(0.5, 0.25),
        ])
        .unwrap();
        assert_eq!(
            p.vertices(),
            &[Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)]
        );
        assert!(p.signed_area() > 0.0);
    }

    #[test]
    fn golden_house_has_five_vertices() {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let p = ConvexPolygon::new(&[
            Vec2::new(1.0, 0.0),
            Vec2::new(-1.0, 0.0),
            Vec2::new(1.0, -1.0),
            Vec2::new(-1.0, -1.0),
            Vec2::new(0.0, phi),
        ])
        .unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!(p.vertex(0), Vec2::new(-1.0, -1.0));
        assert!((p.support_value(Vec2::new(0.0, 1.0)) - 1.618_033_988_7).abs() < 1e-10);
    }

    #[test]
    fn collinear_input_is_degenerate() {
        let r = ConvexPolygon::new(&[Vec2::new(0.0, 0.0), Vec2::new(1.0, 1.0), Vec2::new(2.0, 2.0)]);
        assert_eq!(r, Err(GeomError::DegenerateInput));
        let r = ConvexPolygon::new(&[Vec2::new(3.0, 3.0), Vec2::new(3.0, 3.0), Vec2::new(3.0, 3.0)]);
        assert_eq!(r, Err(GeomError::DegenerateInput));
    }

    #[test]
    fn collinear_boundary_points_removed() {
        let p = ConvexPolygon::new(&[
            Vec2::new(0.0, 0.0),
            Vec2::new(0.5, 0.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(0.0, 1.0),
            Vec2::new(0.0, 0.5),
        ])
        .unwrap();
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn support_faces() {
        let sq = square();
        let s = sq.support(Vec2::new(1.0, 0.0));
        assert_eq!(s.value, 1.0);
        assert!(matches!(s.face, Face::Edge(_)));
        let s = sq.support(Vec2::new(1.0, 0.3));
        assert!((s.value - 1.3).abs() < 1e-15);
        assert!(matches!(s.face, Face::Vertex(_)));

        let h = 3f64.sqrt() / 2.0;
        let tri = ConvexPolygon::new(&[Vec2::new(0.0, 1.0), Vec2::new(h, -0.5), Vec2::new(-h, -0.5)])
            .unwrap();
        let s = tri.support(Vec2::new(0.0, -1.0));
        assert!((s.value - 0.5).abs() < 1e-15);
    }

    #[test]
    fn support_agrees_with_linear_scan() {
        let pts: Vec<Vec2> = (0..37)
            .map(|k| {
                let a = k as f64 * 0.31;
                Vec2::new(a.cos() * (1.0 + 0.3 * (3.0 * a).sin()), a.sin())
            })
            .collect();
        let p = ConvexPolygon::new(&pts).unwrap();
        for k in 0..720 {
            let u = Vec2::from_angle(k as f64 * TAU / 720.0 + 1e-3);
            assert!((p.support_value(u) - p.support_value_linear(u)).abs() < 1e-14);
        }
        for (n, b) in p.normals().iter().zip(p.offsets()) {
            assert!((p.support_value(*n) - b).abs() < EPS_NUM);
        }
    }

    #[test]
    fn affine_maps() {
        assert_eq!(square().scale(2.0).vertex(0), Vec2::new(-2.0, -2.0));
        let tri = ConvexPolygon::new(&[Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)])
            .unwrap();
        let neg = tri.negate();
        assert_eq!(
            neg.vertices(),
            &[Vec2::new(-1.0, 0.0), Vec2::new(0.0, -1.0), Vec2::new(0.0, 0.0)]
        );
        let flip = tri.linear_map(&Mat2::new(-1.0, 0.0, 0.0, 1.0)).unwrap();
        assert!(flip.signed_area() > 0.0);
        assert_eq!(
            tri.linear_map(&Mat2::new(1.0, 2.0, 2.0, 4.0)),
            Err(GeomError::SingularMatrix(0.0))
        );
        assert!(tri.try_scale(-1.0).is_err());
    }

    #[test]
    fn centroid_of_square() {
        let c = square().translate(Vec2::new(0.25, -3.0)).centroid();
        assert!((c - Vec2::new(0.25, -3.0)).norm() < 1e-14);
    }
}
