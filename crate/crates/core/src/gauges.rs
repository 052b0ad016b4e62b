//! Radii, breadths and the Minkowski asymmetry as three-variable linear programs.

use std::f64::consts::TAU;

use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::geom::{ConvexPolygon, GaugeBody, Vec2};
use crate::lp::{self, Row};
use crate::tol::{EPS_CERT, EPS_MERGE, EPS_NUM};

/// Optimal homothetic containment with its touching certificate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContainmentResult {
    pub scale: f64,
    pub translation: Vec2,
    /// (point on the boundary of the outer body, outer unit normal there).
    pub touching: Vec<(Vec2, Vec2)>,
}

impl ContainmentResult {
    /// Euclidean distance from the origin to the convex hull of the normals.
    pub fn certificate_gap(&self) -> f64 {
        let normals: Vec<Vec2> = self.touching.iter().map(|t| t.1).collect();
        origin_hull_distance(&normals)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymmetryResult {
    pub s: f64,
    pub center: Vec2,
    /// Points of `bd(K - c) ∩ bd(-(K - c)/s)`, sorted by polar angle.
    pub asym_points: Vec<Vec2>,
    /// Contacts certified by the optimal basis: (asymmetry point, outer normal of `K - c`).
    pub certificate: Vec<(Vec2, Vec2)>,
}

/// Distance from the origin to the convex hull of at most three points.
pub fn origin_hull_distance(pts: &[Vec2]) -> f64 {
    let seg = |a: Vec2, b: Vec2| {
        let d = b - a;
        let l = d.norm_sq();
        if l == 0.0 {
            return a.norm();
        }
        let t = (-a.dot(d) / l).clamp(0.0, 1.0);
        (a + t * d).norm()
    };
    match pts {
        [] => f64::INFINITY,
        [a] => a.norm(),
        [a, b] => seg(*a, *b),
        [a, b, c] => {
            let d1 = a.cross(*b);
            let d2 = b.cross(*c);
            let d3 = c.cross(*a);
            let inside = (d1 >= 0.0 && d2 >= 0.0 && d3 >= 0.0) || (d1 <= 0.0 && d2 <= 0.0 && d3 <= 0.0);
            let area = (*b - *a).cross(*c - *a).abs();
            if inside && area > 0.0 {
                0.0
            } else {
                seg(*a, *b).min(seg(*b, *c)).min(seg(*c, *a))
            }
        }
        _ => {
            let mut best = f64::INFINITY;
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    for k in j + 1..pts.len() {
                        best = best.min(origin_hull_distance(&[pts[i], pts[j], pts[k]]));
                    }
                }
            }
            best
        }
    }
}

/// Whether 0 lies in the interior of the triangle, with margin `tol`.
fn origin_strictly_inside(a: Vec2, b: Vec2, c: Vec2, tol: f64) -> bool {
    let s = [a.cross(b), b.cross(c), c.cross(a)];
    let scale = a.norm().max(b.norm()).max(c.norm()).max(1e-300);
    let t = tol * scale;
    s.iter().all(|&v| v > t) || s.iter().all(|&v| v < -t)
}

/// `(h_K(u) + h_K(-u)) / h_C(u)`.
pub fn breadth(k: &ConvexPolygon, c: &GaugeBody, u: Vec2) -> Result<f64> {
    c.require_symmetric()?;
    Ok(breadth_unchecked(k, c, u))
}

fn breadth_unchecked(k: &ConvexPolygon, c: &GaugeBody, u: Vec2) -> f64 {
    (k.support_value(u) + k.support_value(-u)) / c.body().support_value(u)
}

// Normals of K, -K and C; the breadth ratio is monotone between consecutive ones.
fn breadth_rays(k: &ConvexPolygon, c: &GaugeBody) -> Vec<Vec2> {
    let mut angles: Vec<f64> = k
        .normals()
        .iter()
        .flat_map(|n| [*n, -*n])
        .chain(c.body().normals().iter().copied())
        .map(|n| n.angle().rem_euclid(TAU))
        .collect();
    angles.sort_by(f64::total_cmp);
    angles.dedup_by(|a, b| (*a - *b).abs() < 1e-15);
    angles.into_iter().map(Vec2::from_angle).collect()
}

/// Minimum breadth and a direction attaining it.
pub fn width(k: &ConvexPolygon, c: &GaugeBody) -> Result<(f64, Vec2)> {
    c.require_symmetric()?;
    let mut best = (f64::INFINITY, Vec2::ZERO);
    for u in breadth_rays(k, c) {
        let b = breadth_unchecked(k, c, u);
        if b < best.0 {
            best = (b, u);
        }
    }
    Ok(best)
}

/// Maximum breadth; equals the largest `C`-distance between two points of `K`.
pub fn diameter(k: &ConvexPolygon, c: &GaugeBody) -> Result<(f64, (Vec2, Vec2))> {
    c.require_symmetric()?;
    let mut best = (f64::NEG_INFINITY, Vec2::ZERO);
    for u in breadth_rays(k, c) {
        let b = breadth_unchecked(k, c, u);
        if b > best.0 {
            best = (b, u);
        }
    }
    let u = best.1;
    Ok((best.0, (k.support_point(u), k.support_point(-u))))
}

/// Diameter as the maximum gauge distance over vertex pairs; O(n^2 log m).
pub fn diameter_vertex_pairs(k: &ConvexPolygon, c: &GaugeBody) -> Result<(f64, (Vec2, Vec2))> {
    c.require_symmetric()?;
    let v = k.vertices();
    let mut best = (f64::NEG_INFINITY, (v[0], v[0]));
    for (i, a) in v.iter().enumerate() {
        for b in &v[i + 1..] {
            let g = c.gauge_value(*a - *b);
            if g > best.0 {
                best = (g, (*a, *b));
            }
        }
    }
    Ok(best)
}

fn circumradius_rows(k: &ConvexPolygon, c: &GaugeBody) -> Vec<Row> {
    let cb = c.body();
    cb.normals()
        .iter()
        .zip(cb.offsets())
        .map(|(a, b)| ([-b, -a.x, -a.y], -k.support_value(*a)))
        .collect()
}

/// Smallest `rho` with `K ⊂ t + rho C`; ties in `t` broken lexicographically.
pub fn circumradius(k: &ConvexPolygon, c: &GaugeBody) -> Result<ContainmentResult> {
    let rows = circumradius_rows(k, c);
    let sol = lp::minimize_lex(&rows, &[[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])?;
    let cb = c.body();
    let touching = sol
        .duals
        .iter()
        .map(|&(j, _)| {
            let a = cb.normals()[j];
            (k.support_point(a), a)
        })
        .collect();
    Ok(ContainmentResult {
        scale: sol.value,
        translation: Vec2::new(sol.x[1], sol.x[2]),
        touching,
    })
}

/// Whether `K ⊂ t + rho C` for some `t`.
pub fn circumscribable(k: &ConvexPolygon, c: &GaugeBody, rho: f64) -> Result<bool> {
    let mut rows = circumradius_rows(k, c);
    rows.push(([1.0, 0.0, 0.0], rho));
    rows.push(([-1.0, 0.0, 0.0], -rho));
    lp::feasible(&rows)
}

fn inradius_rows(k: &ConvexPolygon, c: &GaugeBody) -> Vec<Row> {
    k.normals()
        .iter()
        .zip(k.offsets())
        .map(|(a, b)| ([c.body().support_value(*a), a.x, a.y], *b))
        .collect()
}

/// Largest `rho` with `c + rho C ⊂ K`; `translation` is the lexicographically smallest incenter.
pub fn inradius(k: &ConvexPolygon, c: &GaugeBody) -> Result<ContainmentResult> {
    let rows = inradius_rows(k, c);
    let sol = lp::minimize_lex(&rows, &[[-1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])?;
    let rho = -sol.value;
    let center = Vec2::new(sol.x[1], sol.x[2]);
    let touching = sol
        .duals
        .iter()
        .map(|&(j, _)| {
            let a = k.normals()[j];
            (center + rho * c.body().support_point(a), a)
        })
        .collect();
    Ok(ContainmentResult {
        scale: rho,
        translation: center,
        touching,
    })
}

/// Whether `c + rho C ⊂ K` for some `c`.
pub fn inscribable(k: &ConvexPolygon, c: &GaugeBody, rho: f64) -> Result<bool> {
    let mut rows = inradius_rows(k, c);
    rows.push(([1.0, 0.0, 0.0], rho));
    rows.push(([-1.0, 0.0, 0.0], -rho));
    lp::feasible(&rows)
}

// Variables (rho, d) with d = (1 + rho) c.
fn asymmetry_rows(k: &ConvexPolygon) -> Vec<Row> {
    k.normals()
        .iter()
        .zip(k.offsets())
        .map(|(a, b)| ([-b, a.x, a.y], -k.support_value(-*a)))
        .collect()
}

/// Whether `K - c ⊂ rho (c - K)` for some `c`.
pub fn asymmetry_feasible(k: &ConvexPolygon, rho: f64) -> Result<bool> {
    let mut rows = asymmetry_rows(k);
    rows.push(([1.0, 0.0, 0.0], rho));
    rows.push(([-1.0, 0.0, 0.0], -rho));
    lp::feasible(&rows)
}

/// Minkowski asymmetry, the lexicographically smallest Minkowski center and the asymmetry points.
pub fn minkowski_asymmetry(k: &ConvexPolygon) -> Result<AsymmetryResult> {
    let rows = asymmetry_rows(k);
    let sol = lp::minimize_lex(&rows, &[[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])?;
    let s = sol.value.max(1.0);
    let center = (1.0 / (1.0 + sol.value)) * Vec2::new(sol.x[1], sol.x[2]);
    let kc = k.translate(-center);
    let certificate = sol
        .duals
        .iter()
        .map(|&(j, _)| {
            let a = k.normals()[j];
            (-(1.0 / s) * kc.support_point(-a), a)
        })
        .collect();
    let asym_points = asymmetry_points(&kc, s);
    Ok(AsymmetryResult {
        s,
        center,
        asym_points,
        certificate,
    })
}

/// Translates `K` to its Minkowski center.
pub fn minkowski_centered(k: &ConvexPolygon) -> Result<(ConvexPolygon, AsymmetryResult)> {
    let res = minkowski_asymmetry(k)?;
    Ok((k.translate(-res.center), res))
}

/// Contacts of `bd(K)` and `bd(-K/s)` for a Minkowski-centered `K`.
pub fn asymmetry_points(k: &ConvexPolygon, s: f64) -> Vec<Vec2> {
    let gk = match GaugeBody::new(k.clone(), false) {
        Ok(g) => g,
        Err(_) => return Vec::new(),
    };
    let mut pts: Vec<Vec2> = Vec::new();
    for v in k.vertices() {
        let p = -(1.0 / s) * *v;
        if (gk.gauge_value(p) - 1.0).abs() <= 1e-6 {
            pts.push(p);
        }
        if (s * gk.gauge_value(-*v) - 1.0).abs() <= 1e-6 {
            pts.push(*v);
        }
    }
    let mut out: Vec<Vec2> = Vec::new();
    for p in pts {
        if out.iter().all(|q| q.dist(p) > EPS_MERGE) {
            out.push(p);
        }
    }
    out.sort_by(|a, b| a.angle().total_cmp(&b.angle()));
    out
}

/// Three asymmetry points with 0 strictly inside their hull, and outer normals
/// at them with 0 in their hull.
pub fn well_spread_triple(k: &ConvexPolygon) -> Result<([Vec2; 3], [Vec2; 3])> {
    let res = minkowski_asymmetry(k)?;
    if res.s <= 1.0 + EPS_NUM {
        return Err(GeomError::NoTriple);
    }
    let kc = k.translate(-res.center);
    if let [(p1, n1), (p2, n2), (p3, n3)] = res.certificate[..] {
        if origin_strictly_inside(p1, p2, p3, EPS_CERT)
            && origin_hull_distance(&[n1, n2, n3]) <= EPS_CERT
        {
            return Ok(([p1, p2, p3], [n1, n2, n3]));
        }
    }
    let cones: Vec<Vec<Vec2>> = res.asym_points.iter().map(|p| normal_cone_rays(&kc, *p)).collect();
    let pts = &res.asym_points;
    let m = pts.len();
    for i in 0..m {
        for j in i + 1..m {
            for l in j + 1..m {
                if !origin_strictly_inside(pts[i], pts[j], pts[l], EPS_CERT) {
                    continue;
                }
                for a in &cones[i] {
                    for b in &cones[j] {
                        for c in &cones[l] {
                            if origin_hull_distance(&[*a, *b, *c]) <= EPS_CERT {
                                return Ok(([pts[i], pts[j], pts[l]], [*a, *b, *c]));
                            }
                        }
                    }
                }
            }
        }
    }
    Err(GeomError::NoTriple)
}

/// Outer normals of the edges of `k` passing through the boundary point `p`.
fn normal_cone_rays(k: &ConvexPolygon, p: Vec2) -> Vec<Vec2> {
    k.normals()
        .iter()
        .zip(k.offsets())
        .filter(|(n, b)| (n.dot(p) - *b).abs() <= 1e-7)
        .map(|(n, _)| *n)
        .collect()
}
