//! Symmetrals of a Minkowski-centered body and the ratios alpha and tau.

use std::f64::consts::TAU;

use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::gauges;
use crate::geom::{self, ConvexPolygon, CrossingSet, GaugeBody, Vec2};
use crate::tol::EPS_MERGE;

/// `K ∩ (-K)`, `conv(K ∪ (-K))` and `(K - K)/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetrizationTriple {
    pub inner: ConvexPolygon,
    pub outer: ConvexPolygon,
    pub central: ConvexPolygon,
}

pub fn symmetrize(k: &ConvexPolygon) -> Result<SymmetrizationTriple> {
    GaugeBody::new(k.clone(), false)?;
    let neg = k.negate();
    Ok(SymmetrizationTriple {
        inner: geom::intersect(k, &neg)?,
        outer: geom::hull_union(k, &neg),
        central: geom::minkowski_sum(k, &neg).scale(0.5),
    })
}

fn max_vertex_gauge(inner: &ConvexPolygon, outer: ConvexPolygon) -> Result<f64> {
    let g = GaugeBody::new(outer, false)?;
    Ok(inner
        .vertices()
        .iter()
        .map(|v| g.gauge_value(*v))
        .fold(0.0, f64::max))
}

/// Smallest factor with `K ∩ (-K) ⊂ alpha conv(K ∪ (-K))`.
pub fn alpha(k: &ConvexPolygon) -> Result<f64> {
    let t = symmetrize(k)?;
    max_vertex_gauge(&t.inner, t.outer)
}

/// Smallest factor with `K ∩ (-K) ⊂ tau (K - K)/2`.
pub fn tau(k: &ConvexPolygon) -> Result<f64> {
    let t = symmetrize(k)?;
    max_vertex_gauge(&t.inner, t.central)
}

/// Both ratios from one symmetrization.
pub fn alpha_tau(k: &ConvexPolygon) -> Result<(f64, f64)> {
    let t = symmetrize(k)?;
    Ok((
        max_vertex_gauge(&t.inner, t.outer)?,
        max_vertex_gauge(&t.inner, t.central)?,
    ))
}

/// Alpha and tau as circumradii with a free translation.
pub fn alpha_tau_by_lp(k: &ConvexPolygon) -> Result<(f64, f64)> {
    let t = symmetrize(k)?;
    let a = gauges::circumradius(&t.inner, &GaugeBody::new(t.outer, false)?)?;
    let b = gauges::circumradius(&t.inner, &GaugeBody::new(t.central, false)?)?;
    Ok((a.scale, b.scale))
}

/// `bd(K) ∩ bd(-K)`.
pub fn crossing_count(k: &ConvexPolygon) -> CrossingSet {
    geom::boundary_intersections(k, &k.negate())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TouchCase {
    /// The point lies on `bd(K) ∩ bd(-K)`.
    Common,
    /// The scaled point `p / alpha` lies on `bd(K) ∪ bd(-K)`.
    Scaled,
}

/// Tags every contact of `K ∩ (-K)` with `alpha conv(K ∪ (-K))`.
pub fn classify_touching_points(k: &ConvexPolygon) -> Result<Vec<(Vec2, TouchCase)>> {
    let t = symmetrize(k)?;
    let outer = GaugeBody::new(t.outer.clone(), false)?;
    let a = max_vertex_gauge(&t.inner, t.outer)?;
    let neg = k.negate();
    let mut out = Vec::new();
    for p in t.inner.vertices() {
        if (outer.gauge_value(*p) - a).abs() > 1e-9 * a.max(1.0) {
            continue;
        }
        let on_k = k.max_violation(*p).abs() <= EPS_MERGE;
        let on_neg = neg.max_violation(*p).abs() <= EPS_MERGE;
        if on_k && on_neg {
            out.push((*p, TouchCase::Common));
            continue;
        }
        let q = (1.0 / a) * *p;
        if k.max_violation(q) <= 1e-8 || neg.max_violation(q) <= 1e-8 {
            out.push((*p, TouchCase::Scaled));
        } else {
            return Err(GeomError::UnclassifiedPoint { x: p.x, y: p.y });
        }
    }
    Ok(out)
}

// Normal cone of `k` at boundary point `p` as (start angle, angular span).
fn normal_cone(k: &ConvexPolygon, p: Vec2, tol: f64) -> Option<(f64, f64)> {
    let mut angles: Vec<f64> = k
        .normals()
        .iter()
        .zip(k.offsets())
        .filter(|(n, b)| (n.dot(p) - *b).abs() <= tol)
        .map(|(n, _)| n.angle().rem_euclid(TAU))
        .collect();
    if angles.is_empty() {
        return None;
    }
    angles.sort_by(f64::total_cmp);
    let m = angles.len();
    // The cone is the complement of the largest gap between active normals.
    let (gap_end, _) = (0..m)
        .map(|i| {
            let next = if i + 1 < m { angles[i + 1] } else { angles[0] + TAU };
            (i, next - angles[i])
        })
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap_or((0, TAU));
    let start = angles[(gap_end + 1) % m];
    let end = angles[gap_end];
    Some((start, (end - start).rem_euclid(TAU)))
}

fn arcs_meet(a: (f64, f64), b: (f64, f64), tol: f64) -> bool {
    let near = |from: f64, to: f64, span: f64| {
        let d = (to - from).rem_euclid(TAU);
        d <= span + tol || d >= TAU - tol
    };
    near(a.0, b.0, a.1) || near(b.0, a.0, b.1)
}

/// Whether some `p, -p ∈ bd(K)` carry parallel supporting lines `a.x = rho`, `-a.x = rho`.
pub fn has_antipodal_parallel_support(k: &ConvexPolygon) -> bool {
    let cs = crossing_count(k);
    if cs.has_overlap() {
        return true;
    }
    let neg = k.negate();
    cs.points.iter().any(|p| {
        match (normal_cone(k, *p, 1e-7), normal_cone(&neg, *p, 1e-7)) {
            (Some(a), Some(b)) => arcs_meet(a, b, 1e-7),
            _ => false,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri() -> ConvexPolygon {
        let h = 3f64.sqrt() / 2.0;
        ConvexPolygon::new(&[Vec2::new(0.0, 1.0), Vec2::new(h, -0.5), Vec2::new(-h, -0.5)]).unwrap()
    }

    fn golden_house() -> ConvexPolygon {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        ConvexPolygon::new(&[
            Vec2::new(1.0, 0.0),
            Vec2::new(-1.0, 0.0),
            Vec2::new(1.0, -1.0),
            Vec2::new(-1.0, -1.0),
            Vec2::new(0.0, phi),
        ])
        .unwrap()
    }

    #[test]
    fn symmetric_body_is_its_own_symmetrals() {
        let sq = ConvexPolygon::new(&[
            Vec2::new(-1.0, -2.0),
            Vec2::new(1.0, -2.0),
            Vec2::new(1.0, 2.0),
            Vec2::new(-1.0, 2.0),
        ])
        .unwrap();
        let t = symmetrize(&sq).unwrap();
        for b in [&t.inner, &t.outer, &t.central] {
            assert!(geom::hausdorff(b, &sq) < 1e-15);
        }
        assert_eq!(alpha_tau(&sq).unwrap(), (1.0, 1.0));
        let touching = classify_touching_points(&sq).unwrap();
        assert_eq!(touching.len(), 4);
        assert!(touching.iter().all(|t| t.1 == TouchCase::Common));
    }

    #[test]
    fn triangle_ratios() {
        let s = tri();
        let t = symmetrize(&s).unwrap();
        assert_eq!((t.inner.len(), t.outer.len(), t.central.len()), (6, 6, 6));
        assert!((alpha(&s).unwrap() - 2.0 / 3.0).abs() < 1e-12);
        // Oracle: max over hexagon vertices of the gauge of (S - S)/2, scanning every edge.
        let c = GaugeBody::new(t.central.clone(), false).unwrap();
        let oracle = t
            .inner
            .vertices()
            .iter()
            .map(|v| c.gauge_value_linear(*v))
            .fold(0.0, f64::max);
        assert!((tau(&s).unwrap() - oracle).abs() < 1e-12);
        let (a, b) = alpha_tau_by_lp(&s).unwrap();
        assert!((a - 2.0 / 3.0).abs() < 1e-9 && (b - oracle).abs() < 1e-9);
    }

    #[test]
    fn golden_house_chain_is_strict() {
        let (gh, _) = gauges::minkowski_centered(&golden_house()).unwrap();
        let t = symmetrize(&gh).unwrap();
        assert!(geom::contains(&t.central, &t.inner, 1e-9));
        assert!(geom::contains(&t.outer, &t.central, 1e-9));
        assert!(geom::hausdorff(&t.inner, &t.central) > 1e-3);
        assert!(geom::hausdorff(&t.central, &t.outer) > 1e-3);
        assert!((alpha(&gh).unwrap() - 1.0).abs() < 1e-9);
        assert!(has_antipodal_parallel_support(&gh));
        assert!(!has_antipodal_parallel_support(&tri()));
    }

    #[test]
    fn pentagon_has_ten_crossings() {
        let pts: Vec<Vec2> = (0..5).map(|k| Vec2::from_angle(0.3 + k as f64 * TAU / 5.0)).collect();
        let p = ConvexPolygon::new(&pts).unwrap();
        assert_eq!(crossing_count(&p).points.len(), 10);
    }

    #[test]
    fn touching_cases_of_extremal_and_rho_bodies() {
        let k = crate::families::k_max(1.9).unwrap();
        let touching = classify_touching_points(&k).unwrap();
        assert!(!touching.is_empty());
        // Oracle: every tagged point is a crossing of bd(K) and bd(-K).
        let cs = crossing_count(&k);
        for (p, case) in &touching {
            assert_eq!(*case, TouchCase::Common);
            assert!(cs.points.iter().any(|q| q.dist(*p) < 1e-7));
        }
        let rho = crate::families::k_rho(1.5, 0.72).unwrap();
        let touching = classify_touching_points(&rho).unwrap();
        assert!(touching.iter().any(|t| t.1 == TouchCase::Scaled));
    }
}
