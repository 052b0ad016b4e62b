//! Pseudo-completeness, completeness and constant width with respect to a symmetric gauge.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::gauges;
use crate::geom::{self, ConvexPolygon, GaugeBody, Vec2};
use crate::tol::EPS_NUM;

/// Radii of `K` w.r.t. `C` and the completeness flags derived from them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompletenessReport {
    pub inradius: f64,
    pub circumradius: f64,
    pub diameter: f64,
    pub width: f64,
    /// Minkowski asymmetry of `K`.
    pub asymmetry: f64,
    pub pseudo_complete: bool,
    pub complete: bool,
    pub constant_width: bool,
    pub dw_ratio: f64,
}

/// Computes every quantity of the report. `tol` is relative to the diameter.
pub fn report(k: &ConvexPolygon, c: &GaugeBody, tol: f64) -> Result<CompletenessReport> {
    c.require_symmetric()?;
    let r = gauges::inradius(k, c)?.scale;
    let big_r = gauges::circumradius(k, c)?.scale;
    let (d, _) = gauges::diameter(k, c)?;
    let (w, _) = gauges::width(k, c)?;
    let s = gauges::minkowski_asymmetry(k)?.s;
    let pseudo_complete = (r + big_r - d).abs() <= tol * d;
    if pseudo_complete {
        check_chain(r, big_r, d, s, tol)?;
    }
    Ok(CompletenessReport {
        inradius: r,
        circumradius: big_r,
        diameter: d,
        width: w,
        asymmetry: s,
        pseudo_complete,
        complete: complete_given_diameter(k, c, d, tol),
        constant_width: constant_width_given_diameter(k, c, d, tol),
        dw_ratio: d / w,
    })
}

// For pseudo-complete bodies `(s+1) r`, `r + R`, `(s+1) R / s` and `D` all coincide.
fn check_chain(r: f64, big_r: f64, d: f64, s: f64, tol: f64) -> Result<()> {
    let terms = [
        ("(s+1)r", (s + 1.0) * r),
        ("r+R", r + big_r),
        ("(s+1)R/s", (s + 1.0) * big_r / s),
    ];
    for (name, v) in terms {
        if (v - d).abs() > tol * d {
            return Err(GeomError::InconsistentCharacterization(format!(
                "{name} = {v} but D = {d} (s = {s}, r = {r}, R = {big_r})"
            )));
        }
    }
    Ok(())
}

/// Whether `r + R = D` within `tol * D`, together with the full report.
pub fn is_pseudo_complete(
    k: &ConvexPolygon,
    c: &GaugeBody,
    tol: f64,
) -> Result<(bool, CompletenessReport)> {
    let rep = report(k, c, tol)?;
    Ok((rep.pseudo_complete, rep))
}

/// Edge normals of `K` and `-K`, one per direction up to sign, with angles in `[0, pi)`.
pub fn regular_slab_normals(k: &ConvexPolygon) -> Vec<Vec2> {
    let mut angles: Vec<f64> = k
        .normals()
        .iter()
        .map(|n| n.angle().rem_euclid(PI))
        .collect();
    angles.sort_by(f64::total_cmp);
    angles.dedup_by(|a, b| (*a - *b).abs() <= EPS_NUM);
    if angles.len() > 1 && angles[0] + PI - angles[angles.len() - 1] <= EPS_NUM {
        angles.pop();
    }
    angles.into_iter().map(Vec2::from_angle).collect()
}

fn complete_given_diameter(k: &ConvexPolygon, c: &GaugeBody, d: f64, tol: f64) -> bool {
    regular_slab_normals(k)
        .into_iter()
        .all(|u| gauges::breadth(k, c, u).is_ok_and(|b| b >= d - tol * d))
}

/// Breadth equals the diameter (within `tol * D`) along every regular slab normal.
///
/// For polygons only edge normals give regular slabs; vertex-vertex slabs never do.
pub fn is_complete(k: &ConvexPolygon, c: &GaugeBody, tol: f64) -> Result<bool> {
    let (d, _) = gauges::diameter(k, c)?;
    Ok(complete_given_diameter(k, c, d, tol))
}

fn constant_width_given_diameter(k: &ConvexPolygon, c: &GaugeBody, d: f64, tol: f64) -> bool {
    let diff = geom::minkowski_sum(k, &k.negate());
    geom::hausdorff(&diff, &c.body().scale(d)) <= tol * d
}

/// `K - K = D C` within Hausdorff distance `tol * D`.
pub fn is_constant_width(k: &ConvexPolygon, c: &GaugeBody, tol: f64) -> Result<bool> {
    let (d, _) = gauges::diameter(k, c)?;
    Ok(constant_width_given_diameter(k, c, d, tol))
}

/// Diameter over width.
pub fn dw_ratio(k: &ConvexPolygon, c: &GaugeBody) -> Result<f64> {
    let (d, _) = gauges::diameter(k, c)?;
    let (w, _) = gauges::width(k, c)?;
    Ok(d / w)
}

/// Upper bound on `D/w` for a pseudo-complete euclidean body with circumradius 1 and diameter `d`.
pub fn euclidean_dw_bound(d: f64) -> Result<f64> {
    let lo = 3f64.sqrt();
    if !(d >= lo - 1e-12 && d < 2.0 - 1e-12) {
        return Err(GeomError::Domain(format!(
            "euclidean_dw_bound needs sqrt(3) <= D < 2, got {d}"
        )));
    }
    let d = d.max(lo);
    let angle = 2.0 * (d / 2.0).acos() - (d - 1.0).asin();
    let denom = (4.0 - d * d).sqrt() * angle.cos();
    if denom <= 0.0 {
        return Err(GeomError::Domain(format!("bound degenerates at D = {d}")));
    }
    Ok(1.0 / denom)
}

/// Real root of `s^3 - s^2 - s - 1`, where `(s+1)/2 = s^2/(s^2-1)`.
pub fn tilde_s() -> f64 {
    let r = 3.0 * 33f64.sqrt();
    (1.0 + (19.0 - r).cbrt() + (19.0 + r).cbrt()) / 3.0
}

/// The same constant by bisection on `[phi, 2]`.
pub fn tilde_s_by_bisection() -> f64 {
    let f = |s: f64| (s + 1.0) / 2.0 - s * s / (s * s - 1.0);
    let (mut lo, mut hi) = (crate::families::PHI, 2.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
