use std::f64::consts::TAU;

use crate::error::{GeomError, Result};
use crate::tol::EPS_NUM;

use super::polygon::ConvexPolygon;
use super::vec2::Vec2;

/// A polygon with the origin in its interior, used as a unit ball.
#[derive(Debug, Clone, PartialEq)]
pub struct GaugeBody {
    body: ConvexPolygon,
    symmetric: bool,
    // Unwrapped polar angles of the vertices, increasing from vertex 0.
    vertex_angles: Vec<f64>,
}

impl GaugeBody {
    /// Wraps `body`; fails if the origin is not interior or the flag is wrong.
    pub fn new(body: ConvexPolygon, symmetric: bool) -> Result<Self> {
        if body.offsets().iter().any(|&b| b <= EPS_NUM) {
            return Err(GeomError::OriginNotInterior);
        }
        if symmetric && !is_centrally_symmetric(&body, EPS_NUM) {
            return Err(GeomError::NotSymmetric);
        }
        let verts = body.vertices();
        let mut vertex_angles = Vec::with_capacity(verts.len());
        vertex_angles.push(verts[0].angle());
        for i in 1..verts.len() {
            let mut a = verts[i].angle();
            while a <= vertex_angles[i - 1] {
                a += TAU;
            }
            vertex_angles.push(a);
        }
        Ok(GaugeBody {
            body,
            symmetric,
            vertex_angles,
        })
    }

    /// A gauge that must be symmetric.
    pub fn symmetric(body: ConvexPolygon) -> Result<Self> {
        Self::new(body, true)
    }

    /// Sets the flag from a symmetry test.
    pub fn detect(body: ConvexPolygon) -> Result<Self> {
        let sym = is_centrally_symmetric(&body, EPS_NUM);
        Self::new(body, sym)
    }

    pub fn body(&self) -> &ConvexPolygon {
        &self.body
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn into_body(self) -> ConvexPolygon {
        self.body
    }

    /// Errors unless the symmetry flag is set.
    pub fn require_symmetric(&self) -> Result<()> {
        if self.symmetric {
            Ok(())
        } else {
            Err(GeomError::AsymmetricGauge)
        }
    }

    /// `min { rho >= 0 : x in rho * P }`.
    pub fn gauge_value(&self, x: Vec2) -> f64 {
        if x == Vec2::ZERO {
            return 0.0;
        }
        let n = self.body.len();
        let t0 = self.vertex_angles[0];
        let mut phi = x.angle();
        while phi < t0 {
            phi += TAU;
        }
        while phi >= t0 + TAU {
            phi -= TAU;
        }
        let i = self.vertex_angles.partition_point(|&t| t <= phi);
        let i = (i + n - 1) % n;
        let normals = self.body.normals();
        let offsets = self.body.offsets();
        [(i + n - 1) % n, i, (i + 1) % n]
            .into_iter()
            .map(|j| normals[j].dot(x) / offsets[j])
            .fold(f64::NEG_INFINITY, f64::max)
            .max(0.0)
    }

    /// Gauge by scanning every edge.
    pub fn gauge_value_linear(&self, x: Vec2) -> f64 {
        self.body
            .normals()
            .iter()
            .zip(self.body.offsets())
            .map(|(a, b)| a.dot(x) / b)
            .fold(0.0, f64::max)
    }
}

/// Whether `-v` is a vertex for every vertex `v`, within `tol`.
pub fn is_centrally_symmetric(p: &ConvexPolygon, tol: f64) -> bool {
    let n = p.len();
    if n % 2 == 1 {
        return false;
    }
    let v = p.vertices();
    let half = n / 2;
    (0..n).all(|i| (v[i] + v[(i + half) % n]).norm() <= tol)
}
