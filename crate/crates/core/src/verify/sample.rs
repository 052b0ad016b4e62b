//! Seeded random Minkowski-centered polygons.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Result;
use crate::gauges;
use crate::geom::{self, ConvexPolygon, GaugeBody, Mat2, Vec2};

/// Inner radius of the sampling annulus; the outer radius is 1.
pub const ANNULUS_INNER: f64 = 0.35;

/// Generator for sample `index` of the run seeded with `seed`; independent of other indices.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn annulus_point(rng: &mut ChaCha8Rng) -> Vec2 {
    let r2 = rng.random_range(ANNULUS_INNER * ANNULUS_INNER..1.0);
    Vec2::from_angle(rng.random_range(0.0..TAU)) * r2.sqrt()
}

/// Share of samples whose points come in jittered antipodal pairs.
pub const NEAR_SYMMETRIC_SHARE: f64 = 0.25;

/// 6 to 14 points in the annulus, sheared, hulled and moved to the Minkowski center.
///
/// A share of the samples pairs each point with a jittered copy of its negative,
/// which keeps the asymmetry close to 1.
pub fn random_body(rng: &mut ChaCha8Rng) -> ConvexPolygon {
    loop {
        let n = rng.random_range(6..=14);
        let shear = Mat2::new(1.0, rng.random_range(-1.0..1.0), 0.0, 1.0);
        let mut pts: Vec<Vec2> = (0..n).map(|_| annulus_point(rng)).collect();
        if rng.random_bool(NEAR_SYMMETRIC_SHARE) {
            let jitter = rng.random_range(0.0..0.05);
            for i in (1..n).step_by(2) {
                let e = Vec2::from_angle(rng.random_range(0.0..TAU)) * jitter;
                pts[i] = -pts[i - 1] + e;
            }
        }
        let pts: Vec<Vec2> = pts.into_iter().map(|p| shear.apply(p)).collect();
        let Ok(k) = ConvexPolygon::new(&pts) else { continue };
        if let Ok((kc, _)) = gauges::minkowski_centered(&k) {
            return kc;
        }
    }
}

/// A random origin-symmetric polygon with 4 to 12 vertices.
pub fn random_symmetric_gauge(rng: &mut ChaCha8Rng) -> GaugeBody {
    loop {
        let n = rng.random_range(2..=6);
        let mut pts: Vec<Vec2> = (0..n).map(|_| annulus_point(rng)).collect();
        pts.extend(pts.clone().into_iter().map(|p| -p));
        let Ok(k) = ConvexPolygon::new(&pts) else { continue };
        if let Ok(g) = GaugeBody::symmetric(geom::symmetric_closure(&k)) {
            return g;
        }
    }
}

/// A random map with condition number at most 40.
pub fn random_linear_map(rng: &mut ChaCha8Rng) -> Mat2 {
    loop {
        let m = Mat2::new(
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
        );
        let fro = m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d;
        if fro <= 40.0 * m.det().abs() {
            return m;
        }
    }
}

/// `count` bodies for `seed`, in index order.
pub fn random_bodies(count: usize, seed: u64) -> Vec<ConvexPolygon> {
    (0..count as u64)
        .into_par_iter()
        .map(|i| random_body(&mut sample_rng(seed, i)))
        .collect()
}

/// Asymmetry of each body.
pub fn asymmetries(bodies: &[ConvexPolygon]) -> Result<Vec<f64>> {
    bodies
        .par_iter()
        .map(|k| gauges::minkowski_asymmetry(k).map(|r| r.s))
        .collect()
}
