//! Named bodies: the regular triangle, the golden house, the `K_t` family,
//! odd regular polygons, triangle caps, the extremal `K_min`/`K_max` pair, the
//! two-parameter family `K_{rho1,rho2}`, the cap-to-extremal interpolation,
//! the hood and the gauge combinations `C_lambda`.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_6, PI, TAU};
use std::fmt;

use crate::error::{GeomError, Result};
use crate::gauges;
use crate::geom::{self, wrap_angle, ConvexPolygon, GaugeBody, Vec2};
use crate::symm;

/// The golden ratio.
pub const PHI: f64 = 1.618_033_988_749_895;

fn domain(msg: impl Into<String>) -> GeomError {
    GeomError::Domain(msg.into())
}

fn poly(pts: &[(f64, f64)]) -> ConvexPolygon {
    let v: Vec<Vec2> = pts.iter().map(|&p| p.into()).collect();
    ConvexPolygon::new(&v).expect("family vertices span a body")
}

/// Directions `p^1, p^2, p^3` of the regular triangle's vertices.
pub fn triangle_directions() -> [Vec2; 3] {
    let h = 3f64.sqrt() / 2.0;
    [Vec2::new(0.0, 1.0), Vec2::new(h, -0.5), Vec2::new(-h, -0.5)]
}

/// Regular triangle with circumradius 1, apex up; Minkowski centered.
pub fn triangle() -> ConvexPolygon {
    ConvexPolygon::new(&triangle_directions()).expect("triangle is a body")
}

/// `conv{(±1, 0), (±1, -1), (0, phi)}`.
pub fn golden_house() -> ConvexPolygon {
    poly(&[(1.0, 0.0), (-1.0, 0.0), (1.0, -1.0), (-1.0, -1.0), (0.0, PHI)])
}

/// Closed-form asymmetry of `K_t`.
pub fn k_t_asymmetry(t: f64) -> f64 {
    (t + (9.0 * t * t + 12.0 * t + 4.0).sqrt()) / (2.0 * (t + 1.0))
}

/// `conv{(±1, 0), (±1, -1), (0, t)}` moved to its Minkowski center; `0 <= t < phi`.
pub fn k_t(t: f64) -> Result<ConvexPolygon> {
    if !(0.0..PHI).contains(&t) {
        return Err(domain(format!("k_t needs 0 <= t < phi, got {t}")));
    }
    let s = k_t_asymmetry(t);
    let shift = (t - s) / (s + 1.0);
    Ok(poly(&[(1.0, 0.0), (-1.0, 0.0), (1.0, -1.0), (-1.0, -1.0), (0.0, t)]).translate(Vec2::new(0.0, -shift)))
}

/// Regular `k`-gon with circumradius 1 and a vertex straight up; `k` odd, at least 5.
pub fn regular_kgon(k: usize) -> Result<ConvexPolygon> {
    if k < 5 || k.is_multiple_of(2) {
        return Err(domain(format!("regular_kgon needs odd k >= 5, got {k}")));
    }
    let pts: Vec<Vec2> = (0..k)
        .map(|j| Vec2::from_angle(FRAC_PI_2 + TAU * j as f64 / k as f64))
        .collect();
    ConvexPolygon::new(&pts)
}

/// `S ∩ (-s S)` for the regular triangle `S`; `1 <= s <= 2`.
pub fn s_cap(s: f64) -> Result<ConvexPolygon> {
    if !(1.0..=2.0).contains(&s) {
        return Err(domain(format!("s_cap needs 1 <= s <= 2, got {s}")));
    }
    let t = triangle();
    geom::intersect(&t, &t.negate().scale(s))
}

/// `conv{(±s/(s²-1), 0), (0, -s²), (±1, s)}`; `phi < s <= 2`.
pub fn k_min(s: f64) -> Result<ConvexPolygon> {
    if !(s > PHI && s <= 2.0) {
        return Err(domain(format!("k_min needs phi < s <= 2, got {s}")));
    }
    let a = s / (s * s - 1.0);
    Ok(poly(&[(a, 0.0), (-a, 0.0), (0.0, -s * s), (1.0, s), (-1.0, s)]))
}

/// `conv{(±1, s(s²-s-1)), (0, -s²), (±1, s)}`; `1 <= s <= 2`.
pub fn k_max(s: f64) -> Result<ConvexPolygon> {
    if !(1.0..=2.0).contains(&s) {
        return Err(domain(format!("k_max needs 1 <= s <= 2, got {s}")));
    }
    let y = s * (s * s - s - 1.0);
    Ok(poly(&[(1.0, y), (-1.0, y), (0.0, -s * s), (1.0, s), (-1.0, s)]))
}

/// `S ∩ (-S)` as a symmetric gauge: the norm in which `s_cap(s)` is complete.
pub fn triangle_core() -> Result<GaugeBody> {
    let t = triangle();
    GaugeBody::symmetric(geom::symmetric_closure(&geom::intersect(&t, &t.negate())?))
}

/// Admissible range of `rho2` for a given `rho1`.
pub fn k_rho_bounds(rho1: f64) -> (f64, f64) {
    ((rho1 * rho1 - rho1 + 1.0) / (rho1 + 1.0), rho1 / 2.0)
}

/// `conv(((-S) ∩ rho1 S) ∪ rho2 S)` on its parameter domain.
pub fn k_rho(rho1: f64, rho2: f64) -> Result<ConvexPolygon> {
    let (lo, hi) = k_rho_bounds(rho1);
    let tol = 1e-12;
    if !(1.0..=2.0).contains(&rho1) || rho2 < lo - tol || rho2 > hi + tol {
        return Err(domain(format!(
            "k_rho needs 1 <= rho1 <= 2 and {lo} <= rho2 <= {hi}, got ({rho1}, {rho2})"
        )));
    }
    let s = triangle();
    let cap = geom::intersect(&s.negate(), &s.scale(rho1))?;
    Ok(geom::hull_union(&cap, &s.scale(rho2)))
}

/// Rotates the line through `pivot` from outer normal angle `from` to `to`, a fraction `tau` of the way.
fn rotated(pivot: Vec2, from: f64, to: f64, tau: f64) -> (Vec2, f64) {
    let n = Vec2::from_angle(from + tau * wrap_angle(to - from));
    (n, n.dot(pivot))
}

/// Continuous deformation of `s_cap(s)` (at `t = 0`) into a body linearly
/// equivalent to `k_max(s)` (at `t = 1`), keeping the asymmetry equal to `s`.
///
/// For `t <= 1/2` the two edge lines of `-sS` through `q2`, `q3` (their
/// meeting points with the bottom edge) turn until vertical; for `t >= 1/2`
/// the two upper edge lines of `S` turn about `-q3/s`, `-q2/s` until they meet
/// at `(0, s/2)`.
pub fn interpolate(s: f64, t: f64) -> Result<ConvexPolygon> {
    if !(1.0..=2.0).contains(&s) || !(0.0..=1.0).contains(&t) {
        return Err(domain(format!("interpolate needs s in [1,2], t in [0,1], got ({s}, {t})")));
    }
    let r3 = 3f64.sqrt();
    let qx = (2.0 * s - 1.0) / (2.0 * r3);
    let q2 = Vec2::new(qx, -0.5);
    let q3 = Vec2::new(-qx, -0.5);
    let tau1 = (2.0 * t).min(1.0);
    let tau2 = (2.0 * t - 1.0).max(0.0);
    let apex = Vec2::new(0.0, s / 2.0);

    let right_pivot = -(1.0 / s) * q3;
    let left_pivot = -(1.0 / s) * q2;
    let outward = |pivot: Vec2, init: f64| {
        let d = apex - pivot;
        let n = Vec2::new(d.y, -d.x);
        let n = if n.dot(Vec2::from_angle(init)) >= 0.0 { n } else { -n };
        n.angle()
    };
    let hs = [
        (Vec2::new(0.0, -1.0), 0.5),
        (Vec2::new(0.0, 1.0), s / 2.0),
        rotated(q2, -FRAC_PI_6, 0.0, tau1),
        rotated(q3, -5.0 * FRAC_PI_6, -PI, tau1),
        rotated(right_pivot, FRAC_PI_6, outward(right_pivot, FRAC_PI_6), tau2),
        rotated(left_pivot, 5.0 * FRAC_PI_6, outward(left_pivot, 5.0 * FRAC_PI_6), tau2),
    ];
    geom::polygon_from_halfplanes(&hs)
}

/// Positive root of `y^4 - 8y + 4 = 0` minus one: the inradius of the hood.
pub fn hood_radius() -> f64 {
    let r69 = 69f64.sqrt();
    let t = (32.0f64 / 9.0).cbrt() * ((9.0 + r69).cbrt() + (9.0 - r69).cbrt());
    let st = t.sqrt();
    st / 2.0 - 1.0 + 0.5 * (16.0 / st - t).sqrt()
}

/// Regular `m`-gon inscribed in the unit circle, vertex at angle 0.
pub fn disk_model(m: usize) -> Result<GaugeBody> {
    if m < 4 || m % 2 == 1 {
        return Err(domain(format!("disk model needs an even vertex count, got {m}")));
    }
    let pts: Vec<Vec2> = (0..m).map(|k| Vec2::from_angle(TAU * k as f64 / m as f64)).collect();
    GaugeBody::symmetric(geom::symmetric_closure(&ConvexPolygon::new(&pts)?))
}

/// The hood with its round part replaced by an inscribed `m`-gon, and the matching disk model.
pub fn hood(m: usize) -> Result<(ConvexPolygon, GaugeBody)> {
    if m < 64 || m % 2 == 1 {
        return Err(domain(format!("hood needs an even m >= 64, got {m}")));
    }
    let r = hood_radius();
    let foot = (1.0 - r * r).sqrt();
    let mut pts: Vec<Vec2> = (0..m)
        .map(|k| r * Vec2::from_angle(TAU * k as f64 / m as f64))
        .collect();
    pts.extend([Vec2::new(0.0, 1.0), Vec2::new(r, -foot), Vec2::new(-r, -foot)]);
    Ok((ConvexPolygon::new(&pts)?, disk_model(m)?))
}

/// `(1 - lambda)(K - K)/2 + lambda (s + 1)/2 (K ∩ (-K))` for a Minkowski-centered `K`.
pub fn c_lambda(k: &ConvexPolygon, lambda: f64) -> Result<GaugeBody> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(domain(format!("c_lambda needs 0 <= lambda <= 1, got {lambda}")));
    }
    let s = gauges::minkowski_asymmetry(k)?.s;
    let t = symm::symmetrize(k)?;
    let body = if lambda == 0.0 {
        t.central
    } else if lambda == 1.0 {
        t.inner.scale((s + 1.0) / 2.0)
    } else {
        geom::minkowski_sum(
            &t.central.scale(1.0 - lambda),
            &t.inner.scale(lambda * (s + 1.0) / 2.0),
        )
    };
    GaugeBody::symmetric(geom::symmetric_closure(&body))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilyName {
    Triangle,
    GoldenHouse,
    KT,
    RegularKgon,
    SCap,
    KMin,
    KMax,
    KRho,
    Interpolate,
    Hood,
    CLambda,
}

impl FamilyName {
    pub const ALL: [FamilyName; 11] = [
        FamilyName::Triangle,
        FamilyName::GoldenHouse,
        FamilyName::KT,
        FamilyName::RegularKgon,
        FamilyName::SCap,
        FamilyName::KMin,
        FamilyName::KMax,
        FamilyName::KRho,
        FamilyName::Interpolate,
        FamilyName::Hood,
        FamilyName::CLambda,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyName::Triangle => "triangle",
            FamilyName::GoldenHouse => "golden_house",
            FamilyName::KT => "k_t",
            FamilyName::RegularKgon => "regular_kgon",
            FamilyName::SCap => "s_cap",
            FamilyName::KMin => "k_min",
            FamilyName::KMax => "k_max",
            FamilyName::KRho => "k_rho",
            FamilyName::Interpolate => "interpolate",
            FamilyName::Hood => "hood",
            FamilyName::CLambda => "c_lambda",
        }
    }

    /// Parameter keys with their defaults.
    pub fn params(self) -> &'static [(&'static str, f64)] {
        match self {
            FamilyName::Triangle | FamilyName::GoldenHouse => &[],
            FamilyName::KT => &[("t", 1.0)],
            FamilyName::RegularKgon => &[("k", 5.0)],
            FamilyName::SCap | FamilyName::KMin | FamilyName::KMax => &[("s", 1.9)],
            FamilyName::KRho => &[("rho1", 1.5), ("rho2", 0.72)],
            FamilyName::Interpolate => &[("s", 1.5), ("t", 0.5)],
            FamilyName::Hood => &[("m", 4096.0)],
            FamilyName::CLambda => &[("s", 1.9), ("lambda", 0.5)],
        }
    }
}

impl std::str::FromStr for FamilyName {
    type Err = GeomError;

    fn from_str(s: &str) -> Result<Self> {
        FamilyName::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| GeomError::Parse(format!("unknown family `{s}`")))
    }
}

/// A named family with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilySpec {
    pub name: FamilyName,
    pub params: BTreeMap<String, f64>,
}

impl FamilySpec {
    /// Fills in defaults and rejects unknown keys.
    pub fn new(name: FamilyName, given: &[(String, f64)]) -> Result<Self> {
        let mut params: BTreeMap<String, f64> =
            name.params().iter().map(|(k, v)| (k.to_string(), *v)).collect();
        for (k, v) in given {
            match params.get_mut(k) {
                Some(slot) => *slot = *v,
                None => {
                    return Err(GeomError::Parse(format!(
                        "family `{}` has no parameter `{k}`",
                        name.as_str()
                    )))
                }
            }
        }
        Ok(FamilySpec { name, params })
    }

    /// Parses `name` and `key=value` strings.
    pub fn parse(name: &str, kv: &[String]) -> Result<Self> {
        let name: FamilyName = name.parse()?;
        let given = kv
            .iter()
            .map(|s| {
                let (k, v) = s
                    .split_once('=')
                    .ok_or_else(|| GeomError::Parse(format!("expected key=value, got `{s}`")))?;
                let v: f64 = v
                    .trim()
                    .parse()
                    .map_err(|_| GeomError::Parse(format!("bad number in `{s}`")))?;
                Ok((k.trim().to_string(), v))
            })
            .collect::<Result<Vec<_>>>()?;
        FamilySpec::new(name, &given)
    }

    fn get(&self, key: &str) -> f64 {
        self.params[key]
    }

    fn get_count(&self, key: &str) -> Result<usize> {
        let v = self.get(key);
        if v.fract() != 0.0 || v < 0.0 {
            return Err(domain(format!("{key} must be a non-negative integer, got {v}")));
        }
        Ok(v as usize)
    }

    /// The body; for `c_lambda` the gauge built from `k_max(s)`.
    pub fn build(&self) -> Result<ConvexPolygon> {
        match self.name {
            FamilyName::Triangle => Ok(triangle()),
            FamilyName::GoldenHouse => Ok(golden_house()),
            FamilyName::KT => k_t(self.get("t")),
            FamilyName::RegularKgon => regular_kgon(self.get_count("k")?),
            FamilyName::SCap => s_cap(self.get("s")),
            FamilyName::KMin => k_min(self.get("s")),
            FamilyName::KMax => k_max(self.get("s")),
            FamilyName::KRho => k_rho(self.get("rho1"), self.get("rho2")),
            FamilyName::Interpolate => interpolate(self.get("s"), self.get("t")),
            FamilyName::Hood => Ok(hood(self.get_count("m")?)?.0),
            FamilyName::CLambda => Ok(c_lambda(&k_max(self.get("s"))?, self.get("lambda"))?.into_body()),
        }
    }
}

impl fmt::Display for FamilySpec {
    /// `key=value` pairs joined by `;`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}", parts.join(";"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauges::minkowski_asymmetry;
    use crate::symm::{alpha, alpha_tau, crossing_count};

    fn s_of(k: &ConvexPolygon) -> f64 {
        minkowski_asymmetry(k).unwrap().s
    }

    #[test]
    fn triangle_and_house() {
        let t = triangle();
        assert!((s_of(&t) - 2.0).abs() < 1e-12);
        assert!((alpha(&t).unwrap() - 2.0 / 3.0).abs() < 1e-12);
        let c = t.vertices().iter().fold(Vec2::ZERO, |a, v| a + *v);
        assert!(c.norm() < 1e-15);
        let gh = golden_house();
        assert_eq!(gh.len(), 5);
        let a = minkowski_asymmetry(&gh).unwrap();
        assert!((a.s - PHI).abs() < 1e-9);
        assert!(a.center.norm() < 1e-9);
        assert!((alpha(&gh).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn k_t_family() {
        let k0 = k_t(0.0).unwrap();
        assert!((s_of(&k0) - 1.0).abs() < 1e-12);
        let k1 = k_t(1.0).unwrap();
        let a = minkowski_asymmetry(&k1).unwrap();
        assert!((a.s - 1.5).abs() < 1e-12);
        assert!(a.center.norm() < 1e-9);
        for t in [0.0, 0.5, 1.0, 1.5] {
            assert!((alpha(&k_t(t).unwrap()).unwrap() - 1.0).abs() < 1e-9, "t = {t}");
        }
        assert!(k_t(PHI).is_err());
        let cs = crossing_count(&k1);
        assert_eq!(cs.segments.len(), 2);
    }

    #[test]
    fn regular_polygons() {
        for (k, s) in [(5, 1.236_067_977_499_79), (7, 1.109_916_264_174_743)] {
            let p = regular_kgon(k).unwrap();
            assert!((s_of(&p) - s).abs() < 1e-9);
            assert!((s - 1.0 / (PI / k as f64).cos()).abs() < 1e-12);
        }
        assert_eq!(crossing_count(&regular_kgon(5).unwrap()).points.len(), 10);
        assert!(regular_kgon(6).is_err());
        assert!(regular_kgon(3).is_err());
    }

    #[test]
    fn triangle_caps() {
        let hex = s_cap(1.0).unwrap();
        assert_eq!(hex.len(), 6);
        assert!((s_of(&hex) - 1.0).abs() < 1e-12);
        let t = s_cap(2.0).unwrap();
        assert_eq!(t.len(), 3);
        assert!((alpha(&t).unwrap() - 2.0 / 3.0).abs() < 1e-12);
        let k = s_cap(1.5).unwrap();
        assert!((alpha(&k).unwrap() - 0.8).abs() < 1e-12);
        assert!((s_of(&k) - 1.5).abs() < 1e-12);
        assert_eq!(crossing_count(&k).points.len(), 6);
        assert!(s_cap(2.5).is_err());
    }

    #[test]
    fn extremal_pair() {
        let km = k_max(2.0).unwrap();
        assert_eq!(km.len(), 3);
        assert!((alpha(&km).unwrap() - 2.0 / 3.0).abs() < 1e-12);
        let (lo, hi) = (k_min(1.9).unwrap(), k_max(1.9).unwrap());
        assert!(geom::contains(&hi, &lo, 1e-9));
        let want = 1.9 / (1.9 * 1.9 - 1.0);
        assert!((alpha(&lo).unwrap() - want).abs() < 1e-9);
        let (a, t) = alpha_tau(&hi).unwrap();
        assert!((a - want).abs() < 1e-9 && (t - want).abs() < 1e-9);
        assert!((s_of(&hi) - 1.9).abs() < 1e-9 && (s_of(&lo) - 1.9).abs() < 1e-9);
        assert!(k_min(1.5).is_err());
        assert_eq!(k_max(1.0).unwrap().len(), 4);
    }

    #[test]
    fn rho_family() {
        let k = k_rho(1.5, 0.72).unwrap();
        let a = minkowski_asymmetry(&k).unwrap();
        assert!(a.center.norm() < 1e-9);
        assert!((alpha(&k).unwrap() - 0.96).abs() < 1e-9);
        assert!(k_rho(1.5, 0.5).is_err());
        assert!((alpha(&k_rho(2.0, 1.0).unwrap()).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn interpolation_endpoints() {
        for s in [1.2, 1.6, 1.9] {
            let k0 = interpolate(s, 0.0).unwrap();
            assert!(geom::hausdorff(&k0, &s_cap(s).unwrap()) < 1e-12);
            assert!((alpha(&k0).unwrap() - 2.0 / (s + 1.0)).abs() < 1e-9);
            let k1 = interpolate(s, 1.0).unwrap();
            let want = (s / (s * s - 1.0)).min(1.0);
            assert!((alpha(&k1).unwrap() - want).abs() < 1e-9, "s = {s}");
        }
        for t in [0.0, 0.25, 0.5, 0.75, 1.0] {
            assert!((s_of(&interpolate(1.8, t).unwrap()) - 1.8).abs() < 1e-6);
        }
        let rect = interpolate(1.0, 1.0).unwrap();
        assert_eq!(rect.len(), 4);
        let h = 1.0 / (2.0 * 3f64.sqrt());
        for corner in [Vec2::new(-h, -0.5), Vec2::new(h, -0.5), Vec2::new(h, 0.5), Vec2::new(-h, 0.5)] {
            assert!(rect.vertices().iter().any(|v| v.dist(corner) < 1e-12));
        }
    }

    #[test]
    fn hood_constants() {
        let r = hood_radius();
        assert!((r - 0.793_580_425_5).abs() < 1e-9);
        let y = r + 1.0;
        assert!((y.powi(4) - 8.0 * y + 4.0).abs() < 1e-12);
        assert!(hood(32).is_err());
        let (h, disk) = hood(256).unwrap();
        assert!(disk.is_symmetric());
        assert!(h.len() > 100);
    }

    #[test]
    fn gauge_combinations() {
        let k = k_max(1.8).unwrap();
        let c0 = c_lambda(&k, 0.0).unwrap();
        let c1 = c_lambda(&k, 1.0).unwrap();
        let c5 = c_lambda(&k, 0.5).unwrap();
        assert!(c0.is_symmetric() && c1.is_symmetric() && c5.is_symmetric());
        // Support functions average, so C_1/2 sits between the meet and the join of the endpoints.
        let meet = geom::intersect(c0.body(), c1.body()).unwrap();
        let join = geom::hull_union(c0.body(), c1.body());
        assert!(geom::contains(&join, c5.body(), 1e-9));
        assert!(geom::contains(c5.body(), &meet, 1e-9));
        assert!(geom::hausdorff(c5.body(), c0.body()) > 1e-3);
        assert!(geom::hausdorff(c5.body(), c1.body()) > 1e-3);
        assert!(c_lambda(&k, 1.5).is_err());
    }

    #[test]
    fn spec_parsing() {
        let f = FamilySpec::parse("k_max", &["s=1.7".into()]).unwrap();
        assert_eq!(f.to_string(), "s=1.7");
        assert!((s_of(&f.build().unwrap()) - 1.7).abs() < 1e-9);
        assert!(FamilySpec::parse("nope", &[]).is_err());
        assert!(FamilySpec::parse("k_t", &["q=1".into()]).is_err());
        assert!(FamilySpec::parse("k_t", &["t".into()]).is_err());
        assert!(FamilySpec::parse("regular_kgon", &["k=5.5".into()]).unwrap().build().is_err());
    }
}
