use rand::Rng;
use rayon::prelude::*;

use super::sample::{random_bodies, random_linear_map, random_symmetric_gauge, sample_rng};
use super::{grid, BodyRef, Log, Suite, VerifyConfig, VerifySummary};
use crate::complete::{self, euclidean_dw_bound, tilde_s, tilde_s_by_bisection};
use crate::error::Result;
use crate::families::{self, FamilyName, FamilySpec, PHI};
use crate::gauges;
use crate::geom::{self, ConvexPolygon, GaugeBody};
use crate::symm;
use crate::tol::{COMPLETENESS_TOL, COMPLETENESS_TOL_APPROX};

const BOUND_TOL: f64 = 1e-7;
const DW_TOL: f64 = 1e-6;
const MAPS_PER_BODY: usize = 50;
/// Absolute cap on `D/w` for pseudo-complete planar pairs: `(tilde_s + 1)/2` rounded up.
const DW_ABSOLUTE_CAP: f64 = 1.4197;

/// Runs one suite (or all of them) and collects every check.
pub fn run(suite: Suite, cfg: &VerifyConfig) -> VerifySummary {
    let mut log = Log::default();
    match suite {
        Suite::AlphaRegion => log.merge(alpha_region(cfg)),
        Suite::Crossings => log.merge(crossings(cfg)),
        Suite::DwPseudo => log.merge(dw_pseudo(cfg)),
        Suite::DwEuclidean => log.merge(dw_euclidean(cfg)),
        Suite::Families => log.merge(families_suite(cfg)),
        Suite::All => {
            for s in [
                Suite::AlphaRegion,
                Suite::Crossings,
                Suite::DwPseudo,
                Suite::DwEuclidean,
                Suite::Families,
            ] {
                log.merge(run(s, cfg).into_log());
            }
        }
    }
    log.into_summary(suite)
}

impl VerifySummary {
    fn into_log(self) -> Log {
        Log {
            checks: self.checks,
            failures: self.failures,
            notes: self.notes,
        }
    }
}

fn spec(name: FamilyName, params: &[(&str, f64)]) -> FamilySpec {
    let given: Vec<(String, f64)> = params.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    FamilySpec::new(name, &given).expect("known parameter keys")
}

/// Compact `{"vertices": ...}` for an inline `--gauge` argument.
pub fn inline_polygon(p: &ConvexPolygon) -> String {
    let v: Vec<[f64; 2]> = p.vertices().iter().map(|v| [v.x, v.y]).collect();
    format!("{{\"vertices\":{}}}", serde_json::to_string(&v).expect("finite coordinates"))
}

fn family_label(spec: &FamilySpec) -> String {
    let mut out = format!("--family {}", spec.name.as_str());
    for (k, v) in &spec.params {
        out.push_str(&format!(" --param {k}={v}"));
    }
    out
}

/// Builds a family member and moves it to its Minkowski center.
fn centered_family(spec: &FamilySpec) -> Result<(ConvexPolygon, f64)> {
    let (k, res) = gauges::minkowski_centered(&spec.build()?)?;
    Ok((k, res.s))
}

fn random_cases(cfg: &VerifyConfig) -> Vec<(BodyRef, ConvexPolygon)> {
    random_bodies(cfg.samples, cfg.seed)
        .into_iter()
        .enumerate()
        .map(|(i, k)| (BodyRef::random(cfg.seed, i, &k), k))
        .collect()
}

fn interpolate_grid() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for s in grid(1.0, 2.0, 21) {
        for t in grid(0.0, 1.0, 21) {
            out.push(spec(FamilyName::Interpolate, &[("s", s), ("t", t)]));
        }
    }
    out
}

fn merge_all(logs: Vec<Log>) -> Log {
    let mut log = Log::default();
    for l in logs {
        log.merge(l);
    }
    log
}

fn alpha_upper(s: f64) -> f64 {
    if s <= 1.0 {
        1.0
    } else {
        (s / (s * s - 1.0)).min(1.0)
    }
}

fn alpha_lower(s: f64) -> f64 {
    2.0 / (s + 1.0)
}

/// Region bounds, the tau/alpha relations, touching points and the golden-house consequence.
fn alpha_invariants(log: &mut Log, body: &BodyRef, k: &ConvexPolygon, s: f64) -> Option<(f64, f64)> {
    let (a, t) = match symm::alpha_tau(k) {
        Ok(v) => v,
        Err(e) => {
            log.error(body, "alpha/tau", &e);
            return None;
        }
    };
    log.ge(body, "alpha lower bound 2/(s+1)", a, alpha_lower(s), BOUND_TOL);
    log.le(body, "alpha upper bound min{1, s/(s^2-1)}", a, alpha_upper(s), BOUND_TOL);
    log.le(body, "tau <= 2s/(s+1) alpha", t, 2.0 * s / (s + 1.0) * a, BOUND_TOL);
    let a1 = a >= 1.0 - BOUND_TOL;
    let t1 = t >= 1.0 - BOUND_TOL;
    let p = symm::has_antipodal_parallel_support(k);
    log.holds(body, &format!("alpha=1 <=> tau=1 <=> antipodal support ({a1}, {t1}, {p})"), a1 == t1 && t1 == p);
    if a1 {
        log.le(body, "alpha = 1 forces s <= phi", s, PHI, 1e-6);
    }
    if let Err(e) = symm::classify_touching_points(k) {
        log.error(body, "touching classification", &e);
    }
    Some((a, t))
}

fn linear_invariance(log: &mut Log, body: &BodyRef, k: &ConvexPolygon, at: (f64, f64), seed: u64, index: u64) {
    let mut rng = sample_rng(seed ^ 0x5eed_0f11, index);
    for _ in 0..MAPS_PER_BODY {
        let m = random_linear_map(&mut rng);
        let lk = match k.linear_map(&m) {
            Ok(v) => v,
            Err(e) => return log.error(body, "linear map", &e),
        };
        match symm::alpha_tau(&lk) {
            Ok((a, t)) => {
                log.near(body, "alpha under a linear map", a, at.0, BOUND_TOL);
                log.near(body, "tau under a linear map", t, at.1, BOUND_TOL);
            }
            Err(e) => log.error(body, "alpha/tau of mapped body", &e),
        }
    }
}

fn radii_chain(log: &mut Log, body: &BodyRef, k: &ConvexPolygon, c: &GaugeBody, s: f64) {
    let radii = (|| -> Result<[f64; 4]> {
        Ok([
            gauges::inradius(k, c)?.scale,
            gauges::circumradius(k, c)?.scale,
            gauges::diameter(k, c)?.0,
            gauges::width(k, c)?.0,
        ])
    })();
    let [r, big_r, d, w] = match radii {
        Ok(v) => v,
        Err(e) => return log.error(body, "radii", &e),
    };
    let chain = [
        ("w/2", w / 2.0),
        ("(s+1)r/2", (s + 1.0) * r / 2.0),
        ("(r+R)/2", (r + big_r) / 2.0),
        ("(s+1)R/(2s)", (s + 1.0) * big_r / (2.0 * s)),
        ("D/2", d / 2.0),
    ];
    let tol = BOUND_TOL * d.max(1.0);
    for pair in chain.windows(2) {
        log.le(body, &format!("radii chain {} <= {}", pair[0].0, pair[1].0), pair[0].1, pair[1].1, tol);
    }
}

fn alpha_region(cfg: &VerifyConfig) -> Log {
    let random = random_cases(cfg);
    let logs: Vec<Log> = random
        .par_iter()
        .enumerate()
        .map(|(i, (body, k))| {
            let mut log = Log::default();
            let s = match gauges::minkowski_asymmetry(k) {
                Ok(r) => r.s,
                Err(e) => {
                    log.error(body, "asymmetry", &e);
                    return log;
                }
            };
            if let Some(at) = alpha_invariants(&mut log, body, k, s) {
                linear_invariance(&mut log, body, k, at, cfg.seed, i as u64);
                match symm::alpha_tau_by_lp(k) {
                    Ok((a, t)) => {
                        log.near(body, "alpha by LP circumradius", a, at.0, 1e-9);
                        log.near(body, "tau by LP circumradius", t, at.1, 1e-9);
                    }
                    Err(e) => log.error(body, "alpha/tau by LP", &e),
                }
            }
            let c = random_symmetric_gauge(&mut sample_rng(cfg.seed ^ 0x6a06e, i as u64));
            let with_gauge = BodyRef::new(format!("{} --gauge '{}'", body.label, inline_polygon(c.body())), k);
            radii_chain(&mut log, &with_gauge, k, &c, s);
            log
        })
        .collect();
    let mut log = merge_all(logs);

    let specs = interpolate_grid();
    let results: Vec<(Log, Option<(f64, f64)>)> = specs
        .par_iter()
        .map(|sp| {
            let mut log = Log::default();
            let body_ref = |k: &ConvexPolygon| BodyRef::new(family_label(sp), k);
            match centered_family(sp) {
                Ok((k, s)) => {
                    let body = body_ref(&k);
                    let at = alpha_invariants(&mut log, &body, &k, s);
                    (log, at.map(|(a, _)| (s, a)))
                }
                Err(e) => {
                    log.error(&BodyRef { label: family_label(sp), vertices: vec![] }, "build", &e);
                    (log, None)
                }
            }
        })
        .collect();
    let mut by_s: Vec<(f64, Vec<f64>)> = Vec::new();
    for (sp, (l, sa)) in specs.iter().zip(results) {
        log.merge(l);
        if let Some((_, a)) = sa {
            let s = sp.params["s"];
            match by_s.last_mut() {
                Some((s0, v)) if *s0 == s => v.push(a),
                _ => by_s.push((s, vec![a])),
            }
        }
    }
    for (s, mut alphas) in by_s {
        alphas.push(alpha_lower(s));
        alphas.push(alpha_upper(s));
        alphas.sort_by(f64::total_cmp);
        let gap = alphas.windows(2).map(|w| w[1] - w[0]).fold(0.0, f64::max);
        let body = BodyRef {
            label: format!("--family interpolate --param s={s}"),
            vertices: vec![],
        };
        log.le(&body, "largest gap in sampled alpha range", gap, 0.05, 0.0);
    }
    log
}

/// Isolated points plus both endpoints of every shared segment.
pub fn crossing_points_with_endpoints(cs: &geom::CrossingSet) -> usize {
    cs.points.len() + 2 * cs.segments.len()
}

fn crossing_checks(log: &mut Log, body: &BodyRef, k: &ConvexPolygon, s: f64) {
    let cs = symm::crossing_count(k);
    if s >= PHI + 0.01 {
        log.near(body, "isolated crossings for s >= phi + 0.01", cs.points.len() as f64, 6.0, 0.0);
        log.holds(body, "no shared boundary segment for s >= phi + 0.01", !cs.has_overlap());
    }
    if s >= 1.01 {
        log.ge(body, "crossings for s >= 1.01", crossing_points_with_endpoints(&cs) as f64, 6.0, 0.0);
    }
}

fn crossing_family_grid() -> Vec<FamilySpec> {
    let mut out = interpolate_grid();
    for s in grid(1.0, 2.0, 11) {
        out.push(spec(FamilyName::SCap, &[("s", s)]));
        out.push(spec(FamilyName::KMax, &[("s", s)]));
    }
    for s in grid(PHI + 0.01, 2.0, 11) {
        out.push(spec(FamilyName::KMin, &[("s", s)]));
    }
    for t in grid(0.0, PHI - 0.01, 11) {
        out.push(spec(FamilyName::KT, &[("t", t)]));
    }
    for (rho1, rho2) in k_rho_points() {
        out.push(spec(FamilyName::KRho, &[("rho1", rho1), ("rho2", rho2)]));
    }
    out.push(spec(FamilyName::Triangle, &[]));
    out.push(spec(FamilyName::GoldenHouse, &[]));
    out
}

fn crossings(cfg: &VerifyConfig) -> Log {
    let random = random_cases(cfg);
    let mut log = merge_all(
        random
            .par_iter()
            .map(|(body, k)| {
                let mut log = Log::default();
                match gauges::minkowski_asymmetry(k) {
                    Ok(r) => crossing_checks(&mut log, body, k, r.s),
                    Err(e) => log.error(body, "asymmetry", &e),
                }
                log
            })
            .collect(),
    );
    let specs = crossing_family_grid();
    log.merge(merge_all(
        specs
            .par_iter()
            .map(|sp| {
                let mut log = Log::default();
                match centered_family(sp) {
                    Ok((k, s)) => crossing_checks(&mut log, &BodyRef::new(family_label(sp), &k), &k, s),
                    Err(e) => log.error(&BodyRef { label: family_label(sp), vertices: vec![] }, "build", &e),
                }
                log
            })
            .collect(),
    ));
    for k in [5usize, 7, 9] {
        let sp = spec(FamilyName::RegularKgon, &[("k", k as f64)]);
        match centered_family(&sp) {
            Ok((p, _)) => {
                let body = BodyRef::new(family_label(&sp), &p);
                let cs = symm::crossing_count(&p);
                log.near(&body, "crossings of an odd regular polygon", cs.points.len() as f64, 2.0 * k as f64, 0.0);
                log.holds(&body, "no shared segment", !cs.has_overlap());
            }
            Err(e) => log.error(&BodyRef { label: family_label(&sp), vertices: vec![] }, "build", &e),
        }
    }
    log
}

fn dw_upper(s: f64) -> f64 {
    let second = if s > 1.0 { s * s / (s * s - 1.0) } else { f64::INFINITY };
    ((s + 1.0) / 2.0).min(second)
}

/// Upper end of the `C_lambda` sweep for `K = k_max(s)`.
pub fn dw_sweep_upper(s: f64) -> f64 {
    let second = if s > 1.0 { s / (2.0 * (s - 1.0)) } else { f64::INFINITY };
    ((s + 1.0) / 2.0).min(second)
}

/// Pseudo-completeness consequences for one pair; returns `D/w` when pseudo-complete.
fn dw_checks(log: &mut Log, body: &BodyRef, k: &ConvexPolygon, c: &GaugeBody, tol: f64, expect_pc: bool) -> Option<f64> {
    let rep = match complete::report(k, c, tol) {
        Ok(r) => r,
        Err(e) => {
            log.error(body, "completeness report", &e);
            return None;
        }
    };
    if expect_pc {
        log.holds(body, "pseudo-complete", rep.pseudo_complete);
    }
    if rep.complete {
        log.near(body, "D/w of a complete body", rep.dw_ratio, 1.0, DW_TOL);
    }
    if rep.constant_width {
        log.near(body, "D = w for constant width", rep.width, rep.diameter, tol * rep.diameter);
    }
    if !rep.pseudo_complete {
        return None;
    }
    let s = rep.asymmetry;
    log.le(body, "D/w <= (s+1)/2", rep.dw_ratio, (s + 1.0) / 2.0, DW_TOL);
    log.le(body, "D/w <= min{(s+1)/2, s^2/(s^2-1)}", rep.dw_ratio, dw_upper(s), DW_TOL);
    log.le(body, "D/w absolute cap", rep.dw_ratio, DW_ABSOLUTE_CAP, 0.0);
    Some(rep.dw_ratio)
}

fn dw_pseudo(cfg: &VerifyConfig) -> Log {
    let tol = cfg.tol.unwrap_or(COMPLETENESS_TOL);
    let mut cases = Vec::new();
    for s in grid(1.05, 2.0, 21) {
        for lambda in grid(0.0, 1.0, 11) {
            cases.push((s, lambda));
        }
    }
    let results: Vec<(Log, Option<f64>)> = cases
        .par_iter()
        .map(|&(s, lambda)| {
            let mut log = Log::default();
            let sp = spec(FamilyName::KMax, &[("s", s)]);
            let label = format!("{} --gauge c_lambda --gauge-param lambda={lambda}", family_label(&sp));
            let out = (|| -> Result<_> {
                let k = families::k_max(s)?;
                let c = families::c_lambda(&k, lambda)?;
                Ok((k, c))
            })();
            match out {
                Ok((k, c)) => {
                    let dw = dw_checks(&mut log, &BodyRef::new(label, &k), &k, &c, tol, true);
                    (log, dw)
                }
                Err(e) => {
                    log.error(&BodyRef { label, vertices: vec![] }, "build", &e);
                    (log, None)
                }
            }
        })
        .collect();
    let mut log = Log::default();
    let mut best = (f64::NEG_INFINITY, 0.0);
    for (&(s, _), (l, dw)) in cases.iter().zip(results) {
        log.merge(l);
        if let Some(dw) = dw {
            if dw > best.0 {
                best = (dw, s);
            }
        }
    }
    let grid_ref = BodyRef {
        label: "--family k_max with C_lambda grid".into(),
        vertices: vec![],
    };
    log.near(&grid_ref, "maximum D/w over the grid", best.0, (PHI + 1.0) / 2.0, 0.01);
    log.near(&grid_ref, "s at the maximum D/w", best.1, PHI, 0.05);
    log.note(format!("maximum D/w over the k_max/C_lambda grid: {} at s = {}", best.0, best.1));

    for s in [1.2, 1.5, PHI, 1.8, 2.0] {
        log.merge(lambda_sweep(s));
    }
    log.merge(s_cap_completeness(tol));

    let random = random_cases(cfg);
    log.merge(merge_all(
        random
            .par_iter()
            .enumerate()
            .map(|(i, (body, k))| {
                let mut log = Log::default();
                let mut rng = sample_rng(cfg.seed ^ 0xd1a, i as u64);
                let lambda: f64 = rng.random_range(0.0..=1.0);
                match families::c_lambda(k, lambda) {
                    Ok(c) => {
                        let body = BodyRef::new(format!("{} --gauge c_lambda --gauge-param lambda={lambda}", body.label), k);
                        dw_checks(&mut log, &body, k, &c, tol, false);
                    }
                    Err(e) => log.error(body, "c_lambda", &e),
                }
                let c = random_symmetric_gauge(&mut rng);
                let body = BodyRef::new(format!("{} --gauge '{}'", body.label, inline_polygon(c.body())), k);
                dw_checks(&mut log, &body, k, &c, tol, false);
                log
            })
            .collect(),
    ));
    log
}

/// `D/w` over 51 values of lambda covers `[1, dw_sweep_upper(s)]` without large gaps.
fn lambda_sweep(s: f64) -> Log {
    let mut log = Log::default();
    let sp = spec(FamilyName::KMax, &[("s", s)]);
    let body = BodyRef {
        label: format!("{} --gauge c_lambda (51 values)", family_label(&sp)),
        vertices: vec![],
    };
    let k = match families::k_max(s) {
        Ok(k) => k,
        Err(e) => {
            log.error(&body, "build", &e);
            return log;
        }
    };
    let mut values = Vec::new();
    for lambda in grid(0.0, 1.0, 51) {
        match families::c_lambda(&k, lambda).and_then(|c| complete::dw_ratio(&k, &c)) {
            Ok(v) => values.push(v),
            Err(e) => log.error(&body, "dw_ratio", &e),
        }
    }
    let hi = dw_sweep_upper(s);
    values.sort_by(f64::total_cmp);
    if let (Some(&lo_v), Some(&hi_v)) = (values.first(), values.last()) {
        log.near(&body, "smallest D/w of the sweep", lo_v, 1.0, 1e-9);
        log.near(&body, "largest D/w of the sweep", hi_v, hi, 1e-6);
    }
    let gap = values.windows(2).map(|w| w[1] - w[0]).fold(0.0, f64::max);
    log.le(&body, "largest gap in the D/w sweep", gap, 0.02, 0.0);
    log
}


fn s_cap_completeness(tol: f64) -> Log {
    let mut log = Log::default();
    let c = match families::triangle_core() {
        Ok(c) => c,
        Err(e) => {
            log.error(&BodyRef { label: "S ∩ (-S)".into(), vertices: vec![] }, "gauge", &e);
            return log;
        }
    };
    for s in [1.2, 1.5, 2.0] {
        let sp = spec(FamilyName::SCap, &[("s", s)]);
        let label = format!("{} --gauge triangle_core", family_label(&sp));
        let k = match families::s_cap(s) {
            Ok(k) => k,
            Err(e) => {
                log.error(&BodyRef { label, vertices: vec![] }, "build", &e);
                continue;
            }
        };
        let body = BodyRef::new(label, &k);
        match complete::report(&k, &c, tol) {
            Ok(rep) => {
                log.holds(&body, "complete", rep.complete);
                log.near(&body, "D = s + 1", rep.diameter, s + 1.0, 1e-9);
                if rep.complete {
                    log.near(&body, "D/w of a complete body", rep.dw_ratio, 1.0, DW_TOL);
                }
                log.note(format!(
                    "s_cap(s={s}) w.r.t. S ∩ (-S): constant width = {}, D/w = {}",
                    rep.constant_width, rep.dw_ratio
                ));
            }
            Err(e) => log.error(&body, "completeness report", &e),
        }
    }
    log
}

fn dw_euclidean(cfg: &VerifyConfig) -> Log {
    let mut log = Log::default();
    let tol = cfg.tol.unwrap_or(COMPLETENESS_TOL_APPROX);
    let m = 4096;
    let sp = spec(FamilyName::Hood, &[("m", m as f64)]);
    let label = format!("{} --gauge disk --gauge-param m={m}", family_label(&sp));
    let (h, disk) = match families::hood(m) {
        Ok(v) => v,
        Err(e) => {
            log.error(&BodyRef { label, vertices: vec![] }, "build", &e);
            return log;
        }
    };
    let body = BodyRef::new(label, &h);
    let r = families::hood_radius();
    match complete::report(&h, &disk, tol) {
        Ok(rep) => {
            log.holds(&body, "hood is pseudo-complete", rep.pseudo_complete);
            log.holds(&body, "hood is not of constant width", !rep.constant_width);
            log.near(&body, "inradius", rep.inradius, r, 1e-3);
            log.near(&body, "circumradius", rep.circumradius, 1.0, 1e-3);
            log.near(&body, "diameter = r + 1", rep.diameter, r + 1.0, 1e-3);
            log.near(&body, "width = 2r", rep.width, 2.0 * r, 1e-3);
            log.near(&body, "asymmetry = 1/r", rep.asymmetry, 1.0 / r, 1e-3);
            log.near(&body, "D/w = (1+r)/(2r)", rep.dw_ratio, (1.0 + r) / (2.0 * r), 1e-3);
            match euclidean_dw_bound(rep.diameter) {
                Ok(b) => log.near(&body, "hood attains the euclidean D/w bound", rep.dw_ratio, b, 1e-3),
                Err(e) => log.error(&body, "euclidean_dw_bound", &e),
            }
            log.note(format!(
                "hood m={m}: r = {}, R = {}, D = {}, w = {}, D/w = {}, (s+1)/2 = {}",
                rep.inradius,
                rep.circumradius,
                rep.diameter,
                rep.width,
                rep.dw_ratio,
                (rep.asymmetry + 1.0) / 2.0
            ));
        }
        Err(e) => log.error(&body, "completeness report", &e),
    }
    let (inc, dec) = bound_monotonicity(3f64.sqrt(), 1.0 + r, 100);
    log.note(format!(
        "euclidean_dw_bound on [sqrt(3), 1 + r] at 100 points: increasing = {inc}, decreasing = {dec}"
    ));
    log
}

/// Whether `euclidean_dw_bound` is non-decreasing / non-increasing over `n` samples of `[a, b]`.
pub fn bound_monotonicity(a: f64, b: f64, n: usize) -> (bool, bool) {
    let v: Vec<f64> = grid(a, b, n)
        .into_iter()
        .filter_map(|d| euclidean_dw_bound(d).ok())
        .collect();
    let inc = v.len() == n && v.windows(2).all(|w| w[1] >= w[0]);
    let dec = v.len() == n && v.windows(2).all(|w| w[1] <= w[0]);
    (inc, dec)
}

/// Twenty interior points of the `K_{rho1,rho2}` parameter domain.
pub fn k_rho_points() -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for rho1 in [1.1, 1.3, 1.5, 1.7, 1.9] {
        let (lo, hi) = families::k_rho_bounds(rho1);
        for f in [0.0, 0.3, 0.6, 0.9] {
            out.push((rho1, lo + f * (hi - lo)));
        }
    }
    out
}

/// Which closed form matches `alpha(K_{rho1,rho2})` at every sampled point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KRhoForm {
    /// `rho1 / (2 rho2)`
    Ratio,
    /// `2 rho2 / rho1`
    Inverse,
}

impl KRhoForm {
    pub fn as_str(self) -> &'static str {
        match self {
            KRhoForm::Ratio => "rho1/(2 rho2)",
            KRhoForm::Inverse => "2 rho2/rho1",
        }
    }
}

/// (rho1, rho2, alpha).
pub type KRhoSample = (f64, f64, f64);

/// Matches each point to a form; `Ok(None)` if some point matches neither or both,
/// or different points match different forms.
pub fn k_rho_resolution() -> Result<(Option<KRhoForm>, Vec<KRhoSample>)> {
    let mut forms = Vec::new();
    let mut rows = Vec::new();
    for (rho1, rho2) in k_rho_points() {
        let (k, _) = gauges::minkowski_centered(&families::k_rho(rho1, rho2)?)?;
        let a = symm::alpha(&k)?;
        rows.push((rho1, rho2, a));
        let ratio = ((a - rho1 / (2.0 * rho2)).abs() <= BOUND_TOL, KRhoForm::Ratio);
        let inverse = ((a - 2.0 * rho2 / rho1).abs() <= BOUND_TOL, KRhoForm::Inverse);
        forms.push(match (ratio.0, inverse.0) {
            (true, false) => Some(ratio.1),
            (false, true) => Some(inverse.1),
            _ => None,
        });
    }
    let first = forms.first().copied().flatten();
    let same = forms.iter().all(|f| *f == first);
    Ok((if same { first } else { None }, rows))
}

fn families_suite(_cfg: &VerifyConfig) -> Log {
    let mut log = Log::default();
    let fam = |name, params: &[(&str, f64)]| spec(name, params);
    let constants: Vec<(FamilySpec, Option<f64>, Option<f64>)> = vec![
        (fam(FamilyName::Triangle, &[]), Some(2.0), Some(2.0 / 3.0)),
        (fam(FamilyName::GoldenHouse, &[]), Some(PHI), Some(1.0)),
        (fam(FamilyName::KT, &[("t", 1.0)]), Some(1.5), Some(1.0)),
        (
            fam(FamilyName::RegularKgon, &[("k", 5.0)]),
            Some(1.0 / (std::f64::consts::PI / 5.0).cos()),
            None,
        ),
        (fam(FamilyName::KMax, &[("s", 1.9)]), Some(1.9), Some(1.9 / (1.9 * 1.9 - 1.0))),
        (fam(FamilyName::KRho, &[("rho1", 1.5), ("rho2", 0.72)]), None, Some(0.96)),
    ];
    for (sp, s_exp, a_exp) in constants {
        match centered_family(&sp) {
            Ok((k, s)) => {
                let body = BodyRef::new(family_label(&sp), &k);
                if let Some(e) = s_exp {
                    log.near(&body, "asymmetry", s, e, 1e-9);
                }
                if let Some(e) = a_exp {
                    match symm::alpha(&k) {
                        Ok(a) => log.near(&body, "alpha", a, e, 1e-9),
                        Err(err) => log.error(&body, "alpha", &err),
                    }
                }
            }
            Err(e) => log.error(&BodyRef { label: family_label(&sp), vertices: vec![] }, "build", &e),
        }
    }

    let consts = BodyRef { label: "constants".into(), vertices: vec![] };
    let ts = tilde_s();
    log.near(&consts, "tilde_s", ts, 1.839_286_755_214_161, 1e-9);
    log.near(&consts, "tilde_s by bisection", tilde_s_by_bisection(), ts, 1e-10);
    log.ge(&consts, "(tilde_s + 1)/2 lower", (ts + 1.0) / 2.0, 1.4196, 0.0);
    log.le(&consts, "(tilde_s + 1)/2 upper", (ts + 1.0) / 2.0, 1.4197, 0.0);

    for s in [1.65, 1.7, 1.8393, 1.9, 2.0] {
        log.merge(sandwich(s));
    }

    let house = fam(FamilyName::GoldenHouse, &[]);
    for sp in [fam(FamilyName::Triangle, &[]), house] {
        if let Ok((k, _)) = centered_family(&sp) {
            let body = BodyRef::new(family_label(&sp), &k);
            match gauges::well_spread_triple(&k) {
                Ok((_, normals)) => {
                    log.le(&body, "origin distance to the hull of the triple's normals", gauges::origin_hull_distance(&normals), 0.0, 1e-7)
                }
                Err(e) => log.error(&body, "well-spread triple", &e),
            }
        }
    }

    let rho_ref = BodyRef { label: "--family k_rho (20 points)".into(), vertices: vec![] };
    match k_rho_resolution() {
        Ok((form, _)) => {
            log.holds(&rho_ref, "one closed form matches alpha(K_rho) everywhere", form.is_some());
            if let Some(f) = form {
                log.note(format!("alpha(K_rho1,rho2) matches {} at all 20 points", f.as_str()));
            }
        }
        Err(e) => log.error(&rho_ref, "k_rho resolution", &e),
    }
    log
}

fn sandwich(s: f64) -> Log {
    let mut log = Log::default();
    let sp = spec(FamilyName::KMax, &[("s", s)]);
    let body = BodyRef {
        label: format!("{} with --family k_min --param s={s}", family_label(&sp)),
        vertices: vec![],
    };
    let out = (|| -> Result<_> {
        let kmin = families::k_min(s)?;
        let kmax = families::k_max(s)?;
        let a_min = symm::alpha(&kmin)?;
        let (a_max, t_max) = symm::alpha_tau(&kmax)?;
        Ok((geom::contains(&kmax, &kmin, 1e-9), a_min, a_max, t_max))
    })();
    match out {
        Ok((inside, a_min, a_max, t_max)) => {
            let e = s / (s * s - 1.0);
            log.holds(&body, "k_min inside k_max", inside);
            log.near(&body, "alpha(k_min) = s/(s^2-1)", a_min, e, BOUND_TOL);
            log.near(&body, "alpha(k_max) = s/(s^2-1)", a_max, e, BOUND_TOL);
            log.near(&body, "tau(k_max) = s/(s^2-1)", t_max, e, BOUND_TOL);
        }
        Err(e) => log.error(&body, "sandwich", &e),
    }
    log
}
