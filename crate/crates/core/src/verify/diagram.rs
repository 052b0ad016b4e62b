//! Region diagrams: sample sweeps, analytic boundary curves, CSV and a minimal SVG.

use std::fmt::Write as _;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;

use super::{grid, DwEntry, SampleRecord};
use crate::complete;
use crate::error::{GeomError, Result};
use crate::families::{self, FamilyName, FamilySpec};
use crate::gauges;
use crate::symm;
use crate::tol::COMPLETENESS_TOL;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Alpha,
    Dw,
}

impl FromStr for Which {
    type Err = GeomError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alpha" => Ok(Which::Alpha),
            "dw" => Ok(Which::Dw),
            _ => Err(GeomError::Parse(format!("unknown diagram `{s}`, expected alpha or dw"))),
        }
    }
}

/// A named analytic boundary sampled on the diagram's s-range.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub name: &'static str,
    pub points: Vec<(f64, f64)>,
}

const CURVE_POINTS: usize = 101;

fn s_range(which: Which) -> (f64, f64) {
    match which {
        Which::Alpha => (1.0, 2.0),
        Which::Dw => (1.05, 2.0),
    }
}

fn y_range(which: Which) -> (f64, f64) {
    match which {
        Which::Alpha => (0.6, 1.05),
        Which::Dw => (0.95, 1.5),
    }
}

type Bound = fn(f64) -> f64;

/// Boundary curves of the region; empty for an empty grid.
pub fn curves(which: Which, grid_n: usize) -> Vec<Curve> {
    if grid_n == 0 {
        return Vec::new();
    }
    let (a, b) = s_range(which);
    let fs: Vec<(&str, Bound)> = match which {
        Which::Alpha => vec![
            ("2/(s+1)", |s| 2.0 / (s + 1.0)),
            ("min(1,s/(s^2-1))", |s| if s <= 1.0 { 1.0 } else { (s / (s * s - 1.0)).min(1.0) }),
        ],
        Which::Dw => vec![
            ("(s+1)/2", |s| (s + 1.0) / 2.0),
            ("s^2/(s^2-1)", |s| s * s / (s * s - 1.0)),
            ("s/(2(s-1))", |s| s / (2.0 * (s - 1.0))),
        ],
    };
    fs.into_iter()
        .map(|(name, f)| Curve {
            name,
            points: grid(a, b, CURVE_POINTS)
                .into_iter()
                .map(|s| (s, f(s)))
                .filter(|p| p.1.is_finite())
                .collect(),
        })
        .collect()
}

/// `interpolate(s, t)` over an `n x n` grid of `[1, 2] x [0, 1]`, in row-major order.
pub fn alpha_records(n: usize) -> Result<Vec<SampleRecord>> {
    let cases: Vec<(f64, f64)> = grid(1.0, 2.0, n)
        .into_iter()
        .flat_map(|s| grid(0.0, 1.0, n).into_iter().map(move |t| (s, t)))
        .collect();
    cases
        .par_iter()
        .map(|&(s, t)| {
            let spec = FamilySpec::new(FamilyName::Interpolate, &[("s".into(), s), ("t".into(), t)])?;
            let (k, res) = gauges::minkowski_centered(&spec.build()?)?;
            let (alpha, tau) = symm::alpha_tau(&k)?;
            Ok(SampleRecord {
                family: spec.name.as_str().into(),
                params: spec.to_string(),
                s: res.s,
                alpha,
                tau,
                crossings: symm::crossing_count(&k).encoded_count(),
                dw: None,
            })
        })
        .collect()
}

/// `k_max(s)` against `c_lambda` over an `n x n` grid of `[1.05, 2] x [0, 1]`.
pub fn dw_records(n: usize, tol: f64) -> Result<Vec<SampleRecord>> {
    let cases: Vec<(f64, f64)> = grid(1.05, 2.0, n)
        .into_iter()
        .flat_map(|s| grid(0.0, 1.0, n).into_iter().map(move |l| (s, l)))
        .collect();
    cases
        .par_iter()
        .map(|&(s, lambda)| {
            let spec = FamilySpec::new(FamilyName::KMax, &[("s".into(), s)])?;
            let k = spec.build()?;
            let c = families::c_lambda(&k, lambda)?;
            let rep = complete::report(&k, &c, tol)?;
            let (alpha, tau) = symm::alpha_tau(&k)?;
            Ok(SampleRecord {
                family: spec.name.as_str().into(),
                params: spec.to_string(),
                s: rep.asymmetry,
                alpha,
                tau,
                crossings: symm::crossing_count(&k).encoded_count(),
                dw: Some(vec![DwEntry {
                    gauge: format!("c_lambda lambda={lambda}"),
                    diameter: rep.diameter,
                    width: rep.width,
                    inradius: rep.inradius,
                    circumradius: rep.circumradius,
                    pseudo_complete: rep.pseudo_complete,
                    complete: rep.complete,
                }]),
            })
        })
        .collect()
}

pub fn records(which: Which, n: usize) -> Result<Vec<SampleRecord>> {
    match which {
        Which::Alpha => alpha_records(n),
        Which::Dw => dw_records(n, COMPLETENESS_TOL),
    }
}

/// Ordinate plotted for a record.
pub fn ordinate(which: Which, r: &SampleRecord) -> f64 {
    match (which, &r.dw) {
        (Which::Dw, Some(entries)) => entries.first().map_or(f64::NAN, |e| e.diameter / e.width),
        _ => r.alpha,
    }
}

const ALPHA_HEADER: [&str; 6] = ["family", "params", "s", "alpha", "tau", "crossings"];
const DW_HEADER: [&str; 11] = [
    "family",
    "params",
    "gauge",
    "s",
    "D",
    "w",
    "r",
    "R",
    "dw_ratio",
    "pseudo_complete",
    "complete",
];

fn csv_err(e: csv::Error) -> GeomError {
    GeomError::Io(e.to_string())
}

/// Sample rows followed by curve rows (family `curve`, params = curve name).
pub fn write_csv<W: Write>(which: Which, recs: &[SampleRecord], curves: &[Curve], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    match which {
        Which::Alpha => {
            w.write_record(ALPHA_HEADER).map_err(csv_err)?;
            for r in recs {
                w.write_record([
                    r.family.clone(),
                    r.params.clone(),
                    r.s.to_string(),
                    r.alpha.to_string(),
                    r.tau.to_string(),
                    r.crossings.to_string(),
                ])
                .map_err(csv_err)?;
            }
            for c in curves {
                for (s, v) in &c.points {
                    w.write_record(["curve", c.name, &s.to_string(), &v.to_string(), "", ""])
                        .map_err(csv_err)?;
                }
            }
        }
        Which::Dw => {
            w.write_record(DW_HEADER).map_err(csv_err)?;
            for r in recs {
                for e in r.dw.iter().flatten() {
                    w.write_record([
                        r.family.clone(),
                        r.params.clone(),
                        e.gauge.clone(),
                        r.s.to_string(),
                        e.diameter.to_string(),
                        e.width.to_string(),
                        e.inradius.to_string(),
                        e.circumradius.to_string(),
                        (e.diameter / e.width).to_string(),
                        e.pseudo_complete.to_string(),
                        e.complete.to_string(),
                    ])
                    .map_err(csv_err)?;
                }
            }
            for c in curves {
                for (s, v) in &c.points {
                    let (s, v) = (s.to_string(), v.to_string());
                    w.write_record(["curve", c.name, "", &s, "", "", "", "", &v, "", ""])
                        .map_err(csv_err)?;
                }
            }
        }
    }
    w.flush()?;
    Ok(())
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 60.0;
const COLORS: [&str; 3] = ["#1f5fbf", "#2e8b3a", "#c0392b"];

/// Scatter of the samples with the curves as polylines, clipped to the plot box.
pub fn svg(which: Which, recs: &[SampleRecord], curves: &[Curve]) -> String {
    let (x0, x1) = s_range(which);
    let (y0, y1) = y_range(which);
    let px = |s: f64| MARGIN + (s - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);
    let py = |v: f64| HEIGHT - MARGIN - (v - y0) / (y1 - y0) * (HEIGHT - 2.0 * MARGIN);
    let ylabel = match which {
        Which::Alpha => "alpha",
        Which::Dw => "D/w",
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<defs><clipPath id="plot"><rect x="{MARGIN}" y="{MARGIN}" width="{}" height="{}"/></clipPath></defs>"#,
        WIDTH - 2.0 * MARGIN,
        HEIGHT - 2.0 * MARGIN
    );
    let (bx, by) = (MARGIN, HEIGHT - MARGIN);
    let _ = writeln!(
        out,
        r#"<polyline points="{bx},{MARGIN} {bx},{by} {},{by}" fill="none" stroke="black"/>"#,
        WIDTH - MARGIN
    );
    for s in grid(x0, x1, 6) {
        let x = px(s);
        let _ = writeln!(out, r#"<line x1="{x:.2}" y1="{by}" x2="{x:.2}" y2="{}" stroke="black"/>"#, by + 5.0);
        let _ = writeln!(
            out,
            r#"<text x="{x:.2}" y="{}" font-size="12" text-anchor="middle">{s:.2}</text>"#,
            by + 20.0
        );
    }
    for v in grid(y0, y1, 6) {
        let y = py(v);
        let _ = writeln!(out, r#"<line x1="{}" y1="{y:.2}" x2="{bx}" y2="{y:.2}" stroke="black"/>"#, bx - 5.0);
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{:.2}" font-size="12" text-anchor="end">{v:.2}</text>"#,
            bx - 8.0,
            y + 4.0
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" font-size="14" text-anchor="middle">s</text>"#,
        WIDTH / 2.0,
        HEIGHT - 15.0
    );
    let _ = writeln!(
        out,
        r#"<text x="18" y="{}" font-size="14" text-anchor="middle" transform="rotate(-90 18 {})">{ylabel}</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0
    );
    let _ = writeln!(out, r#"<g clip-path="url(#plot)">"#);
    for (i, c) in curves.iter().enumerate() {
        let pts: Vec<String> = c
            .points
            .iter()
            .map(|&(s, v)| format!("{:.2},{:.2}", px(s), py(v.min(y1 + 1.0))))
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline points="{}" fill="none" stroke="{}" stroke-width="2"><title>{}</title></polyline>"#,
            pts.join(" "),
            COLORS[i % COLORS.len()],
            c.name
        );
    }
    for r in recs {
        let v = ordinate(which, r);
        if v.is_finite() {
            let _ = writeln!(
                out,
                r##"<circle cx="{:.2}" cy="{:.2}" r="2" fill="#e0a800"/>"##,
                px(r.s),
                py(v)
            );
        }
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_grid_is_header_only() {
        let mut buf = Vec::new();
        write_csv(Which::Alpha, &records(Which::Alpha, 0).unwrap(), &curves(Which::Alpha, 0), &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "family,params,s,alpha,tau,crossings\n");
        let svg = svg(Which::Alpha, &[], &[]);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        assert!(!svg.contains("<circle"));
    }

    #[test]
    fn alpha_samples_lie_in_the_region() {
        for r in alpha_records(9).unwrap() {
            let s = r.s;
            let hi = if s <= 1.0 { 1.0 } else { (s / (s * s - 1.0)).min(1.0) };
            assert!(r.alpha >= 2.0 / (s + 1.0) - 1e-7 && r.alpha <= hi + 1e-7, "{r:?}");
        }
    }

    #[test]
    fn dw_maximum_near_golden_ratio() {
        let recs = dw_records(21, COMPLETENESS_TOL).unwrap();
        let best = recs
            .iter()
            .max_by(|a, b| ordinate(Which::Dw, a).total_cmp(&ordinate(Which::Dw, b)))
            .unwrap();
        assert!((ordinate(Which::Dw, best) - (families::PHI + 1.0) / 2.0).abs() < 0.01);
        assert!((best.s - families::PHI).abs() < 0.05);
    }

    #[test]
    fn csv_is_deterministic() {
        let write = || {
            let mut buf = Vec::new();
            write_csv(Which::Alpha, &alpha_records(6).unwrap(), &curves(Which::Alpha, 6), &mut buf).unwrap();
            buf
        };
        assert_eq!(write(), write());
    }
}
