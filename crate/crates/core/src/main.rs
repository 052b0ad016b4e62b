use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use minkasym::complete;
use minkasym::families::{self, FamilyName, FamilySpec};
use minkasym::gauges;
use minkasym::geom::{self, ConvexPolygon, GaugeBody};
use minkasym::symm;
use minkasym::tol::{COMPLETENESS_TOL, COMPLETENESS_TOL_APPROX, TOL_ENV_VAR};
use minkasym::verify::diagram::{self, Which};
use minkasym::verify::{self, sample, Suite, VerifyConfig};
use minkasym::GeomError;

#[derive(Parser)]
#[command(name = "minkasym", version, about = "Minkowski asymmetry, symmetrization ratios and completeness of planar convex polygons")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Asymmetry, center, alpha, tau and crossings of one body; radii and completeness with a gauge.
    Compute(ComputeArgs),
    /// Run a verification suite; exits with 1 if any check fails.
    Verify(VerifyArgs),
    /// Write a region diagram as CSV and SVG.
    Diagram(DiagramArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Named family (triangle, golden_house, k_t, regular_kgon, s_cap, k_min, k_max, k_rho, interpolate, hood, c_lambda).
    #[arg(long, conflicts_with_all = ["file", "random"])]
    family: Option<String>,
    /// Family parameter as key=value; repeatable.
    #[arg(long = "param")]
    params: Vec<String>,
    /// JSON file `{"vertices": [[x, y], ...]}`.
    #[arg(long, conflicts_with = "random")]
    file: Option<PathBuf>,
    /// Random verification sample as seed:index.
    #[arg(long)]
    random: Option<String>,
    /// disk, central, c_lambda, triangle_core, a family name, a JSON file or inline JSON.
    #[arg(long)]
    gauge: Option<String>,
    /// Gauge parameter as key=value; repeatable.
    #[arg(long = "gauge-param")]
    gauge_params: Vec<String>,
    /// Print the result as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// alpha-region, crossings, dw-pseudo, dw-euclidean, families or all.
    #[arg(long)]
    suite: String,
    #[arg(long, default_value_t = 500)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Print the summary as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DiagramArgs {
    /// alpha or dw.
    #[arg(long)]
    which: String,
    /// Samples per axis.
    #[arg(long, default_value_t = 50)]
    grid: usize,
    #[arg(long)]
    csv: PathBuf,
    #[arg(long)]
    svg: PathBuf,
}

enum Failure {
    Usage(String),
    Run(String),
    Verification,
}

impl From<GeomError> for Failure {
    fn from(e: GeomError) -> Self {
        match e {
            GeomError::Parse(_) | GeomError::Domain(_) | GeomError::Io(_) => Failure::Usage(e.to_string()),
            other => Failure::Run(other.to_string()),
        }
    }
}

fn env_tol() -> Result<Option<f64>, Failure> {
    match std::env::var(TOL_ENV_VAR) {
        Ok(v) => v
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|t| t.is_finite() && *t > 0.0)
            .map(Some)
            .ok_or_else(|| Failure::Usage(format!("{TOL_ENV_VAR} must be a positive number, got `{v}`"))),
        Err(_) => Ok(None),
    }
}

fn parse_random(arg: &str) -> Result<(u64, u64), Failure> {
    let bad = || Failure::Usage(format!("--random expects seed:index, got `{arg}`"));
    let (a, b) = arg.split_once(':').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn load_body(args: &ComputeArgs) -> Result<(ConvexPolygon, bool), Failure> {
    if let Some(name) = &args.family {
        let spec = FamilySpec::parse(name, &args.params)?;
        return Ok((spec.build()?, spec.name == FamilyName::Hood));
    }
    if !args.params.is_empty() {
        return Err(Failure::Usage("--param needs --family".into()));
    }
    if let Some(path) = &args.file {
        return Ok((geom::read_polygon(path)?, false));
    }
    if let Some(r) = &args.random {
        let (seed, index) = parse_random(r)?;
        return Ok((sample::random_body(&mut sample::sample_rng(seed, index)), false));
    }
    Err(Failure::Usage("one of --family, --file or --random is required".into()))
}

fn gauge_param(params: &[String], key: &str, default: f64) -> Result<f64, Failure> {
    for p in params {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("expected key=value, got `{p}`")))?;
        if k.trim() == key {
            return v
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("bad number in `{p}`")));
        }
    }
    Ok(default)
}

fn load_gauge(arg: &str, params: &[String], centered: &ConvexPolygon) -> Result<GaugeBody, Failure> {
    let gauge = match arg {
        "disk" => {
            let m = gauge_param(params, "m", 4096.0)?;
            if m.fract() != 0.0 || m < 0.0 {
                return Err(Failure::Usage(format!("m must be a non-negative integer, got {m}")));
            }
            families::disk_model(m as usize)?
        }
        "central" => {
            let t = symm::symmetrize(centered)?;
            GaugeBody::symmetric(geom::symmetric_closure(&t.central))?
        }
        "c_lambda" => families::c_lambda(centered, gauge_param(params, "lambda", 0.5)?)?,
        "triangle_core" => families::triangle_core()?,
        _ if arg.trim_start().starts_with('{') => GaugeBody::detect(geom::polygon_from_json(arg)?)?,
        _ => match arg.parse::<FamilyName>() {
            Ok(_) => GaugeBody::detect(FamilySpec::parse(arg, params)?.build()?)?,
            Err(_) => GaugeBody::detect(geom::read_polygon(std::path::Path::new(arg))?)?,
        },
    };
    gauge.require_symmetric()?;
    Ok(gauge)
}

fn compute(args: ComputeArgs) -> Result<(), Failure> {
    let (body, approximated) = load_body(&args)?;
    let asym = gauges::minkowski_asymmetry(&body)?;
    let centered = body.translate(-asym.center);
    let (alpha, tau) = symm::alpha_tau(&centered)?;
    let crossings = symm::crossing_count(&centered).encoded_count();
    let report = match &args.gauge {
        Some(g) => {
            let c = load_gauge(g, &args.gauge_params, &centered)?;
            let default = if approximated { COMPLETENESS_TOL_APPROX } else { COMPLETENESS_TOL };
            let tol = env_tol()?.unwrap_or(default);
            Some(complete::report(&body, &c, tol)?)
        }
        None => {
            if !args.gauge_params.is_empty() {
                return Err(Failure::Usage("--gauge-param needs --gauge".into()));
            }
            None
        }
    };
    if args.json {
        let out = serde_json::json!({
            "vertices": body.vertices(),
            "s": asym.s,
            "center": asym.center,
            "alpha": alpha,
            "tau": tau,
            "crossings": crossings,
            "gauge": report,
        });
        println!("{}", serde_json::to_string_pretty(&out).expect("report serializes"));
        return Ok(());
    }
    println!("vertices: {}", body.len());
    println!("s: {}", asym.s);
    println!("center: ({}, {})", asym.center.x, asym.center.y);
    println!("alpha: {alpha}");
    println!("tau: {tau}");
    println!("crossings: {crossings}");
    if let Some(r) = report {
        println!("r: {}", r.inradius);
        println!("R: {}", r.circumradius);
        println!("D: {}", r.diameter);
        println!("w: {}", r.width);
        println!("D/w: {}", r.dw_ratio);
        println!("pseudo_complete: {}", r.pseudo_complete);
        println!("complete: {}", r.complete);
        println!("constant_width: {}", r.constant_width);
    }
    Ok(())
}

fn run_verify(args: VerifyArgs) -> Result<(), Failure> {
    let suite: Suite = args.suite.parse()?;
    let cfg = VerifyConfig {
        samples: args.samples,
        seed: args.seed,
        tol: env_tol()?,
    };
    let summary = verify::run(suite, &cfg);
    if args.json {
        println!("{}", serde_json::to_string_pretty(&summary).expect("summary serializes"));
    } else {
        println!(
            "suite {}: {} checks, {} failures",
            summary.suite,
            summary.checks,
            summary.failures.len()
        );
        for n in &summary.notes {
            println!("note: {n}");
        }
        for f in &summary.failures {
            println!("FAIL {f}");
        }
    }
    if summary.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run_diagram(args: DiagramArgs) -> Result<(), Failure> {
    let which: Which = args.which.parse()?;
    let recs = diagram::records(which, args.grid)?;
    let curves = diagram::curves(which, args.grid);
    let csv = File::create(&args.csv).map_err(GeomError::from)?;
    diagram::write_csv(which, &recs, &curves, BufWriter::new(csv))?;
    std::fs::write(&args.svg, diagram::svg(which, &recs, &curves)).map_err(GeomError::from)?;
    println!(
        "wrote {} samples to {} and {}",
        recs.len(),
        args.csv.display(),
        args.svg.display()
    );
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.cmd {
        Cmd::Compute(a) => compute(a),
        Cmd::Verify(a) => run_verify(a),
        Cmd::Diagram(a) => run_diagram(a),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Run(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
