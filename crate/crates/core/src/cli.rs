//! The `nrange` command line.
//!
//! Exit codes: 0 on success, 1 on invalid input, 2 when a check or an oracle
//! inclusion fails. Every failure writes one line to stderr of the form
//! `nrange: error kind=<kind> message="<text>"`.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::catalog::closed_form;
use crate::eigfun::{majorizes, rearrange, StepFunction};
use crate::engine::{compute_range, support_value, WeightSpec};
use crate::error::{Error, Result};
use crate::geometry::{
    contains, fmt17, hausdorff, minkowski_combine, uniform_grid, ConvexRegion, SupportSample,
};
use crate::matrix::{random_ginibre, seeded_rng};
use crate::oracle::sample_projection_cloud;
use crate::spectral::{SpectralModel, DEFAULT_RESOLUTION};

/// Inflation used when testing cloud points against a region.
pub const ORACLE_INFLATION: f64 = 1e-8;

/// Relative slack for the inclusion checks.
pub const CHECK_SLACK: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(
    name = "nrange",
    version,
    about = "C-numerical and alpha-numerical ranges"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a range: polygon CSV, report JSON and optional SVG.
    Range {
        #[arg(long)]
        operator: PathBuf,
        /// `alpha:<a>` or `step:<path to step-function JSON>`.
        #[arg(long)]
        weight: String,
        #[arg(long, default_value_t = 720)]
        directions: usize,
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: usize,
        /// Polygon CSV (`x,y`); stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Sample the supporting function as a `theta,g` CSV.
    Support {
        #[arg(long)]
        operator: PathBuf,
        #[arg(long)]
        weight: String,
        #[arg(long, default_value_t = 720)]
        directions: usize,
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form range of a named operator as JSON.
    Catalog {
        #[arg(long)]
        name: String,
        #[arg(long)]
        alpha: f64,
        /// Model parameters as `key=value`, repeatable.
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Projection cloud of a matrix and its inclusion verdict against a region.
    Oracle {
        #[arg(long)]
        operator: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Region as report JSON (with `vertices`) or polygon CSV.
        #[arg(long)]
        region: Option<PathBuf>,
        /// Cloud CSV (`x,y`).
        #[arg(long)]
        cloud: Option<PathBuf>,
    },
    /// Majorization verdict `g ≺ f` for two step-function files.
    Majorize { f: PathBuf, g: PathBuf },
    /// Run a randomized property suite on one operator.
    Check {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        operator: PathBuf,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 360)]
        directions: usize,
        #[arg(long, default_value_t = 1024)]
        resolution: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Nesting,
    Interpolation,
    Continuity,
}

/// Outcome of a property suite.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub suite: Suite,
    pub trials: usize,
    pub failures: usize,
    /// Largest violation relative to the allowed slack (≤ 1 means pass).
    pub worst_ratio: f64,
    pub first_failure: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

enum Failure {
    Input(Error),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidStepFunction(_) => "invalid_step_function",
        Error::Domain(_) => "domain",
        Error::InvalidModel(_) => "invalid_model",
        Error::UnknownName(_) => "unknown_name",
        Error::NotHermitian(_) => "not_hermitian",
        Error::InvalidMatrix(_) => "invalid_matrix",
        Error::InvalidRank { .. } => "invalid_rank",
        Error::InvalidSupport(_) => "invalid_support",
        Error::InconsistentSupport(_) => "inconsistent_support",
        Error::InvalidWeight(_) => "invalid_weight",
        Error::MissingTableEntry(_) => "missing_table_entry",
        Error::OracleLimit(_) => "oracle_limit",
        Error::Parse(_) => "parse",
        Error::Io(_) => "io",
        Error::Json(_) => "json",
    }
}

fn one_line(msg: &str) -> String {
    msg.replace('\n', " ").replace('"', "'")
}

/// Parses `argv` and runs the subcommand, returning the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let first = e.to_string();
            let first = first
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ");
            let _ = writeln!(
                stderr,
                "nrange: error kind=usage message=\"{}\"",
                one_line(first)
            );
            return 1;
        }
    };
    match execute(cli.command, stdout) {
        Ok(()) => 0,
        Err(Failure::Input(e)) => {
            let _ = writeln!(
                stderr,
                "nrange: error kind={} message=\"{}\"",
                error_kind(&e),
                one_line(&e.to_string())
            );
            1
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(
                stderr,
                "nrange: error kind=check_failed message=\"{}\"",
                one_line(&msg)
            );
            2
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn load_model(path: &Path) -> Result<SpectralModel> {
    Ok(serde_json::from_str(&read(path)?)?)
}

pub fn load_step(path: &Path) -> Result<StepFunction> {
    Ok(serde_json::from_str(&read(path)?)?)
}

/// `alpha:<a>` or `step:<path>`.
pub fn parse_weight(spec: &str) -> Result<WeightSpec> {
    if let Some(a) = spec.strip_prefix("alpha:") {
        let a: f64 = a
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad alpha value `{a}`")))?;
        WeightSpec::alpha(a)
    } else if let Some(p) = spec.strip_prefix("step:") {
        Ok(WeightSpec::step(load_step(Path::new(p))?))
    } else {
        Err(Error::Parse(format!(
            "weight must be alpha:<a> or step:<path>, got `{spec}`"
        )))
    }
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Reads a region from report JSON (`vertices`) or polygon CSV.
pub fn load_region(path: &Path) -> Result<ConvexRegion> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(&text)?;
        let verts: Vec<[f64; 2]> = serde_json::from_value(
            v.get("vertices")
                .cloned()
                .ok_or_else(|| Error::Parse("region JSON has no `vertices`".into()))?,
        )?;
        let pts: Vec<Complex64> = verts.iter().map(|p| Complex64::new(p[0], p[1])).collect();
        ConvexRegion::from_points(&pts)
    } else {
        ConvexRegion::from_csv(&text)
    }
}

fn execute(cmd: Command, stdout: &mut dyn Write) -> std::result::Result<(), Failure> {
    match cmd {
        Command::Range {
            operator,
            weight,
            directions,
            resolution,
            out,
            report,
            svg,
        } => {
            let m = load_model(&operator)?;
            let w = parse_weight(&weight)?;
            let r = compute_range(&m, &w, directions, resolution)?;
            let csv = r.region.to_csv();
            emit(&out, &csv, stdout)?;
            if let Some(p) = report {
                fs::write(p, r.to_json()).map_err(Error::from)?;
            }
            if let Some(p) = svg {
                fs::write(p, svg_from_polygon_csv(&csv)?).map_err(Error::from)?;
            }
        }
        Command::Support {
            operator,
            weight,
            directions,
            resolution,
            out,
        } => {
            let m = load_model(&operator)?;
            let w = parse_weight(&weight)?;
            let lambda_c = w.lambda_c();
            let shift = (-lambda_c.min_value()).max(0.0);
            let thetas = uniform_grid(directions.max(3));
            let sample = if shift > 0.0 {
                // g of V_C = g of V_{C+b} - b·Re(e^{iθ}τ(T))
                let shifted = WeightSpec::Step(lambda_c.map(|v| v + shift));
                let tr = m.trace();
                let values = thetas
                    .iter()
                    .map(|&t| {
                        support_value(&m, &shifted, t, resolution)
                            .map(|g| g - shift * crate::geometry::directional(tr, t))
                    })
                    .collect::<Result<Vec<_>>>()?;
                SupportSample::new(thetas, values)?
            } else {
                let values = thetas
                    .iter()
                    .map(|&t| support_value(&m, &w, t, resolution))
                    .collect::<Result<Vec<_>>>()?;
                SupportSample::new(thetas, values)?
            };
            emit(&out, &sample.to_csv(), stdout)?;
        }
        Command::Catalog {
            name,
            alpha,
            params,
            out,
        } => {
            let mut map = BTreeMap::new();
            for p in &params {
                let (k, v) = p
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("parameter `{p}` is not key=value")))?;
                let v: f64 = v.parse().map_err(|_| {
                    Error::Parse(format!("parameter `{p}` has a non-numeric value"))
                })?;
                map.insert(k.to_string(), v);
            }
            let range = closed_form(&name, &map, alpha)?;
            #[derive(Serialize)]
            struct Out<'a> {
                name: &'a str,
                params: &'a BTreeMap<String, f64>,
                alpha: f64,
                range: crate::catalog::ClosedFormRange,
            }
            let json = serde_json::to_string_pretty(&Out {
                name: &name,
                params: &map,
                alpha,
                range,
            })
            .map_err(Error::from)?;
            emit(&out, &(json + "\n"), stdout)?;
        }
        Command::Oracle {
            operator,
            k,
            samples,
            seed,
            region,
            cloud,
        } => {
            let t = match load_model(&operator)? {
                SpectralModel::Matrix(t) => t,
                other => {
                    return Err(Error::InvalidModel(format!(
                        "oracle needs a matrix operator, got {}",
                        other.kind()
                    ))
                    .into())
                }
            };
            let c = sample_projection_cloud(&t, k, samples, seed)?;
            if let Some(p) = cloud {
                fs::write(p, c.to_csv()).map_err(Error::from)?;
            }
            if let Some(p) = region {
                let r = load_region(&p)?;
                let outside = c
                    .points
                    .iter()
                    .filter(|&&z| r.distance_to(z) > ORACLE_INFLATION)
                    .count();
                if outside > 0 {
                    return Err(Failure::Check(format!(
                        "{outside} of {samples} samples outside (inflation {ORACLE_INFLATION:e}, worst excess {:e})",
                        c.worst_excess(&r)
                    )));
                }
                writeln!(
                    stdout,
                    "all samples inside (inflation {ORACLE_INFLATION:e})"
                )
                .map_err(Error::from)?;
            } else {
                writeln!(stdout, "{} samples", c.points.len()).map_err(Error::from)?;
            }
        }
        Command::Majorize { f, g } => {
            let v = majorizes(&load_step(&f)?, &load_step(&g)?);
            let json = serde_json::to_string_pretty(&v).map_err(Error::from)?;
            writeln!(stdout, "{json}").map_err(Error::from)?;
        }
        Command::Check {
            suite,
            operator,
            trials,
            seed,
            directions,
            resolution,
        } => {
            let m = load_model(&operator)?;
            let report = run_check(suite, &m, trials, seed, directions, resolution)?;
            let json = serde_json::to_string_pretty(&report).map_err(Error::from)?;
            writeln!(stdout, "{json}").map_err(Error::from)?;
            if !report.passed() {
                return Err(Failure::Check(format!(
                    "{:?}: {} of {} trials failed; {}",
                    suite,
                    report.failures,
                    report.trials,
                    report.first_failure.unwrap_or_default()
                )));
            }
        }
    }
    Ok(())
}

fn region_scale(r: &ConvexRegion) -> f64 {
    r.vertices()
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
        .max(r.diameter())
}

fn random_alpha<R: Rng>(rng: &mut R) -> f64 {
    rng.random_range(0.02..=1.0)
}

/// Norm used in the Lipschitz bounds: `‖T‖` for matrices, `max|λ_k|` for
/// normal operators.
fn model_norm(m: &SpectralModel) -> Result<f64> {
    match m {
        SpectralModel::Matrix(t) => Ok(t.operator_norm()),
        SpectralModel::Atomic(atoms) => {
            Ok(atoms.iter().map(|a| a.value.norm()).fold(0.0, f64::max))
        }
        SpectralModel::Named(_) => Err(Error::InvalidModel(
            "the continuity suite needs a matrix or atomic operator".into(),
        )),
    }
}

/// Runs one randomized property suite on `m`.
///
/// * nesting: `V_β ⊆ V_α` for `α < β`.
/// * interpolation: `s·V_α + t·V_γ ⊆ V_β` for `α < β < γ` with
///   `s = α(γ-β)/(β(γ-α))`, `t = γ(β-α)/(β(γ-α))`.
/// * continuity: `d_H(V_{C₁}(T), V_{C₂}(T)) ≤ ‖T‖‖C₁-C₂‖` and, for
///   matrices, `d_H(V_C(T), V_C(S)) ≤ ‖C‖‖T-S‖`.
///
/// Inclusions get slack `1e-6·scale`. Hausdorff bounds are widened by the
/// polygon factor `sec(π/directions)` plus `1e-9`.
pub fn run_check(
    suite: Suite,
    m: &SpectralModel,
    trials: usize,
    seed: u64,
    directions: usize,
    resolution: usize,
) -> Result<CheckReport> {
    let mut rng = seeded_rng(seed);
    let mut report = CheckReport {
        suite,
        trials,
        failures: 0,
        worst_ratio: 0.0,
        first_failure: None,
    };
    let range = |w: &WeightSpec, m: &SpectralModel| {
        compute_range(m, w, directions, resolution).map(|r| r.region)
    };
    let sec = 1.0 / (PI / directions as f64).cos();
    let record = |report: &mut CheckReport, excess: f64, allowed: f64, what: String| {
        let ratio = if allowed > 0.0 {
            excess / allowed
        } else if excess > 0.0 {
            f64::INFINITY
        } else {
            0.0
        };
        report.worst_ratio = report.worst_ratio.max(ratio);
        if excess > allowed {
            report.failures += 1;
            report.first_failure.get_or_insert(what);
        }
    };
    let norm = if suite == Suite::Continuity {
        model_norm(m)?
    } else {
        0.0
    };
    for trial in 0..trials {
        match suite {
            Suite::Nesting => {
                let (a, b) = {
                    let x = random_alpha(&mut rng);
                    let y = random_alpha(&mut rng);
                    (x.min(y), x.max(y))
                };
                let va = range(&WeightSpec::alpha(a)?, m)?;
                let vb = range(&WeightSpec::alpha(b)?, m)?;
                let slack = CHECK_SLACK * region_scale(&va).max(f64::MIN_POSITIVE);
                let ok = contains(&va, &vb, slack);
                record(
                    &mut report,
                    if ok { 0.0 } else { 2.0 * slack },
                    slack,
                    format!("trial {trial}: V_{b} not inside V_{a}"),
                );
            }
            Suite::Interpolation => {
                let mut xs = [
                    random_alpha(&mut rng),
                    random_alpha(&mut rng),
                    random_alpha(&mut rng),
                ];
                xs.sort_by(f64::total_cmp);
                let [a, b, g] = xs;
                if !(a < b && b < g) {
                    continue;
                }
                let s = a * (g - b) / (b * (g - a));
                let t = g * (b - a) / (b * (g - a));
                let va = range(&WeightSpec::alpha(a)?, m)?;
                let vb = range(&WeightSpec::alpha(b)?, m)?;
                let vg = range(&WeightSpec::alpha(g)?, m)?;
                let combo = minkowski_combine(&va, s, &vg, t)?;
                let slack = CHECK_SLACK * region_scale(&va).max(f64::MIN_POSITIVE);
                let ok = contains(&vb, &combo, slack);
                record(
                    &mut report,
                    if ok { 0.0 } else { 2.0 * slack },
                    slack,
                    format!("trial {trial}: combination of V_{a}, V_{g} not inside V_{b}"),
                );
            }
            Suite::Continuity => {
                let pieces = rng.random_range(1..=6);
                let raw: Vec<f64> = (0..pieces).map(|_| rng.random_range(0.0..3.0)).collect();
                let bumped: Vec<f64> = raw
                    .iter()
                    .map(|v| (v + rng.random_range(-0.3..0.3)).max(0.0))
                    .collect();
                let c1 = rearrange(&StepFunction::equal_pieces(&raw)?);
                let c2 = rearrange(&StepFunction::equal_pieces(&bumped)?);
                let dist = c1.sup_distance(&c2);
                let d = hausdorff(
                    &range(&WeightSpec::Step(c1.clone()), m)?,
                    &range(&WeightSpec::Step(c2), m)?,
                );
                let allowed = norm * dist * sec + 1e-9;
                record(
                    &mut report,
                    d,
                    allowed,
                    format!("trial {trial}: weight perturbation d_H = {d:e} > {allowed:e}"),
                );

                if let SpectralModel::Matrix(t) = m {
                    let g = random_ginibre(&mut rng, t.dim());
                    let eps = rng.random_range(0.0..0.2);
                    let s = t.add(&g.scale(Complex64::new(eps / g.operator_norm(), 0.0)));
                    let dist = t.sub(&s).operator_norm();
                    let w = WeightSpec::Step(c1);
                    let d = hausdorff(&range(&w, m)?, &range(&w, &SpectralModel::Matrix(s))?);
                    let allowed = w.norm() * dist * sec + 1e-9;
                    record(
                        &mut report,
                        d,
                        allowed,
                        format!("trial {trial}: operator perturbation d_H = {d:e} > {allowed:e}"),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// Renders a polygon CSV (`x,y`) as an 800×800 SVG with axes.
pub fn svg_from_polygon_csv(csv: &str) -> Result<String> {
    let region = ConvexRegion::from_csv(csv)?;
    let verts = region.vertices();
    let extent = verts
        .iter()
        .map(|z| z.re.abs().max(z.im.abs()))
        .fold(0.0, f64::max)
        .max(1e-12)
        * 1.1;
    let map = |z: &Complex64| (400.0 + 380.0 * z.re / extent, 400.0 - 380.0 * z.im / extent);
    let mut path = String::new();
    for (i, z) in verts.iter().enumerate() {
        let (x, y) = map(z);
        path.push_str(&format!(
            "{}{:.3} {:.3} ",
            if i == 0 { "M" } else { "L" },
            x,
            y
        ));
    }
    path.push('Z');
    Ok(format!(
        concat!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\" width=\"800\" height=\"800\">\n",
            "  <line x1=\"0\" y1=\"400\" x2=\"800\" y2=\"400\" stroke=\"#999\" stroke-width=\"1\"/>\n",
            "  <line x1=\"400\" y1=\"0\" x2=\"400\" y2=\"800\" stroke=\"#999\" stroke-width=\"1\"/>\n",
            "  <path d=\"{}\" fill=\"#4a7ab5\" fill-opacity=\"0.35\" stroke=\"#1f3f66\" stroke-width=\"2\"/>\n",
            "  <text x=\"790\" y=\"392\" text-anchor=\"end\" font-size=\"14\">{}</text>\n",
            "</svg>\n"
        ),
        path,
        fmt17(extent)
    ))
}
