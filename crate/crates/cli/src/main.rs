mod problem;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use fracmem::steering::{gramian, steer, verify_steering};
use fracmem::system::{memory, trajectory};
use fracmem::Error;
use serde::Serialize;

use problem::{load, Loaded, SchemaError};

#[derive(Parser)]
#[command(name = "fracmem", version, about = "Simulate and steer initialized fractional linear systems")]
struct Cli {
    /// Suppress informational messages on stderr.
    #[arg(long, global = true)]
    quiet: bool,
    /// Include wall-clock time in JSON summaries (makes output non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Problem description (JSON).
    spec: PathBuf,
    /// Number of grid intervals, overriding the spec's N.
    #[arg(long)]
    grid: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Trajectory, memory and control at every grid node as CSV.
    Simulate {
        #[command(flatten)]
        common: Common,
        /// Output CSV path.
        #[arg(long, short)]
        out: PathBuf,
    },
    /// β-controllability Gramian as JSON on stdout.
    Gramian {
        #[command(flatten)]
        common: Common,
    },
    /// Compute a steering control; CSV to --out, summary JSON to stdout or --summary.
    Steer {
        #[command(flatten)]
        common: Common,
        #[arg(long, short)]
        out: PathBuf,
        #[arg(long)]
        summary: Option<PathBuf>,
        /// gramian, rank or kalman (overrides the spec).
        #[arg(long)]
        method: Option<String>,
        /// Residual tolerance; default 1e-3 (1 + |b|∞).
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Simulate an external control CSV and report residual and energy.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Control CSV with columns t, u_1..u_m (optionally c_1..c_m).
        control: PathBuf,
        #[arg(long)]
        tol: Option<f64>,
    },
}

enum Failure {
    Schema(String),
    Numerical(Error),
    Precondition(Error),
    Io(String),
}

impl From<SchemaError> for Failure {
    fn from(e: SchemaError) -> Self {
        Failure::Schema(e.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Dimension(_) | Error::Order(_) | Error::Grid(_) => Failure::Schema(e.to_string()),
            e if e.is_steering_precondition() => Failure::Precondition(e),
            e => Failure::Numerical(e),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

const MISSED_TOLERANCE: u8 = 4;

#[derive(Serialize)]
struct GridSummary {
    #[serde(rename = "T")]
    horizon: f64,
    #[serde(rename = "N")]
    intervals: usize,
    alpha: f64,
    beta: f64,
}

#[derive(Serialize)]
struct RunSummary {
    command: &'static str,
    method: Option<String>,
    residual: f64,
    tolerance: f64,
    within_tolerance: bool,
    energy: f64,
    gramian_energy: Option<f64>,
    definition_energy: Option<f64>,
    gramian_condition: Option<f64>,
    achieved: Vec<f64>,
    target: Vec<f64>,
    grid: GridSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_s: Option<f64>,
}

#[derive(Serialize)]
struct GramianSummary {
    #[serde(rename = "Q")]
    q: Vec<Vec<f64>>,
    condition_estimate: f64,
    min_eigenvalue_estimate: f64,
    max_eigenvalue_estimate: f64,
    panels: usize,
    grid: GridSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_s: Option<f64>,
}

fn grid_summary(p: &Loaded) -> GridSummary {
    GridSummary {
        horizon: p.grid.horizon(),
        intervals: p.grid.intervals(),
        alpha: p.sys.alpha(),
        beta: p.beta,
    }
}

fn tolerance(p: &Loaded, tol: Option<f64>) -> f64 {
    tol.unwrap_or(1e-3 * (1.0 + p.target.amax()))
}

fn emit(text: &str, path: Option<&Path>) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: &Cli, start: Instant) -> Result<u8, Failure> {
    let elapsed = || cli.timing.then(|| start.elapsed().as_secs_f64());
    match &cli.command {
        Command::Simulate { common, out } => {
            let p = load(&common.spec, common.grid, None)?;
            let x = trajectory(&p.sys, &p.control, p.grid)?;
            let mem = memory(&p.sys, p.beta, &p.control, p.grid)?;
            output::write_columns(out, p.grid, &[("x", &x), ("m", &mem), ("u", p.control.samples())])?;
            if !cli.quiet {
                eprintln!("wrote {} rows to {}", p.grid.intervals() + 1, out.display());
            }
            Ok(0)
        }
        Command::Gramian { common } => {
            let p = load(&common.spec, common.grid, None)?;
            let g = gramian(&p.steering()?)?;
            let summary = GramianSummary {
                q: g.q.row_iter().map(|r| r.iter().copied().collect()).collect(),
                condition_estimate: g.condition,
                min_eigenvalue_estimate: g.min_eigenvalue,
                max_eigenvalue_estimate: g.max_eigenvalue,
                panels: fracmem::steering::GRAMIAN_PANELS,
                grid: grid_summary(&p),
                wall_time_s: elapsed(),
            };
            emit(&output::to_json(&summary), None)?;
            Ok(0)
        }
        Command::Steer {
            common,
            out,
            summary,
            method,
            tol,
        } => {
            let p = load(&common.spec, common.grid, method.as_deref())?;
            let r = steer(&p.steering()?, p.method, p.bump_order)?;
            output::write_control(out, &r.control)?;
            let tolerance = tolerance(&p, *tol);
            let ok = r.residual <= tolerance;
            let s = RunSummary {
                command: "steer",
                method: Some(r.method.to_string()),
                residual: r.residual,
                tolerance,
                within_tolerance: ok,
                energy: r.energy,
                gramian_energy: r.gramian_energy,
                definition_energy: r.definition_energy,
                gramian_condition: r.gramian_condition,
                achieved: r.achieved.iter().copied().collect(),
                target: p.target.iter().copied().collect(),
                grid: grid_summary(&p),
                wall_time_s: elapsed(),
            };
            emit(&output::to_json(&s), summary.as_deref())?;
            if !ok && !cli.quiet {
                eprintln!("residual {:.3e} exceeds tolerance {tolerance:.3e}", r.residual);
            }
            Ok(if ok { 0 } else { MISSED_TOLERANCE })
        }
        Command::Verify { common, control, tol } => {
            let p = load(&common.spec, common.grid, None)?;
            let sp = p.steering()?;
            let u = output::read_control(control, p.grid, p.sys.m(), -sp.order().kernel_exponent())?;
            let v = verify_steering(&sp, &u)?;
            let tolerance = tolerance(&p, *tol);
            let ok = v.residual <= tolerance;
            let s = RunSummary {
                command: "verify",
                method: None,
                residual: v.residual,
                tolerance,
                within_tolerance: ok,
                energy: v.energy,
                gramian_energy: v.gramian_energy,
                definition_energy: None,
                gramian_condition: Some(v.gramian_condition),
                achieved: v.achieved.iter().copied().collect(),
                target: p.target.iter().copied().collect(),
                grid: grid_summary(&p),
                wall_time_s: elapsed(),
            };
            emit(&output::to_json(&s), None)?;
            if !ok && !cli.quiet {
                eprintln!("residual {:.3e} exceeds tolerance {tolerance:.3e}", v.residual);
            }
            Ok(if ok { 0 } else { MISSED_TOLERANCE })
        }
    }
}

fn configure_threads() {
    let n = std::env::var("FRACMEM_THREADS").ok().and_then(|s| s.trim().parse::<usize>().ok()).unwrap_or(0);
    if n > 0 {
        // fails only if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let start = Instant::now();
    let code = match run(&cli, start) {
        Ok(code) => code,
        Err(Failure::Schema(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Numerical(e)) => {
            eprintln!("numerical failure: {e}");
            3
        }
        Err(Failure::Precondition(e)) => {
            eprintln!("steering precondition failed: {e}");
            if matches!(cli.command, Command::Steer { .. }) {
                5
            } else {
                3
            }
        }
    };
    ExitCode::from(code)
}
