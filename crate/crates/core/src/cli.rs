//! Command line front end: `solve`, `gen` and `bench`.
//!
//! Exit codes: 0 success, 2 unbounded instance, 3 invalid input,
//! 4 verification mismatch.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bench::{run_bench, BenchProblem};
use crate::circle::{check_csr, solve_mbsr_c};
use crate::error::Error;
use crate::gen::{generate, GenParams, Kind, Layout};
use crate::geometry::{Point, Rect};
use crate::golden::GoldenRecord;
use crate::io::InstanceFile;
use crate::oracle::{oracle_mbsr_c, oracle_mbsr_o};
use crate::outlier::{solve_mbsr, solve_mbsr_o_baseline, solve_mbsr_o_pairset, SolveReport};
use crate::svg::{circles_figure, points_figure};

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNBOUNDED: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

/// Overrides `gen --seed` when set.
pub const SEED_ENV: &str = "SEPRECT_SEED";

/// Grid step of the circle oracle used by `--verify`.
pub const VERIFY_GRID_STEP: f64 = 1e-3;

#[derive(Parser, Debug)]
#[command(
    name = "seprect",
    version,
    about = "Largest red-enclosing rectangle separated from blue obstacles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve one instance file.
    Solve(SolveArgs),
    /// Write a random instance.
    Gen(GenArgs),
    /// Time the solvers over a grid of sizes.
    Bench(BenchArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Problem {
    Mbsr,
    MbsrO,
    MbsrC,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum AlgorithmArg {
    Baseline,
    Pairset,
    Auto,
}

#[derive(clap::Args, Debug)]
struct SolveArgs {
    /// Instance file, or a golden record whose `instance` is solved.
    #[arg(long)]
    input: PathBuf,
    /// Defaults to mbsr-c for circles, mbsr-o when `k` is given, else mbsr.
    #[arg(long, value_enum)]
    problem: Option<Problem>,
    #[arg(long, value_enum, default_value = "auto")]
    algorithm: AlgorithmArg,
    /// Compare with the brute-force oracle when the instance is small enough.
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    Points,
    Circles,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum LayoutArg {
    Uniform,
    Clustered,
    StaircaseAdversarial,
}

#[derive(clap::Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum, default_value = "points")]
    kind: KindArg,
    /// Red points.
    #[arg(long, default_value_t = 5)]
    n: usize,
    /// Blue points or circles.
    #[arg(long, default_value_t = 20)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sampling box and instance frame, `xmin,ymin,xmax,ymax`.
    #[arg(long, value_delimiter = ',', num_args = 4)]
    frame: Option<Vec<f64>>,
    /// Leave the frame out of the written instance.
    #[arg(long)]
    unframed: bool,
    #[arg(long, value_enum, default_value = "uniform")]
    layout: LayoutArg,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum BenchProblemArg {
    MbsrO,
    MbsrC,
}

#[derive(Clone, Debug)]
struct Grid(Vec<usize>);

fn parse_grid(s: &str) -> Result<Grid, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(Grid)
}

#[derive(clap::Args, Debug)]
struct BenchArgs {
    #[arg(long, value_enum, default_value = "mbsr-o")]
    problem: BenchProblemArg,
    /// Comma separated, strictly increasing; may be empty.
    #[arg(long, value_parser = parse_grid, default_value = "64,128,256,512")]
    m_grid: Grid,
    #[arg(long, value_parser = parse_grid, default_value = "1,2,3")]
    k_grid: Grid,
    #[arg(long, default_value_t = 5)]
    reps: usize,
    /// CSV destination; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct SolveJson<'a> {
    rect: [f64; 4],
    area: f64,
    outliers_used: usize,
    algorithm: &'a str,
    elapsed_ns: u128,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Unbounded(_) => EXIT_UNBOUNDED,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INVALID,
        message: message.into(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let res = match cli.command {
        Command::Solve(a) => solve(&a, out, err),
        Command::Gen(a) => gen(&a, out),
        Command::Bench(a) => bench(&a, out, err),
    };
    match res {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "seprect: {}", f.message);
            f.code
        }
    }
}

fn load_instance(path: &Path) -> Result<(InstanceFile, Option<GoldenRecord>), Failure> {
    let text = read(path)?;
    let is_record = serde_json::from_str::<serde_json::Value>(&text)
        .ok()
        .and_then(|v| v.as_object().map(|o| o.contains_key("instance")))
        .unwrap_or(false);
    if is_record {
        let rec = GoldenRecord::parse(&text)?;
        Ok((rec.instance.clone(), Some(rec)))
    } else {
        Ok((InstanceFile::parse(&text)?, None))
    }
}

fn same_area(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * b.abs().max(1.0)
}

fn solve(a: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let (inst, record) = load_instance(&a.input)?;
    let has_circles = inst.blue_circles.is_some();
    let problem = a.problem.unwrap_or(if has_circles {
        Problem::MbsrC
    } else if inst.k.is_some() {
        Problem::MbsrO
    } else {
        Problem::Mbsr
    });
    if has_circles != (problem == Problem::MbsrC) {
        return Err(invalid(format!(
            "--problem {problem:?} does not match an instance with {}",
            if has_circles {
                "blue_circles"
            } else {
                "blue points"
            }
        )));
    }
    let red = inst.red_points();
    let frame = inst.frame();
    let k = match problem {
        Problem::MbsrO => inst.k.unwrap_or(0),
        _ => 0,
    };
    let report: SolveReport = match problem {
        Problem::Mbsr => solve_mbsr(&red, &inst.blue_points(), frame)?,
        Problem::MbsrO => {
            let blue = inst.blue_points();
            let pairset = match a.algorithm {
                AlgorithmArg::Baseline => false,
                AlgorithmArg::Pairset => true,
                AlgorithmArg::Auto => k > 0,
            };
            if pairset {
                solve_mbsr_o_pairset(&red, &blue, k, frame)?
            } else {
                solve_mbsr_o_baseline(&red, &blue, k, frame)?
            }
        }
        Problem::MbsrC => solve_mbsr_c(&red, &inst.circles(), frame)?,
    };
    let r = report.best;
    let area = r.area();
    if a.json {
        let j = SolveJson {
            rect: r.corners(),
            area,
            outliers_used: report.outliers_used,
            algorithm: report.algorithm.name(),
            elapsed_ns: report.elapsed.as_nanos(),
        };
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string(&j).expect("report serializes")
        );
    } else {
        let _ = writeln!(out, "rect {} {} {} {}", r.xmin, r.ymin, r.xmax, r.ymax);
        let _ = writeln!(out, "area {area}");
        if problem == Problem::MbsrO {
            let _ = writeln!(out, "outliers {}", report.outliers_used);
        }
    }
    if let Some(path) = &a.svg {
        let fig = if has_circles {
            circles_figure(&red, &inst.circles(), frame, Some(&r))?
        } else {
            points_figure(&red, &inst.blue_points(), k, frame, Some(&r))?
        };
        write_file(path, &fig)?;
    }
    if a.verify {
        verify(&inst, problem, k, &r, err)?;
        if let Some(rec) = &record {
            if !rec.accepts(area) {
                return Err(Failure {
                    code: EXIT_MISMATCH,
                    message: format!(
                        "area {area} disagrees with the recorded {} answer {}",
                        rec.oracle, rec.result.area
                    ),
                });
            }
        }
    }
    Ok(())
}

fn verify(
    inst: &InstanceFile,
    problem: Problem,
    k: usize,
    r: &Rect,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let red = inst.red_points();
    let area = r.area();
    let mismatch = |message: String| Failure {
        code: EXIT_MISMATCH,
        message,
    };
    if problem == Problem::MbsrC {
        let circles = inst.circles();
        let centers: Vec<Point> = circles.iter().map(|c| c.center).collect();
        let frame = inst.frame().unwrap_or_else(|| {
            let all = red.iter().chain(&centers);
            all.fold(
                Rect::new(
                    f64::INFINITY,
                    f64::INFINITY,
                    f64::NEG_INFINITY,
                    f64::NEG_INFINITY,
                ),
                |b, p| {
                    Rect::new(
                        b.xmin.min(p.x),
                        b.ymin.min(p.y),
                        b.xmax.max(p.x),
                        b.ymax.max(p.y),
                    )
                },
            )
        });
        let check = check_csr(r, &red, &circles, inst.frame());
        if !check.ok() {
            return Err(mismatch(format!("answer fails the CSR checks: {check:?}")));
        }
        match oracle_mbsr_c(&red, &centers, frame, VERIFY_GRID_STEP) {
            Ok(b) => {
                if area < b.best - b.slack || area > b.upper + 1e-9 {
                    return Err(mismatch(format!(
                        "area {area} outside the oracle bracket [{}, {}]",
                        b.best - b.slack,
                        b.upper
                    )));
                }
            }
            Err(Error::GuardExceeded(m)) => {
                let _ = writeln!(err, "seprect: verify skipped: {m}");
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        match oracle_mbsr_o(&red, &inst.blue_points(), k, inst.frame()) {
            Ok(o) => {
                if !same_area(area, o.area()) {
                    return Err(mismatch(format!(
                        "area {area} differs from the oracle's {}",
                        o.area()
                    )));
                }
            }
            Err(Error::GuardExceeded(m)) => {
                let _ = writeln!(err, "seprect: verify skipped: {m}");
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(())
}

fn gen(a: &GenArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let seed = match std::env::var(SEED_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| invalid(format!("{SEED_ENV}={s:?} is not an unsigned integer")))?,
        Err(_) => a.seed,
    };
    let layout = match a.layout {
        LayoutArg::Uniform => Layout::Uniform,
        LayoutArg::Clustered => Layout::Clustered,
        LayoutArg::StaircaseAdversarial => Layout::StaircaseAdversarial,
    };
    let mut p = match a.kind {
        KindArg::Points => GenParams::points(a.n, a.m, a.k, seed, layout),
        KindArg::Circles => GenParams::circles(a.n, a.m, seed, layout),
    };
    p.frame = a.frame.as_ref().map(|f| Rect::new(f[0], f[1], f[2], f[3]));
    p.unframed = a.unframed;
    if p.kind == Kind::Circles && a.k != 0 {
        return Err(invalid("--k applies to point instances only"));
    }
    let text = generate(&p)?.render();
    match &a.out {
        Some(path) => write_file(path, &text),
        None => {
            let _ = out.write_all(text.as_bytes());
            Ok(())
        }
    }
}

/// Slopes go to stdout when the CSV is written to a file, else to stderr.
fn bench(a: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let problem = match a.problem {
        BenchProblemArg::MbsrO => BenchProblem::MbsrO,
        BenchProblemArg::MbsrC => BenchProblem::MbsrC,
    };
    let report = run_bench(problem, &a.m_grid.0, &a.k_grid.0, a.reps)?;
    let csv = report.to_csv();
    match &a.out {
        Some(path) => write_file(path, &csv)?,
        None => {
            let _ = out.write_all(csv.as_bytes());
        }
    }
    let notes: &mut dyn Write = if a.out.is_some() { out } else { err };
    for s in &report.slopes {
        let _ = writeln!(
            notes,
            "slope {} d(log t)/d(log {}) at {}={}: {:.3} ({} points)",
            s.algorithm,
            s.variable,
            if s.variable == "m" { "k" } else { "m" },
            s.fixed,
            s.slope,
            s.points
        );
    }
    Ok(())
}
