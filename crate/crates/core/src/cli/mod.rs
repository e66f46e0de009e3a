//! The `rodsym` command line.
//!
//! Exit codes: 0 on success, 1 when a mathematical check fails (the failing
//! instance is written to stderr), 2 on bad input or I/O errors.

mod io;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::compare::{
    audit, dirichlet_compare, inequality_audit, neumann_compare, robin_compare, CompareOptions, InequalityKind,
    Theorem,
};
use crate::error::Error;
use crate::gap::{b_crit, example_summary, extremal_search_with, gap_scan, SearchOptions, DEFAULT_SCAN_POINTS};
use crate::rearrange::{
    decreasing_rearrangement, star_function, symmetric_decreasing_rearrangement, DEFAULT_INEQUALITY_GRID,
};
use crate::solver::{solve, BoundaryCondition, RobinParam};
use crate::tolerances::GAP_AGREEMENT;

pub use io::Format;
use io::{read_step, Sink};

/// Parsed command line.
#[derive(Debug, Clone, Parser)]
#[command(name = "rodsym", version, about = "Exact heated-rod solvers, rearrangements and comparison audits")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format; inferred from the --out extension when omitted.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Solve −u'' = f under robin:<alpha>, neumann or dirichlet conditions.
    Solve {
        #[arg(long)]
        bc: BoundaryCondition,
        #[arg(long = "in")]
        input: PathBuf,
        /// Sample count for CSV output.
        #[arg(long, default_value_t = 1001)]
        grid: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Decreasing (dec) or symmetric decreasing (sym) rearrangement.
    Rearrange {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Sym)]
        mode: Mode,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Star function t ↦ ∫₀ᵗ f* at its nodes.
    Star {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Rearrangement inequalities on a seeded random corpus.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Outer quadrature cells for the triple integrals.
        #[arg(long, default_value_t = DEFAULT_INEQUALITY_GRID)]
        grid: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the solutions for f and its rearrangement.
    Compare {
        #[arg(value_enum)]
        problem: Problem,
        #[arg(long = "in")]
        input: PathBuf,
        /// Robin parameter (robin only).
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Comparison audit over a seeded random corpus.
    Audit {
        #[arg(value_enum)]
        problem: Problem,
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Temperature gap of a half-heated Robin rod.
    Gap {
        #[command(subcommand)]
        command: GapCommand,
    },
    /// Closed-form example: sources χ[−π,0] and χ[−π/2,π/2].
    Example {
        #[arg(long, value_delimiter = ',', default_values_t = [0.1, 0.5, 1.0, 10.0])]
        alpha: Vec<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum GapCommand {
    /// CSV of b, gap_numeric, gap_formula over centres in [−π/2, π/2].
    Scan {
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = DEFAULT_SCAN_POINTS)]
        grid: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSV of alpha, b_crit (empty when the maximiser is at the ends).
    Crit {
        #[arg(long = "alpha-grid", value_delimiter = ',', required = true)]
        alpha_grid: Vec<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Best union of grid cells with total length π.
    Search {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        cells: usize,
        /// Heated length; defaults to π.
        #[arg(long)]
        measure: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        starts: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Dec,
    Sym,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Hl,
    Rs,
    Baernstein,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    Robin,
    Neumann,
    Dirichlet,
}

/// Failure of a command, mapped to an exit code.
#[derive(Debug)]
pub enum Failure {
    /// A mathematical check failed; exit 1.
    Check(String),
    /// Bad input, bad arguments or I/O; exit 2.
    Input(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Check(_) => 1,
            Failure::Input(_) => 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            // A solve that fails its own certification is a failed check.
            Error::Internal(_) => Failure::Check(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(format!("I/O error: {e}"))
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parses `args` (program name first) and runs; returns the exit code.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => run_with(&cfg, stdout, stderr),
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                2
            } else {
                let _ = write!(stdout, "{}", e.render());
                0
            }
        }
    }
}

/// Runs against the process stdout and stderr.
pub fn run(config: &RunConfig) -> i32 {
    let out = std::io::stdout();
    let err = std::io::stderr();
    run_with(config, &mut out.lock(), &mut err.lock())
}

pub fn run_with(config: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match dispatch(&config.command, stdout, stderr) {
        Ok(()) => 0,
        Err(f) => {
            let msg = match &f {
                Failure::Check(m) => format!("check failed: {m}"),
                Failure::Input(m) => format!("error: {m}"),
            };
            let _ = writeln!(stderr, "{msg}");
            f.exit_code()
        }
    }
}

fn dispatch(cmd: &Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Solve { bc, input, grid, output } => {
            let f = read_step(input)?;
            let u = solve(&f, *bc)?;
            let mut sink = Sink::open(output.out.as_deref(), output.format, Format::Json, stdout)?;
            match sink.format() {
                Format::Json => sink.json(&u)?,
                Format::Csv => {
                    if *grid < 2 {
                        return Err(Failure::Input(format!("--grid must be at least 2, got {grid}")));
                    }
                    sink.csv(&["x", "u"], u.sample(*grid).into_iter().map(|(x, y)| vec![x, y]))?
                }
            }
            sink.finish()
        }
        Command::Rearrange { input, mode, output } => {
            let f = read_step(input)?;
            let r = match mode {
                Mode::Dec => decreasing_rearrangement(&f),
                Mode::Sym => symmetric_decreasing_rearrangement(&f),
            };
            let mut sink = Sink::open(output.out.as_deref(), output.format, Format::Json, stdout)?;
            match sink.format() {
                Format::Json => sink.json(&r)?,
                Format::Csv => sink.csv(
                    &["lo", "hi", "value"],
                    r.pieces().map(|(a, b, v)| vec![a, b, v]),
                )?,
            }
            sink.finish()
        }
        Command::Star { input, output } => {
            let s = star_function(&read_step(input)?);
            let mut sink = Sink::open(output.out.as_deref(), output.format, Format::Csv, stdout)?;
            match sink.format() {
                Format::Json => sink.json(&s)?,
                Format::Csv => sink.csv(
                    &["t", "star"],
                    s.nodes().iter().zip(s.values()).map(|(&t, &v)| vec![t, v]),
                )?,
            }
            sink.finish()
        }
        Command::Check { kind, seed, count, grid, out } => {
            let kind = match kind {
                CheckKind::Hl => InequalityKind::HardyLittlewood,
                CheckKind::Rs => InequalityKind::RieszSobolev,
                CheckKind::Baernstein => InequalityKind::Baernstein,
            };
            let recs = inequality_audit(kind, *count, *seed, *grid)?;
            let mut sink = Sink::open(out.as_deref(), Some(Format::Json), Format::Json, stdout)?;
            for r in &recs {
                sink.json(r)?;
            }
            sink.finish()?;
            let failed: Vec<_> = recs.iter().filter(|r| !r.check.pass).collect();
            for r in &failed {
                writeln!(stderr, "failing instance: {}", io::to_json(r)?)?;
            }
            if failed.is_empty() {
                Ok(())
            } else {
                Err(Failure::Check(format!("{} of {count} {kind} instances failed", failed.len())))
            }
        }
        Command::Compare { problem, input, alpha, out } => {
            let f = read_step(input)?;
            let report = match problem {
                Problem::Robin => robin_compare(&f, RobinParam::new(*alpha)?)?,
                Problem::Neumann => neumann_compare(&f)?,
                Problem::Dirichlet => dirichlet_compare(&f)?,
            };
            let mut sink = Sink::open(out.as_deref(), Some(Format::Json), Format::Json, stdout)?;
            sink.json(&report)?;
            sink.finish()?;
            if report.pass {
                Ok(())
            } else {
                writeln!(stderr, "failing instance: {}", io::to_json(&f)?)?;
                Err(Failure::Check(format!("{} comparison failed", report.theorem)))
            }
        }
        Command::Audit { problem, count, seed, out } => {
            let theorem = match problem {
                Problem::Robin => Theorem::Robin,
                Problem::Neumann => Theorem::Neumann,
                Problem::Dirichlet => Theorem::DirichletPointwise,
            };
            let summary = audit(theorem, *count, *seed, &CompareOptions::default())?;
            let mut sink = Sink::open(out.as_deref(), Some(Format::Json), Format::Json, stdout)?;
            for r in &summary.records {
                sink.json(&r.report)?;
            }
            sink.finish()?;
            for r in summary.failures() {
                writeln!(stderr, "failing instance: {}", io::to_json(r)?)?;
            }
            writeln!(
                stderr,
                "{theorem}: {}/{} passed, worst margin {:e}",
                summary.passed, summary.count, summary.worst_margin
            )?;
            if summary.all_pass() {
                Ok(())
            } else {
                Err(Failure::Check(format!("{} of {count} instances failed", summary.count - summary.passed)))
            }
        }
        Command::Gap { command } => gap(command, stdout, stderr),
        Command::Example { alpha, out } => {
            let mut sink = Sink::open(out.as_deref(), Some(Format::Json), Format::Json, stdout)?;
            for &a in alpha {
                sink.json(&example_summary(RobinParam::new(a)?)?)?;
            }
            sink.finish()
        }
    }
}

fn gap(cmd: &GapCommand, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    match cmd {
        GapCommand::Scan { alpha, grid, out } => {
            let s = gap_scan(RobinParam::new(*alpha)?, *grid)?;
            let mut sink = Sink::open(out.as_deref(), Some(Format::Csv), Format::Csv, stdout)?;
            let rows = (0..s.b_values.len()).map(|i| vec![s.b_values[i], s.gaps_numeric[i], s.gaps_formula[i]]);
            sink.csv(&["b", "gap_numeric", "gap_formula"], rows)?;
            sink.finish()?;
            if s.max_disagreement > GAP_AGREEMENT {
                return Err(Failure::Check(format!(
                    "numeric and closed-form gaps differ by {:e}",
                    s.max_disagreement
                )));
            }
            writeln!(stderr, "argmax b = {}", s.argmax_numeric)?;
            Ok(())
        }
        GapCommand::Crit { alpha_grid, out } => {
            let mut sink = Sink::open(out.as_deref(), Some(Format::Csv), Format::Csv, stdout)?;
            let mut rows = Vec::with_capacity(alpha_grid.len());
            for &a in alpha_grid {
                rows.push(vec![io::fmt_f64(a), b_crit(a)?.map(io::fmt_f64).unwrap_or_default()]);
            }
            sink.csv_strings(&["alpha", "b_crit"], rows)?;
            sink.finish()
        }
        GapCommand::Search { alpha, cells, measure, seed, starts, out } => {
            let mut opts = SearchOptions { seed: *seed, starts: *starts, ..Default::default() };
            if let Some(m) = measure {
                opts.measure = *m;
            }
            let r = extremal_search_with(RobinParam::new(*alpha)?, *cells, &opts)?;
            let mut sink = Sink::open(out.as_deref(), Some(Format::Json), Format::Json, stdout)?;
            sink.json(&r)?;
            sink.finish()
        }
    }
}
