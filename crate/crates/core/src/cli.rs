//! The command-line front end. Every command returns its report as a
//! string so that it can be driven in-process.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::automaton::{to_dot, LeastGeneratingSet, PathAutomaton};
use crate::balg::TraceAlgebra;
use crate::cantor::{bits_to_string, UpWord};
use crate::dsl::FamilyExpr;
use crate::error::Error;
use crate::oracle::DEFAULT_SEED;
use crate::ordinal::RankValue;
use crate::suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_SUITE_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "cantor-rank",
    version,
    about = "Cantor-Bendixson analysis of closed families of binary sequences"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a family expression symbolically.
    Eval { expr: String },
    /// Rank, degree and top points of an automaton file.
    Rank {
        file: PathBuf,
        /// Write one DOT file per derivative step into this directory.
        #[arg(long, value_name = "DIR")]
        dump_steps: Option<PathBuf>,
    },
    /// Compile a family expression to an automaton file.
    Compile { expr: String, out: PathBuf },
    /// Split a family into clopen parts of degree 1.
    Decompose { file: PathBuf },
    /// Rank and degree of the trace algebra.
    Invariants { file: PathBuf },
    /// Decide isomorphism of two trace algebras.
    Iso { a: PathBuf, b: PathBuf },
    /// Least generating set, if the isolated points are dense.
    Lgs { file: PathBuf },
    /// The perfect kernel.
    Kernel { file: PathBuf },
    /// Test a point for being an accumulation point, or find one.
    Acc {
        file: PathBuf,
        point: Option<String>,
    },
    /// Cantor-Bendixson rank of a point.
    Pointrank { file: PathBuf, point: String },
    /// Graphviz rendering of an automaton file.
    ExportDot {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run the acceptance battery.
    CheckSuite {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

/// A failed command: its diagnostic and exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::AutomatonFormat { .. } | Error::Io(_) => EXIT_USAGE,
            Error::Precondition(_) | Error::NotSuperatomic(_) | Error::NotCompilable(_) => {
                EXIT_PRECONDITION
            }
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<String, Failure>;

fn load(path: &Path) -> Result<PathAutomaton, Error> {
    let text = fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })?;
    text.parse()
}

fn word(s: &str) -> Result<UpWord, Error> {
    Ok(s.parse()?)
}

fn states(n: usize) -> String {
    format!("{n} state{}", if n == 1 { "" } else { "s" })
}

fn top_line(top: &Option<Vec<UpWord>>) -> String {
    match top {
        Some(t) => t
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(", "),
        None => "-".into(),
    }
}

pub fn cmd_eval(expr: &str) -> CmdResult {
    let e: FamilyExpr = expr.parse().map_err(Error::from)?;
    Ok(e.evaluate().to_string())
}

pub fn cmd_rank(file: &Path, dump_steps: Option<&Path>) -> CmdResult {
    let a = load(file)?;
    let r = a.rank_degree();
    if let Some(dir) = dump_steps {
        fs::create_dir_all(dir).map_err(Error::from)?;
        for (i, step) in r.chain.iter().enumerate() {
            let dot = to_dot(step, &format!("derivative {i}"));
            fs::write(dir.join(format!("step-{i}.dot")), dot).map_err(Error::from)?;
        }
    }
    let mut out = format!("rank: {}\n", r.rank);
    if let Some(d) = r.degree {
        out += &format!("degree: {d}\ntop: {}\n", top_line(&r.top_points));
    }
    if r.rank == RankValue::Infinity {
        out += &format!("kernel: {}\n", states(r.last().len()));
    }
    out += &format!("steps: {}\n", r.chain.len() - 1);
    Ok(out)
}

pub fn cmd_compile(expr: &str, out: &Path) -> CmdResult {
    let e: FamilyExpr = expr.parse().map_err(Error::from)?;
    let a = e.compile()?;
    fs::write(out, a.to_string()).map_err(Error::from)?;
    Ok(format!("wrote {} to {}\n", states(a.len()), out.display()))
}

pub fn cmd_decompose(file: &Path) -> CmdResult {
    let a = load(file)?;
    let parts = a.decompose_alpha_minimal()?;
    let mut out = format!("parts: {}\n", parts.len());
    for (i, part) in parts.iter().enumerate() {
        let r = a.restrict(part).rank_degree();
        out += &format!("part {i}: {part} ({}, {})\n", r.rank, r.degree.unwrap_or(0));
    }
    Ok(out)
}

pub fn cmd_invariants(file: &Path) -> CmdResult {
    let (alpha, n) = TraceAlgebra::new(load(file)?).cb_invariants()?;
    Ok(format!("rank: {alpha}\ndegree: {n}\n"))
}

pub fn cmd_iso(a: &Path, b: &Path) -> CmdResult {
    let (a, b) = (TraceAlgebra::new(load(a)?), TraceAlgebra::new(load(b)?));
    let yes = a.iso_equivalent(&b)?;
    Ok(format!("isomorphic: {}\n", if yes { "yes" } else { "no" }))
}

pub fn cmd_lgs(file: &Path) -> CmdResult {
    let a = load(file)?;
    match a.least_generating_set_info()? {
        LeastGeneratingSet::NotDense { witness } => {
            if a.deterministic_suffix_states().iter().any(|&d| d) {
                Ok(format!(
                    "least generating set: none (no isolated points in {witness})\n"
                ))
            } else {
                Ok("least generating set: none (no isolated points)\n".into())
            }
        }
        LeastGeneratingSet::Isolated(entries) => {
            let mut out = String::from("least generating set: the isolated points (dense)\n");
            out += &format!("single-path states: {}\n", entries.len());
            for s in entries {
                out += &format!(
                    "state {} via {}: {}\n",
                    a.name(s.state),
                    if s.access.is_empty() {
                        "-".into()
                    } else {
                        bits_to_string(&s.access)
                    },
                    s.point
                );
            }
            Ok(out)
        }
    }
}

pub fn cmd_kernel(file: &Path) -> CmdResult {
    let a = load(file)?;
    let k = a.kernel();
    let mut out = format!("kernel: {}\n", states(k.len()));
    if let Some(seed) = a.two_tree_witness() {
        out += &format!(
            "two-tree: state {} via {}, cycles {} and {}\n",
            a.name(seed.state),
            if seed.access.is_empty() {
                "-".into()
            } else {
                bits_to_string(&seed.access)
            },
            bits_to_string(&seed.word0),
            bits_to_string(&seed.word1)
        );
    }
    out += &k.to_string();
    Ok(out)
}

pub fn cmd_acc(file: &Path, point: Option<&str>) -> CmdResult {
    let a = load(file)?;
    match point {
        Some(p) => {
            let yes = a.is_accumulation_point(&word(p)?);
            Ok(format!(
                "accumulation point: {}\n",
                if yes { "yes" } else { "no" }
            ))
        }
        None => Ok(format!(
            "accumulation point: {}\n",
            a.find_accumulation_point()?
        )),
    }
}

pub fn cmd_pointrank(file: &Path, point: &str) -> CmdResult {
    let a = load(file)?;
    Ok(format!("{}\n", a.point_rank(&word(point)?)?))
}

pub fn cmd_export_dot(file: &Path, out: Option<&Path>) -> CmdResult {
    let a = load(file)?;
    let title = file
        .file_stem()
        .map_or("automaton".into(), |s| s.to_string_lossy().into_owned());
    let dot = to_dot(&a, &title);
    match out {
        Some(path) => {
            fs::write(path, dot).map_err(Error::from)?;
            Ok(format!("wrote {}\n", path.display()))
        }
        None => Ok(dot),
    }
}

pub fn cmd_check_suite(seed: u64) -> CmdResult {
    let report = suite::run_suite(seed);
    if report.passed() {
        Ok(report.to_string())
    } else {
        Err(Failure {
            code: EXIT_SUITE_FAILED,
            message: report.to_string(),
        })
    }
}

pub fn run(command: &Command) -> CmdResult {
    match command {
        Command::Eval { expr } => cmd_eval(expr),
        Command::Rank { file, dump_steps } => cmd_rank(file, dump_steps.as_deref()),
        Command::Compile { expr, out } => cmd_compile(expr, out),
        Command::Decompose { file } => cmd_decompose(file),
        Command::Invariants { file } => cmd_invariants(file),
        Command::Iso { a, b } => cmd_iso(a, b),
        Command::Lgs { file } => cmd_lgs(file),
        Command::Kernel { file } => cmd_kernel(file),
        Command::Acc { file, point } => cmd_acc(file, point.as_deref()),
        Command::Pointrank { file, point } => cmd_pointrank(file, point),
        Command::ExportDot { file, out } => cmd_export_dot(file, out.as_deref()),
        Command::CheckSuite { seed } => cmd_check_suite(*seed),
    }
}

/// What a process run produces.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
/// Usage errors exit with 1; `--help` and `--version` succeed.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            return Outcome {
                code,
                stdout,
                stderr,
            };
        }
    };
    match run(&cli.command) {
        Ok(stdout) => Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(Failure { code, message }) if code == EXIT_SUITE_FAILED => Outcome {
            code,
            stdout: message,
            stderr: "check-suite: at least one criterion failed\n".into(),
        },
        Err(Failure { code, message }) => Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        },
    }
}
