//! Command-line front end: bounds, the comparison table, and end-to-end
//! solve-and-round runs on edge-list files or built-in graphs.
//!
//! [`run`] parses arguments and returns the exit code together with the text
//! that belongs on stdout or stderr, so the whole surface is testable without
//! spawning a process.

mod commands;
mod render;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use girthcut::solution::{Mode, ProfileKind};

pub use commands::{cmd_bound, cmd_graph_info, cmd_solve, cmd_table, parse_list, CliError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_INGESTION: i32 = 4;

/// Caps the number of sampler threads.
pub const THREADS_ENV: &str = "GIRTHCUT_THREADS";

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "girthcut", version)]
#[command(about = "Explicit SDP vectors and hyperplane rounding for MaxCut on high-girth regular graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the cut-fraction guarantee for degree d and radius k
    Bound {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ProfileArg::Optimal)]
        profile: ProfileArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Relative expectations against the Lyons bound (defaults to the published rows)
    Table {
        /// k values: `3`, `3,4` or `3..6`
        #[arg(long)]
        k: Option<String>,
        /// d values: `3`, `3,5` or `3..9`
        #[arg(long)]
        d: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build the vector solution on a graph, then round it
    Solve {
        #[command(flatten)]
        source: GraphSource,
        /// Defaults to floor(girth/2) in strict mode and the diameter in practical mode
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = ProfileArg::Optimal)]
        profile: ProfileArg,
        #[arg(long, value_enum, default_value_t = ModeArg::Strict)]
        mode: ModeArg,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Size, degree, girth and diameter of a graph
    GraphInfo {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Edge-list file: one `u v` pair per line, 0-based, `#` comments
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// petersen, heawood, pappus, mcgee or tutte_coxeter
    #[arg(long)]
    pub builtin: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProfileArg {
    Optimal,
    Closedform,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Strict,
    Practical,
}

impl From<ProfileArg> for ProfileKind {
    fn from(p: ProfileArg) -> Self {
        match p {
            ProfileArg::Optimal => ProfileKind::Optimal,
            ProfileArg::Closedform => ProfileKind::ClosedForm,
        }
    }
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Strict => Mode::Strict,
            ModeArg::Practical => Mode::Practical,
        }
    }
}

/// Exit code plus captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one invocation. `threads` is the sampler thread cap, normally read
/// from [`THREADS_ENV`].
pub fn run<I, T>(args: I, threads: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli.command, threads) {
        Ok(stdout) => Outcome { code: EXIT_OK, stdout, stderr: String::new() },
        Err(e) => Outcome {
            code: e.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", e.message),
        },
    }
}

fn execute(command: &Command, threads: Option<&str>) -> Result<String, CliError> {
    match command {
        Command::Bound { d, k, profile, format } => cmd_bound(*d, *k, (*profile).into(), *format),
        Command::Table { k, d, format } => {
            let pairs = match (k, d) {
                (None, None) => girthcut::bounds::PUBLISHED_ROWS.to_vec(),
                (Some(k), Some(d)) => {
                    let ks = parse_list(k)?;
                    let ds = parse_list(d)?;
                    ks.iter().flat_map(|&k| ds.iter().map(move |&d| (k, d))).collect()
                }
                _ => return Err(CliError::usage("give both --k and --d, or neither")),
            };
            cmd_table(&pairs, *format)
        }
        Command::Solve { source, k, profile, mode, samples, seed, format } => {
            let threads = parse_threads(threads)?;
            cmd_solve(
                source,
                *k,
                (*profile).into(),
                (*mode).into(),
                *samples,
                *seed,
                threads,
                *format,
            )
        }
        Command::GraphInfo { source, format } => cmd_graph_info(source, *format),
    }
}

fn parse_threads(value: Option<&str>) -> Result<Option<usize>, CliError> {
    match value.map(str::trim) {
        None | Some("") => Ok(None),
        Some(v) => match v.parse::<usize>() {
            Ok(t) if t > 0 => Ok(Some(t)),
            _ => Err(CliError::usage(format!("{THREADS_ENV} must be a positive integer, got `{v}`"))),
        },
    }
}
