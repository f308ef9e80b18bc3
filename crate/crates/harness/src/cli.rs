//! Command-line front end. Exit codes: 0 ok, 1 failed checks, 2 bad input.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::compute::run_compute;
use crate::config::{Format, Mode, RunConfig};
use crate::inputs::InputError;
use crate::report::Report;
use crate::search::{search_problem1, search_problem2, search_problem3};
use crate::verify::run_verify;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "moddom", version, about = "Domination in modular graph products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bounds, exact value and characterization for input pairs.
    Compute(Common),
    /// Run every invariant suite against oracles.
    Verify(Common),
    /// Search for pairs with γ(G ⋄ H) = 5.
    SearchP1(Common),
    /// Tabulate γ(G ⋄ H) over pairs of diameter-2 graphs.
    SearchP2(Common),
    /// Search for graphs with γ(G ⋄ G) ≥ γ(G) + 2.
    SearchP3(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Jsonl,
    Csv,
}

#[derive(Args)]
struct Common {
    /// Family specs (e.g. `cycle:6`, `complement:path:8`) or graph6 files.
    #[arg(long, num_args = 1..)]
    inputs: Vec<String>,
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    /// Largest dominating set size the product solver searches for.
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Jsonl)]
    format: FormatArg,
    /// Include wall-clock timings in `compute` records.
    #[arg(long)]
    timings: bool,
    /// `compute`: every pair `i ≤ j` of inputs.
    #[arg(long)]
    all_pairs: bool,
    /// `search-p3`: drop the diameter-2 filter.
    #[arg(long)]
    unrestricted: bool,
}

fn config(mode: Mode, c: Common) -> RunConfig {
    RunConfig {
        mode,
        inputs: c.inputs,
        max_n: c.max_n,
        budget: c.budget,
        threads: c.threads,
        seed: c.seed,
        output: c.output,
        format: match c.format {
            FormatArg::Jsonl => Format::Jsonl,
            FormatArg::Csv => Format::Csv,
        },
        timings: c.timings,
        all_pairs: c.all_pairs,
        unrestricted: c.unrestricted,
    }
}

fn run(config: &RunConfig) -> Result<Report> {
    if let Some(t) = config.threads {
        // A second build in the same process keeps the existing pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match config.mode {
        Mode::Compute => run_compute(config),
        Mode::Verify => Ok(run_verify(config)?),
        Mode::SearchP1 => search_problem1(config),
        Mode::SearchP2 => search_problem2(config),
        Mode::SearchP3 => search_problem3(config),
    }
}

fn write(report: &Report, config: &RunConfig, stdout: &mut dyn Write) -> Result<()> {
    match &config.output {
        Some(path) => {
            let mut out = BufWriter::new(File::create(path)?);
            report.write_to(&mut out, config.format)?;
            out.flush()?;
        }
        None => {
            report.write_to(stdout, config.format)?;
            stdout.flush()?;
        }
    }
    Ok(())
}

/// Parses `args` (program name first), runs, and returns the exit code.
pub fn run_from<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let (mode, common) = match cli.command {
        Command::Compute(c) => (Mode::Compute, c),
        Command::Verify(c) => (Mode::Verify, c),
        Command::SearchP1(c) => (Mode::SearchP1, c),
        Command::SearchP2(c) => (Mode::SearchP2, c),
        Command::SearchP3(c) => (Mode::SearchP3, c),
    };
    let config = config(mode, common);
    let outcome = run(&config).and_then(|report| {
        write(&report, &config, stdout)?;
        Ok(report)
    });
    let (code, message) = match outcome {
        Ok(report) if report.failed() => (
            EXIT_FAILURE,
            Some(format!(
                "{} of {} checks failed",
                report.summary.failures, report.summary.checks
            )),
        ),
        Ok(_) => (EXIT_OK, None),
        Err(e) if e.downcast_ref::<InputError>().is_some() => (EXIT_INPUT, Some(e.to_string())),
        Err(e) => (EXIT_FAILURE, Some(format!("{e:#}"))),
    };
    if let Some(m) = message {
        let _ = writeln!(stderr, "moddom: {m}");
    }
    code
}
