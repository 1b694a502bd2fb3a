//! Command-line front end: `pairsphere verify <suite|all>` runs the check
//! suites and prints a report, `pairsphere orbit <generator>` dumps seeded
//! orbits as CSV.
//!
//! Exit codes: 0 when every check passes, 1 when any check fails or an I/O
//! error occurs while writing output, 2 on usage errors.

use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pairsphere::{dump_orbits, run, OrbitTarget, ReportFormat, RunConfig, Suite};

#[derive(Parser)]
#[command(
    name = "pairsphere",
    version,
    about = "Verification suites for quotients of S^2 x S^2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one named check suite, or all of them.
    Verify(VerifyArgs),
    /// Dump seeded orbits of an action or deck generator as CSV.
    Orbit(OrbitArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name (algebra, so3, strata, actions, lens, covers, descent,
    /// theorem, obstruction) or "all".
    suite: String,

    /// Master seed of every random stream.
    #[arg(long, default_value_t = 42)]
    seed: u64,

    /// Sample count per check.
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,

    /// Tolerance for closed-form algebraic identities.
    #[arg(long = "tol-identity", default_value_t = 1e-11)]
    tol_identity: f64,

    /// Tolerance for chart round trips and lifts.
    #[arg(long = "tol-geometry", default_value_t = 1e-9)]
    tol_geometry: f64,

    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Also write the report to this file.
    #[arg(long)]
    dump: Option<PathBuf>,
}

#[derive(Args)]
struct OrbitArgs {
    /// Generator: f1, f5, l21, l41, l81 or l85.
    generator: String,

    /// Number of orbits to dump.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    count: u64,

    /// Write the CSV here instead of stdout.
    #[arg(long)]
    dump: Option<PathBuf>,

    /// Seed of the orbit starting points.
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn verify(args: &VerifyArgs) -> ExitCode {
    let suites = if args.suite == "all" {
        Suite::all()
    } else {
        match Suite::from_str(&args.suite) {
            Ok(suite) => vec![suite],
            Err(err) => return usage_error(&err.to_string()),
        }
    };
    if args.tol_identity.is_nan() || args.tol_identity <= 0.0 {
        return usage_error("--tol-identity must be positive");
    }
    if args.tol_geometry.is_nan() || args.tol_geometry <= 0.0 {
        return usage_error("--tol-geometry must be positive");
    }
    // fail on an unwritable dump path before any work happens
    let mut dump_file = match &args.dump {
        Some(path) => match File::create(path) {
            Ok(f) => Some(f),
            Err(err) => return usage_error(&format!("cannot write {}: {err}", path.display())),
        },
        None => None,
    };
    let config = RunConfig {
        seed: args.seed,
        samples: args.samples as usize,
        tol_identity: args.tol_identity,
        tol_geometry: args.tol_geometry,
        suites,
        format: match args.format {
            FormatArg::Text => ReportFormat::Text,
            FormatArg::Json => ReportFormat::Json,
        },
        dump_path: args.dump.clone(),
    };
    let report = match run(&config) {
        Ok(report) => report,
        Err(err) => return usage_error(&err.to_string()),
    };
    let rendered = report.render(config.format);
    print!("{rendered}");
    if let Some(file) = dump_file.as_mut() {
        if let Err(err) = file.write_all(rendered.as_bytes()) {
            eprintln!("error: writing report: {err}");
            return ExitCode::from(1);
        }
    }
    if report.all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn orbit(args: &OrbitArgs) -> ExitCode {
    let target = match OrbitTarget::from_str(&args.generator) {
        Ok(target) => target,
        Err(_) => {
            return usage_error(&format!(
                "unknown generator `{}` (expected f1, f5, l21, l41, l81 or l85)",
                args.generator
            ))
        }
    };
    let result = match &args.dump {
        Some(path) => match File::create(path) {
            Ok(file) => dump_orbits(args.seed, target, args.count as usize, file),
            Err(err) => return usage_error(&format!("cannot write {}: {err}", path.display())),
        },
        None => dump_orbits(
            args.seed,
            target,
            args.count as usize,
            std::io::stdout().lock(),
        ),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Verify(args) => verify(args),
        Command::Orbit(args) => orbit(args),
    }
}
