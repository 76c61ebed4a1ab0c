use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fiblie::checks::Suite;
use fiblie::report::{Format, Report};
use fiblie::{commands, CliError};
use fiblie_core::{AlgebraId, Execution};

#[derive(Parser)]
#[command(name = "fiblie", version, about = "Exact homology of the Fibonacci Lie algebra over GF(2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of each graded piece.
    Dims {
        #[arg(long, default_value = "L")]
        algebra: AlgebraId,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u16).range(1..))]
        max_degree: u16,
        #[command(flatten)]
        output: Output,
    },
    /// Graded H_1 or H_2 with partial sums.
    Homology {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        n: u8,
        #[arg(long, default_value = "L")]
        algebra: AlgebraId,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u16).range(1..))]
        max_degree: u16,
        #[command(flatten)]
        output: Output,
    },
    /// Run a named check suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Run a single check from the suite.
        #[arg(long)]
        check: Option<String>,
        #[arg(long, default_value_t = 14, value_parser = clap::value_parser!(u16).range(1..))]
        max_degree: u16,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Hopf formula against Chevalley–Eilenberg H_2(L).
    Hopf {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u16).range(1..))]
        max_degree: u16,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write or validate a basis cache.
    Cache {
        #[arg(long, conflicts_with = "read", required_unless_present = "read")]
        write: Option<PathBuf>,
        #[arg(long)]
        read: Option<PathBuf>,
        #[arg(long, default_value = "L")]
        algebra: AlgebraId,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u16).range(1..))]
        max_degree: u16,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

fn finish(report: &Report) -> Result<(), CliError> {
    for c in report.checks.iter().filter(|c| !c.passed()) {
        eprintln!("FAIL {}: {}", c.name, c.details);
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(CliError::Failed(report.failures()))
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("FIBLIE_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("FIBLIE_THREADS must be a positive integer, got {value:?}")))?;
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    #[cfg(not(feature = "parallel"))]
    let _ = n;
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    configure_threads()?;
    let exec = Execution::default();
    match cli.command {
        Command::Dims { algebra, max_degree, output } => {
            let report = commands::dims(algebra, max_degree.into(), exec);
            emit(&report.render(output.format), output.out.as_ref())
        }
        Command::Homology { n, algebra, max_degree, output } => {
            let report = commands::homology(algebra, n.into(), max_degree.into(), exec)?;
            emit(&report.render(output.format), output.out.as_ref())?;
            finish(&report)
        }
        Command::Verify { suite, check, max_degree, report: path } => {
            let report = commands::verify(suite, check.as_deref(), max_degree.into(), exec)?;
            for c in &report.checks {
                let status = if c.passed() { "pass" } else { "FAIL" };
                println!("{status:4} {:26} [{}..{}] {}", c.name, c.degree_range.0, c.degree_range.1, c.details);
            }
            if let Some(path) = path {
                emit(&report.to_json(), Some(&path))?;
            }
            finish(&report)
        }
        Command::Hopf { max_degree, format, out } => {
            let report = commands::hopf(max_degree.into(), exec)?;
            emit(&report.render(format), out.as_ref())?;
            finish(&report)
        }
        Command::Cache { write, read, algebra, max_degree } => {
            if let Some(path) = write {
                let cache = commands::cache_write(&path, algebra, max_degree.into())?;
                println!("wrote {} entries to {}", cache.entries.len(), path.display());
                Ok(())
            } else {
                let path = read.expect("clap requires --write or --read");
                let report = commands::cache_read(&path)?;
                emit(&report.to_json(), None)?;
                finish(&report)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fiblie: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
