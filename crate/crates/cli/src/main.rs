use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, ValueEnum};
use hk3_core::suites::{run, series_dump, RunConfig, Suite};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_suite(s: &str) -> Result<Vec<Suite>, String> {
    Suite::parse(s).ok_or_else(|| format!("unknown suite {s:?}; expected all, theta, lattice, periods or invariants"))
}

/// Run the hk3 verification suites and report one line per check.
#[derive(Debug, Parser)]
#[command(name = "hk3", version)]
struct Cli {
    /// Suite to run: all, theta, lattice, periods or invariants. Repeatable.
    #[arg(long = "suite", value_parser = parse_suite, default_value = "all")]
    suites: Vec<Vec<Suite>>,

    /// Truncation order D for theta series (at least 16).
    #[arg(long, default_value_t = 64)]
    order: i64,

    #[arg(long, default_value_t = 7)]
    seed: u64,

    /// Random samples per randomized lattice check.
    #[arg(long, default_value_t = 100)]
    samples: usize,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the underlying series as JSON to this path.
    #[arg(long)]
    emit_series: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => {
            let _ = e.print();
            // value errors omit the usage line
            if !e.to_string().contains("Usage:") {
                eprintln!("\n{}", Cli::command().render_usage());
            }
            return ExitCode::from(2);
        }
    };
    let cfg = RunConfig {
        suites: cli.suites.into_iter().flatten().collect(),
        order: cli.order,
        seed: cli.seed,
        samples: cli.samples,
    };
    if let Err(e) = cfg.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let report = match run(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Some(path) = &cli.emit_series {
        let dump = series_dump(&cfg).map(|v| serde_json::to_string(&v).expect("serializable"));
        let written = dump.map_err(|e| e.to_string()).and_then(|s| std::fs::write(path, s).map_err(|e| e.to_string()));
        if let Err(e) = written {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    match cli.format {
        Format::Json => println!("{}", report.to_json_string()),
        Format::Text => print!("{}", report.to_text()),
    }
    ExitCode::from(report.exit_code() as u8)
}
