use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use emptyrect::generate::{generate, Kind};
use emptyrect::harness::{self, Verdict};
use emptyrect::io::{parse_bounds, read_points, read_queries, write_points};
use emptyrect::oracle::DEFAULT_ORACLE_CAP;
use emptyrect::{Index, PointSet, Rect};

#[derive(Parser)]
#[command(
    name = "emptyrect",
    version,
    about = "Largest empty rectangle containing a query point"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated point file.
    Generate {
        #[arg(long, default_value = "uniform")]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_parser = parse_bounds, default_value = "0,0,4096,4096")]
        bounds: Rect,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Preprocess a point file and report structure counters.
    Build {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Answer a batch of queries.
    Query {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        queries: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check answers against the brute-force oracle.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Query file; random queries are drawn when absent.
        #[arg(long)]
        queries: Option<PathBuf>,
        #[arg(long, default_value_t = 100)]
        num_queries: usize,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        verify_cap: usize,
    },
    /// Counter measurements over n = 256..4096 with log-log slopes.
    Bench {
        #[arg(long, default_value = "staircase")]
        kind: Kind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long, default_value_t = 200)]
        num_queries: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Randomized checks of the Monge toolkit against exhaustive scans.
    MongeFuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 64)]
        max_dim: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A point file, or a generated set when no file is given.
#[derive(Args)]
struct Input {
    #[arg(long)]
    points: Option<PathBuf>,
    #[arg(long, value_parser = parse_bounds)]
    bounds: Option<Rect>,
    #[arg(long, default_value = "uniform")]
    kind: Kind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl Input {
    fn load(&self) -> Result<PointSet, String> {
        match (&self.points, self.n) {
            (Some(path), _) => {
                let text =
                    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                read_points(&text, self.bounds).map_err(|e| format!("{}: {e}", path.display()))
            }
            (None, Some(n)) => {
                let bounds = self.bounds.unwrap_or(Rect {
                    x_lo: 0,
                    y_lo: 0,
                    x_hi: 4096,
                    y_hi: 4096,
                });
                generate(self.kind, n, self.seed, bounds).map_err(|e| e.to_string())
            }
            (None, None) => Err("either --points or --n is required".into()),
        }
    }
}

fn emit(value: &serde_json::Value, out: Option<&PathBuf>) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).expect("reports serialize") + "\n";
    write(&text, out)
}

fn write(text: &str, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_queries(path: &PathBuf) -> Result<Vec<(i64, i64)>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    read_queries(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Generate {
            kind,
            n,
            seed,
            bounds,
            out,
        } => {
            let ps = generate(kind, n, seed, bounds).map_err(|e| e.to_string())?;
            write(&write_points(&ps), out.as_ref())?;
        }
        Command::Build { input, out } => {
            let idx = Index::preprocess(&input.load()?);
            emit(&harness::build_report(&idx), out.as_ref())?;
        }
        Command::Query {
            input,
            queries,
            out,
        } => {
            let idx = Index::preprocess(&input.load()?);
            let report =
                harness::query_report(&idx, &load_queries(&queries)?).map_err(|e| e.to_string())?;
            emit(&report, out.as_ref())?;
        }
        Command::Verify {
            input,
            queries,
            num_queries,
            verify_cap,
        } => {
            let ps = input.load()?;
            let queries = match &queries {
                Some(path) => load_queries(path)?,
                None => harness::random_queries(ps.bounds(), num_queries, input.seed),
            };
            let verdict = harness::verify(&ps, &queries, verify_cap).map_err(|e| e.to_string())?;
            emit(&harness::verdict_report(&verdict), None)?;
            if let Verdict::Mismatch { .. } = verdict {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Bench {
            kind,
            seed,
            sizes,
            num_queries,
            out,
        } => {
            let sizes = sizes.unwrap_or(harness::BENCH_SIZES.to_vec());
            let points =
                harness::bench(kind, &sizes, seed, num_queries).map_err(|e| e.to_string())?;
            emit(&harness::bench_report(kind, &points), out.as_ref())?;
        }
        Command::MongeFuzz {
            seed,
            trials,
            max_dim,
            out,
        } => {
            let report = harness::monge_fuzz(seed, trials, max_dim.max(1));
            emit(&harness::fuzz_report(&report), out.as_ref())?;
            if !report.failures.is_empty() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
