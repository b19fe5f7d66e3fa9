use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use srg_certify::scan::{self, ScanError};
use srg_certify::{exit_code, report, EXIT_INVALID_INPUT, EXIT_IO};
use srg_core::gramtest::wsplit_at;
use srg_core::oracle::self_check;
use srg_core::params::subconstituent_scan;
use srg_core::{decide, DecideOptions, SrgParams};

#[derive(Parser)]
#[command(name = "srg-certify", version, about = "Non-existence certificates for strongly regular graph parameters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct PipelineArgs {
    /// Largest even Gegenbauer degree tried for the K4 bound.
    #[arg(long, default_value_t = 4, value_parser = parse_degree)]
    max_gegenbauer_degree: u32,
    /// Skip the K4 lower bound; the m range then starts at 0.
    #[arg(long)]
    no_clique_bound: bool,
}

fn parse_degree(s: &str) -> Result<u32, String> {
    let t: u32 = s.parse().map_err(|e| format!("{e}"))?;
    if !(2..=8).contains(&t) || !t.is_multiple_of(2) {
        return Err(format!("degree must be one of 2, 4, 6, 8 (got {t})"));
    }
    Ok(t)
}

impl PipelineArgs {
    fn options(self) -> DecideOptions {
        DecideOptions { max_gegenbauer_degree: self.max_gegenbauer_degree, clique_bound: !self.no_clique_bound }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline on one tuple.
    Check {
        v: u64,
        k: u64,
        lambda: u64,
        mu: u64,
        /// Print the certificate as JSON.
        #[arg(long)]
        json: bool,
        /// Additionally evaluate the split test at this w for every m in range.
        #[arg(long = "split", value_name = "W")]
        splits: Vec<u64>,
        #[command(flatten)]
        pipeline: PipelineArgs,
    },
    /// Evaluate every row of a CSV file with header `v,k,lambda,mu`.
    Scan {
        input: PathBuf,
        #[arg(long, env = "SRG_CERTIFY_JOBS")]
        jobs: Option<usize>,
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// One JSON object per row instead of a table.
        #[arg(long)]
        json_lines: bool,
        /// Include per-row wall-clock times (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        pipeline: PipelineArgs,
    },
    /// List feasible (lambda, mu) for a first-subconstituent candidate (v1, k1).
    Subscan { v1: u64, k1: u64 },
    /// Run the built-in oracle comparison on the reference graphs.
    SelfCheck,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Check { v, k, lambda, mu, json, splits, pipeline } => {
            check(v, k, lambda, mu, json, &splits, pipeline.options())
        }
        Command::Scan { input, jobs, output, json_lines, timings, pipeline } => {
            run_scan(&input, jobs, output, json_lines, timings, pipeline.options())
        }
        Command::Subscan { v1, k1 } => subscan(v1, k1),
        Command::SelfCheck => run_self_check(),
    };
    ExitCode::from(code as u8)
}

fn check(v: u64, k: u64, lambda: u64, mu: u64, json: bool, splits: &[u64], opts: DecideOptions) -> i32 {
    let params = match SrgParams::new(v, k, lambda, mu) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INVALID_INPUT;
        }
    };
    let cert = match decide(&params, &opts) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INVALID_INPUT;
        }
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&cert).expect("certificate serializes"));
        return exit_code(cert.verdict);
    }
    let mut extra = Vec::new();
    if let (Some(repr), Some(range)) = (&cert.repr, cert.m_range) {
        for &w in splits {
            for m in range.values() {
                match wsplit_at(&params, repr, m, w) {
                    Ok(res) => extra.push((w, res)),
                    Err(e) => {
                        eprintln!("error: {e}");
                        return EXIT_INVALID_INPUT;
                    }
                }
            }
        }
    }
    print!("{}", report::transcript(&cert, &extra));
    exit_code(cert.verdict)
}

fn run_scan(
    input: &PathBuf,
    jobs: Option<usize>,
    output: Option<PathBuf>,
    json_lines: bool,
    timings: bool,
    opts: DecideOptions,
) -> i32 {
    let rows = match File::open(input).map_err(ScanError::from).and_then(scan::parse_csv) {
        Ok(r) => r,
        Err(e @ ScanError::Header(_)) => {
            eprintln!("error: {}: {e}", input.display());
            return EXIT_INVALID_INPUT;
        }
        Err(e) => {
            eprintln!("error: {}: {e}", input.display());
            return EXIT_IO;
        }
    };
    let jobs = jobs.filter(|&j| j > 0).unwrap_or_else(rayon::current_num_threads);
    let results = scan::run_scan(&rows, &opts, jobs, timings);
    if let Err(e) = write_rows(&results, output, json_lines) {
        eprintln!("error: {e:#}");
        return EXIT_IO;
    }
    eprintln!("{}", scan::summary(&results));
    0
}

fn write_rows(rows: &[scan::ScanRow], output: Option<PathBuf>, json_lines: bool) -> anyhow::Result<()> {
    let sink: Box<dyn Write> = match &output {
        Some(path) => Box::new(File::create(path).with_context(|| format!("cannot create {}", path.display()))?),
        None => Box::new(std::io::stdout().lock()),
    };
    let mut out = BufWriter::new(sink);
    if !json_lines {
        writeln!(out, "{}", scan::TABLE_HEADER)?;
    }
    for row in rows {
        if json_lines {
            serde_json::to_writer(&mut out, row)?;
            writeln!(out)?;
        } else {
            writeln!(out, "{}", row.to_table_line())?;
        }
    }
    out.flush()?;
    Ok(())
}

fn subscan(v1: u64, k1: u64) -> i32 {
    if k1 == 0 || k1 >= v1 {
        eprintln!("error: need 0 < k1 < v1, got v1 = {v1}, k1 = {k1}");
        return EXIT_INVALID_INPUT;
    }
    let found = subconstituent_scan(v1, k1);
    if found.is_empty() {
        println!("NONE");
    }
    for (l, m) in found {
        println!("{l} {m}");
    }
    0
}

fn run_self_check() -> i32 {
    let mut failed = false;
    for entry in self_check() {
        if entry.failures.is_empty() {
            println!("ok    {}", entry.graph);
        } else {
            failed = true;
            for f in &entry.failures {
                println!("FAIL  {}: {f}", entry.graph);
            }
        }
    }
    i32::from(failed)
}
