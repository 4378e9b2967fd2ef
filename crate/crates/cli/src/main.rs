//! cp2kit: analyze finite groups against the element-order classes and run
//! the corpus verification harness.
//!
//! Exit codes: 0 = everything verified, 1 = a discrepancy was found,
//! 2 = input or construction error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cp2kit_cli::analyze::{analyze_group, load_group};
use cp2kit_cli::harness::{verify_corpus, HarnessOptions};
use cp2kit_cli::manifest::Manifest;
use cp2kit_core::group::DEFAULT_ORDER_CAP;
use cp2kit_core::structure::DEFAULT_LATTICE_THRESHOLD;

const MAX_ORDER_ENV: &str = "CP2KIT_MAX_ORDER";
const DEFAULT_CORPUS_CAP: usize = 512;

#[derive(Parser)]
#[command(name = "cp2kit", version, about = "finite-group element-order class analyzer")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one group file (Cayley or permutation JSON)
    Analyze {
        file: PathBuf,
        /// Emit the full record as JSON instead of text
        #[arg(long)]
        json: bool,
        /// Order cap for generated groups (default 20160, env CP2KIT_MAX_ORDER)
        #[arg(long)]
        max_order: Option<usize>,
    },
    /// Run every corpus group through the full verification suite
    VerifyCorpus {
        /// Manifest file; the built-in corpus when omitted
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// Write the JSON report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads; reports are identical at any setting
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Order cap for corpus groups (default 512, env CP2KIT_MAX_ORDER)
        #[arg(long)]
        max_order: Option<usize>,
        /// Record per-group wall-clock timings (makes reports nondeterministic)
        #[arg(long)]
        timings: bool,
    },
    /// Print the per-group class census as CSV
    Census {
        #[arg(long)]
        manifest: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        max_order: Option<usize>,
    },
    /// Corpus manifest utilities
    Corpus {
        #[command(subcommand)]
        command: CorpusCommand,
    },
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// List the manifest entries
    List {
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
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

fn resolve_max_order(flag: Option<usize>, default: usize) -> usize {
    flag.or_else(|| std::env::var(MAX_ORDER_ENV).ok().and_then(|v| v.parse().ok()))
        .unwrap_or(default)
}

fn load_manifest(path: &Option<PathBuf>) -> Result<Manifest, String> {
    match path {
        Some(p) => Manifest::from_path(p).map_err(|e| e.to_string()),
        None => Ok(Manifest::default_corpus()),
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Analyze { file, json, max_order } => {
            let cap = resolve_max_order(max_order, DEFAULT_ORDER_CAP);
            let group = load_group(&file.display().to_string(), cap).map_err(|e| e.to_string())?;
            let record = analyze_group(&group, DEFAULT_LATTICE_THRESHOLD);
            if json {
                print!("{}", record.to_json());
            } else {
                print!("{}", record.to_text());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyCorpus { manifest, out, jobs, max_order, timings } => {
            let manifest = load_manifest(&manifest)?;
            let options = HarnessOptions {
                max_order: resolve_max_order(max_order, DEFAULT_CORPUS_CAP),
                jobs,
                record_timings: timings,
                ..HarnessOptions::default()
            };
            let report = verify_corpus(&manifest, &options).map_err(|e| e.to_string())?;
            let json = report.to_json();
            match out {
                Some(path) => std::fs::write(&path, &json)
                    .map_err(|e| format!("failed to write {}: {e}", path.display()))?,
                None => print!("{json}"),
            }
            let issues = &report.summary.discrepancies;
            if issues.is_empty() {
                eprintln!(
                    "verified {} groups, {} in CP2, no discrepancies",
                    report.summary.total_groups, report.summary.cp2_count
                );
                Ok(ExitCode::SUCCESS)
            } else {
                for issue in issues {
                    eprintln!("discrepancy: {issue}");
                }
                Ok(ExitCode::from(1))
            }
        }
        Command::Census { manifest, jobs, max_order } => {
            let manifest = load_manifest(&manifest)?;
            let options = HarnessOptions {
                max_order: resolve_max_order(max_order, DEFAULT_CORPUS_CAP),
                jobs,
                ..HarnessOptions::default()
            };
            let report = verify_corpus(&manifest, &options).map_err(|e| e.to_string())?;
            print!("{}", report.to_census_csv());
            Ok(if report.summary.discrepancies.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Corpus { command: CorpusCommand::List { manifest } } => {
            let manifest = load_manifest(&manifest)?;
            for entry in &manifest.entries {
                println!("{}", entry.label());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
