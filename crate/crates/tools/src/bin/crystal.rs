use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use crystal_core::RootDatum;
use crystal_tools::format::{decomposition_json, decomposition_tsv, graph_dot, graph_json};
use crystal_tools::input::{load_root_datum, node_budget, parse_weight, preset};
use crystal_tools::{cmd_graph, cmd_tensor, run_suite, CliError, Suite, VerifyParams};

/// Crystal graphs of symmetric Kac-Moody algebras.
#[derive(Parser)]
#[command(name = "crystal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Named root datum: A<n>, D<n>, E6, E7, E8, affineA1.
    #[arg(long)]
    preset: Option<String>,
    /// JSON or TOML file with `preset` or `adjacency`.
    #[arg(long, value_name = "FILE")]
    root_datum: Option<PathBuf>,
}

impl Source {
    fn load(&self) -> Result<RootDatum, CliError> {
        match (&self.preset, &self.root_datum) {
            (Some(name), _) => preset(name),
            (None, Some(path)) => load_root_datum(path),
            (None, None) => unreachable!("clap requires one source"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write the crystal graph of B(λ) as DOT (default) or JSON.
    Graph {
        #[command(flatten)]
        source: Source,
        /// Dominant weight in fundamental-weight coordinates, e.g. 1,0.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Stop exploring at this distance from the highest-weight element.
        #[arg(long)]
        depth: Option<usize>,
        /// DOT output path, `-` for stdout.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        /// JSON output path, `-` for stdout.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Decompose B(λ_1) ⊗ ... ⊗ B(λ_n) into highest-weight components.
    Tensor {
        #[command(flatten)]
        source: Source,
        /// A tensor factor; repeat for each factor, left to right.
        #[arg(long = "weight", required = true, allow_hyphen_values = true)]
        weights: Vec<String>,
        #[arg(long)]
        depth: Option<usize>,
        /// TSV output path, `-` for stdout (the default).
        #[arg(long, value_name = "PATH")]
        tsv: Option<PathBuf>,
        /// JSON output path, `-` for stdout.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Run a verification suite. Exit status 1 if any check fails.
    Verify {
        suite: Suite,
        #[command(flatten)]
        source: Source,
        /// Weights to test; defaults to all dominant weights up to --max-entry.
        #[arg(long = "weight", allow_hyphen_values = true)]
        weights: Vec<String>,
        #[arg(long, default_value_t = 1)]
        max_entry: i64,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sampled pairs for the tensor and closed-family suites.
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

fn write_output(path: &Path, text: &str) -> anyhow::Result<()> {
    if path == Path::new("-") {
        std::io::stdout().write_all(text.as_bytes())?;
        return Ok(());
    }
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn weights(args: &[String]) -> Result<Vec<Vec<i64>>, CliError> {
    args.iter().map(|s| parse_weight(s)).collect()
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let budget = node_budget()?;
    match cli.command {
        Command::Graph {
            source,
            weight,
            depth,
            dot,
            json,
        } => {
            let rd = source.load()?;
            let g = cmd_graph(&rd, &parse_weight(&weight)?, depth, budget)?;
            if dot.is_none() && json.is_none() {
                write_output(Path::new("-"), &graph_dot(&g))?;
            }
            if let Some(path) = dot {
                write_output(&path, &graph_dot(&g))?;
            }
            if let Some(path) = json {
                write_output(&path, &graph_json(&g))?;
            }
        }
        Command::Tensor {
            source,
            weights: args,
            depth,
            tsv,
            json,
        } => {
            let rd = source.load()?;
            let table = cmd_tensor(&rd, &weights(&args)?, depth, budget)?;
            if tsv.is_none() && json.is_none() {
                write_output(Path::new("-"), &decomposition_tsv(&rd, &table))?;
            }
            if let Some(path) = tsv {
                write_output(&path, &decomposition_tsv(&rd, &table))?;
            }
            if let Some(path) = json {
                write_output(&path, &decomposition_json(&rd, &table))?;
            }
        }
        Command::Verify {
            suite,
            source,
            weights: args,
            max_entry,
            depth,
            seed,
            samples,
        } => {
            let rd = source.load()?;
            let params = VerifyParams {
                weights: weights(&args)?,
                max_entry,
                depth,
                seed,
                samples,
                budget,
            };
            let outcome = run_suite(&rd, suite, &params)?;
            for line in &outcome.lines {
                println!("{}", line);
            }
            println!("{}", outcome.summary());
            if !outcome.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {:#}", err);
            let code = err.downcast_ref::<CliError>().map_or(2, CliError::exit_code);
            ExitCode::from(code)
        }
    }
}
