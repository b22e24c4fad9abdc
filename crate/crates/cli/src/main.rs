mod commands;
mod config;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::{RunArgs, RunConfig};

/// Bad flags, config or cluster: exit code 2.
#[derive(Debug)]
pub struct Usage(pub String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

/// A verification that ran and did not hold: exit code 1.
#[derive(Debug)]
pub struct Failed(pub String);

impl std::fmt::Display for Failed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Failed {}

#[derive(Parser)]
#[command(name = "quasilattice", version, about = "Exact cut-and-project quasicrystal point sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Built-in clusters.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Generate a pattern and write it as JSON (plus SVG/XYZ on request).
    Project(RunArgs),
    /// Reduce the strip to cosets with atomic surfaces.
    Reduce(RunArgs),
    /// Run all three generators and compare them exactly.
    Verify(RunArgs),
    /// Fully-occupied neighbor shells.
    Stats {
        #[command(flatten)]
        run: RunArgs,
        /// Catalog clusters to report alongside, at the same radius.
        #[arg(long)]
        compare: Vec<String>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
}

fn setup(args: &RunArgs) -> anyhow::Result<RunConfig> {
    let cfg = RunConfig::resolve(args)?;
    if let Some(n) = cfg.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Usage(format!("--workers: {e}")))?;
    }
    Ok(cfg)
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Catalog { action: CatalogAction::List } => commands::catalog_list(),
        Command::Catalog { action: CatalogAction::Show { name } } => commands::catalog_show(&name),
        Command::Project(a) => commands::project(&setup(&a)?),
        Command::Reduce(a) => commands::reduce(&setup(&a)?),
        Command::Verify(a) => commands::verify(&setup(&a)?),
        Command::Stats { run, compare } => commands::stats(&setup(&run)?, &compare),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
