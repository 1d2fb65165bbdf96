use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use helios_rsrc::config::{ExperimentConfig, Preset};
use helios_rsrc::driver::{Driver, DriverError};

/// Simulation, phase retrieval and Bayesian reconstruction for the 2-D
/// stochastic Helmholtz source problem from multi-frequency phaseless data.
#[derive(Parser)]
#[command(name = "helios-rsrc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Config file (TOML or JSON). Overrides the preset selected by --mode.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Built-in preset: paper | desk | closed-loop.
    #[arg(long, global = true, default_value = "desk")]
    mode: Preset,

    /// Override the config's RNG seed.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Worker threads; falls back to HELIOS_RSRC_THREADS, then 1.
    /// Results are bit-identical for any thread count.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Override the config's output directory.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the forward Monte Carlo and write statistics bundles.
    Simulate,
    /// Run phase retrieval over the simulated bundles and emit error tables.
    Retrieve,
    /// Run the Bayesian reconstructions and emit posterior grids.
    Invert,
    /// Run the self-check suite and write a machine-readable report.
    Verify,
}

fn resolve_threads(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("HELIOS_RSRC_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(1)
    .max(1)
}

fn run(cli: Cli) -> Result<(), DriverError> {
    let mut cfg = match &cli.config {
        Some(path) => {
            let mut c = ExperimentConfig::load(path)?;
            if cli.mode == Preset::ClosedLoop {
                c.run.closed_loop = true;
            }
            c
        }
        None => ExperimentConfig::preset(cli.mode),
    };
    if let Some(seed) = cli.seed {
        cfg.run.seed = seed;
    }
    if let Some(out) = cli.out {
        cfg.run.output_dir = out;
    }

    let threads = resolve_threads(cli.threads);
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| DriverError::Validation(e.to_string()))?;

    let driver = Driver::new(cfg)?;
    match cli.command {
        Command::Simulate => driver.cmd_simulate(),
        Command::Retrieve => driver.cmd_retrieve(),
        Command::Invert => driver.cmd_invert(),
        Command::Verify => driver.cmd_verify(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
