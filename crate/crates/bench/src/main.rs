//! CLI entry point. Subcommands pick the experiment; a JSON config file
//! supplies the grid and flags override individual fields.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use corr_bench::config::{Experiment, ExperimentConfig, MethodToken};
use corr_bench::runner;

#[derive(Parser)]
#[command(
    name = "corr-bench",
    about = "Benchmark runner for convex-surrogate global optimization",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the optimizer on one benchmark cell
    Optimize(CommonArgs),
    /// Error versus sample count per function
    Sweep(CommonArgs),
    /// Dimension x sample-count error grid for one function
    Scale(CommonArgs),
    /// Budget-matched method comparison across dimensions
    Compare(CommonArgs),
    /// Constraint-value profile and surrogate traces for one run
    MuTrace(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// JSON experiment config; flags below override its fields
    #[arg(long)]
    config: Option<PathBuf>,

    /// Benchmark function token (repeatable)
    #[arg(long = "function")]
    functions: Vec<String>,

    /// Dimension (repeatable)
    #[arg(long = "dim")]
    dims: Vec<usize>,

    /// Per-set sample count (repeatable)
    #[arg(long = "t")]
    t_values: Vec<usize>,

    /// Trials per grid cell
    #[arg(long)]
    trials: Option<usize>,

    /// Base seed; per-trial seeds derive from it
    #[arg(long)]
    seed: Option<u64>,

    /// Output directory for run folders
    #[arg(long)]
    out: Option<PathBuf>,

    /// Method token for compare (repeatable)
    #[arg(long = "method")]
    methods: Vec<String>,

    /// Refine the returned point with a local simplex descent
    #[arg(long)]
    polish: bool,
}

impl CommonArgs {
    fn into_config(self, experiment: Experiment) -> anyhow::Result<ExperimentConfig> {
        let mut cfg = match &self.config {
            Some(path) => ExperimentConfig::load(path)?,
            None => ExperimentConfig::default(),
        };
        cfg.experiment = experiment;
        if !self.functions.is_empty() {
            cfg.functions = self.functions;
        } else if self.config.is_none() && experiment == Experiment::Sweep {
            // sweeps default to the whole testbed
            cfg.functions = corr_core::FunctionName::ALL
                .iter()
                .map(|f| f.token().to_string())
                .collect();
        }
        if !self.dims.is_empty() {
            cfg.dims = self.dims;
        }
        if !self.t_values.is_empty() {
            cfg.t_values = self.t_values;
        }
        if let Some(trials) = self.trials {
            cfg.trials = trials;
        }
        if let Some(seed) = self.seed {
            cfg.base_seed = seed;
        }
        if let Some(out) = self.out {
            cfg.output_dir = out;
        }
        if !self.methods.is_empty() {
            cfg.methods = self
                .methods
                .iter()
                .map(|m| m.parse::<MethodToken>())
                .collect::<anyhow::Result<Vec<_>>>()?;
        }
        if self.polish {
            cfg.polish = true;
        }
        Ok(cfg)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (experiment, args) = match cli.command {
        Command::Optimize(a) => (Experiment::Optimize, a),
        Command::Sweep(a) => (Experiment::Sweep, a),
        Command::Scale(a) => (Experiment::Scale, a),
        Command::Compare(a) => (Experiment::Compare, a),
        Command::MuTrace(a) => (Experiment::MuTrace, a),
    };
    match args
        .into_config(experiment)
        .and_then(|cfg| runner::run(&cfg))
    {
        Ok(artifacts) => {
            println!("run dir: {}", artifacts.dir.display());
            for row in &artifacts.aggregate {
                println!(
                    "{} dim={} T={} {}: mean_error={:.6e} median_error={:.6e} ({} trials)",
                    row.function,
                    row.dim,
                    row.t,
                    row.method,
                    row.mean_error,
                    row.median_error,
                    row.trials
                );
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
