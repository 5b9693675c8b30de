//! `seplab`: numerically certify the two-layer/three-layer and
//! two-layer/RKHS separation constructions, emitting deterministic CSV or
//! JSON reports.

mod config;
mod experiments;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use config::{
    load_file_config, parse_d_range, Experiment, ExperimentConfig, Overrides, SCHEMA_VERSION,
};
use report::Format;

#[derive(Debug, Parser)]
#[command(
    name = "seplab",
    version,
    about = "Separation experiments for two-layer, three-layer, and RKHS discriminators"
)]
struct Cli {
    /// Experiment to run.
    #[arg(value_enum)]
    experiment: Experiment,
    /// Inclusive dimension range, e.g. `2..10`, or a single dimension.
    #[arg(long, default_value = "2..6")]
    d: String,
    /// Base seed for all random streams.
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory for the report file.
    #[arg(long)]
    out: PathBuf,
    /// JSON config file; command-line flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Report format.
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Monte-Carlo samples per distribution (three-layer gap).
    #[arg(long)]
    mc_samples: Option<usize>,
    /// Random features for the MMD estimate.
    #[arg(long)]
    features: Option<usize>,
    /// Override the calibrated bandwidth σ_d.
    #[arg(long)]
    sigma: Option<f64>,
    /// Override the plateau half-width x₀ (grid construction).
    #[arg(long)]
    x0: Option<f64>,
    /// Override the failure budget ε (grid construction).
    #[arg(long)]
    eps: Option<f64>,
    /// Override the frequency ℓ (sine construction).
    #[arg(long)]
    ell: Option<f64>,
}

fn resolve(cli: &Cli) -> Result<ExperimentConfig, String> {
    let file = match &cli.config {
        Some(p) => load_file_config(p)?,
        None => config::FileConfig { schema: SCHEMA_VERSION, ..Default::default() },
    };
    if let Some(exp) = file.experiment {
        if exp != cli.experiment {
            return Err(format!(
                "config file requests experiment {exp}, command line says {}",
                cli.experiment
            ));
        }
    }
    // Flags override file values; the `--d` flag has a default, so the file
    // range only applies when the flag keeps that default.
    let (d_lo, d_hi) = if cli.d == "2..6" && file.d_lo.is_some() {
        (file.d_lo.unwrap(), file.d_hi.unwrap_or(file.d_lo.unwrap()))
    } else {
        parse_d_range(&cli.d)?
    };
    Ok(ExperimentConfig {
        schema: SCHEMA_VERSION,
        experiment: cli.experiment,
        d_lo,
        d_hi,
        seed: cli.seed.or(file.seed).unwrap_or(0),
        mc_samples: cli.mc_samples.or(file.mc_samples).unwrap_or(100_000),
        features: cli.features.or(file.features).unwrap_or(1_000),
        overrides: Overrides {
            sigma: cli.sigma.or(file.overrides.sigma),
            x0: cli.x0.or(file.overrides.x0),
            eps: cli.eps.or(file.overrides.eps),
            ell: cli.ell.or(file.overrides.ell),
        },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match resolve(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("seplab: config error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = match experiments::run(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("seplab: {}: {e}", cfg.experiment);
            return ExitCode::from(2);
        }
    };
    match experiments::emit_and_check(&report, &cli.out, cli.format) {
        Ok((path, failing)) => {
            println!("wrote {}", path.display());
            if failing.is_empty() {
                ExitCode::SUCCESS
            } else {
                for i in failing {
                    let row: Vec<String> =
                        report.rows[i].iter().map(|c| c.to_string()).collect();
                    eprintln!("seplab: FAIL row {i}: {}", row.join(","));
                }
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("seplab: emit failed: {e}");
            ExitCode::from(2)
        }
    }
}
