use std::fmt;
use std::ops::RangeInclusive;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Schema version accepted in JSON config files.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Experiment {
    VerifyFourier,
    Sep3v2,
    Sep2vrkhs,
    BoundsTable,
    Kappa,
    SigmaTable,
}

impl fmt::Display for Experiment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Experiment::VerifyFourier => "verify-fourier",
            Experiment::Sep3v2 => "sep3v2",
            Experiment::Sep2vrkhs => "sep2vrkhs",
            Experiment::BoundsTable => "bounds-table",
            Experiment::Kappa => "kappa",
            Experiment::SigmaTable => "sigma-table",
        };
        f.write_str(s)
    }
}

/// Optional parameter overrides; absent fields keep the calibrated defaults
/// (`σ = σ_d`, `x₀ = ε = 1/8`, `ℓ = √d`).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Overrides {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x0: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<f64>,
}

/// Fully resolved experiment configuration; hashing this resolved form means
/// the config hash changes exactly when an effective parameter changes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub schema: u32,
    pub experiment: Experiment,
    pub d_lo: usize,
    pub d_hi: usize,
    pub seed: u64,
    pub mc_samples: usize,
    pub features: usize,
    #[serde(default)]
    pub overrides: Overrides,
}

impl ExperimentConfig {
    pub fn d_range(&self) -> RangeInclusive<usize> {
        self.d_lo..=self.d_hi
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.schema != SCHEMA_VERSION {
            return Err(format!(
                "config schema {} unsupported (expected {SCHEMA_VERSION})",
                self.schema
            ));
        }
        if self.d_lo < 1 || self.d_lo > self.d_hi {
            return Err(format!("invalid d range {}..{}", self.d_lo, self.d_hi));
        }
        if self.mc_samples < 1_000 {
            return Err(format!("mc_samples={} must be >= 1000", self.mc_samples));
        }
        if self.features < 100 {
            return Err(format!("features={} must be >= 100", self.features));
        }
        if let Some(x0) = self.overrides.x0 {
            if !(x0 > 0.0 && x0 < 0.25) {
                return Err(format!("x0={x0} must lie in (0, 1/4)"));
            }
        }
        if let Some(eps) = self.overrides.eps {
            if !(eps > 0.0 && eps < 1.0) {
                return Err(format!("eps={eps} must lie in (0, 1)"));
            }
        }
        for (name, v) in [("sigma", self.overrides.sigma), ("ell", self.overrides.ell)] {
            if let Some(v) = v {
                if !(v > 0.0) {
                    return Err(format!("{name}={v} must be > 0"));
                }
            }
        }
        Ok(())
    }

    /// SHA-256 of the canonical JSON serialization.
    pub fn hash(&self) -> String {
        let json = serde_json::to_string(self).expect("config serializes");
        let mut h = Sha256::new();
        h.update(json.as_bytes());
        format!("{:x}", h.finalize())
    }
}

/// Partial config as read from `--config FILE`; command-line flags override
/// any field present here.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub schema: u32,
    pub experiment: Option<Experiment>,
    pub d_lo: Option<usize>,
    pub d_hi: Option<usize>,
    pub seed: Option<u64>,
    pub mc_samples: Option<usize>,
    pub features: Option<usize>,
    #[serde(default)]
    pub overrides: Overrides,
}

pub fn load_file_config(path: &Path) -> Result<FileConfig, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    let cfg: FileConfig = serde_json::from_str(&text)
        .map_err(|e| format!("config {} is not valid: {e}", path.display()))?;
    if cfg.schema != SCHEMA_VERSION {
        return Err(format!(
            "config {}: schema {} unsupported (expected {SCHEMA_VERSION})",
            path.display(),
            cfg.schema
        ));
    }
    Ok(cfg)
}

/// Parse `--d` values of the form `A..B` (inclusive) or a single `A`.
pub fn parse_d_range(s: &str) -> Result<(usize, usize), String> {
    if let Some((a, b)) = s.split_once("..") {
        let lo: usize = a.trim().parse().map_err(|_| format!("bad d range '{s}'"))?;
        let hi: usize = b.trim().parse().map_err(|_| format!("bad d range '{s}'"))?;
        Ok((lo, hi))
    } else {
        let d: usize = s.trim().parse().map_err(|_| format!("bad d value '{s}'"))?;
        Ok((d, d))
    }
}
