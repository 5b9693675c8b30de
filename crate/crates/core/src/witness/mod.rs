//! Discriminator–distribution integrals ("witness values") and the three
//! IPM estimators built on them: the two-layer sup search, the three-layer
//! Monte-Carlo gap, and the RKHS/MMD estimate.

mod grid_route;
mod mean;
mod mmd;
mod search_ipm;
mod sine_route;
mod three_layer;

use serde::{Deserialize, Serialize};

pub use grid_route::{grid_witness_exact, grid_witness_fourier};
pub use mean::{act_gaussian_mean, relu_gaussian_mean};
pub use mmd::{mmd_estimate, mmd_from_batches, mmd_sample_crosscheck};
pub use search_ipm::{two_layer_ipm_search, PairRef};
pub use sine_route::{sec4_two_layer_lower, sine_witness};
pub use three_layer::{three_layer_certificate, three_layer_gap, ThreeLayerCertificate};

/// How an [`IpmEstimate`] was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IpmMethod {
    Enumeration,
    FourierPv,
    MonteCarlo,
    RandomFeature,
}

/// An IPM value with its uncertainty and provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IpmEstimate {
    pub value: f64,
    /// 0 for deterministic routes.
    pub std_error: f64,
    pub method: IpmMethod,
    #[serde(rename = "n")]
    pub n_samples: usize,
    /// Maximizing `(θ, b)` when the estimate came from a search.
    pub argmax: Option<(Vec<f64>, f64)>,
    pub seed: u64,
}
