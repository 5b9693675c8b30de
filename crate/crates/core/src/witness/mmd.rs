use rand::Rng;
use rand_distr::StandardNormal;

use crate::distributions::{grid_sample, sine_sample, Label, SampleBatch};
use crate::networks::ActivationSpec;
use crate::numerics::{sample_sphere, QuadratureConfig, RngStream};
use crate::witness::{IpmEstimate, IpmMethod, PairRef};
use crate::{Error, Result};

const MIN_FEATURES: usize = 100;

/// Random-feature MMD estimate for the kernel
/// `k(x, y) = E_{(θ,b)}[σ(⟨θ,x⟩ − b) σ(⟨θ,y⟩ − b)]`,
/// `(θ, b) ~ Unif(S^{d−1}) ⊗ N(0, 1)`:
///
/// `MMD² = E_{(θ,b)}[ W(θ, b)² ]` with `W` the deterministic witness
/// integral, so each feature contributes an exact `W²` and only the feature
/// average is random. The standard error of the root is delta-method:
/// `sd(W²) / (2·MMD·√m)`.
pub fn mmd_estimate(
    pair: PairRef<'_>,
    act: &ActivationSpec,
    m_features: usize,
    cfg: &QuadratureConfig,
    rng: RngStream,
) -> Result<IpmEstimate> {
    if m_features < MIN_FEATURES {
        return Err(Error::InvalidSpec(format!(
            "mmd estimate needs at least {MIN_FEATURES} features, got {m_features}"
        )));
    }
    let d = pair.d();
    let mut gen = rng.rng();
    let mut sq = Vec::with_capacity(m_features);
    for _ in 0..m_features {
        let theta = sample_sphere(d, &mut gen);
        let b: f64 = gen.sample(StandardNormal);
        let w = pair.witness(&theta, b, act, cfg)?;
        sq.push(w * w);
    }
    Ok(root_mean_with_se(&sq, IpmMethod::MonteCarlo, rng.seed))
}

/// The same random-feature MMD, but with the witness integrals replaced by
/// two-sample feature means: for each feature `(θⱼ, bⱼ)`,
/// `gⱼ = mean_μ σ(⟨θⱼ,x⟩ − bⱼ) − mean_ν σ(⟨θⱼ,y⟩ − bⱼ)` over fresh sample
/// batches, and the estimate is `√(mean gⱼ²)`. Cross-checks both the
/// deterministic witness route and the samplers.
pub fn mmd_sample_crosscheck(
    pair: PairRef<'_>,
    act: &ActivationSpec,
    m_features: usize,
    n_samples: usize,
    rng: RngStream,
) -> Result<IpmEstimate> {
    if m_features < MIN_FEATURES {
        return Err(Error::InvalidSpec(format!(
            "mmd crosscheck needs at least {MIN_FEATURES} features, got {m_features}"
        )));
    }
    let base = 3 * rng.stream_id;
    let mu = pair_batch(pair, Label::Plus, n_samples, rng.substream(base + 1))?;
    let nu = pair_batch(pair, Label::Minus, n_samples, rng.substream(base + 2))?;
    mmd_from_batches(pair.d(), act, m_features, &mu, &nu, rng)
}

/// Feature-mean MMD between two explicit batches; exposed so callers (and the
/// degenerate `μ = ν` sanity check) can control the batches directly.
pub fn mmd_from_batches(
    d: usize,
    act: &ActivationSpec,
    m_features: usize,
    mu: &SampleBatch,
    nu: &SampleBatch,
    rng: RngStream,
) -> Result<IpmEstimate> {
    if mu.dim() != d || nu.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, got: mu.dim().min(nu.dim()) });
    }
    let mut gen = rng.rng();
    let mut sq = Vec::with_capacity(m_features);
    for _ in 0..m_features {
        let theta = sample_sphere(d, &mut gen);
        let b: f64 = gen.sample(StandardNormal);
        let feat = |x: &Vec<f64>| {
            act.apply(x.iter().zip(&theta).map(|(xi, ti)| xi * ti).sum::<f64>() - b)
        };
        let g_mu = mu.points.iter().map(feat).sum::<f64>() / mu.points.len() as f64;
        let g_nu = nu.points.iter().map(feat).sum::<f64>() / nu.points.len() as f64;
        let g = g_mu - g_nu;
        sq.push(g * g);
    }
    Ok(root_mean_with_se(&sq, IpmMethod::RandomFeature, rng.seed))
}

fn pair_batch(pair: PairRef<'_>, label: Label, n: usize, rng: RngStream) -> Result<SampleBatch> {
    match pair {
        PairRef::Grid(s) => Ok(grid_sample(s, label, n, rng)),
        PairRef::Sine(s) => sine_sample(s, label, n, rng),
    }
}

fn root_mean_with_se(sq: &[f64], method: IpmMethod, seed: u64) -> IpmEstimate {
    let m = sq.len() as f64;
    let mean = sq.iter().sum::<f64>() / m;
    let var = sq.iter().map(|s| (s - mean).powi(2)).sum::<f64>() / (m - 1.0);
    let value = mean.max(0.0).sqrt();
    let se_mean = (var / m).sqrt();
    // Delta method for √; fall back to the √ of the mean's SE when the value
    // itself is consistent with zero.
    let std_error = if value > se_mean.sqrt() { se_mean / (2.0 * value) } else { se_mean.sqrt() };
    IpmEstimate { value, std_error, method, n_samples: sq.len(), argmax: None, seed }
}
