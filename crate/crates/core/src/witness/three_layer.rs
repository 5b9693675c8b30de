use crate::bounds::three_layer_lower_formula;
use crate::distributions::{grid_sample, GridPairSpec, Label};
use crate::networks::{build_big_f, eval_three_layer, grid_orientation, path_norm_b_three};
use crate::numerics::RngStream;
use crate::witness::{IpmEstimate, IpmMethod};
use crate::{Error, Result};

/// Outcome of the three-layer certificate check for one dimension.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ThreeLayerCertificate {
    pub estimate: IpmEstimate,
    /// Bias-inclusive path norm of the normalising network `F`.
    pub path_norm: f64,
    /// Conservative lower bound `(gap − 3·SE) / path_norm` on the IPM.
    pub certified_lower: f64,
    /// The explicit formula `1 / (513d² + 512d + 1)` it must dominate.
    pub formula: f64,
    pub passes: bool,
}

/// Monte-Carlo estimate of the three-layer discriminating gap
/// `s_d · (E_{μ}[F] − E_{ν}[F])` for the grid pair, where `F = f₂ ∘ (Σᵢ f₁)`
/// and `s_d` is the orientation sign making the gap positive.
///
/// Uses `n` samples per distribution from substreams `2·id` and `2·id + 1`
/// of the given stream. The standard error is `√((var⁺ + var⁻)/n)`.
pub fn three_layer_gap(spec: &GridPairSpec, n: usize, rng: RngStream) -> Result<IpmEstimate> {
    if n < 1_000 {
        return Err(Error::InvalidSpec(format!(
            "three-layer gap needs n >= 1000 samples, got {n}"
        )));
    }
    let net = build_big_f(spec)?;
    let mut mean = [0.0f64; 2];
    let mut var = [0.0f64; 2];
    for (slot, label) in [(0usize, Label::Plus), (1usize, Label::Minus)] {
        let stream = rng.substream(2 * rng.stream_id + slot as u64);
        let batch = grid_sample(spec, label, n, stream);
        // Welford running moments.
        let (mut m, mut m2, mut count) = (0.0f64, 0.0f64, 0.0f64);
        for p in &batch.points {
            let v = eval_three_layer(&net, p)?;
            count += 1.0;
            let delta = v - m;
            m += delta / count;
            m2 += delta * (v - m);
        }
        mean[slot] = m;
        var[slot] = m2 / (count - 1.0);
    }
    let value = grid_orientation(spec.d) * (mean[0] - mean[1]);
    let std_error = ((var[0] + var[1]) / n as f64).sqrt();
    Ok(IpmEstimate {
        value,
        std_error,
        method: IpmMethod::MonteCarlo,
        n_samples: n,
        argmax: None,
        seed: rng.seed,
    })
}

/// Certify the three-layer lower bound: normalise the gap by the
/// bias-inclusive path norm of `F`, subtract three standard errors, and
/// compare against the explicit formula `1 / (513d² + 512d + 1)`.
pub fn three_layer_certificate(
    spec: &GridPairSpec,
    n: usize,
    rng: RngStream,
) -> Result<ThreeLayerCertificate> {
    let estimate = three_layer_gap(spec, n, rng)?;
    let path_norm = path_norm_b_three(&build_big_f(spec)?);
    let certified_lower = (estimate.value - 3.0 * estimate.std_error) / path_norm;
    let formula = three_layer_lower_formula(spec.d);
    let passes = certified_lower >= formula;
    Ok(ThreeLayerCertificate { estimate, path_norm, certified_lower, formula, passes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(d: usize, sigma: f64) -> GridPairSpec {
        GridPairSpec::new(d, sigma, 0.125, 1e-3).unwrap()
    }

    #[test]
    fn rejects_tiny_sample_size() {
        let e = three_layer_gap(&spec(2, 0.05), 10, RngStream::new(701, 0)).unwrap_err();
        assert!(matches!(e, Error::InvalidSpec(_)));
    }

    #[test]
    fn near_deterministic_gap_is_two() {
        // With σ → 0 the samples sit on the grid where F = ±1 exactly, so the
        // oriented gap is 2 up to the o(1) off-plateau mass.
        for d in [2usize, 5] {
            let est = three_layer_gap(&spec(d, 1e-4), 2_000, RngStream::new(702, d as u64)).unwrap();
            assert!((est.value - 2.0).abs() < 1e-2, "d={d}: {}", est.value);
            assert!(est.std_error < 1e-2);
        }
    }

    #[test]
    fn orientation_makes_gap_positive() {
        // d = 4 has s_d = +1, d = 6 has s_d = −1; both oriented gaps must be
        // positive and large at small σ.
        for d in [4usize, 6] {
            let est = three_layer_gap(&spec(d, 0.05), 5_000, RngStream::new(703, d as u64)).unwrap();
            assert!(est.value > 1.0, "d={d}: {}", est.value);
        }
    }

    #[test]
    fn certificate_passes_d4_and_d9() {
        for d in [4usize, 9] {
            let cert =
                three_layer_certificate(&spec(d, 0.05), 20_000, RngStream::new(704, d as u64))
                    .unwrap();
            assert!(cert.passes, "d={d}: {} < {}", cert.certified_lower, cert.formula);
            // The normalised gap can never exceed 2 / path_norm.
            assert!(cert.certified_lower <= 2.0 / cert.path_norm);
        }
    }

    #[test]
    fn deterministic_given_seed() {
        let sp = spec(3, 0.08);
        let a = three_layer_gap(&sp, 1_500, RngStream::new(705, 2)).unwrap();
        let b = three_layer_gap(&sp, 1_500, RngStream::new(705, 2)).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a.std_error.to_bits(), b.std_error.to_bits());
    }
}
