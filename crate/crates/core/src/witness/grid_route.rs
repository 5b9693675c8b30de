use num_complex::Complex64;

use crate::distributions::{GridPairSpec, GRID_POINTS};
use crate::networks::ActivationSpec;
use crate::numerics::{pv_integral, QuadratureConfig};
use crate::witness::mean::act_gaussian_mean;
use crate::{Error, Result};

const EXACT_CAP: usize = 12;

fn check_unit(theta: &[f64]) -> Result<()> {
    let n: f64 = theta.iter().map(|t| t * t).sum::<f64>().sqrt();
    if (n - 1.0).abs() > 1e-10 {
        return Err(Error::InvalidSpec(format!("theta must be a unit vector, got norm {n}")));
    }
    Ok(())
}

/// Exact witness `∫ ρ_d(x) σ(⟨θ, x⟩ − b) dx` by enumeration of the `4^d`
/// mixture components.
///
/// Conditionally on a component `β`, `⟨θ, X + β⟩ ~ N(⟨θ, β⟩, σ²)` because
/// `‖θ‖ = 1`, so each component contributes its sign times the Gaussian mean
/// of the activation; each component carries weight `2/4^d` in its measure.
pub fn grid_witness_exact(
    spec: &GridPairSpec,
    theta: &[f64],
    b: f64,
    act: &ActivationSpec,
) -> Result<f64> {
    if spec.d > EXACT_CAP {
        return Err(Error::DimensionTooLarge { d: spec.d, max: EXACT_CAP });
    }
    if theta.len() != spec.d {
        return Err(Error::DimensionMismatch { expected: spec.d, got: theta.len() });
    }
    check_unit(theta)?;
    let mut sum = 0.0;
    for code in 0u64..4u64.pow(spec.d as u32) {
        let mut c = code;
        let mut chi = 1.0;
        let mut m = 0.0;
        for &t in theta {
            let beta = GRID_POINTS[(c % 4) as usize];
            c /= 4;
            chi *= beta.signum();
            m += t * beta;
        }
        sum += chi * act_gaussian_mean(act, m, spec.sigma, b)?;
    }
    Ok(2.0 / 4f64.powi(spec.d as i32) * sum)
}

/// `G′(t)` for `G(t) = e^{−σ²t²/2 − itb} Π(t)`,
/// `Π(t) = ∏ᵢ sin(tθᵢ) cos(tθᵢ/2)`, evaluated with prefix/suffix products
/// in O(d).
fn g_prime(spec: &GridPairSpec, theta: &[f64], b: f64, t: f64) -> Complex64 {
    let d = theta.len();
    let mut c = vec![0.0; d];
    let mut cp = vec![0.0; d];
    for (i, &th) in theta.iter().enumerate() {
        let (s1, c1) = (t * th).sin_cos();
        let (s2, c2) = (0.5 * t * th).sin_cos();
        c[i] = s1 * c2;
        cp[i] = th * c1 * c2 - 0.5 * th * s1 * s2;
    }
    // prefix[i] = c[0..i] product; suffix[i] = c[i+1..] product.
    let mut prefix = vec![1.0; d + 1];
    for i in 0..d {
        prefix[i + 1] = prefix[i] * c[i];
    }
    let mut suffix = vec![1.0; d + 1];
    for i in (0..d).rev() {
        suffix[i] = suffix[i + 1] * c[i];
    }
    let pi_t = prefix[d];
    let pi_prime: f64 = (0..d).map(|i| prefix[i] * cp[i] * suffix[i + 1]).sum();
    let envelope = Complex64::new(-0.5 * spec.sigma * spec.sigma * t * t, -t * b).exp();
    let env_prime = Complex64::new(-spec.sigma * spec.sigma * t, -b) * envelope;
    env_prime * pi_t + envelope * pi_prime
}

/// Fourier/principal-value route for the grid witness (any `d`).
///
/// Plancherel turns the witness into the pairing of the activation transform
/// `A·(d/dt) p.v.(1/t) + B·δ′` with `G(t) = ρ̂-phase data`; after the
/// `u = G′` reduction the value is
///
/// `Re[ −(c₊ − c₋)·i^{d+1}·G′(0) − (c₊ + c₋)·(i^d/π)·p.v.[1/t](G′) ]`.
///
/// The `δ′` contribution `G′(0) = Π′(0)` vanishes for d ≥ 2 (every
/// per-coordinate factor `sin(tθᵢ)cos(tθᵢ/2)` vanishes at 0 and the product
/// rule leaves a surviving factor) but equals `θ₁` for d = 1, so it is kept
/// in general.
pub fn grid_witness_fourier(
    spec: &GridPairSpec,
    theta: &[f64],
    b: f64,
    act: &ActivationSpec,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    if theta.len() != spec.d {
        return Err(Error::DimensionMismatch { expected: spec.d, got: theta.len() });
    }
    check_unit(theta)?;
    if !act.is_degree_one() {
        return Err(Error::UnsupportedActivation(format!(
            "Fourier route only implemented for alpha = 1, got alpha = {}",
            act.alpha
        )));
    }
    // The envelope e^{−σ²t²/2} governs the tail; push the cutoff to where it
    // is ≈ e^{−72}.
    let cutoff = cfg.tail_cutoff.max(12.0 / spec.sigma);
    let cfg = QuadratureConfig { tail_cutoff: cutoff, ..*cfg };
    let pv = pv_integral(|t| g_prime(spec, theta, b, t), &cfg)?;

    let i = Complex64::new(0.0, 1.0);
    let g_prime_0 = g_prime(spec, theta, b, 0.0);
    let delta_term = -(act.c_plus - act.c_minus) * i.powu(spec.d as u32 + 1) * g_prime_0;
    let pv_term = -(act.c_plus + act.c_minus) * i.powu(spec.d as u32) / std::f64::consts::PI * pv;
    let w = delta_term + pv_term;
    if w.im.abs() > 1e-8 * (1.0 + w.re.abs()) {
        return Err(Error::ImaginaryResidual { value: w.re, residual: w.im });
    }
    Ok(w.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::{grid_sample, Label};
    use crate::numerics::{sample_sphere, RngStream};
    use rand::Rng;

    fn spec(d: usize, sigma: f64) -> GridPairSpec {
        GridPairSpec::new(d, sigma, 0.125, 0.125).unwrap()
    }

    fn relu() -> ActivationSpec {
        ActivationSpec::relu()
    }

    #[test]
    fn tail_bound_beyond_b_range() {
        // |b| > d + √d + 2 ⇒ |witness| ≤ (σ/√(2π)) e^{−d²/(2σ²)}.
        let mut rng = RngStream::new(401, 0).rng();
        for d in [2usize, 4] {
            let sp = spec(d, 0.2);
            let cap = sp.sigma / (2.0 * std::f64::consts::PI).sqrt()
                * (-(d as f64).powi(2) / (2.0 * sp.sigma * sp.sigma)).exp();
            for _ in 0..5 {
                let th = sample_sphere(d, &mut rng);
                let b = d as f64 + (d as f64).sqrt() + 2.1;
                let w = grid_witness_exact(&sp, &th, b, &relu()).unwrap();
                assert!(w.abs() <= cap * (1.0 + 1e-9), "d={d}: |w|={} cap={}", w.abs(), cap);
            }
        }
    }

    #[test]
    fn linear_regime_vanishes() {
        // For b far below the data range the ReLU is affine on the support,
        // and both total mass and first moment of ρ_d vanish (d ≥ 2).
        let sp = spec(2, 0.1);
        let w = grid_witness_exact(&sp, &[1.0, 0.0], -10.0, &relu()).unwrap();
        assert!(w.abs() < 1e-12, "w={w}");
    }

    #[test]
    fn monte_carlo_oracle_d3() {
        let sp = spec(3, 0.15);
        let mut rng = RngStream::new(402, 0).rng();
        let th = sample_sphere(3, &mut rng);
        let b = rng.gen_range(-1.0..1.0);
        let w = grid_witness_exact(&sp, &th, b, &relu()).unwrap();
        let n = 1_000_000;
        let act = relu();
        let eval_batch = |label, stream| {
            let batch = grid_sample(&sp, label, n, RngStream::new(403, stream));
            let vals: Vec<f64> = batch
                .points
                .iter()
                .map(|p| act.apply(p.iter().zip(&th).map(|(x, t)| x * t).sum::<f64>() - b))
                .collect();
            let mean = vals.iter().sum::<f64>() / n as f64;
            let var =
                vals.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n as f64 - 1.0);
            (mean, var / n as f64)
        };
        let (mp, vp) = eval_batch(Label::Plus, 0);
        let (mm, vm) = eval_batch(Label::Minus, 1);
        let se = (vp + vm).sqrt();
        assert!((w - (mp - mm)).abs() < 4.0 * se, "w={w} mc={} se={se}", mp - mm);
    }

    #[test]
    fn exact_cap() {
        let sp = spec(13, 0.1);
        let th = {
            let mut v = vec![0.0; 13];
            v[0] = 1.0;
            v
        };
        assert!(matches!(
            grid_witness_exact(&sp, &th, 0.0, &relu()),
            Err(Error::DimensionTooLarge { .. })
        ));
    }

    #[test]
    fn routes_agree_d1_to_6() {
        let cfg = QuadratureConfig::default();
        let mut rng = RngStream::new(404, 0).rng();
        for d in 1..=6usize {
            let sp = spec(d, 0.25);
            for _ in 0..20 {
                let th = sample_sphere(d, &mut rng);
                let bmax = d as f64 + (d as f64).sqrt();
                let b = rng.gen_range(-bmax..bmax);
                let exact = grid_witness_exact(&sp, &th, b, &relu()).unwrap();
                let fourier = grid_witness_fourier(&sp, &th, b, &relu(), &cfg).unwrap();
                let ok = (exact - fourier).abs() < 1e-6
                    || (exact - fourier).abs() < 1e-4 * exact.abs();
                assert!(ok, "d={d} b={b} θ={th:?}: exact={exact} fourier={fourier}");
            }
        }
    }

    #[test]
    fn routes_agree_leaky() {
        let act = ActivationSpec::leaky_relu(-0.4).unwrap();
        let cfg = QuadratureConfig::default();
        let mut rng = RngStream::new(405, 0).rng();
        for d in [1usize, 3] {
            let sp = spec(d, 0.2);
            for _ in 0..5 {
                let th = sample_sphere(d, &mut rng);
                let b = rng.gen_range(-2.0..2.0);
                let exact = grid_witness_exact(&sp, &th, b, &act).unwrap();
                let fourier = grid_witness_fourier(&sp, &th, b, &act, &cfg).unwrap();
                let ok = (exact - fourier).abs() < 1e-6
                    || (exact - fourier).abs() < 1e-4 * exact.abs();
                assert!(ok, "d={d} b={b}: exact={exact} fourier={fourier}");
            }
        }
    }

    #[test]
    fn zero_coordinate_degenerates() {
        // θ with θᵢ = 0: the Fourier product carries a sin(tθᵢ) = 0 factor,
        // so the route returns 0; it must agree with the exact route for θ
        // padded into the higher dimension.
        let cfg = QuadratureConfig::default();
        let sp2 = spec(2, 0.2);
        let th = [1.0, 0.0];
        let f = grid_witness_fourier(&sp2, &th, 0.4, &relu(), &cfg).unwrap();
        assert_eq!(f, 0.0);
        let e = grid_witness_exact(&sp2, &th, 0.4, &relu()).unwrap();
        assert!(e.abs() < 1e-12, "exact={e}");
    }

    #[test]
    fn parity_symmetry() {
        // Flipping the signs of two coordinates of θ leaves the witness
        // invariant (ρ_d is invariant under even sign flips).
        let sp = spec(4, 0.2);
        let mut rng = RngStream::new(406, 0).rng();
        for _ in 0..10 {
            let th = sample_sphere(4, &mut rng);
            let b = rng.gen_range(-2.0..2.0);
            let mut flipped = th.clone();
            flipped[1] = -flipped[1];
            flipped[3] = -flipped[3];
            let a = grid_witness_exact(&sp, &th, b, &relu()).unwrap();
            let c = grid_witness_exact(&sp, &flipped, b, &relu()).unwrap();
            assert!((a - c).abs() < 1e-12 * (1.0 + a.abs()));
        }
    }

    #[test]
    fn fourier_route_large_d() {
        // d = 10 runs (no enumeration cap) and stays below the gross
        // envelope 2(κ/√(2π))^d · (pv mass): here just check finiteness and
        // smallness.
        let cfg = QuadratureConfig::default();
        let mut rng = RngStream::new(407, 0).rng();
        let sp = spec(10, 0.1);
        let th = sample_sphere(10, &mut rng);
        let w = grid_witness_fourier(&sp, &th, 0.0, &relu(), &cfg).unwrap();
        assert!(w.is_finite());
        assert!(w.abs() < 1.0);
    }
}
