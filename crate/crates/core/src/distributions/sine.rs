use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::distributions::{Label, SampleBatch, SignedDensityValue};
use crate::numerics::{integrate_panelled, QuadratureConfig, RngStream};
use crate::{Error, Result};

/// Reference density ξ used to pad the positive/negative parts into
/// probability densities. Fixed to the standard Gaussian `N(0, I_d)`:
/// smooth, trivially samplable, and the parts stay in closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RefDensity {
    #[default]
    StandardGaussian,
}

/// Parameters of the sine-modulated Gaussian pair.
///
/// The signed difference of the pair is
/// `ρ_d(x) = 2σ^d/(2π)^{d/2} · e^{−σ²‖x‖²/2} · sin(ℓ x₁)`,
/// i.e. a Gaussian of per-coordinate variance `1/σ²` modulated by a sine in
/// the first coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SinePairSpec {
    /// Ambient dimension.
    pub d: usize,
    /// Inverse scale σ > 0 (the Gaussian factor is `e^{−σ²‖x‖²/2}`).
    pub sigma: f64,
    /// Frequency ℓ > 0 along the first coordinate.
    pub ell: f64,
    /// Tag for the reference density ξ.
    pub ref_density: RefDensity,
    /// Cached `∫|ρ_d|`, computed once at construction.
    abs_mass: f64,
}

impl SinePairSpec {
    pub fn new(d: usize, sigma: f64, ell: f64) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidSpec("dimension must be positive".into()));
        }
        if !(sigma > 0.0) {
            return Err(Error::InvalidSpec(format!("sigma={sigma} must be > 0")));
        }
        if !(ell > 0.0) {
            return Err(Error::InvalidSpec(format!("ell={ell} must be > 0")));
        }
        let mut spec =
            Self { d, sigma, ell, ref_density: RefDensity::StandardGaussian, abs_mass: 0.0 };
        spec.abs_mass = compute_abs_mass(sigma, ell)?;
        Ok(spec)
    }

    /// Weight of the ξ component in both mixture densities.
    pub fn xi_weight(&self) -> f64 {
        1.0 - 0.5 * self.abs_mass
    }
}

/// `∫_{ℝ^d} |ρ_d| dx = 2·E_{X~N(0,1/σ²)} |sin(ℓX)|` by 1-D quadrature; the
/// panel count tracks the oscillation period so no lobe is missed.
fn compute_abs_mass(sigma: f64, ell: f64) -> Result<f64> {
    let cfg = QuadratureConfig { abs_tol: 1e-11, rel_tol: 1e-11, ..Default::default() };
    let lim = 10.0 / sigma;
    let n_panels = (64usize).max((2.0 * lim * ell / std::f64::consts::PI).ceil() as usize).min(1 << 14);
    let c = sigma / (2.0 * std::f64::consts::PI).sqrt();
    let e_abs_sin = integrate_panelled(
        |x| c * (-0.5 * sigma * sigma * x * x).exp() * (ell * x).sin().abs(),
        -lim,
        lim,
        n_panels,
        &cfg,
    )?;
    Ok(2.0 * e_abs_sin)
}

/// Total variation mass `∫|ρ_d|` (always in [0, 2]).
pub fn sine_abs_mass(spec: &SinePairSpec) -> f64 {
    spec.abs_mass
}

/// Standard Gaussian density on `ℝ^d`.
fn xi_density(x: &[f64]) -> f64 {
    let sq: f64 = x.iter().map(|v| v * v).sum();
    (-0.5 * sq).exp() / (2.0 * std::f64::consts::PI).powf(x.len() as f64 / 2.0)
}

/// Signed density and its mixture split:
///
/// `ρ⁺ = (1 − ½∫|ρ|)·ξ + max{0, ρ}` and `ρ⁻ = (1 − ½∫|ρ|)·ξ + max{0, −ρ}`,
/// so both parts are probability densities and their difference is ρ.
pub fn sine_signed_density(spec: &SinePairSpec, x: &[f64]) -> Result<SignedDensityValue> {
    if x.len() != spec.d {
        return Err(Error::DimensionMismatch { expected: spec.d, got: x.len() });
    }
    let sq: f64 = x.iter().map(|v| v * v).sum();
    let value = 2.0 * spec.sigma.powi(spec.d as i32)
        / (2.0 * std::f64::consts::PI).powf(spec.d as f64 / 2.0)
        * (-0.5 * spec.sigma * spec.sigma * sq).exp()
        * (spec.ell * x[0]).sin();
    let pad = spec.xi_weight() * xi_density(x);
    Ok(SignedDensityValue {
        value,
        positive_part: pad + value.max(0.0),
        negative_part: pad + (-value).max(0.0),
    })
}

/// Closed-form Fourier transform (unitary convention):
///
/// `ρ̂_d(w) = i/(2π)^{d/2} · (e^{−‖w+ℓe₁‖²/(2σ²)} − e^{−‖w−ℓe₁‖²/(2σ²)})`.
///
/// Purely imaginary and odd in `w₁`.
pub fn sine_fourier(spec: &SinePairSpec, w: &[f64]) -> Result<Complex64> {
    if w.len() != spec.d {
        return Err(Error::DimensionMismatch { expected: spec.d, got: w.len() });
    }
    let tail: f64 = w[1..].iter().map(|v| v * v).sum();
    let two_s2 = 2.0 * spec.sigma * spec.sigma;
    let plus = (-((w[0] + spec.ell).powi(2) + tail) / two_s2).exp();
    let minus = (-((w[0] - spec.ell).powi(2) + tail) / two_s2).exp();
    Ok(Complex64::new(0.0, 1.0) * (plus - minus)
        / (2.0 * std::f64::consts::PI).powf(spec.d as f64 / 2.0))
}

/// Draw `n` points from the labelled measure of the pair.
///
/// Mixture sampler: with probability `1 − ½∫|ρ|` draw from ξ; otherwise draw
/// `x₂..x_d ~ N(0, 1/σ²)` and `x₁` by rejection from the density
/// `∝ max{0, ±sin(ℓx₁)}·e^{−σ²x₁²/2}` (proposal `N(0, 1/σ²)`, acceptance
/// probability `max{0, ±sin(ℓx₁)}`).
pub fn sine_sample(
    spec: &SinePairSpec,
    label: Label,
    n: usize,
    rng: RngStream,
) -> Result<SampleBatch> {
    assert!(n >= 1);
    let mut gen = rng.rng();
    let p_xi = spec.xi_weight();
    let s = label.sign();
    let mut accepted = 0usize;
    let mut proposed = 0usize;
    let mut points = Vec::with_capacity(n);
    for _ in 0..n {
        if gen.gen::<f64>() < p_xi {
            points.push((0..spec.d).map(|_| gen.sample::<f64, _>(StandardNormal)).collect());
            continue;
        }
        let x1 = loop {
            if proposed >= 100_000 && (accepted as f64) < 1e-4 * proposed as f64 {
                return Err(Error::RejectionStall { accepted, proposed });
            }
            proposed += 1;
            let cand = gen.sample::<f64, _>(StandardNormal) / spec.sigma;
            let acc = (s * (spec.ell * cand).sin()).max(0.0);
            if gen.gen::<f64>() < acc {
                accepted += 1;
                break cand;
            }
        };
        let mut p = Vec::with_capacity(spec.d);
        p.push(x1);
        for _ in 1..spec.d {
            p.push(gen.sample::<f64, _>(StandardNormal) / spec.sigma);
        }
        points.push(p);
    }
    Ok(SampleBatch { points, label, rng_fingerprint: rng })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(d: usize, sigma: f64, ell: f64) -> SinePairSpec {
        SinePairSpec::new(d, sigma, ell).unwrap()
    }

    #[test]
    fn value_zero_on_nodal_plane() {
        let sp = spec(3, 0.5, 2.0);
        let v = sine_signed_density(&sp, &[0.0, 1.3, -0.4]).unwrap();
        assert_eq!(v.value, 0.0);
    }

    #[test]
    fn value_odd_in_x1() {
        let sp = spec(2, 0.4, 3.0);
        let a = sine_signed_density(&sp, &[0.7, -0.2]).unwrap().value;
        let b = sine_signed_density(&sp, &[-0.7, -0.2]).unwrap().value;
        assert!((a + b).abs() < 1e-16);
    }

    #[test]
    fn d1_point_value() {
        // (2σ/√(2π)) e^{−σ²x²/2} sin(x) at σ=0.2, ℓ=1, x=π/2.
        let sp = spec(1, 0.2, 1.0);
        let x = std::f64::consts::FRAC_PI_2;
        let v = sine_signed_density(&sp, &[x]).unwrap().value;
        let expect = 2.0 * 0.2 / (2.0 * std::f64::consts::PI).sqrt()
            * (-0.02 * x * x).exp();
        assert!((v - expect).abs() < 1e-12);
        assert!((v - 0.15183).abs() < 1e-4);
    }

    #[test]
    fn abs_mass_limits() {
        // ℓ → 0: no oscillation, mass → 0.
        assert!(sine_abs_mass(&spec(1, 1.0, 1e-8)) < 1e-7);
        // ℓ/σ → ∞: E|sin| → 2/π, so the mass → 4/π.
        let m = sine_abs_mass(&spec(1, 1.0, 100.0));
        assert!((m - 4.0 / std::f64::consts::PI).abs() < 1e-3, "m={m}");
        // Always ≤ 2.
        for (s, l) in [(0.1, 1.0), (1.0, 3.0), (2.0, 0.5), (0.27, 8.0)] {
            let m = sine_abs_mass(&spec(3, s, l));
            assert!((0.0..=2.0).contains(&m), "mass {m} for sigma={s}, ell={l}");
        }
    }

    #[test]
    fn abs_mass_matches_quadrature_of_density_d1() {
        let sp = spec(1, 0.5, 3.0);
        let cfg = QuadratureConfig { abs_tol: 1e-11, rel_tol: 1e-11, ..Default::default() };
        let q = integrate_panelled(
            |x| sine_signed_density(&sp, &[x]).unwrap().value.abs(),
            -25.0,
            25.0,
            512,
            &cfg,
        )
        .unwrap();
        assert!((q - sine_abs_mass(&sp)).abs() < 1e-8);
    }

    #[test]
    fn parts_are_probability_densities() {
        // positive_part, negative_part ≥ 0 with unit mass at d = 1 and 2.
        let cfg = QuadratureConfig { abs_tol: 1e-10, rel_tol: 1e-10, ..Default::default() };
        let sp1 = spec(1, 0.5, 2.0);
        let pos =
            integrate_panelled(|x| sine_signed_density(&sp1, &[x]).unwrap().positive_part, -30.0, 30.0, 256, &cfg)
                .unwrap();
        let neg =
            integrate_panelled(|x| sine_signed_density(&sp1, &[x]).unwrap().negative_part, -30.0, 30.0, 256, &cfg)
                .unwrap();
        assert!((pos - 1.0).abs() < 1e-6, "pos mass {pos}");
        assert!((neg - 1.0).abs() < 1e-6, "neg mass {neg}");

        let sp2 = spec(2, 0.8, 1.5);
        let inner = |x0: f64| {
            integrate_panelled(
                |x1| sine_signed_density(&sp2, &[x0, x1]).unwrap().positive_part,
                -12.0,
                12.0,
                32,
                &cfg,
            )
            .unwrap()
        };
        let pos2 = integrate_panelled(inner, -12.0, 12.0, 32, &cfg).unwrap();
        assert!((pos2 - 1.0).abs() < 1e-6, "2-D pos mass {pos2}");

        let mut rng = RngStream::new(201, 0).rng();
        for _ in 0..100 {
            let x = [rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..4.0)];
            let v = sine_signed_density(&sp2, &x).unwrap();
            assert!(v.positive_part >= 0.0 && v.negative_part >= 0.0);
            assert!((v.value - (v.positive_part - v.negative_part)).abs() < 1e-15);
        }
    }

    #[test]
    fn fourier_trivial_points() {
        let sp = spec(3, 0.3, 2.0);
        assert_eq!(sine_fourier(&sp, &[0.0, 1.0, -2.0]).unwrap().norm(), 0.0);
        // w = ℓ e₁ with ℓ/σ large: value ≈ −i/(2π)^{d/2}.
        let sp2 = spec(2, 0.1, 5.0);
        let v = sine_fourier(&sp2, &[5.0, 0.0]).unwrap();
        let want = -Complex64::new(0.0, 1.0) / (2.0 * std::f64::consts::PI);
        assert!((v - want).norm() < 1e-12);
    }

    #[test]
    fn fourier_imaginary_and_odd() {
        let sp = spec(2, 0.4, 1.5);
        let mut rng = RngStream::new(202, 0).rng();
        for _ in 0..50 {
            let w = [rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)];
            let v = sine_fourier(&sp, &w).unwrap();
            assert_eq!(v.re, 0.0);
            let r = sine_fourier(&sp, &[-w[0], w[1]]).unwrap();
            assert!((v + r).norm() < 1e-16);
        }
    }

    #[test]
    fn fourier_matches_quadrature_d1() {
        let sp = spec(1, 0.2, 1.0);
        let cfg = QuadratureConfig { abs_tol: 1e-12, rel_tol: 1e-12, ..Default::default() };
        for &w in &[0.5, -1.3, 2.0] {
            let re = integrate_panelled(
                |x| sine_signed_density(&sp, &[x]).unwrap().value * (w * x).cos(),
                -80.0,
                80.0,
                64,
                &cfg,
            )
            .unwrap();
            let im = integrate_panelled(
                |x| -sine_signed_density(&sp, &[x]).unwrap().value * (w * x).sin(),
                -80.0,
                80.0,
                64,
                &cfg,
            )
            .unwrap();
            let oracle = Complex64::new(re, im) / (2.0 * std::f64::consts::PI).sqrt();
            let v = sine_fourier(&sp, &[w]).unwrap();
            assert!((v - oracle).norm() < 1e-8, "w={w}: {v} vs {oracle}");
        }
    }

    #[test]
    fn sampler_sign_structure_d1() {
        // Compare plus and minus empirical means of sin(ℓx): the difference
        // estimates ∫ sin(ℓx₁) ρ(x) dx.
        let sp = spec(1, 0.7, 2.0);
        let n = 200_000;
        let plus = sine_sample(&sp, Label::Plus, n, RngStream::new(203, 0)).unwrap();
        let minus = sine_sample(&sp, Label::Minus, n, RngStream::new(203, 1)).unwrap();
        let mean = |b: &SampleBatch| {
            b.points.iter().map(|p| (sp.ell * p[0]).sin()).sum::<f64>() / n as f64
        };
        let diff = mean(&plus) - mean(&minus);
        let cfg = QuadratureConfig { abs_tol: 1e-11, rel_tol: 1e-11, ..Default::default() };
        let oracle = integrate_panelled(
            |x| (sp.ell * x).sin() * sine_signed_density(&sp, &[x]).unwrap().value,
            -20.0,
            20.0,
            256,
            &cfg,
        )
        .unwrap();
        // Var(sin) ≤ 1 per batch; 4 SE of the difference.
        let se = (2.0 / n as f64).sqrt();
        assert!((diff - oracle).abs() < 4.0 * se, "diff={diff} oracle={oracle}");
    }

    #[test]
    fn sampler_test_functions_d2() {
        let sp = spec(2, 0.8, 1.5);
        let n = 100_000;
        let batch = sine_sample(&sp, Label::Plus, n, RngStream::new(204, 0)).unwrap();
        let cfg = QuadratureConfig { abs_tol: 1e-9, rel_tol: 1e-9, ..Default::default() };
        let mut rng = RngStream::new(205, 0).rng();
        for trial in 0..10 {
            let (a, b, c) = (
                rng.gen_range(-1.5..1.5),
                rng.gen_range(-1.5..1.5),
                rng.gen_range(-2.0..2.0),
            );
            let f = move |x: &[f64]| (a * x[0] + b * x[1] + c).cos();
            let emp: f64 = batch.points.iter().map(|p| f(p)).sum::<f64>() / n as f64;
            let inner = |x0: f64| {
                integrate_panelled(
                    |x1| f(&[x0, x1]) * sine_signed_density(&sp, &[x0, x1]).unwrap().positive_part,
                    -12.0,
                    12.0,
                    24,
                    &cfg,
                )
                .unwrap()
            };
            let quad = integrate_panelled(inner, -12.0, 12.0, 24, &cfg).unwrap();
            // |f| ≤ 1 so Var ≤ 1.
            let se = (1.0 / n as f64).sqrt();
            assert!((emp - quad).abs() < 4.0 * se, "trial {trial}: emp={emp} quad={quad}");
        }
    }

    #[test]
    fn sampler_ks_against_quadrature_cdf_d1() {
        let sp = spec(1, 0.6, 2.5);
        let n = 20_000;
        let batch = sine_sample(&sp, Label::Plus, n, RngStream::new(206, 0)).unwrap();
        let mut xs: Vec<f64> = batch.points.iter().map(|p| p[0]).collect();
        xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        // Quadrature CDF of ρ⁺ tabulated on a fine grid, then interpolated.
        let lim = 30.0;
        let m = 60_000usize;
        let h = 2.0 * lim / m as f64;
        let mut cum = Vec::with_capacity(m + 1);
        let mut acc = 0.0;
        let mut prev = sine_signed_density(&sp, &[-lim]).unwrap().positive_part;
        cum.push(0.0);
        for k in 1..=m {
            let x = -lim + k as f64 * h;
            let cur = sine_signed_density(&sp, &[x]).unwrap().positive_part;
            acc += 0.5 * h * (prev + cur);
            cum.push(acc);
            prev = cur;
        }
        let total = *cum.last().unwrap();
        assert!((total - 1.0).abs() < 1e-6, "CDF total {total}");
        let cdf = |x: f64| {
            let t = ((x + lim) / h).clamp(0.0, m as f64);
            let k = t.floor() as usize;
            let frac = t - k as f64;
            if k >= m { total } else { cum[k] + frac * (cum[k + 1] - cum[k]) }
        };
        let mut dmax: f64 = 0.0;
        for (i, &x) in xs.iter().enumerate() {
            let f = cdf(x);
            dmax = dmax.max((f - i as f64 / n as f64).abs());
            dmax = dmax.max(((i + 1) as f64 / n as f64 - f).abs());
        }
        assert!(dmax < 1.9495 / (n as f64).sqrt(), "KS statistic {dmax}");
    }

    #[test]
    fn sampler_deterministic() {
        let sp = spec(2, 0.5, 2.0);
        let a = sine_sample(&sp, Label::Plus, 50, RngStream::new(207, 0)).unwrap();
        let b = sine_sample(&sp, Label::Plus, 50, RngStream::new(207, 0)).unwrap();
        assert_eq!(a, b);
    }
}
