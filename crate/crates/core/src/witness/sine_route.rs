use crate::distributions::SinePairSpec;
use crate::networks::ActivationSpec;
use crate::numerics::{integrate_panelled, QuadratureConfig};
use crate::{Error, Result};

fn check_unit(theta: &[f64]) -> Result<()> {
    let n: f64 = theta.iter().map(|t| t * t).sum::<f64>().sqrt();
    if (n - 1.0).abs() > 1e-10 {
        return Err(Error::InvalidSpec(format!("theta must be a unit vector, got norm {n}")));
    }
    Ok(())
}

/// Witness `∫ ρ_d(x) σ(⟨θ, x⟩ − b) dx` for the sine pair, by the simplified
/// Fourier representation
///
/// `W = (c₊ − c₋)·(ℓθ₁/σ²)·e^{−ℓ²/(2σ²)} − (c₊ + c₋)·J/π`,
///
/// `J = ∫₀^∞ sin(tb) (e^{−‖tθ−ℓe₁‖²/(2σ²)} − e^{−‖tθ+ℓe₁‖²/(2σ²)}) / t² dt`,
///
/// where `‖tθ ∓ ℓe₁‖² = t² ∓ 2ℓθ₁t + ℓ²` on the unit sphere. The first term
/// is the `δ′` pairing, the second the principal-value part; the integrand's
/// singularity at `t = 0` is removable and evaluated by its Taylor expansion
/// inside `|t| < 1e−6`.
pub fn sine_witness(
    spec: &SinePairSpec,
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
            "sine witness only implemented for alpha = 1, got alpha = {}",
            act.alpha
        )));
    }
    let (sigma, ell) = (spec.sigma, spec.ell);
    let theta1 = theta[0];
    let s2 = sigma * sigma;
    let delta_term = ell * theta1 / s2 * (-ell * ell / (2.0 * s2)).exp();

    let a = ell * theta1 / s2; // sinh rate of the difference of exponentials
    let v = |t: f64| -> f64 {
        if t.abs() < 1e-6 {
            // v(t) = sin(tb)·2 sinh(at) e^{−(t²+ℓ²)/(2σ²)} / t²
            //      = 2ab e^{−ℓ²/(2σ²)} [1 + t²(a²/6 − b²/6 − 1/(2σ²)) + O(t⁴)].
            let lead = 2.0 * a * b * (-ell * ell / (2.0 * s2)).exp();
            lead * (1.0 + t * t * (a * a / 6.0 - b * b / 6.0 - 1.0 / (2.0 * s2)))
        } else {
            let e_minus = (-(t * t - 2.0 * ell * theta1 * t + ell * ell) / (2.0 * s2)).exp();
            let e_plus = (-(t * t + 2.0 * ell * theta1 * t + ell * ell) / (2.0 * s2)).exp();
            (t * b).sin() * (e_minus - e_plus) / (t * t)
        }
    };
    // The exponentials peak at t = ±ℓθ₁ with width σ; cover the peak and the
    // sin(tb) oscillation with the panel count.
    let cutoff = ell + 12.0 * sigma + 1.0;
    let n_panels = ((cutoff * b.abs() / std::f64::consts::PI).ceil() as usize
        + (4.0 * cutoff / sigma).ceil() as usize)
        .clamp(64, 4096);
    let j = integrate_panelled(v, 0.0, cutoff, n_panels, cfg)?;

    Ok((act.c_plus - act.c_minus) * delta_term
        - (act.c_plus + act.c_minus) * j / std::f64::consts::PI)
}

/// The §4 two-layer lower bound: the witness magnitude at the distinguished
/// point `θ = e₁`, `b = π/(2ℓ)` (the smallest positive `b` with
/// `sin(bℓ) = 1`).
pub fn sec4_two_layer_lower(spec: &SinePairSpec) -> Result<f64> {
    if spec.d < 4 {
        return Err(Error::InvalidSpec(format!(
            "sec4 lower bound defined for d >= 4, got {}",
            spec.d
        )));
    }
    let mut e1 = vec![0.0; spec.d];
    e1[0] = 1.0;
    let b = std::f64::consts::FRAC_PI_2 / spec.ell;
    let w = sine_witness(spec, &e1, b, &ActivationSpec::relu(), &QuadratureConfig::default())?;
    Ok(w.abs())
}
