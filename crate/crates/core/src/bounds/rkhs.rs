use std::collections::BTreeMap;

use crate::bounds::BoundReport;
use crate::distributions::SinePairSpec;
use crate::networks::ActivationSpec;
use crate::numerics::ln_gamma;
use crate::{Error, Result};

/// Segment bounds for `v(t) = sin(tb)(e^{−‖tθ−ℓe₁‖²/2σ²} −
/// e^{−‖tθ+ℓe₁‖²/2σ²})/t²` over `[0, T]`, `[T, 1]`, `[1, ∞)` with
/// `T = 2σ²/(ℓ|θ₁|)`:
///
/// * `|∫₀^T v| ≤ 2·sinh(2)·|b|·e^{−ℓ²/(2σ²)}` — the identity
///   `v = 2e^{−(t²+ℓ²)/2σ²}(sin tb/t²)·sinh(ℓθ₁t/σ²)` puts the sinh
///   argument at 2 at `t = T`, and `sinh(x)/x` is increasing;
/// * `|∫_T^1 v| ≤ ℓ²θ₁²·e^{−(ℓ−1)²/(2σ²)}/(4σ⁴)`;
/// * `|∫₁^∞ v| ≤ √(2πσ²)·e^{−ℓ²(1−θ₁²)/(2σ²)}`.
pub fn sec4_v_bounds(spec: &SinePairSpec, theta: &[f64], b: f64) -> Result<(f64, f64, f64)> {
    if theta.len() != spec.d {
        return Err(Error::DimensionMismatch { expected: spec.d, got: theta.len() });
    }
    let theta1 = theta[0];
    if theta1 == 0.0 {
        return Err(Error::DegenerateTheta);
    }
    let (sigma, ell) = (spec.sigma, spec.ell);
    let s2 = sigma * sigma;
    let first = 2.0 * 2.0f64.sinh() * b.abs() * (-ell * ell / (2.0 * s2)).exp();
    let second =
        ell * ell * theta1 * theta1 * (-(ell - 1.0).powi(2) / (2.0 * s2)).exp() / (4.0 * s2 * s2);
    let third = (2.0 * std::f64::consts::PI * s2).sqrt()
        * (-ell * ell * (1.0 - theta1 * theta1) / (2.0 * s2)).exp();
    Ok((first, second, third))
}

/// Fully explicit RKHS/MMD upper bound for the sine pair under the feature
/// distribution `(θ, b) ~ Unif(S^{d−1}) ⊗ N(0, 1)`.
///
/// Squares the witness decomposition `W = (c₊−c₋)·D + ((c₊+c₋)/π)·(−∫v)`
/// with the crude rearrangement factor 4 per term, takes feature
/// expectations (`E[θ₁²] = 1/d`, `E[θ₁⁴] = 3/(d(d+2))`, `E[b²] = 1`, the
/// cap-area bound `(π/4)·(Γ(d/2)/(Γ((d−1)/2)√π))·(2^{−(d−2)/2} +
/// e^{−ℓ²/2σ²})` for `E[e^{−ℓ²(1−θ₁²)/σ²}]`), and sums square roots
/// term-wise. `total = Σᵢ √tᵢ ≥ √(Σᵢ tᵢ) ≥ MMD`.
pub fn rkhs_upper_bound_explicit(spec: &SinePairSpec, act: &ActivationSpec) -> Result<BoundReport> {
    if spec.d < 2 {
        return Err(Error::InvalidSpec("rkhs bound needs d >= 2".into()));
    }
    if !act.is_degree_one() {
        return Err(Error::UnsupportedActivation(format!(
            "rkhs bound only for alpha = 1, got {}",
            act.alpha
        )));
    }
    let d = spec.d as f64;
    let (sigma, ell) = (spec.sigma, spec.ell);
    let s2 = sigma * sigma;
    let c_delta = act.c_plus - act.c_minus;
    let c_pv = (act.c_plus + act.c_minus) / std::f64::consts::PI;

    // t1: delta-pairing term, E[θ₁²] = 1/d.
    let t1 = 4.0 * c_delta * c_delta * ell * ell / (d * s2 * s2) * (-ell * ell / s2).exp();
    // t2: first v-segment, E[b²] = 1.
    let t2 = 4.0 * c_pv * c_pv * (2.0 * 2.0f64.sinh()).powi(2) * (-ell * ell / s2).exp();
    // t3: middle v-segment, E[θ₁⁴] = 3/(d(d+2)).
    let t3 = 4.0 * c_pv * c_pv * ell.powi(4) * 3.0 / (d * (d + 2.0))
        * (-(ell - 1.0).powi(2) / s2).exp()
        / (16.0 * s2.powi(4));
    // t4: tail v-segment through the spherical-cap bound.
    let cap = std::f64::consts::FRAC_PI_4
        * (ln_gamma(d / 2.0) - ln_gamma((d - 1.0) / 2.0) - 0.5 * std::f64::consts::PI.ln()).exp()
        * (2.0f64.powf(-(d - 2.0) / 2.0) + (-ell * ell / (2.0 * s2)).exp());
    let t4 = 4.0 * c_pv * c_pv * 2.0 * std::f64::consts::PI * s2 * cap;

    let total = t1.sqrt() + t2.sqrt() + t3.sqrt() + t4.sqrt();
    let mut terms = BTreeMap::new();
    terms.insert("square_rearrangement_delta".into(), t1);
    terms.insert("square_rearrangement_b".into(), t2);
    terms.insert("square_rearrangement_mid".into(), t3);
    terms.insert("area_cap_application".into(), t4);
    let mut params = BTreeMap::new();
    params.insert("d".into(), d);
    params.insert("sigma".into(), sigma);
    params.insert("ell".into(), ell);
    Ok(BoundReport { total, terms, params })
}
