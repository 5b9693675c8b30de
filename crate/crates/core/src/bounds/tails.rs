use crate::numerics::{integrate_panelled, ln_gamma, QuadratureConfig};
use crate::{Error, Result};

/// Simple Gaussian tail bounds for `N(0, σ²)` beyond `x > 0`:
///
/// * `prob_bound = (σ/(x√(2π)))·e^{−x²/(2σ²)} ≥ P(X > x)`,
/// * `mean_bound = (σ/√(2π))·e^{−x²/(2σ²)} ≥ E[(X − x)₊]`.
pub fn gaussian_tail(x: f64, sigma: f64) -> Result<(f64, f64)> {
    if !(x > 0.0) {
        return Err(Error::InvalidSpec(format!("x={x} must be > 0")));
    }
    if !(sigma > 0.0) {
        return Err(Error::InvalidSpec(format!("sigma={sigma} must be > 0")));
    }
    let tau = (2.0 * std::f64::consts::PI).sqrt();
    let e = (-x * x / (2.0 * sigma * sigma)).exp();
    Ok((sigma / (x * tau) * e, sigma / tau * e))
}

/// Principal-value bound `|p.v.[1/x](u)| ≤ 2(sup|u′| + sup|u·x^δ|/δ)`, the
/// sups taken over `(−1, 1)` and `ℝ∖[−1, 1]` respectively.
pub fn pv_bound(sup_uprime: f64, sup_uxdelta: f64, delta: f64) -> Result<f64> {
    if !(delta > 0.0) {
        return Err(Error::InvalidSpec(format!("delta={delta} must be > 0")));
    }
    if sup_uprime < 0.0 || sup_uxdelta < 0.0 {
        return Err(Error::InvalidSpec("sups must be nonnegative".into()));
    }
    Ok(2.0 * (sup_uprime + sup_uxdelta / delta))
}

/// Area of the `(d−1)`-spherical cap of colatitude `angle` on the radius-`r`
/// sphere: `(2π^{(d−1)/2}/Γ((d−1)/2))·r^{d−1}·∫₀^angle sin^{d−2}(t) dt`.
/// The Γ-ratio is evaluated in log space.
pub fn spherical_cap_area(d: usize, r: f64, angle: f64) -> Result<f64> {
    if d < 2 {
        return Err(Error::InvalidSpec(format!("cap area needs d >= 2, got {d}")));
    }
    if !(r > 0.0) {
        return Err(Error::InvalidSpec(format!("r={r} must be > 0")));
    }
    if !(angle > 0.0 && angle <= std::f64::consts::FRAC_PI_2 + 1e-15) {
        return Err(Error::InvalidSpec(format!("angle={angle} must lie in (0, π/2]")));
    }
    let dm1 = (d - 1) as f64;
    let log_pref = std::f64::consts::LN_2 + 0.5 * dm1 * std::f64::consts::PI.ln()
        - ln_gamma(dm1 / 2.0)
        + dm1 * r.ln();
    let cfg = QuadratureConfig::default();
    let p = (d as i32 - 2).max(0);
    let integral = integrate_panelled(|t| t.sin().powi(p), 0.0, angle, 16, &cfg)?;
    Ok(log_pref.exp() * integral)
}
