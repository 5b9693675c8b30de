use crate::numerics::find_root;
use crate::{Error, Result};

const BRACKET: (f64, f64) = (1e-8, 10.0);

/// Grid-construction bandwidth `σ_d`: the solution of
/// `x₀²/(2σ²) = log(dσ/(√(2π)·ε·x₀))`.
///
/// The left side strictly decreases and the right side strictly increases in
/// σ, so the crossing is unique; it is found by safeguarded root finding on
/// `(1e−8, 10)`.
pub fn sigma_d_grid(d: usize, eps: f64, x0: f64) -> Result<f64> {
    if d < 1 {
        return Err(Error::InvalidSpec("d must be >= 1".into()));
    }
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidSpec(format!("eps={eps} must lie in (0,1)")));
    }
    if !(x0 > 0.0 && x0 < 0.25) {
        return Err(Error::BadPlateau(x0));
    }
    let tau = (2.0 * std::f64::consts::PI).sqrt();
    let f = |s: f64| x0 * x0 / (2.0 * s * s) - (d as f64 * s / (tau * eps * x0)).ln();
    find_root(f, BRACKET.0, BRACKET.1, 1e-15)
}

/// Sine-construction bandwidth `σ_d`: the solution of
/// `1/(2σ²) = log(√2·d²·σ/√π)` (the defining equation with `x₀ = 1`).
pub fn sigma_d_sine(d: usize) -> Result<f64> {
    if d < 1 {
        return Err(Error::InvalidSpec("d must be >= 1".into()));
    }
    let d2 = (d as f64) * (d as f64);
    let f = |s: f64| {
        1.0 / (2.0 * s * s) - (2.0f64.sqrt() * d2 * s / std::f64::consts::PI.sqrt()).ln()
    };
    find_root(f, BRACKET.0, BRACKET.1, 1e-15)
}
