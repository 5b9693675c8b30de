use crate::networks::ActivationSpec;
use crate::numerics::{normal_cdf, normal_pdf};
use crate::{Error, Result};

/// `E[ReLU(Z − b)]` for `Z ~ N(m, s²)`:
///
/// `(m − b)·Φ((m − b)/s) + s·φ((m − b)/s)`.
pub fn relu_gaussian_mean(m: f64, s: f64, b: f64) -> f64 {
    assert!(s > 0.0, "scale must be positive");
    let z = (m - b) / s;
    (m - b) * normal_cdf(z) + s * normal_pdf(z)
}

/// `E[σ(Z − b)]` for `Z ~ N(m, s²)` and a degree-1 activation
/// `σ(t) = c₊ t₊ + c₋ (−t)₊`, using `(−t)₊ = (b − Z)₊`.
pub fn act_gaussian_mean(act: &ActivationSpec, m: f64, s: f64, b: f64) -> Result<f64> {
    if !act.is_degree_one() {
        return Err(Error::UnsupportedActivation(format!(
            "Gaussian mean only implemented for alpha = 1, got alpha = {}",
            act.alpha
        )));
    }
    Ok(act.c_plus * relu_gaussian_mean(m, s, b) + act.c_minus * relu_gaussian_mean(-m, s, -b))
}
