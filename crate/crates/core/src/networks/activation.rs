use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Activation `σ(t) = c₊ (t)₊^α + c₋ (−t)₊^α` of the positive-part family.
///
/// `(1, 1, 0)` is the ReLU and `(1, 1, c)` with `c ∈ (−1, 0)` the leaky
/// ReLU (`σ(t) = t₊ − c·(−t)₊` acting as slope `−c` on the negative axis).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ActivationSpec {
    pub alpha: u32,
    pub c_plus: f64,
    pub c_minus: f64,
}

impl ActivationSpec {
    pub fn new(alpha: u32, c_plus: f64, c_minus: f64) -> Result<Self> {
        if alpha < 1 {
            return Err(Error::InvalidSpec("activation degree alpha must be >= 1".into()));
        }
        if !(c_plus > 0.0) || !c_plus.is_finite() {
            return Err(Error::InvalidSpec(format!("c_plus={c_plus} must be positive")));
        }
        if !(c_minus > -1.0 && c_minus <= 0.0) {
            return Err(Error::InvalidSpec(format!("c_minus={c_minus} must lie in (-1, 0]")));
        }
        Ok(Self { alpha, c_plus, c_minus })
    }

    pub fn relu() -> Self {
        Self { alpha: 1, c_plus: 1.0, c_minus: 0.0 }
    }

    /// Leaky ReLU with negative-axis coefficient `c ∈ (−1, 0)`.
    pub fn leaky_relu(c: f64) -> Result<Self> {
        Self::new(1, 1.0, c)
    }

    /// Pointwise evaluation.
    pub fn apply(&self, t: f64) -> f64 {
        let a = self.alpha as i32;
        self.c_plus * t.max(0.0).powi(a) + self.c_minus * (-t).max(0.0).powi(a)
    }

    /// `true` when the activation is in the degree-1 (ReLU/leaky) family,
    /// the only case with a principal-value Fourier representation here.
    pub fn is_degree_one(&self) -> bool {
        self.alpha == 1
    }
}

/// Distributional Fourier constants `(A, B)` of the activation (unitary
/// convention): `σ̂(t) = A · dᵅ/dtᵅ p.v.(1/t) + B · δ^{(α)}(t)` up to the
/// polynomial part handled separately, with
///
/// * `A = i^{α−1} (α!/√(2π)) (c₊ − (−1)^α c₋)`,
/// * `B = i^α √(π/2) (c₊ − (−1)^α c₋) + (−i)^α √(2π) c₋`.
///
/// For α = 1 this reduces to `A = (c₊ + c₋)/√(2π)` and
/// `B = i√(π/2)(c₊ − c₋)`; the pure linear activation (`c₊ = 1, c₋ = −1`)
/// then correctly gives `A = 0`, `B = i√(2π)`, the transform of `x`.
pub fn activation_fourier_constants(act: &ActivationSpec) -> (Complex64, Complex64) {
    let i = Complex64::new(0.0, 1.0);
    let alpha = act.alpha;
    let fact: f64 = (1..=alpha as u64).product::<u64>() as f64;
    let sqrt_2pi = (2.0 * std::f64::consts::PI).sqrt();
    let parity = if alpha % 2 == 0 { 1.0 } else { -1.0 };
    let coeff = act.c_plus - parity * act.c_minus;
    let a = i.powu(alpha - 1) * (fact / sqrt_2pi) * coeff;
    let b = i.powu(alpha) * (std::f64::consts::FRAC_PI_2).sqrt() * coeff
        + (-i).powu(alpha) * sqrt_2pi * act.c_minus;
    (a, b)
}
