use std::collections::BTreeMap;

use crate::bounds::{kappa, BoundReport};
use crate::{Error, Result};

/// The two explicit sup bounds on the principal-value integrand
/// `u(t) = d/dt(e^{−σ²t²/2 − itb}·∏ᵢ cos(tθᵢ)sin(2tθᵢ))`:
///
/// * `B1 ≥ sup_t |u′(t)|`,
/// * `B2 ≥ sup_t |u(t)·t|`,
///
/// both of the form `κ^d·√(real² + imag²)` with the crude per-term constants
/// of the appendix displays. The undefined symbol `a` in the second display
/// is instantiated as `|b|`, the only reading consistent with the stated
/// `O(κ^d(d + |b|)/σ)`.
pub fn u_sup_bounds(d: usize, sigma: f64, b: f64) -> Result<(f64, f64)> {
    if !(sigma > 0.0) {
        return Err(Error::InvalidSpec(format!("sigma={sigma} must be > 0")));
    }
    let (k, _) = kappa();
    let kd = k.powi(d as i32);
    let df = d as f64;
    let sqrt_e = std::f64::consts::E.sqrt();
    let babs = b.abs();

    let re1 = 2.0 * sigma * sigma / std::f64::consts::E
        + 5.0
        + b * b
        + 6.0 * df * sigma / (k * sqrt_e)
        + 4.0 * df * df / (k * k)
        + df * (df - 1.0) / (k * k)
        + 4.0 * df * (df - 1.0) / (k * k);
    let im1 = 2.0 * babs * sigma / sqrt_e + 6.0 * df * babs / k;
    let b1 = kd * re1.hypot(im1);

    let re2 = 2.0 / std::f64::consts::E
        + 2.0 * df * babs / (sigma * k * sqrt_e)
        + 2.0 * df / (sigma * k * sqrt_e);
    let im2 = babs / (sigma * sqrt_e);
    let b2 = kd * re2.hypot(im2);

    Ok((b1, b2))
}

/// Fully explicit two-layer upper bound for the grid pair with a ReLU
/// discriminator: the maximum of
///
/// * the interior branch `√(2/π)·|A|·(2/π)·(B1 + B2)` at the worst bias
///   `|b| = d + √d` (principal-value bound with `δ = 1`,
///   `|A| = 1/√(2π)` the ReLU Fourier coefficient), and
/// * the large-bias tail `(σ/√(2π))·e^{−d²/(2σ²)}`.
pub fn upper_bound_2l_explicit(d: usize, sigma: f64) -> Result<BoundReport> {
    if d < 1 {
        return Err(Error::InvalidSpec("d must be >= 1".into()));
    }
    let tau = (2.0 * std::f64::consts::PI).sqrt();
    let b_worst = d as f64 + (d as f64).sqrt();
    let (b1, b2) = u_sup_bounds(d, sigma, b_worst)?;
    let a_abs = 1.0 / tau;
    let interior =
        (2.0 / std::f64::consts::PI).sqrt() * a_abs * (2.0 / std::f64::consts::PI) * (b1 + b2);
    let tail = sigma / tau * (-(d as f64).powi(2) / (2.0 * sigma * sigma)).exp();
    let total = interior.max(tail);

    let mut terms = BTreeMap::new();
    terms.insert("sup_bound_u_u_prime_B1".into(), b1);
    terms.insert("sup_bound_u_u_prime_B2".into(), b2);
    terms.insert("interior".into(), interior);
    terms.insert("b_d_sqrtd_tail".into(), tail);
    let mut params = BTreeMap::new();
    params.insert("d".into(), d as f64);
    params.insert("sigma".into(), sigma);
    params.insert("b_worst".into(), b_worst);
    Ok(BoundReport { total, terms, params })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::sigma_d_grid;
    use crate::numerics::{sample_sphere, RngStream};
    use num_complex::Complex64;
    use rand::Rng;

    /// The Fourier-side integrand u(t) for a concrete (θ, b), evaluated directly.
    fn u(t: f64, theta: &[f64], sigma: f64, b: f64) -> Complex64 {
        let env = Complex64::new(-sigma * sigma * t * t / 2.0, -t * b).exp();
        let mut prod = 1.0;
        let mut coef = Complex64::new(-sigma * sigma * t, -b);
        for &th in theta {
            prod *= (t * th).cos() * (2.0 * t * th).sin();
            coef.re += -th * (t * th).tan() + 2.0 * th * (2.0 * t * th).cos() / (2.0 * t * th).sin();
        }
        coef * env * prod
    }

    #[test]
    fn b1_dominates_grid_uprime() {
        // Dense-grid max of |u′| (central difference) for random θ.
        let mut rng = RngStream::new(902, 0).rng();
        for d in [2usize, 3, 5] {
            let sigma = 0.15;
            let b = rng.gen_range(-2.0..2.0);
            let theta = sample_sphere(d, &mut rng);
            let (bnd1, bnd2) = u_sup_bounds(d, sigma, b).unwrap();
            let h = 1e-6;
            let mut sup_up = 0.0f64;
            let mut sup_ux = 0.0f64;
            for i in 0..200_000 {
                let t = -50.0 / sigma + 100.0 / sigma * i as f64 / 199_999.0;
                let du = (u(t + h, &theta, sigma, b) - u(t - h, &theta, sigma, b)) / (2.0 * h);
                if du.norm().is_finite() {
                    sup_up = sup_up.max(du.norm());
                }
                let ux = (u(t, &theta, sigma, b) * t).norm();
                if ux.is_finite() {
                    sup_ux = sup_ux.max(ux);
                }
            }
            assert!(sup_up <= bnd1, "d={d}: sup|u′| {sup_up} > B1 {bnd1}");
            assert!(sup_ux <= bnd2, "d={d}: sup|u·t| {sup_ux} > B2 {bnd2}");
        }
    }

    #[test]
    fn b1_second_component_zero_at_b0() {
        // At b = 0 the imaginary component of the B1 display vanishes, so
        // B1 reduces to κ^d times the real component alone.
        let d = 3;
        let sigma = 0.2;
        let (b1, _) = u_sup_bounds(d, sigma, 0.0).unwrap();
        let (k, _) = kappa();
        let df = d as f64;
        let re = 2.0 * sigma * sigma / std::f64::consts::E
            + 5.0
            + 6.0 * df * sigma / (k * std::f64::consts::E.sqrt())
            + 4.0 * df * df / (k * k)
            + df * (df - 1.0) / (k * k)
            + 4.0 * df * (df - 1.0) / (k * k);
        assert!((b1 - k.powi(3) * re).abs() < 1e-12 * b1);
    }

    #[test]
    fn kappa_ratio_scaling() {
        // Dimension step multiplies both bounds by ≈ κ up to the polynomial
        // factor.
        let (k, _) = kappa();
        for d in [10usize, 25, 40] {
            let (a1, a2) = u_sup_bounds(d, 0.1, 1.0).unwrap();
            let (c1, c2) = u_sup_bounds(d + 1, 0.1, 1.0).unwrap();
            for r in [c1 / a1, c2 / a2] {
                assert!(r >= k / 2.0 && r <= 2.0 * k * (1.0 + 3.0 / d as f64), "ratio {r} at d={d}");
            }
        }
    }

    #[test]
    fn report_assembly() {
        let rep = upper_bound_2l_explicit(10, sigma_d_grid(10, 0.125, 0.125).unwrap()).unwrap();
        let interior = rep.terms["interior"];
        let tail = rep.terms["b_d_sqrtd_tail"];
        assert_eq!(rep.total, interior.max(tail));
        assert!(tail < interior, "tail {tail} should be dwarfed at d=10");
        let pref = (2.0 / std::f64::consts::PI).sqrt()
            / (2.0 * std::f64::consts::PI).sqrt()
            * (2.0 / std::f64::consts::PI);
        let recombined =
            pref * (rep.terms["sup_bound_u_u_prime_B1"] + rep.terms["sup_bound_u_u_prime_B2"]);
        assert!((interior - recombined).abs() < 1e-12 * interior.max(1.0));
        assert!(rep.total > 0.0);
    }

    #[test]
    fn asymptotic_ratio_near_kappa() {
        let (k, _) = kappa();
        let d = 40;
        let s = 0.08;
        let r = upper_bound_2l_explicit(d + 1, s).unwrap().total
            / upper_bound_2l_explicit(d, s).unwrap().total;
        assert!((r - k).abs() < 0.2 * k, "ratio {r} vs κ {k}");
    }

    #[test]
    fn deterministic_report() {
        let a = upper_bound_2l_explicit(7, 0.1).unwrap();
        let b = upper_bound_2l_explicit(7, 0.1).unwrap();
        assert_eq!(a.total.to_bits(), b.total.to_bits());
        assert_eq!(a, b);
    }
}
