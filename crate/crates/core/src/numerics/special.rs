use std::f64::consts::{PI, SQRT_2};

/// Standard normal density `φ(x)`.
pub fn normal_pdf(x: f64) -> f64 {
    (-0.5 * x * x).exp() / (2.0 * PI).sqrt()
}

/// Standard normal CDF `Φ(x)`, absolute error ≤ 1e-12.
///
/// Backed by the double-precision complementary error function; `erfc` is
/// used on both sides so the tails do not lose accuracy to cancellation.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x / SQRT_2)
}

/// Natural log of the Gamma function (rational/Lanczos-class approximation,
/// relative accuracy well below 1e-10). Ratios such as Γ(d/2)/Γ((d−1)/2) are
/// formed in log space by the callers.
pub fn ln_gamma(x: f64) -> f64 {
    statrs::function::gamma::ln_gamma(x)
}
