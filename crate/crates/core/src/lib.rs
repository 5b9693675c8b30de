//! Numerical laboratory for integral-probability-metric (IPM) separation
//! experiments between two-layer networks, three-layer networks, and RKHS
//! (MMD) discriminators.
//!
//! The crate is organised in five modules:
//!
//! * [`numerics`] — deterministic kernels: adaptive quadrature, Gauss–Hermite
//!   rules, root finding, normal CDF, Cauchy principal values, seeded RNG
//!   streams, sphere sampling and multistart maximisation.
//! * [`distributions`] — the parity-grid Gaussian-mixture pair and the
//!   sine-modulated Gaussian pair: densities, signed differences, samplers,
//!   masses and closed-form Fourier transforms.
//! * [`networks`] — explicit ReLU networks, the constructed discriminators
//!   `f1`, `f2`, `F`, path norms and the activation Fourier constants.
//! * [`witness`] — discriminator–distribution integrals: exact enumeration
//!   route, Fourier/principal-value route, Monte-Carlo three-layer gap, MMD
//!   estimation and the sine-pair two-layer witness.
//! * [`bounds`] — every explicit analytic quantity: κ, the σ_d solvers, the
//!   two-layer κ^d upper bound, the RKHS upper bound, principal-value and
//!   Gaussian tail bounds, spherical caps, and the three-layer lower-bound
//!   formula.

pub mod bounds;
pub mod distributions;
mod error;
pub mod networks;
pub mod numerics;
pub mod witness;

pub use error::{Error, Result};
