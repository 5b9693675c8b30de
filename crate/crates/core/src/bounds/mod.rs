//! Every explicit analytic quantity: κ and its maximizer, the σ_d solvers of
//! both constructions, the two-layer κ^d upper bound with its appendix
//! constants, the RKHS upper bound, the principal-value bound, Gaussian
//! tails, spherical-cap areas, and the three-layer lower-bound formula.

mod kappa;
mod rkhs;
mod sigma;
mod tails;
mod two_layer;

use std::collections::BTreeMap;

use serde::Serialize;

pub use kappa::{kappa, kappa_critical_points};
pub use rkhs::{rkhs_upper_bound_explicit, sec4_v_bounds};
pub use sigma::{sigma_d_grid, sigma_d_sine};
pub use tails::{gaussian_tail, pv_bound, spherical_cap_area};
pub use two_layer::{u_sup_bounds, upper_bound_2l_explicit};

/// An assembled analytic bound with its per-term breakdown.
///
/// `total` is always the documented combination of `terms` (re-derivable to
/// 1e−12); `params` echoes the inputs so serialized reports are
/// self-describing. Maps are ordered so serialization is deterministic.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub total: f64,
    pub terms: BTreeMap<String, f64>,
    pub params: BTreeMap<String, f64>,
}

/// Explicit three-layer IPM lower bound `1 / (513d² + 512d + 1)`, the
/// normalising constant being the path-norm budget of the discriminator `F`.
pub fn three_layer_lower_formula(d: usize) -> f64 {
    debug_assert!(d >= 2, "formula stated for d >= 2");
    let d = d as f64;
    1.0 / (513.0 * d * d + 512.0 * d + 1.0)
}
