//! Deterministic numerical kernels shared by every other module.
//!
//! All operations are pure given their inputs and safe for concurrent use;
//! sampling operations take exclusive ownership of an [`RngStream`]-derived
//! generator.

mod pv;
mod quad;
mod rng;
mod root;
mod search;
mod special;
mod sphere;

pub use pv::{pv_integral, PV_SINGULAR_WINDOW};
pub use quad::{
    gauss_hermite, integrate_adaptive, integrate_adaptive_complex, integrate_gauss_hermite,
    integrate_panelled, integrate_panelled_complex, QuadratureConfig,
};
pub use rng::RngStream;
pub use root::find_root;
pub use search::{maximize_multistart, SearchConfig};
pub use special::{ln_gamma, normal_cdf, normal_pdf};
pub use sphere::sample_sphere;
