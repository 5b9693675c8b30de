//! The two distribution pairs under study: the parity-grid Gaussian mixture
//! and the sine-modulated Gaussian, with densities, signed differences,
//! samplers, masses, moment checks and closed-form Fourier transforms.

mod batch;
mod grid;
mod sine;

pub use batch::{Label, SampleBatch, BINARY_MAGIC};
pub use grid::{
    grid_fourier, grid_moment_checks, grid_sample, grid_signed_density,
    grid_signed_density_enumerated, GridMomentReport, GridPairSpec, GRID_POINTS,
};
pub use sine::{
    sine_abs_mass, sine_fourier, sine_sample, sine_signed_density, SinePairSpec,
};

/// A signed density evaluation `value = positive_part − negative_part`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedDensityValue {
    /// The signed difference of the pair's densities at the point.
    pub value: f64,
    /// Density of the `plus` measure at the point (≥ 0).
    pub positive_part: f64,
    /// Density of the `minus` measure at the point (≥ 0).
    pub negative_part: f64,
}
