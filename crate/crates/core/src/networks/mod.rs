//! Explicit ReLU-family network representations, the constructed
//! discriminators `f1`, `f2`, `F`, path norms, and the distributional
//! Fourier constants of the activation.

mod activation;
mod build;
mod nets;

pub use activation::{activation_fourier_constants, ActivationSpec};
pub use build::{build_f1, build_f2, build_big_f, grid_orientation};
pub use nets::{
    eval_three_layer, eval_two_layer, normalize_to_unit_path_norm, path_norm_b_three,
    path_norm_b_two, path_norm_nb_three, path_norm_nb_two, FirstLayerUnit, ThreeLayerNet,
    TwoLayerNet, TwoLayerUnit,
};
