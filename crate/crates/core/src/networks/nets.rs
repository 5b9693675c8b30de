use serde::{Deserialize, Serialize};

use crate::networks::ActivationSpec;
use crate::{Error, Result};

/// One hidden unit of a two-layer network: `w · σ(⟨θ, x⟩ − b)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwoLayerUnit {
    pub theta: Vec<f64>,
    pub b: f64,
    pub w: f64,
}

/// Two-layer network `f(x) = w₀ + Σᵢ wᵢ σ(⟨θᵢ, x⟩ − bᵢ)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwoLayerNet {
    pub units: Vec<TwoLayerUnit>,
    pub w0: f64,
}

/// One first-layer unit of a three-layer network: `σ(⟨θ, x⟩ − b)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FirstLayerUnit {
    pub theta: Vec<f64>,
    pub b: f64,
}

/// Three-layer network
///
/// `F(x) = w₀ + Σᵢ wᵢ σ(Wᵢ₀ + Σⱼ Wᵢⱼ hⱼ(x))`, `hⱼ(x) = σ(⟨θⱼ, x⟩ − bⱼ)`.
///
/// `second_layer` has one row per second-hidden unit with `m₁ + 1` entries;
/// column 0 is the bias `Wᵢ₀`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThreeLayerNet {
    pub activation: ActivationSpec,
    pub first_layer: Vec<FirstLayerUnit>,
    pub second_layer: Vec<Vec<f64>>,
    pub outer_w: Vec<f64>,
    pub outer_w0: f64,
}

fn dot_checked(theta: &[f64], x: &[f64]) -> Result<f64> {
    if theta.len() != x.len() {
        return Err(Error::DimensionMismatch { expected: theta.len(), got: x.len() });
    }
    Ok(theta.iter().zip(x).map(|(t, v)| t * v).sum())
}

/// Forward pass of a two-layer network.
pub fn eval_two_layer(net: &TwoLayerNet, act: &ActivationSpec, x: &[f64]) -> Result<f64> {
    let mut out = net.w0;
    for u in &net.units {
        out += u.w * act.apply(dot_checked(&u.theta, x)? - u.b);
    }
    Ok(out)
}

/// Forward pass of a three-layer network (activation stored in the net).
pub fn eval_three_layer(net: &ThreeLayerNet, x: &[f64]) -> Result<f64> {
    let act = &net.activation;
    let hidden: Vec<f64> = net
        .first_layer
        .iter()
        .map(|u| Ok(act.apply(dot_checked(&u.theta, x)? - u.b)))
        .collect::<Result<_>>()?;
    let mut out = net.outer_w0;
    for (row, w) in net.second_layer.iter().zip(&net.outer_w) {
        let z = row[0] + row[1..].iter().zip(&hidden).map(|(a, h)| a * h).sum::<f64>();
        out += w * act.apply(z);
    }
    Ok(out)
}

fn norm2(v: &[f64]) -> f64 {
    v.iter().map(|a| a * a).sum::<f64>().sqrt()
}

/// Biasless path norm of a two-layer network: `Σᵢ |wᵢ| ‖θᵢ‖₂`.
pub fn path_norm_nb_two(net: &TwoLayerNet) -> f64 {
    net.units.iter().map(|u| u.w.abs() * norm2(&u.theta)).sum()
}

/// Biased path norm of a two-layer network:
/// `Σᵢ |wᵢ| ‖(θᵢ, bᵢ)‖₂ + |w₀|`.
pub fn path_norm_b_two(net: &TwoLayerNet) -> f64 {
    net.units
        .iter()
        .map(|u| u.w.abs() * (norm2(&u.theta).powi(2) + u.b * u.b).sqrt())
        .sum::<f64>()
        + net.w0.abs()
}

/// Biasless path norm of a three-layer network:
/// `Σᵢ |wᵢ| Σⱼ |Wᵢⱼ| ‖θⱼ‖₂` (biases and `w₀` excluded).
pub fn path_norm_nb_three(net: &ThreeLayerNet) -> f64 {
    net.second_layer
        .iter()
        .zip(&net.outer_w)
        .map(|(row, w)| {
            w.abs()
                * row[1..]
                    .iter()
                    .zip(&net.first_layer)
                    .map(|(a, u)| a.abs() * norm2(&u.theta))
                    .sum::<f64>()
        })
        .sum()
}

/// Biased path norm of a three-layer network:
/// `Σᵢ |wᵢ| (Σⱼ |Wᵢⱼ| ‖(θⱼ, bⱼ)‖₂ + |Wᵢ₀|) + |w₀|`.
pub fn path_norm_b_three(net: &ThreeLayerNet) -> f64 {
    net.second_layer
        .iter()
        .zip(&net.outer_w)
        .map(|(row, w)| {
            let inner: f64 = row[1..]
                .iter()
                .zip(&net.first_layer)
                .map(|(a, u)| a.abs() * (norm2(&u.theta).powi(2) + u.b * u.b).sqrt())
                .sum();
            w.abs() * (inner + row[0].abs())
        })
        .sum::<f64>()
        + net.outer_w0.abs()
}

/// Rescale the outermost layer so the biased path norm becomes 1.
///
/// The output scales pointwise by exactly `1 / PN_b(input)` (last-layer
/// homogeneity).
pub fn normalize_to_unit_path_norm(net: &ThreeLayerNet) -> Result<ThreeLayerNet> {
    let pn = path_norm_b_three(net);
    if pn <= 0.0 {
        return Err(Error::ZeroNetwork);
    }
    let mut out = net.clone();
    for w in &mut out.outer_w {
        *w /= pn;
    }
    out.outer_w0 /= pn;
    Ok(out)
}
