use crate::distributions::{GridPairSpec, GRID_POINTS};
use crate::networks::{
    ActivationSpec, FirstLayerUnit, ThreeLayerNet, TwoLayerNet, TwoLayerUnit,
};
use crate::{Error, Result};

/// Sign taken by `F` on the positive-parity grid points: `+1` when
/// `d ≡ 0, 1 (mod 4)`, `−1` when `d ≡ 2, 3 (mod 4)`.
pub fn grid_orientation(d: usize) -> f64 {
    if d % 4 <= 1 { 1.0 } else { -1.0 }
}

/// The 1-D bump sum `f1`: for each grid point β a trapezoid of height
/// `sign(β)` supported on `[β − 2x₀, β + 2x₀]` with plateau
/// `[β − x₀, β + x₀]` and slopes `±1/x₀`; 16 ReLU units in total.
pub fn build_f1(x0: f64) -> Result<TwoLayerNet> {
    if !(x0 > 0.0 && x0 < 0.25) {
        return Err(Error::BadPlateau(x0));
    }
    let mut units = Vec::with_capacity(16);
    for &beta in &GRID_POINTS {
        let s = beta.signum() / x0;
        for (offset, w) in [(-2.0 * x0, s), (-x0, -s), (x0, -s), (2.0 * x0, s)] {
            units.push(TwoLayerUnit { theta: vec![1.0], b: beta + offset, w });
        }
    }
    Ok(TwoLayerNet { units, w0: 0.0 })
}

/// The 1-D zig-zag `f2`, taking alternating values ±1 on the integers of the
/// parity of `d` in `[−d, d]` and constant beyond.
///
/// Even `d` (`d + 2` units, `w₀ = 1`): value `+1` at 0 and alternating at
/// `±2, ±4, …`; odd `d` (`d + 3` units, `w₀ = 0`): odd function with value
/// `+1` at `1` and alternating at `3, 5, …`.
pub fn build_f2(d: usize) -> Result<TwoLayerNet> {
    if d < 2 {
        return Err(Error::InvalidSpec(format!("f2 requires d >= 2, got {d}")));
    }
    let mut units = Vec::new();
    let mut push = |t: f64, b: f64, w: f64| {
        units.push(TwoLayerUnit { theta: vec![t], b, w });
    };
    let w0;
    if d % 2 == 0 {
        w0 = 1.0;
        push(1.0, 0.0, -1.0);
        push(-1.0, 0.0, -1.0);
        for i in 1..=(d - 2) / 2 {
            let w = -2.0 * (-1f64).powi(i as i32);
            push(1.0, 2.0 * i as f64, w);
            push(-1.0, 2.0 * i as f64, w);
        }
        let w_end = -(-1f64).powi((d / 2) as i32);
        push(1.0, d as f64, w_end);
        push(-1.0, d as f64, w_end);
    } else {
        w0 = 0.0;
        push(1.0, 0.0, 1.0);
        push(-1.0, 0.0, -1.0);
        for i in 0..=(d - 3) / 2 {
            let w = -2.0 * (-1f64).powi(i as i32);
            push(1.0, (2 * i + 1) as f64, w);
            push(-1.0, (2 * i + 1) as f64, -w);
        }
        let w_end = -(-1f64).powi(((d - 1) / 2) as i32);
        push(1.0, d as f64, w_end);
        push(-1.0, d as f64, -w_end);
    }
    Ok(TwoLayerNet { units, w0 })
}

/// The three-layer discriminator `F(x) = f2(Σᵢ f1(xᵢ))`.
///
/// First layer: `d` shifted copies of the 16 `f1` units (width `m₁ = 16d`).
/// Second layer: one row per `f2` unit; row entries are the `f2` input sign
/// times the `f1` output weights, and column 0 carries the (negated) `f2`
/// breakpoint. Width `m₂ = d + 2` for even `d` and `d + 3` for odd `d`
/// (the odd construction needs the extra antisymmetric pair at 0).
pub fn build_big_f(spec: &GridPairSpec) -> Result<ThreeLayerNet> {
    let d = spec.d;
    if d < 2 {
        return Err(Error::InvalidSpec(format!("F requires d >= 2, got {d}")));
    }
    let f1 = build_f1(spec.x0)?;
    let f2 = build_f2(d)?;

    let mut first_layer = Vec::with_capacity(16 * d);
    let mut f1_weights = Vec::with_capacity(16 * d);
    for coord in 0..d {
        for u in &f1.units {
            let mut theta = vec![0.0; d];
            theta[coord] = u.theta[0];
            first_layer.push(FirstLayerUnit { theta, b: u.b });
            f1_weights.push(u.w);
        }
    }

    let mut second_layer = Vec::with_capacity(f2.units.len());
    let mut outer_w = Vec::with_capacity(f2.units.len());
    for u in &f2.units {
        let sign_z = u.theta[0];
        let mut row = Vec::with_capacity(1 + f1_weights.len());
        row.push(-u.b); // σ(sign_z·z − b) = σ(Σⱼ sign_z wⱼ hⱼ + (−b))
        row.extend(f1_weights.iter().map(|w| sign_z * w));
        second_layer.push(row);
        outer_w.push(u.w);
    }

    Ok(ThreeLayerNet {
        activation: ActivationSpec::relu(),
        first_layer,
        second_layer,
        outer_w,
        outer_w0: f2.w0,
    })
}
