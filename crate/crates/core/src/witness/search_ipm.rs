use std::cell::RefCell;

use crate::distributions::{GridPairSpec, SinePairSpec};
use crate::networks::ActivationSpec;
use crate::numerics::{
    maximize_multistart, sample_sphere, QuadratureConfig, RngStream, SearchConfig,
};
use crate::witness::{
    grid_witness_exact, grid_witness_fourier, sine_witness, IpmEstimate, IpmMethod,
};
use crate::{Error, Result};
use rand::Rng;

/// Largest dimension served by the exact enumeration route inside the search;
/// above it the Fourier/principal-value route is used.
const SEARCH_EXACT_CAP: usize = 6;

/// Borrowed reference to either distribution pair.
#[derive(Debug, Clone, Copy)]
pub enum PairRef<'a> {
    Grid(&'a GridPairSpec),
    Sine(&'a SinePairSpec),
}

impl PairRef<'_> {
    pub fn d(&self) -> usize {
        match self {
            PairRef::Grid(s) => s.d,
            PairRef::Sine(s) => s.d,
        }
    }

    /// Evaluate the witness `∫ ρ σ(⟨θ,x⟩ − b)` for this pair.
    pub fn witness(
        &self,
        theta: &[f64],
        b: f64,
        act: &ActivationSpec,
        cfg: &QuadratureConfig,
    ) -> Result<f64> {
        match self {
            PairRef::Grid(s) if s.d <= SEARCH_EXACT_CAP => grid_witness_exact(s, theta, b, act),
            PairRef::Grid(s) => grid_witness_fourier(s, theta, b, act, cfg),
            PairRef::Sine(s) => sine_witness(s, theta, b, act, cfg),
        }
    }

    fn method(&self) -> IpmMethod {
        match self {
            PairRef::Grid(s) if s.d <= SEARCH_EXACT_CAP => IpmMethod::Enumeration,
            _ => IpmMethod::FourierPv,
        }
    }
}

fn project(x: &[f64], b_max: f64) -> Vec<f64> {
    let d = x.len() - 1;
    let norm: f64 = x[..d].iter().map(|v| v * v).sum::<f64>().sqrt();
    let mut out = if norm < 1e-12 {
        let mut e = vec![0.0; d];
        e[0] = 1.0;
        e
    } else {
        x[..d].iter().map(|v| v / norm).collect()
    };
    out.push(x[d].clamp(-b_max, b_max));
    out
}

/// Two-layer IPM `sup_{θ ∈ S^{d−1}, |b| ≤ d + √d} |∫ ρ σ(⟨θ,x⟩ − b)|` by
/// multistart projected ascent.
///
/// Structured starts are always tried first (coordinate directions with the
/// distinguished biases of each construction — for the sine pair, `(e₁,
/// π/(2ℓ))`), so the reported value dominates the closed-form lower bounds.
/// The remaining starts are uniform on the sphere × bias interval.
pub fn two_layer_ipm_search(
    pair: PairRef<'_>,
    act: &ActivationSpec,
    search: &SearchConfig,
    cfg: &QuadratureConfig,
    rng: RngStream,
) -> Result<IpmEstimate> {
    let d = pair.d();
    let b_max = d as f64 + (d as f64).sqrt();

    let mut structured: Vec<Vec<f64>> = Vec::new();
    let e1 = |b: f64| {
        let mut v = vec![0.0; d + 1];
        v[0] = 1.0;
        v[d] = b;
        v
    };
    match pair {
        PairRef::Grid(_) => {
            structured.push(e1(0.0));
            structured.push(e1(0.5));
            structured.push(e1(-0.5));
            let mut diag = vec![1.0 / (d as f64).sqrt(); d + 1];
            diag[d] = 0.5;
            structured.push(diag);
        }
        PairRef::Sine(s) => {
            let b0 = std::f64::consts::FRAC_PI_2 / s.ell;
            structured.push(e1(b0));
            structured.push(e1(-b0));
            structured.push(e1(0.0));
        }
    }
    let mut queue = structured.into_iter();

    let first_err: RefCell<Option<Error>> = RefCell::new(None);
    let objective = |x: &[f64]| -> f64 {
        match pair.witness(&x[..d], x[d], act, cfg) {
            Ok(w) => w.abs(),
            Err(e) => {
                first_err.borrow_mut().get_or_insert(e);
                f64::NEG_INFINITY
            }
        }
    };
    let (argmax, value) = maximize_multistart(
        objective,
        |x| project(x, b_max),
        |gen| {
            queue.next().unwrap_or_else(|| {
                let mut v = sample_sphere(d, gen);
                v.push(gen.gen_range(-b_max..b_max));
                v
            })
        },
        search,
        rng,
    );
    if !value.is_finite() {
        return Err(first_err
            .into_inner()
            .unwrap_or_else(|| Error::NonConvergence("search produced no finite value".into())));
    }

    let (theta, b) = (argmax[..d].to_vec(), argmax[d]);
    Ok(IpmEstimate {
        value,
        std_error: 0.0,
        method: pair.method(),
        n_samples: search.n_starts,
        argmax: Some((theta, b)),
        seed: rng.seed,
    })
}
