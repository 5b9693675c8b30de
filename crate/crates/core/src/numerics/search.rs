use rand_chacha::ChaCha12Rng;

use crate::numerics::RngStream;

/// Configuration for multistart projected ascent.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Number of independent starts.
    pub n_starts: usize,
    /// Ascent iterations per start.
    pub max_iters: usize,
    /// Initial step length.
    pub step_init: f64,
    /// Stop a start once the numerical gradient norm or the step length
    /// drops below this.
    pub grad_tol: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self { n_starts: 40, max_iters: 400, step_init: 0.25, grad_tol: 1e-10 }
    }
}

/// Best-effort maximisation of `objective` over the feasible set defined by
/// `projector` (idempotent map onto the set), with starts drawn from
/// `sampler`.
///
/// Returns the best `(argmax, value)` over all starts; the value is never
/// below the objective at any start point. Deterministic given the stream.
///
/// `sampler` is `FnMut` so a caller can serve a deterministic queue of
/// structured starts before falling back to random ones.
pub fn maximize_multistart(
    objective: impl Fn(&[f64]) -> f64,
    projector: impl Fn(&[f64]) -> Vec<f64>,
    mut sampler: impl FnMut(&mut ChaCha12Rng) -> Vec<f64>,
    cfg: &SearchConfig,
    rng: RngStream,
) -> (Vec<f64>, f64) {
    assert!(cfg.n_starts >= 1, "n_starts must be at least 1");
    assert!(cfg.step_init > 0.0, "step_init must be positive");
    let mut gen = rng.rng();
    let mut best_x: Option<Vec<f64>> = None;
    let mut best_v = f64::NEG_INFINITY;

    for _ in 0..cfg.n_starts {
        let mut x = projector(&sampler(&mut gen));
        let mut v = objective(&x);
        let mut step = cfg.step_init;
        let n = x.len();
        let h = 1e-6;

        for _ in 0..cfg.max_iters {
            // Gradient of objective ∘ projector by central differences, so the
            // ascent direction respects the constraint manifold.
            let mut grad = vec![0.0; n];
            for i in 0..n {
                let mut xp = x.clone();
                xp[i] += h;
                let mut xm = x.clone();
                xm[i] -= h;
                grad[i] =
                    (objective(&projector(&xp)) - objective(&projector(&xm))) / (2.0 * h);
            }
            let gnorm = grad.iter().map(|g| g * g).sum::<f64>().sqrt();
            if gnorm < cfg.grad_tol || step < cfg.grad_tol {
                break;
            }
            let candidate: Vec<f64> = x
                .iter()
                .zip(&grad)
                .map(|(xi, gi)| xi + step * gi / gnorm)
                .collect();
            let candidate = projector(&candidate);
            let cv = objective(&candidate);
            if cv > v {
                x = candidate;
                v = cv;
                step *= 1.5;
            } else {
                step *= 0.5;
            }
        }

        if v > best_v {
            best_v = v;
            best_x = Some(x);
        }
    }

    (best_x.expect("at least one start"), best_v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::sample_sphere;
    use rand::Rng;

    #[test]
    fn concave_quadratic_in_r2() {
        let (x, v) = maximize_multistart(
            |x| -(x[0] * x[0] + x[1] * x[1]),
            |x| x.to_vec(),
            |rng| vec![rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)],
            &SearchConfig::default(),
            RngStream::new(11, 0),
        );
        assert!(v.abs() < 1e-6, "value {v} at {x:?}");
    }

    #[test]
    fn linear_over_sphere() {
        let c = [0.3, -1.2, 0.5, 2.0];
        let cnorm = c.iter().map(|x| x * x).sum::<f64>().sqrt();
        let project = |x: &[f64]| {
            let n = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            if n < 1e-12 {
                let mut e = vec![0.0; x.len()];
                e[0] = 1.0;
                e
            } else {
                x.iter().map(|v| v / n).collect()
            }
        };
        let (_, v) = maximize_multistart(
            |x| x.iter().zip(&c).map(|(a, b)| a * b).sum::<f64>(),
            project,
            |rng| sample_sphere(4, rng),
            &SearchConfig::default(),
            RngStream::new(12, 0),
        );
        assert!((v - cnorm).abs() < 1e-6, "value {v} vs {cnorm}");
    }

    #[test]
    fn multimodal_1d() {
        // cos(x)sin(2x) on [−π, π]: global maximum 4/(3√3) ≈ 0.7698003589…
        let clamp = |x: &[f64]| vec![x[0].clamp(-std::f64::consts::PI, std::f64::consts::PI)];
        let (_, v) = maximize_multistart(
            |x| x[0].cos() * (2.0 * x[0]).sin(),
            clamp,
            |rng| vec![rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI)],
            &SearchConfig::default(),
            RngStream::new(13, 0),
        );
        assert!((v - 0.769800).abs() < 1e-6, "value {v}");
    }

    #[test]
    fn value_never_below_start() {
        // Single start at a known point: result must dominate it.
        let start = vec![1.7];
        let mut served = false;
        let (_, v) = maximize_multistart(
            |x| -(x[0] - 0.4).powi(4),
            |x| x.to_vec(),
            move |_| {
                assert!(!std::mem::replace(&mut served, true));
                start.clone()
            },
            &SearchConfig { n_starts: 1, ..Default::default() },
            RngStream::new(14, 0),
        );
        assert!(v >= -(1.7f64 - 0.4).powi(4));
        assert!(v > -1e-6);
    }

    #[test]
    fn deterministic_given_seed() {
        let run = || {
            maximize_multistart(
                |x| (x[0].sin() + 0.3 * (3.0 * x[0]).cos()) - 0.01 * x[0] * x[0],
                |x| x.to_vec(),
                |rng| vec![rng.gen_range(-10.0..10.0)],
                &SearchConfig::default(),
                RngStream::new(15, 3),
            )
        };
        let (x1, v1) = run();
        let (x2, v2) = run();
        assert_eq!(x1, x2);
        assert_eq!(v1.to_bits(), v2.to_bits());
    }
}
