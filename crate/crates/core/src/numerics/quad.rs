use num_complex::Complex64;

use crate::{Error, Result};

/// Tolerances and budgets for the adaptive quadrature routines.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureConfig {
    /// Absolute error target.
    pub abs_tol: f64,
    /// Relative error target (relative to the running estimate).
    pub rel_tol: f64,
    /// Maximum number of interval subdivisions before giving up.
    pub max_subdivisions: usize,
    /// Truncation radius `T` for improper integrals.
    pub tail_cutoff: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self { abs_tol: 1e-10, rel_tol: 1e-10, max_subdivisions: 1 << 20, tail_cutoff: 60.0 }
    }
}

impl QuadratureConfig {
    /// Validates the invariants `abs_tol > 0`, `rel_tol > 0`, `tail_cutoff > 0`.
    pub fn validated(self) -> Result<Self> {
        if self.abs_tol > 0.0 && self.rel_tol > 0.0 && self.tail_cutoff > 0.0 {
            Ok(self)
        } else {
            Err(Error::InvalidSpec(format!("bad quadrature config: {self:?}")))
        }
    }
}

fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
    h / 6.0 * (fa + 4.0 * fm + fb)
}

struct Adaptive<'a, F> {
    f: &'a mut F,
    budget: usize,
    abs_tol: f64,
    rel_tol: f64,
}

impl<F: FnMut(f64) -> f64> Adaptive<'_, F> {
    /// Recursive adaptive Simpson with Richardson extrapolation.
    fn run(&mut self, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, depth: u32) -> Result<f64> {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = (self.f)(lm);
        let frm = (self.f)(rm);
        let left = simpson(fa, flm, fm, m - a);
        let right = simpson(fm, frm, fb, b - m);
        let s2 = left + right;
        let err = (s2 - whole) / 15.0;
        let tol = self.abs_tol + self.rel_tol * s2.abs();
        // depth >= 50 means the interval has shrunk by 2^50: below f64 noise.
        if err.abs() <= tol || depth >= 50 {
            return Ok(s2 + err);
        }
        if self.budget < 2 {
            return Err(Error::NonConvergence("adaptive Simpson subdivision budget exhausted".into()));
        }
        self.budget -= 2;
        let half_abs = 0.5 * self.abs_tol;
        let saved = self.abs_tol;
        self.abs_tol = half_abs;
        let l = self.run(a, m, fa, flm, fm, left, depth + 1)?;
        let r = self.run(m, b, fm, frm, fb, right, depth + 1)?;
        self.abs_tol = saved;
        Ok(l + r)
    }
}

/// Adaptive-Simpson integral of `f` over `[a, b]`.
///
/// `b` (or `a`) may be infinite, in which case the integral is truncated at
/// `±cfg.tail_cutoff`; the caller is responsible for choosing `tail_cutoff`
/// so that the analytic tail bound is below `abs_tol / 10`.
pub fn integrate_adaptive<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let a = if a == f64::NEG_INFINITY { -cfg.tail_cutoff } else { a };
    let b = if b == f64::INFINITY { cfg.tail_cutoff } else { b };
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::InvalidSpec(format!("non-finite integration bounds [{a}, {b}]")));
    }
    if a == b {
        return Ok(0.0);
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(fa, fm, fb, b - a);
    let mut state = Adaptive {
        f: &mut f,
        budget: cfg.max_subdivisions,
        abs_tol: cfg.abs_tol,
        rel_tol: cfg.rel_tol,
    };
    state.run(a, b, fa, fm, fb, whole, 0)
}

/// Complex-valued counterpart of [`integrate_adaptive`] (same refinement
/// decisions, driven by the complex magnitude of the Richardson error).
pub fn integrate_adaptive_complex<F: FnMut(f64) -> Complex64>(
    mut f: F,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<Complex64> {
    struct C<'a, F> {
        f: &'a mut F,
        budget: usize,
        abs_tol: f64,
        rel_tol: f64,
    }
    fn simp(fa: Complex64, fm: Complex64, fb: Complex64, h: f64) -> Complex64 {
        (fa + 4.0 * fm + fb) * (h / 6.0)
    }
    impl<F: FnMut(f64) -> Complex64> C<'_, F> {
        fn run(
            &mut self,
            a: f64,
            b: f64,
            fa: Complex64,
            fm: Complex64,
            fb: Complex64,
            whole: Complex64,
            depth: u32,
        ) -> Result<Complex64> {
            let m = 0.5 * (a + b);
            let flm = (self.f)(0.5 * (a + m));
            let frm = (self.f)(0.5 * (m + b));
            let left = simp(fa, flm, fm, m - a);
            let right = simp(fm, frm, fb, b - m);
            let s2 = left + right;
            let err = (s2 - whole) / 15.0;
            let tol = self.abs_tol + self.rel_tol * s2.norm();
            if err.norm() <= tol || depth >= 50 {
                return Ok(s2 + err);
            }
            if self.budget < 2 {
                return Err(Error::NonConvergence(
                    "adaptive Simpson (complex) subdivision budget exhausted".into(),
                ));
            }
            self.budget -= 2;
            let saved = self.abs_tol;
            self.abs_tol *= 0.5;
            let l = self.run(a, m, fa, flm, fm, left, depth + 1)?;
            let r = self.run(m, b, fm, frm, fb, right, depth + 1)?;
            self.abs_tol = saved;
            Ok(l + r)
        }
    }
    let a = if a == f64::NEG_INFINITY { -cfg.tail_cutoff } else { a };
    let b = if b == f64::INFINITY { cfg.tail_cutoff } else { b };
    if a == b {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simp(fa, fm, fb, b - a);
    let mut state =
        C { f: &mut f, budget: cfg.max_subdivisions, abs_tol: cfg.abs_tol, rel_tol: cfg.rel_tol };
    state.run(a, b, fa, fm, fb, whole, 0)
}

/// [`integrate_adaptive`] after an explicit split of `[a, b]` into
/// `n_panels` equal panels.
///
/// Adaptive Simpson starts from three samples per interval, so an integrand
/// whose mass is concentrated in bumps much narrower than the interval can be
/// missed entirely at the coarsest level; pre-splitting at a scale below the
/// bump spacing removes that failure mode.
pub fn integrate_panelled<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    n_panels: usize,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    assert!(n_panels >= 1);
    let h = (b - a) / n_panels as f64;
    let mut total = 0.0;
    let panel_cfg = QuadratureConfig { abs_tol: cfg.abs_tol / n_panels as f64, ..*cfg };
    for k in 0..n_panels {
        total += integrate_adaptive(&mut f, a + k as f64 * h, a + (k + 1) as f64 * h, &panel_cfg)?;
    }
    Ok(total)
}

/// Complex-valued counterpart of [`integrate_panelled`].
pub fn integrate_panelled_complex<F: FnMut(f64) -> Complex64>(
    mut f: F,
    a: f64,
    b: f64,
    n_panels: usize,
    cfg: &QuadratureConfig,
) -> Result<Complex64> {
    assert!(n_panels >= 1);
    let h = (b - a) / n_panels as f64;
    let mut total = Complex64::new(0.0, 0.0);
    let panel_cfg = QuadratureConfig { abs_tol: cfg.abs_tol / n_panels as f64, ..*cfg };
    for k in 0..n_panels {
        total += integrate_adaptive_complex(
            &mut f,
            a + k as f64 * h,
            a + (k + 1) as f64 * h,
            &panel_cfg,
        )?;
    }
    Ok(total)
}

/// Nodes and weights of the `n`-point Gauss–Hermite rule for
/// `∫_{-∞}^{∞} e^{-x²} f(x) dx ≈ Σ wᵢ f(xᵢ)`.
///
/// Roots are located by scanning the orthonormal Hermite recurrence for sign
/// changes and polishing with bisection + Newton; weights are the Christoffel
/// numbers `1 / Σ_{k<n} p_k(xᵢ)²`.
pub fn gauss_hermite(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "Gauss-Hermite order must be >= 1");
    // Orthonormal Hermite value p_n(x) and derivative p_n'(x).
    let eval = |x: f64| -> (f64, f64, f64) {
        // returns (p_n, p_n', sum_{k<n} p_k^2)
        let mut pkm1 = 0.0f64;
        let mut pk = std::f64::consts::PI.powf(-0.25);
        let mut sum = 0.0;
        for k in 0..n {
            sum += pk * pk;
            let pkp1 = x * (2.0 / (k as f64 + 1.0)).sqrt() * pk
                - (k as f64 / (k as f64 + 1.0)).sqrt() * pkm1;
            pkm1 = pk;
            pk = pkp1;
        }
        // derivative of orthonormal p_n: p_n'(x) = sqrt(2n) p_{n-1}(x)
        let deriv = (2.0 * n as f64).sqrt() * pkm1;
        (pk, deriv, sum)
    };
    let upper = (2.0 * n as f64 + 1.0).sqrt() + 1.0;
    // Root spacing is ≳ π/√(2n+1); scan at a quarter of that.
    let step = 0.25 * std::f64::consts::PI / (2.0 * n as f64 + 1.0).sqrt();
    let mut roots = Vec::with_capacity(n);
    let mut x_prev = if n % 2 == 1 { 0.0 } else { step * 1e-6 };
    if n % 2 == 1 {
        roots.push(0.0);
        x_prev = step * 1e-6;
    }
    let mut f_prev = eval(x_prev).0;
    let mut x = x_prev + step;
    while roots.len() < n.div_ceil(2) && x <= upper {
        let fx = eval(x).0;
        if f_prev * fx < 0.0 {
            // bisect then Newton-polish
            let (mut lo, mut hi) = (x_prev, x);
            let mut flo = f_prev;
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                let fm = eval(mid).0;
                if flo * fm <= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            let mut r = 0.5 * (lo + hi);
            for _ in 0..4 {
                let (p, dp, _) = eval(r);
                if dp != 0.0 {
                    r -= p / dp;
                }
            }
            roots.push(r);
        }
        x_prev = x;
        f_prev = fx;
        x += step;
    }
    let mut nodes: Vec<f64> = Vec::with_capacity(n);
    for &r in roots.iter().rev() {
        if r > 0.0 {
            nodes.push(-r);
        }
    }
    if n % 2 == 1 {
        nodes.push(0.0);
    }
    for &r in roots.iter() {
        if r > 0.0 {
            nodes.push(r);
        }
    }
    debug_assert_eq!(nodes.len(), n);
    let weights: Vec<f64> = nodes.iter().map(|&x| 1.0 / eval(x).2).collect();
    (nodes, weights)
}

/// `∫_{-∞}^{∞} e^{-x²} f(x) dx` with the `order`-point Gauss–Hermite rule.
pub fn integrate_gauss_hermite<F: Fn(f64) -> f64>(f: F, order: usize) -> f64 {
    let (nodes, weights) = gauss_hermite(order);
    nodes.iter().zip(&weights).map(|(&x, &w)| w * f(x)).sum()
}
