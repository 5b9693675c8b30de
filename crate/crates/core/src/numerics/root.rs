use crate::{Error, Result};

/// Find a root of `f` on `[lo, hi]` to absolute tolerance `tol`.
///
/// Requires a sign change on the bracket; returns [`Error::NoBracket`]
/// otherwise. Uses Brent's method (inverse quadratic / secant with a
/// bisection safeguard), so convergence is guaranteed and usually
/// superlinear.
pub fn find_root(f: impl Fn(f64) -> f64, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    assert!(tol > 0.0, "tolerance must be positive");
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoBracket { lo, hi, flo: fa, fhi: fb });
    }

    // Keep |f(b)| <= |f(a)|: b is the current best iterate.
    if fa.abs() < fb.abs() {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut fa, &mut fb);
    }
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;

    for _ in 0..200 {
        if fb == 0.0 || (b - a).abs() <= tol {
            return Ok(b);
        }
        let m = 0.5 * (a - b);
        if m.abs() <= 0.5 * tol {
            return Ok(b);
        }

        if e.abs() >= tol && fc.abs() > fb.abs() {
            // Interpolation step: secant if two points, inverse quadratic if
            // three distinct ones.
            let s = fb / fc;
            let (mut p, mut q) = if a == c {
                (2.0 * m * s, 1.0 - s)
            } else {
                let q0 = fc / fa;
                let r = fb / fa;
                (
                    s * (2.0 * m * q0 * (q0 - r) - (b - c) * (r - 1.0)),
                    (q0 - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }

        c = b;
        fc = fb;
        b += if d.abs() > 0.5 * tol { d } else { 0.5 * tol * m.signum() };
        fb = f(b);
        if fb.signum() == fc.signum() {
            // b and c now lie on the same side; a stays the counterpoint.
        } else {
            a = c;
            fa = fc;
        }
        if fa.abs() < fb.abs() {
            std::mem::swap(&mut a, &mut b);
            std::mem::swap(&mut fa, &mut fb);
        }
    }
    Err(Error::NonConvergence(format!(
        "root iteration exceeded budget on [{lo}, {hi}]"
    )))
}
