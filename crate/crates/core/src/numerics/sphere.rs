use rand::Rng;
use rand_distr::StandardNormal;

/// Uniform sample from the unit sphere `S^{d−1}` by normalising a standard
/// Gaussian vector (rotation invariance is inherited from the Gaussian).
pub fn sample_sphere(d: usize, rng: &mut impl Rng) -> Vec<f64> {
    assert!(d >= 1, "sphere dimension must be at least 1");
    loop {
        let v: Vec<f64> = (0..d).map(|_| rng.sample(StandardNormal)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        // Astronomically unlikely, but keeps the result a true unit vector.
        if norm > 1e-12 {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::RngStream;

    #[test]
    fn unit_norm() {
        let mut rng = RngStream::new(1, 0).rng();
        for d in [1, 2, 5, 17] {
            let v = sample_sphere(d, &mut rng);
            assert_eq!(v.len(), d);
            let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            assert!((norm - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn d1_balanced_signs() {
        let mut rng = RngStream::new(2, 0).rng();
        let n = 10_000;
        let pos = (0..n).filter(|_| sample_sphere(1, &mut rng)[0] > 0.0).count();
        let freq = pos as f64 / n as f64;
        assert!((freq - 0.5).abs() < 0.02, "freq={freq}");
    }

    #[test]
    fn d3_coordinate_means_vanish() {
        let mut rng = RngStream::new(3, 0).rng();
        let n = 100_000;
        let mut sums = [0.0f64; 3];
        for _ in 0..n {
            let v = sample_sphere(3, &mut rng);
            for i in 0..3 {
                sums[i] += v[i];
            }
        }
        // Var(θᵢ) = 1/3, so SE of the mean is 1/√(3n).
        let tol = 3.0 / (3.0 * n as f64).sqrt();
        for s in sums {
            assert!((s / n as f64).abs() < tol);
        }
    }

    #[test]
    fn d8_second_moment() {
        let mut rng = RngStream::new(4, 0).rng();
        let n = 100_000;
        let samples: Vec<f64> =
            (0..n).map(|_| sample_sphere(8, &mut rng)[0].powi(2)).collect();
        let mean = samples.iter().sum::<f64>() / n as f64;
        let var = samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n as f64;
        let se = (var / n as f64).sqrt();
        // E[θ₁²] = 1/d by exchangeability.
        assert!((mean - 0.125).abs() < 3.0 * se, "mean={mean} se={se}");
    }
}
