//! Fractional Gaussian noise by circulant embedding, with a Cholesky
//! fallback for embeddings that are not nonnegative definite.

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use rand_distr::StandardNormal;
use rustfft::num_complex::Complex;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};

/// Largest grid for which the `O(n²)` Cholesky factor is built.
pub const CHOLESKY_MAX_STEPS: usize = 4096;
const CHOLESKY_JITTER: f64 = 1e-12;

/// Autocovariance of unit-step fGn at lag `k`:
/// `½(|k+1|^{2H} - 2|k|^{2H} + |k-1|^{2H})`.
pub fn fgn_autocovariance(hurst: f64, k: usize) -> f64 {
    let h2 = 2.0 * hurst;
    let k = k as f64;
    0.5 * ((k + 1.0).powf(h2) - 2.0 * k.powf(h2) + (k - 1.0).abs().powf(h2))
}

enum Kind {
    White,
    Circulant { sqrt_eig: Vec<f64>, fft: Arc<dyn Fft<f64>> },
    Cholesky { lower: Vec<f64> },
}

/// Reusable sampler of `n` consecutive fGn increments with step `dt`.
pub struct FgnGenerator {
    n: usize,
    hurst: f64,
    scale: f64,
    kind: Kind,
}

impl fmt::Debug for FgnGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FgnGenerator")
            .field("n", &self.n)
            .field("hurst", &self.hurst)
            .field("method", &self.method())
            .finish()
    }
}

impl FgnGenerator {
    /// Circulant embedding of size `next_pow2(2n)`; falls back to Cholesky
    /// when the embedding has negative eigenvalues. `H = 1/2` is white noise.
    pub fn new(hurst: f64, n: usize, dt: f64) -> Result<Self> {
        check(hurst, n, dt)?;
        let scale = dt.powf(hurst);
        if hurst == 0.5 {
            return Ok(Self { n, hurst, scale, kind: Kind::White });
        }
        let m = (2 * n).next_power_of_two();
        let mut ring: Vec<Complex<f64>> = (0..m)
            .map(|j| Complex::new(fgn_autocovariance(hurst, j.min(m - j)), 0.0))
            .collect();
        let fft = FftPlanner::new().plan_fft_forward(m);
        fft.process(&mut ring);
        let max = ring.iter().map(|z| z.re).fold(0.0, f64::max);
        let min = ring.iter().map(|z| z.re).fold(f64::INFINITY, f64::min);
        if min < -1e-10 * max {
            return Self::cholesky(hurst, n, dt);
        }
        let sqrt_eig = ring.iter().map(|z| (z.re.max(0.0) / m as f64).sqrt()).collect();
        Ok(Self {
            n,
            hurst,
            scale,
            kind: Kind::Circulant { sqrt_eig, fft },
        })
    }

    /// Cholesky factorisation of the `n × n` fGn covariance.
    pub fn cholesky(hurst: f64, n: usize, dt: f64) -> Result<Self> {
        check(hurst, n, dt)?;
        if n > CHOLESKY_MAX_STEPS {
            return Err(Error::Simulation(format!(
                "Cholesky fallback limited to {CHOLESKY_MAX_STEPS} steps, got {n}"
            )));
        }
        let gamma: Vec<f64> = (0..n).map(|k| fgn_autocovariance(hurst, k)).collect();
        let lower = factor(&gamma, 0.0).or_else(|_| factor(&gamma, CHOLESKY_JITTER))?;
        Ok(Self {
            n,
            hurst,
            scale: dt.powf(hurst),
            kind: Kind::Cholesky { lower },
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn hurst(&self) -> f64 {
        self.hurst
    }

    pub fn method(&self) -> &'static str {
        match self.kind {
            Kind::White => "white",
            Kind::Circulant { .. } => "circulant",
            Kind::Cholesky { .. } => "cholesky",
        }
    }

    /// Fill `out` (length `n`) with one realisation.
    pub fn sample_into<R: Rng + ?Sized>(&self, rng: &mut R, out: &mut [f64]) {
        self.sample_pair_into(rng, out, None);
    }

    /// Fill one or two independent realisations. The circulant method gets
    /// both from a single transform (real and imaginary parts).
    pub fn sample_pair_into<R: Rng + ?Sized>(&self, rng: &mut R, a: &mut [f64], b: Option<&mut [f64]>) {
        assert_eq!(a.len(), self.n, "output length must equal the generator size");
        match &self.kind {
            Kind::White => {
                for v in a.iter_mut() {
                    *v = self.scale * rng.sample::<f64, _>(StandardNormal);
                }
                if let Some(b) = b {
                    for v in b.iter_mut() {
                        *v = self.scale * rng.sample::<f64, _>(StandardNormal);
                    }
                }
            }
            Kind::Circulant { sqrt_eig, fft } => {
                let mut buf: Vec<Complex<f64>> = sqrt_eig
                    .iter()
                    .map(|&s| {
                        let re: f64 = rng.sample(StandardNormal);
                        let im: f64 = rng.sample(StandardNormal);
                        Complex::new(s * re, s * im)
                    })
                    .collect();
                fft.process(&mut buf);
                for (v, z) in a.iter_mut().zip(&buf) {
                    *v = self.scale * z.re;
                }
                if let Some(b) = b {
                    for (v, z) in b.iter_mut().zip(&buf) {
                        *v = self.scale * z.im;
                    }
                }
            }
            Kind::Cholesky { lower } => {
                self.cholesky_into(lower, rng, a);
                if let Some(b) = b {
                    self.cholesky_into(lower, rng, b);
                }
            }
        }
    }

    fn cholesky_into<R: Rng + ?Sized>(&self, lower: &[f64], rng: &mut R, out: &mut [f64]) {
        let n = self.n;
        let z: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        for i in 0..n {
            let row = &lower[i * n..i * n + i + 1];
            out[i] = self.scale * row.iter().zip(&z).map(|(l, z)| l * z).sum::<f64>();
        }
    }
}

fn check(hurst: f64, n: usize, dt: f64) -> Result<()> {
    if !(hurst > 0.0 && hurst < 1.0) {
        return Err(Error::domain(format!("Hurst exponent must lie in (0, 1), got {hurst}")));
    }
    if n == 0 {
        return Err(Error::domain("need at least one increment"));
    }
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(Error::domain(format!("time step must be > 0, got {dt}")));
    }
    Ok(())
}

/// Dense lower Cholesky factor (row-major) of the Toeplitz matrix `gamma`.
fn factor(gamma: &[f64], jitter: f64) -> Result<Vec<f64>> {
    let n = gamma.len();
    let mut l = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..=i {
            let mut s = gamma[i - j];
            if i == j {
                s += jitter;
            }
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            if i == j {
                if !(s > 0.0) {
                    return Err(Error::Simulation(format!("fGn covariance not positive definite at row {i}")));
                }
                l[i * n + i] = s.sqrt();
            } else {
                l[i * n + j] = s / l[j * n + j];
            }
        }
    }
    Ok(l)
}

/// One realisation of `n_steps` fGn increments with step `dt`.
pub fn sample_fbm_increments<R: Rng + ?Sized>(hurst: f64, n_steps: usize, dt: f64, rng: &mut R) -> Result<Vec<f64>> {
    let g = FgnGenerator::new(hurst, n_steps, dt)?;
    let mut out = vec![0.0; n_steps];
    g.sample_into(rng, &mut out);
    Ok(out)
}
