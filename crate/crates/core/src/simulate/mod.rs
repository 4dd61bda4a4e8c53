//! Monte Carlo paths of `d`-dimensional ggBm and estimators of their laws.
//!
//! A path is `√Y · (W₁, …, W_d)` with independent fractional Brownian
//! motions `W_j` of Hurst index `α/2` and one subordinator draw `Y` per path,
//! `E[e^{-sY}] = E_β(-s)`. The increment characteristic function is then
//! `E_β(-|k|²|t-s|^α / 2)`.
//!
//! Every path has its own ChaCha8 stream keyed by the path index, so an
//! ensemble depends only on its [`SimConfig`] and not on the thread count.
//! Simulation is `f64` only.

mod container;
mod estimators;
mod fgn;

pub use container::{load_ensemble, save_ensemble, sidecar_path, FORMAT_VERSION, MAGIC};
pub use estimators::{
    discrete_form_factor, estimate_char_fn, estimate_covariance, estimate_even_moment, estimate_increment_moment,
    estimate_odd_moment, mc_form_factor, trapezoid_weights, McEstimate, McFormFactor,
};
pub use fgn::{fgn_autocovariance, sample_fbm_increments, FgnGenerator, CHOLESKY_MAX_STEPS};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formfactor::GgbmParams;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    pub params: GgbmParams<f64>,
    /// Spatial dimension.
    pub d: usize,
    /// Number of time steps; paths have `n_steps + 1` points.
    pub n_steps: usize,
    /// Final time `n`; the grid is `t_i = i · horizon / n_steps`.
    pub horizon: f64,
    pub n_paths: usize,
    pub seed: u64,
}

impl SimConfig {
    pub fn new(params: GgbmParams<f64>, d: usize, n_steps: usize, horizon: f64, n_paths: usize, seed: u64) -> Result<Self> {
        let cfg = Self {
            params,
            d,
            n_steps,
            horizon,
            n_paths,
            seed,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        GgbmParams::new(self.params.beta(), self.params.alpha())?;
        if self.d < 1 {
            return Err(Error::domain("dimension d must be >= 1"));
        }
        if self.n_steps < 2 {
            return Err(Error::domain("n_steps must be >= 2"));
        }
        if !(self.horizon > 0.0) || !self.horizon.is_finite() {
            return Err(Error::domain(format!("horizon must be > 0, got {}", self.horizon)));
        }
        if self.n_paths < 1 {
            return Err(Error::domain("n_paths must be >= 1"));
        }
        Ok(())
    }

    pub fn dt(&self) -> f64 {
        self.horizon / self.n_steps as f64
    }

    pub fn time(&self, i: usize) -> f64 {
        if i == self.n_steps {
            self.horizon
        } else {
            i as f64 * self.dt()
        }
    }

    /// Index of the grid point closest to `t`.
    pub fn index_of(&self, t: f64) -> usize {
        ((t / self.dt()).round().max(0.0) as usize).min(self.n_steps)
    }

    /// Values stored per path (`d · (n_steps + 1)`).
    pub fn path_len(&self) -> usize {
        self.d * (self.n_steps + 1)
    }
}

/// `n_paths × d × (n_steps + 1)` values, path-major.
#[derive(Debug, Clone, PartialEq)]
pub struct PathEnsemble {
    config: SimConfig,
    data: Vec<f64>,
}

impl PathEnsemble {
    pub fn from_parts(config: SimConfig, data: Vec<f64>) -> Result<Self> {
        config.validate()?;
        let expected = config.n_paths * config.path_len();
        if data.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: data.len(),
            });
        }
        let ens = Self { config, data };
        ens.check()?;
        Ok(ens)
    }

    pub fn config(&self) -> &SimConfig {
        &self.config
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// All components of path `p`, component-major.
    pub fn path(&self, p: usize) -> &[f64] {
        let len = self.config.path_len();
        &self.data[p * len..(p + 1) * len]
    }

    pub fn component(&self, p: usize, j: usize) -> &[f64] {
        let n1 = self.config.n_steps + 1;
        &self.path(p)[j * n1..(j + 1) * n1]
    }

    pub fn paths(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.config.path_len())
    }

    /// Paths start at the origin and all values are finite.
    pub fn check(&self) -> Result<()> {
        let n1 = self.config.n_steps + 1;
        for (p, path) in self.paths().enumerate() {
            if path.chunks_exact(n1).any(|c| c[0] != 0.0) {
                return Err(Error::Simulation(format!("path {p} does not start at the origin")));
            }
            if path.iter().any(|v| !v.is_finite()) {
                return Err(Error::Simulation(format!("path {p} has non-finite values")));
            }
        }
        Ok(())
    }
}

/// Per-path random stream: seeded once from `seed`, selected by `index`.
pub fn path_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// `Y > 0` with `E[e^{-sY}] = E_β(-s)`, i.e. `Y = S^{-β}` for a one-sided
/// stable `S` with `E[e^{-sS}] = e^{-s^β}` (Kanter's representation).
pub fn sample_subordinator<R: Rng + ?Sized>(beta: f64, rng: &mut R) -> Result<f64> {
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(Error::domain(format!("beta must lie in (0, 1], got {beta}")));
    }
    if beta == 1.0 {
        return Ok(1.0);
    }
    let pi = std::f64::consts::PI;
    loop {
        let u = pi * rng.random::<f64>();
        let e = -(1.0 - rng.random::<f64>()).ln();
        if u == 0.0 || !(e > 0.0) {
            continue;
        }
        let a = u.sin() / ((beta * u).sin().powf(beta) * ((1.0 - beta) * u).sin().powf(1.0 - beta));
        let y = a * e.powf(1.0 - beta);
        if y.is_finite() && y > 0.0 {
            return Ok(y);
        }
    }
}

/// Generate the ensemble in parallel on the current rayon pool.
pub fn sample_paths(config: &SimConfig) -> Result<PathEnsemble> {
    config.validate()?;
    let n = config.n_steps;
    let gen = FgnGenerator::new(config.params.hurst(), n, config.dt())?;
    let len = config.path_len();
    let mut data = vec![0.0; config.n_paths * len];
    let beta = config.params.beta();
    data.par_chunks_mut(len).enumerate().try_for_each(|(p, path)| -> Result<()> {
        let mut rng = path_rng(config.seed, p as u64);
        let scale = sample_subordinator(beta, &mut rng)?.sqrt();
        let mut inc_a = vec![0.0; n];
        let mut inc_b = vec![0.0; n];
        let mut comps = path.chunks_exact_mut(n + 1);
        while let Some(a) = comps.next() {
            match comps.next() {
                Some(b) => {
                    gen.sample_pair_into(&mut rng, &mut inc_a, Some(&mut inc_b));
                    cumulate(a, &inc_a, scale);
                    cumulate(b, &inc_b, scale);
                }
                None => {
                    gen.sample_into(&mut rng, &mut inc_a);
                    cumulate(a, &inc_a, scale);
                }
            }
        }
        Ok(())
    })?;
    PathEnsemble::from_parts(*config, data)
}

fn cumulate(out: &mut [f64], inc: &[f64], scale: f64) {
    out[0] = 0.0;
    let mut s = 0.0;
    for (o, &d) in out[1..].iter_mut().zip(inc) {
        s += d;
        *o = scale * s;
    }
}
