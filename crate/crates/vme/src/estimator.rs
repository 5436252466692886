//! Emulated overlap measurements.
//!
//! Each scalar `t` with `|t| ≤ b` is treated as the expectation of a ±b
//! valued observable: one shot returns `+b` with probability `(1 + t/b)/2`.
//! A readout flip with probability `f` turns that into `f + (1 − 2f)p`, which
//! mitigation undoes on the observed frequency.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::linalg::Mat;
use crate::pauli_algebra::decompose_hermitian;
use crate::variational_core::{Overlaps, Part, ProblemInstance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EstimatorMode {
    Exact,
    Shot,
    ShotReadout,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct EstimatorConfig {
    pub mode: EstimatorMode,
    pub shots: u64,
    pub repeats: u32,
    pub readout_flip_prob: f64,
    pub mitigation: bool,
    pub seed: u64,
}

impl Default for EstimatorConfig {
    fn default() -> Self {
        EstimatorConfig { mode: EstimatorMode::Exact, shots: 1000, repeats: 50, readout_flip_prob: 0.02, mitigation: false, seed: 0 }
    }
}

impl EstimatorConfig {
    pub fn exact() -> Self {
        EstimatorConfig::default()
    }

    pub fn shot(seed: u64) -> Self {
        EstimatorConfig { mode: EstimatorMode::Shot, seed, ..Default::default() }
    }

    pub fn shot_readout(flip: f64, mitigation: bool, seed: u64) -> Self {
        EstimatorConfig { mode: EstimatorMode::ShotReadout, readout_flip_prob: flip, mitigation, seed, ..Default::default() }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.mode != EstimatorMode::Exact && (self.shots == 0 || self.repeats == 0) {
            return Err(Error::InvalidConfig("shots and repeats must be positive".into()));
        }
        if !(0.0..0.5).contains(&self.readout_flip_prob) {
            return Err(Error::InvalidConfig("readout_flip_prob must lie in [0, 0.5)".into()));
        }
        Ok(())
    }
}

pub fn estimate_scalar<R: Rng + ?Sized>(true_value: f64, bound: f64, cfg: &EstimatorConfig, rng: &mut R) -> Result<f64, Error> {
    if !(bound > 0.0) || true_value.abs() > bound * (1.0 + 1e-12) {
        return Err(Error::BoundViolation { value: true_value, bound });
    }
    if cfg.mode == EstimatorMode::Exact {
        return Ok(true_value);
    }
    cfg.validate()?;
    let mut p = ((1.0 + true_value / bound) / 2.0).clamp(0.0, 1.0);
    let f = cfg.readout_flip_prob;
    let readout = cfg.mode == EstimatorMode::ShotReadout;
    if readout {
        p = f + (1.0 - 2.0 * f) * p;
    }
    let dist = Binomial::new(cfg.shots, p).map_err(|e| Error::InvalidConfig(e.to_string()))?;
    let mut acc = 0.0;
    for _ in 0..cfg.repeats {
        let mut q = dist.sample(rng) as f64 / cfg.shots as f64;
        if readout && cfg.mitigation {
            q = (q - f) / (1.0 - 2.0 * f);
        }
        acc += (2.0 * q - 1.0) * bound;
    }
    Ok(acc / cfg.repeats as f64)
}

/// Estimated computational-basis elements of `H` and of the observable part.
/// For the imaginary part `w` holds `Im(W_I)`, which is antisymmetric.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OverlapCache {
    #[serde(with = "rows")]
    pub h: Mat,
    #[serde(with = "rows")]
    pub w: Mat,
    pub part: Part,
    pub config: EstimatorConfig,
}

mod rows {
    use crate::linalg::Mat;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(m: &Mat, s: S) -> Result<S::Ok, S::Error> {
        m.rows().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Mat, D::Error> {
        let r = Vec::<Vec<f64>>::deserialize(d)?;
        if r.iter().any(|row| row.len() != r.len()) {
            return Err(serde::de::Error::custom("matrix must be square"));
        }
        Ok(Mat::from_rows(&r))
    }
}

impl Overlaps for OverlapCache {
    fn h(&self) -> &Mat {
        &self.h
    }
    fn w(&self) -> &Mat {
        &self.w
    }
    fn part(&self) -> Part {
        self.part
    }
}

/// Upper-triangle estimation of both matrices, one RNG stream per element.
pub fn build_cache(p: &ProblemInstance, cfg: &EstimatorConfig) -> Result<OverlapCache, Error> {
    cfg.validate()?;
    let n = p.dim();
    let h_bound = p.hamiltonian.coefficient_bound();
    let w_bound = decompose_hermitian(&p.w_part)?.coefficient_bound();
    let antisym = p.part == Part::Imaginary;
    let mut h = Mat::zeros(n);
    let mut w = Mat::zeros(n);
    for r in 0..n {
        for c in r..n {
            let hv = element(p.h()[(r, c)], h_bound, cfg, (r * n + c) as u64)?;
            h[(r, c)] = hv;
            h[(c, r)] = hv;
            if antisym && r == c {
                continue;
            }
            let wv = element(p.w()[(r, c)], w_bound, cfg, (n * n + r * n + c) as u64)?;
            w[(r, c)] = wv;
            w[(c, r)] = if antisym { -wv } else { wv };
        }
    }
    Ok(OverlapCache { h, w, part: p.part, config: cfg.clone() })
}

fn element(value: f64, bound: f64, cfg: &EstimatorConfig, stream: u64) -> Result<f64, Error> {
    if bound == 0.0 {
        return Ok(value);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(stream);
    estimate_scalar(value, bound, cfg, &mut rng)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    H,
    W,
}

pub fn expectation_from_cache(cache: &OverlapCache, bra: &[f64], ket: &[f64], which: Which) -> Result<f64, Error> {
    let n = cache.h.dim();
    for v in [bra, ket] {
        if v.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: v.len() });
        }
    }
    Ok(match which {
        Which::H => cache.h.bilinear(bra, ket),
        Which::W => cache.w.bilinear(bra, ket),
    })
}
