//! Optimization runs, ensembles and their statistics.

mod models;
mod optimizer;
mod stats;

use std::f64::consts::PI;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use models::{default_targets, h_one_qubit, h_two_qubit, w_diag_one_qubit, w_diag_two_qubit, Model, ModelSpec};
pub use optimizer::{evaluate, Field, Optimizer};
pub use stats::{band, error_traces, heatmap, median_band, percentile, Band, EnsembleSummary, ErrorTrace, GroupSummary, Heatmap, BAND_HIGH, BAND_LOW, ERROR_FLOOR};

use crate::ansatz::{remap_principal, HypersphericalAngles, RemapMode};
use crate::error::Error;
use crate::estimator::{build_cache, EstimatorConfig, OverlapCache};
use crate::variational_core::{IterativeMethod, Part, ProblemInstance};

const KICK: f64 = 1e-3;
const MAX_KICKS: usize = 5;
const CONVERGED_GRAD: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MultiplierMethod {
    Exact,
    Iterative,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Init {
    /// Every angle drawn uniformly from `[lo, hi)`.
    Uniform { lo: f64, hi: f64 },
    /// Each angle drawn uniformly within `±radius` of a center. Without
    /// explicit centers, run `k` starts near the eigenstate pair
    /// `(k / D, k % D)` modulo `D²`.
    Ball {
        radius: f64,
        #[serde(default)]
        center_i: Option<Vec<f64>>,
        #[serde(default)]
        center_j: Option<Vec<f64>>,
    },
    /// A fixed starting point.
    Point { i: Vec<f64>, j: Vec<f64> },
}

fn default_iterations() -> usize {
    20
}
fn default_tolerance() -> f64 {
    0.5
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub model: ModelSpec,
    pub part: Part,
    #[serde(default = "default_multiplier")]
    pub multiplier_method: MultiplierMethod,
    #[serde(default = "default_iterative")]
    pub iterative: IterativeMethod,
    #[serde(default = "default_iterations")]
    pub iterations: usize,
    pub n_runs: usize,
    pub init: Init,
    #[serde(default)]
    pub optimizer: Optimizer,
    /// Defaults to the optimizer's own step (0.1 for gradient descent, 1 for
    /// Newton).
    #[serde(default)]
    pub step_size: Option<f64>,
    #[serde(default)]
    pub estimator: EstimatorConfig,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    /// Overrides the model's default target list.
    #[serde(default)]
    pub targets: Option<Vec<f64>>,
}

fn default_multiplier() -> MultiplierMethod {
    MultiplierMethod::Exact
}
fn default_iterative() -> IterativeMethod {
    IterativeMethod::StationarySolve
}

impl RunConfig {
    pub fn new(model: ModelSpec, part: Part, n_runs: usize, init: Init) -> Self {
        RunConfig {
            model,
            part,
            multiplier_method: MultiplierMethod::Exact,
            iterative: IterativeMethod::StationarySolve,
            iterations: 20,
            n_runs,
            init,
            optimizer: Optimizer::default(),
            step_size: None,
            estimator: EstimatorConfig::default(),
            seed: 0,
            tolerance: 0.5,
            targets: None,
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.iterations == 0 {
            return Err(Error::InvalidConfig("iterations must be at least 1".into()));
        }
        if self.n_runs == 0 {
            return Err(Error::InvalidConfig("n_runs must be at least 1".into()));
        }
        if let Init::Ball { radius, .. } = self.init {
            if !(radius > 0.0) {
                return Err(Error::InvalidConfig("ball radius must be positive".into()));
            }
        }
        if let Init::Uniform { lo, hi } = self.init {
            if !(hi > lo) {
                return Err(Error::InvalidConfig("uniform init needs lo < hi".into()));
            }
        }
        if let Some(s) = self.step_size {
            if !(s >= 0.0) || !s.is_finite() {
                return Err(Error::InvalidConfig("step_size must be a finite non-negative number".into()));
            }
        }
        self.estimator.validate()
    }

    pub fn step(&self) -> f64 {
        self.step_size.unwrap_or_else(|| self.optimizer.default_step())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Status {
    Converged,
    MaxIterations,
    Failed { reason: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub run_index: usize,
    /// Eigenstate pair a ball start was centered on.
    pub start_pair: Option<(usize, usize)>,
    /// `F_v` at the start and after each iteration.
    pub f_values: Vec<f64>,
    pub angles_i: Vec<Vec<f64>>,
    pub angles_j: Vec<Vec<f64>>,
    pub assigned_target: Option<f64>,
    pub status: Status,
}

impl RunRecord {
    pub fn is_failed(&self) -> bool {
        matches!(self.status, Status::Failed { .. })
    }

    pub fn final_value(&self) -> Option<f64> {
        if self.is_failed() {
            None
        } else {
            self.f_values.last().copied()
        }
    }
}

/// Nearest target within `tolerance`, if any.
pub fn classify_run(final_value: f64, targets: &[f64], tolerance: f64) -> Option<f64> {
    if !(tolerance > 0.0) || !final_value.is_finite() {
        return None;
    }
    let best = targets.iter().copied().min_by(|a, b| (a - final_value).abs().total_cmp(&(b - final_value).abs()))?;
    ((best - final_value).abs() <= tolerance).then_some(best)
}

/// Everything shared by the runs of one ensemble.
pub struct Context {
    pub cfg: RunConfig,
    pub model: Model,
    pub problem: ProblemInstance,
    pub targets: Vec<f64>,
    centers: Vec<HypersphericalAngles>,
}

impl Context {
    pub fn new(cfg: &RunConfig) -> Result<Context, Error> {
        cfg.validate()?;
        let model = Model::resolve(&cfg.model)?;
        let problem = model.problem(cfg.part)?;
        let targets = cfg.targets.clone().unwrap_or_else(|| model.targets(cfg.part));
        if targets.is_empty() {
            return Err(Error::InvalidConfig("target list is empty".into()));
        }
        let centers = model.optimal_angles()?;
        let n_angles = model.dim() - 1;
        let check = |v: &Vec<f64>| {
            if v.len() != n_angles {
                Err(Error::InvalidConfig(format!("expected {n_angles} angles per state, got {}", v.len())))
            } else {
                Ok(())
            }
        };
        match &cfg.init {
            Init::Point { i, j } => {
                check(i)?;
                check(j)?;
            }
            Init::Ball { center_i, center_j, .. } => {
                if center_i.is_some() != center_j.is_some() {
                    return Err(Error::InvalidConfig("give both ball centers or neither".into()));
                }
                if let (Some(i), Some(j)) = (center_i, center_j) {
                    check(i)?;
                    check(j)?;
                }
            }
            Init::Uniform { .. } => {}
        }
        Ok(Context { cfg: cfg.clone(), model, problem, targets, centers })
    }

    fn remap(&self) -> RemapMode {
        if self.cfg.part == Part::Real && self.cfg.model == ModelSpec::OneQubit {
            RemapMode::RealPart
        } else {
            RemapMode::None
        }
    }

    fn initial_angles(&self, run_index: usize, rng: &mut ChaCha8Rng) -> Result<(HypersphericalAngles, HypersphericalAngles, Option<(usize, usize)>), Error> {
        let n = self.model.dim() - 1;
        let around = |c: &[f64], r: f64, rng: &mut ChaCha8Rng| -> Result<HypersphericalAngles, Error> {
            HypersphericalAngles::new(c.iter().map(|x| x + rng.random_range(-r..r)).collect())
        };
        match &self.cfg.init {
            Init::Uniform { lo, hi } => {
                let mut draw = || -> Result<HypersphericalAngles, Error> { HypersphericalAngles::new((0..n).map(|_| rng.random_range(*lo..*hi)).collect()) };
                let i = draw()?;
                let j = draw()?;
                Ok((i, j, None))
            }
            Init::Ball { radius, center_i: Some(ci), center_j: Some(cj) } => Ok((around(ci, *radius, rng)?, around(cj, *radius, rng)?, None)),
            Init::Ball { radius, .. } => {
                let d = self.model.dim();
                let k = run_index % (d * d);
                let (pi, pj) = (k / d, k % d);
                let i = around(self.centers[pi].values(), *radius, rng)?;
                let j = around(self.centers[pj].values(), *radius, rng)?;
                Ok((i, j, Some((pi, pj))))
            }
            Init::Point { i, j } => Ok((HypersphericalAngles::new(i.clone())?, HypersphericalAngles::new(j.clone())?, None)),
        }
    }

    /// Overlap caches for the functional and for the multipliers. With exact
    /// multipliers they coincide; iterative multipliers use an independently
    /// estimated copy, standing in for separate measurements.
    fn caches(&self, rng: &mut ChaCha8Rng) -> Result<(OverlapCache, OverlapCache), Error> {
        // Both seeds are always drawn so that starts and the main cache do not
        // depend on the multiplier method.
        let mut est = self.cfg.estimator.clone();
        est.seed ^= rng.next_u64();
        let mut e2 = self.cfg.estimator.clone();
        e2.seed ^= rng.next_u64();
        let main = build_cache(&self.problem, &est)?;
        let mult = match self.cfg.multiplier_method {
            MultiplierMethod::Exact => main.clone(),
            MultiplierMethod::Iterative => build_cache(&self.problem, &e2)?,
        };
        Ok((main, mult))
    }

    pub fn run(&self, run_index: usize) -> RunRecord {
        let mut rng = ChaCha8Rng::seed_from_u64(self.cfg.seed);
        rng.set_stream(run_index as u64);
        let mut rec = RunRecord {
            run_index,
            start_pair: None,
            f_values: Vec::new(),
            angles_i: Vec::new(),
            angles_j: Vec::new(),
            assigned_target: None,
            status: Status::MaxIterations,
        };
        if let Err(e) = self.run_into(run_index, &mut rng, &mut rec) {
            rec.status = Status::Failed { reason: e.to_string() };
        } else {
            rec.assigned_target = rec.final_value().and_then(|v| classify_run(v, &self.targets, self.cfg.tolerance));
        }
        rec
    }

    fn run_into(&self, run_index: usize, rng: &mut ChaCha8Rng, rec: &mut RunRecord) -> Result<(), Error> {
        let (main, mult) = self.caches(rng)?;
        let (mut ai, mut aj, pair) = self.initial_angles(run_index, rng)?;
        rec.start_pair = pair;
        let remap = self.remap();
        let opt = optimizer::Stepper {
            optimizer: self.cfg.optimizer,
            step: self.cfg.step(),
            main: &main,
            mult: &mult,
            method: self.multiplier_method(),
        };
        for t in 0..=self.cfg.iterations {
            ai = remap_principal(&ai, remap)?;
            aj = remap_principal(&aj, remap)?;
            let mut field = opt.field(&ai, &aj);
            let mut kicks = 0;
            while let Err(e) = &field {
                if kicks == MAX_KICKS || !matches!(e, Error::NearZeroEnergy(_) | Error::SingularSystem) {
                    break;
                }
                kicks += 1;
                ai = remap_principal(&kick(&ai, rng)?, remap)?;
                aj = remap_principal(&kick(&aj, rng)?, remap)?;
                field = opt.field(&ai, &aj);
            }
            let field = field?;
            if !field.value.is_finite() {
                return Err(Error::InvalidConfig("functional value is not finite".into()));
            }
            rec.f_values.push(field.value);
            rec.angles_i.push(ai.values().to_vec());
            rec.angles_j.push(aj.values().to_vec());
            if t == self.cfg.iterations {
                let gnorm = field.gradient.iter().map(|g| g * g).sum::<f64>().sqrt();
                rec.status = if gnorm < CONVERGED_GRAD { Status::Converged } else { Status::MaxIterations };
                break;
            }
            let (ni, nj) = opt.step(&ai, &aj, &field)?;
            ai = ni;
            aj = nj;
        }
        Ok(())
    }

    fn multiplier_method(&self) -> Option<IterativeMethod> {
        match self.cfg.multiplier_method {
            MultiplierMethod::Exact => None,
            MultiplierMethod::Iterative => Some(self.cfg.iterative.clone()),
        }
    }
}

fn kick(a: &HypersphericalAngles, rng: &mut ChaCha8Rng) -> Result<HypersphericalAngles, Error> {
    let d: Vec<f64> = a.values().iter().map(|_| rng.random_range(-KICK..KICK)).collect();
    a.shifted(&d)
}

pub fn run_single(cfg: &RunConfig, run_index: usize) -> Result<RunRecord, Error> {
    Ok(Context::new(cfg)?.run(run_index))
}

/// Runs `cfg.n_runs` independent optimizations in parallel; run `k` depends
/// only on `(cfg, k)`.
pub fn run_ensemble(cfg: &RunConfig) -> Result<Vec<RunRecord>, Error> {
    let ctx = Context::new(cfg)?;
    Ok((0..cfg.n_runs).into_par_iter().map(|k| ctx.run(k)).collect())
}

/// Uniform initialization over a full turn.
pub fn full_turn() -> Init {
    Init::Uniform { lo: 0.0, hi: 2.0 * PI }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_examples() {
        assert_eq!(classify_run(2.01, &[2.0, 5.0, 3.0], 0.5), Some(2.0));
        assert_eq!(classify_run(3.6, &[2.0, 5.0, 3.0], 0.5), None);
        assert_eq!(classify_run(2.0, &[2.0], 0.0), None);
        let two = default_targets(&ModelSpec::TwoQubit, Part::Real).unwrap();
        assert_eq!(classify_run(30.2, &two, 0.5), None);
    }

    #[test]
    fn default_target_lists() {
        assert_eq!(default_targets(&ModelSpec::OneQubit, Part::Real).unwrap(), vec![2.0, 3.0, 5.0]);
        assert_eq!(default_targets(&ModelSpec::OneQubit, Part::Imaginary).unwrap(), vec![-2.0, 0.0, 2.0]);
        let two = default_targets(&ModelSpec::TwoQubit, Part::Real).unwrap();
        for x in [1.0, 3.0, 5.0, 13.0, 4.0, 20.0, 25.0, 7.0, 6.0, 10.0] {
            assert!(two.contains(&x), "{x}");
        }
        assert_eq!(two.len(), 10);
    }

    #[test]
    fn config_validation() {
        let mut c = RunConfig::new(ModelSpec::OneQubit, Part::Real, 1, full_turn());
        assert!(c.validate().is_ok());
        c.iterations = 0;
        assert!(c.validate().is_err());
        let b = RunConfig::new(ModelSpec::OneQubit, Part::Real, 1, Init::Ball { radius: 0.0, center_i: None, center_j: None });
        assert!(b.validate().is_err());
    }
}
