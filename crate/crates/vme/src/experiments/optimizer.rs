//! Angle updates.
//!
//! Both optimizers use the stationarity field `g(θ)`: the frozen-multiplier
//! gradient evaluated with energies and multipliers recomputed at `θ`. Its
//! zeros are the points the functional is designed around.
//!
//! `GradientDescent` takes `θ ← θ − η g`.
//!
//! `Newton` solves `g = 0` separately for each state's angle block, using a
//! central-difference Jacobian `J` of that block. At every genuine eigenpair
//! `F · tr J < 0`; a Newton step taken where `F · tr J > 0` heads for a
//! stationary point that is not an eigenpair, so its direction is reversed.

use serde::{Deserialize, Serialize};

use crate::ansatz::{amplitudes, HypersphericalAngles};
use crate::error::Error;
use crate::estimator::OverlapCache;
use crate::linalg::{solve, Mat};
use crate::variational_core::{functional_gradient_frozen, functional_value, IterativeMethod, MultiplierSet, Overlaps};

const FD_STEP: f64 = 1e-5;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Optimizer {
    GradientDescent,
    #[default]
    Newton,
}

impl Optimizer {
    pub fn default_step(self) -> f64 {
        match self {
            Optimizer::GradientDescent => 0.1,
            Optimizer::Newton => 1.0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Field {
    pub value: f64,
    pub gradient: Vec<f64>,
    pub multipliers: MultiplierSet,
    pub energies: (f64, f64),
}

/// Value and stationarity field at `(ai, aj)`. Multipliers come from `mult`
/// (exactly, or by `method`); everything else from `main`.
pub fn evaluate(main: &OverlapCache, mult: &OverlapCache, ai: &HypersphericalAngles, aj: &HypersphericalAngles, method: Option<&IterativeMethod>) -> Result<Field, Error> {
    let phi_i = amplitudes(ai);
    let phi_j = amplitudes(aj);
    let ls = match method {
        None => MultiplierSet::exact(mult, &phi_i, &phi_j)?,
        Some(m) => MultiplierSet::iterative(mult, &phi_i, &phi_j, m)?,
    };
    let e_i = main.h().bilinear(&phi_i, &phi_i);
    let e_j = main.h().bilinear(&phi_j, &phi_j);
    let value = functional_value(main, &phi_i, &phi_j, &ls, e_i, e_j)?;
    let gradient = functional_gradient_frozen(main, ai, aj, &ls, e_i, e_j)?;
    Ok(Field { value, gradient, multipliers: ls, energies: (e_i, e_j) })
}

pub(super) struct Stepper<'a> {
    pub optimizer: Optimizer,
    pub step: f64,
    pub main: &'a OverlapCache,
    pub mult: &'a OverlapCache,
    pub method: Option<IterativeMethod>,
}

impl Stepper<'_> {
    pub fn field(&self, ai: &HypersphericalAngles, aj: &HypersphericalAngles) -> Result<Field, Error> {
        evaluate(self.main, self.mult, ai, aj, self.method.as_ref())
    }

    pub fn step(&self, ai: &HypersphericalAngles, aj: &HypersphericalAngles, at: &Field) -> Result<(HypersphericalAngles, HypersphericalAngles), Error> {
        let n = ai.values().len();
        let (gi, gj) = at.gradient.split_at(n);
        match self.optimizer {
            Optimizer::GradientDescent => {
                let di: Vec<f64> = gi.iter().map(|g| -self.step * g).collect();
                let dj: Vec<f64> = gj.iter().map(|g| -self.step * g).collect();
                Ok((ai.shifted(&di)?, aj.shifted(&dj)?))
            }
            Optimizer::Newton => {
                let di = self.newton_block(ai, aj, true, gi, at.value);
                let dj = self.newton_block(ai, aj, false, gj, at.value);
                Ok((ai.shifted(&di)?, aj.shifted(&dj)?))
            }
        }
    }

    /// Newton displacement for one angle block, other block held fixed. Falls
    /// back to a sign-oriented gradient step when the block Jacobian cannot be
    /// formed or inverted.
    fn newton_block(&self, ai: &HypersphericalAngles, aj: &HypersphericalAngles, first: bool, g: &[f64], value: f64) -> Vec<f64> {
        let n = g.len();
        let fallback = || g.iter().map(|x| self.step * value.signum() * x).collect::<Vec<f64>>();
        let Ok(jac) = self.block_jacobian(ai, aj, first) else {
            return fallback();
        };
        let Ok(d) = solve(&jac, g) else {
            return fallback();
        };
        let trace: f64 = (0..n).map(|k| jac[(k, k)]).sum();
        let orient = if value * trace > 0.0 { 1.0 } else { -1.0 };
        d.iter().map(|x| orient * self.step * x).collect()
    }

    fn block_jacobian(&self, ai: &HypersphericalAngles, aj: &HypersphericalAngles, first: bool) -> Result<Mat, Error> {
        let base = if first { ai } else { aj };
        let n = base.values().len();
        let offset = if first { 0 } else { n };
        let mut jac = Mat::zeros(n);
        for col in 0..n {
            let mut plus = vec![0.0; n];
            plus[col] = FD_STEP;
            let minus: Vec<f64> = plus.iter().map(|x| -x).collect();
            let probe = |delta: &[f64]| -> Result<Vec<f64>, Error> {
                let moved = base.shifted(delta)?;
                let f = if first { self.field(&moved, aj)? } else { self.field(ai, &moved)? };
                Ok(f.gradient[offset..offset + n].to_vec())
            };
            let gp = probe(&plus)?;
            let gm = probe(&minus)?;
            for row in 0..n {
                jac[(row, col)] = (gp[row] - gm[row]) / (2.0 * FD_STEP);
            }
        }
        Ok(jac)
    }
}
