//! Hyperspherical trial states and multiplier vectors.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Angles of a real unit vector in dimension `D`: one angle for `D = 2`,
/// three for `D = 4`. Values are stored wrapped to `[−π, π)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HypersphericalAngles {
    values: Vec<f64>,
}

pub fn wrap_angle(x: f64) -> f64 {
    let y = (x + PI).rem_euclid(2.0 * PI) - PI;
    // rem_euclid can round up to exactly 2π for tiny negative inputs.
    if y >= PI {
        y - 2.0 * PI
    } else {
        y
    }
}

impl HypersphericalAngles {
    pub fn new(values: Vec<f64>) -> Result<Self, Error> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidConfig("angles must be finite".into()));
        }
        if values.len() != 1 && values.len() != 3 {
            return Err(Error::UnsupportedDimension(values.len() + 1));
        }
        Ok(HypersphericalAngles { values: values.into_iter().map(wrap_angle).collect() })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn state_dim(&self) -> usize {
        self.values.len() + 1
    }

    /// Adds `delta` componentwise, re-wrapping.
    pub fn shifted(&self, delta: &[f64]) -> Result<Self, Error> {
        HypersphericalAngles::new(self.values.iter().zip(delta).map(|(a, d)| a + d).collect())
    }
}

pub fn amplitudes(a: &HypersphericalAngles) -> Vec<f64> {
    let v = a.values();
    match v.len() {
        1 => vec![v[0].cos(), v[0].sin()],
        _ => {
            let (sa, ca) = v[0].sin_cos();
            let (sb, cb) = v[1].sin_cos();
            let (sg, cg) = v[2].sin_cos();
            vec![ca, sa * cb, sa * sb * cg, sa * sb * sg]
        }
    }
}

/// `D × (D−1)` matrix of partial derivatives, returned as columns: entry
/// `[m][k]` is `∂a_k/∂θ_m`.
pub fn amplitude_jacobian(a: &HypersphericalAngles) -> Vec<Vec<f64>> {
    let v = a.values();
    match v.len() {
        1 => vec![vec![-v[0].sin(), v[0].cos()]],
        _ => {
            let (sa, ca) = v[0].sin_cos();
            let (sb, cb) = v[1].sin_cos();
            let (sg, cg) = v[2].sin_cos();
            vec![
                vec![-sa, ca * cb, ca * sb * cg, ca * sb * sg],
                vec![0.0, -sa * sb, sa * cb * cg, sa * cb * sg],
                vec![0.0, 0.0, -sa * sb * sg, sa * sb * cg],
            ]
        }
    }
}

/// Inverse of [`amplitudes`] for a real unit vector; degenerate nested
/// angles are set to zero.
pub fn angles_from_amplitudes(v: &[f64]) -> Result<HypersphericalAngles, Error> {
    match v.len() {
        2 => HypersphericalAngles::new(vec![v[1].atan2(v[0])]),
        4 => {
            let alpha = v[0].clamp(-1.0, 1.0).acos();
            let s1 = alpha.sin();
            if s1.abs() < 1e-12 {
                return HypersphericalAngles::new(vec![alpha, 0.0, 0.0]);
            }
            let beta = (v[1] / s1).clamp(-1.0, 1.0).acos();
            let s2 = s1 * beta.sin();
            if s2.abs() < 1e-12 {
                return HypersphericalAngles::new(vec![alpha, beta, 0.0]);
            }
            let gamma = (v[3] / s2).atan2(v[2] / s2);
            HypersphericalAngles::new(vec![alpha, beta, gamma])
        }
        n => Err(Error::UnsupportedDimension(n)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RemapMode {
    RealPart,
    None,
}

/// Folds a one-qubit angle into `(−π/2, π/2]`, i.e. fixes the global sign so
/// that the `|0⟩` amplitude is non-negative.
pub fn remap_principal(a: &HypersphericalAngles, mode: RemapMode) -> Result<HypersphericalAngles, Error> {
    match mode {
        RemapMode::None => Ok(a.clone()),
        RemapMode::RealPart => {
            if a.state_dim() != 2 {
                return Err(Error::UnsupportedDimension(a.state_dim()));
            }
            let t = a.values()[0];
            let mut r = t - PI * ((t - FRAC_PI_2) / PI).ceil();
            if r <= -FRAC_PI_2 {
                r += PI;
            }
            HypersphericalAngles::new(vec![r])
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Purity {
    Real,
    Imaginary,
}

/// Unnormalized multiplier vector. With `Imaginary` purity the represented
/// vector is `i · coeffs`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MultiplierVector {
    pub coeffs: Vec<f64>,
    pub purity: Purity,
}

impl MultiplierVector {
    pub fn zeros(dim: usize, purity: Purity) -> Self {
        MultiplierVector { coeffs: vec![0.0; dim], purity }
    }

    pub fn negated(&self) -> Self {
        MultiplierVector { coeffs: self.coeffs.iter().map(|x| -x).collect(), purity: self.purity }
    }
}

pub fn multiplier_as_complex(l: &MultiplierVector) -> Vec<Complex64> {
    l.coeffs
        .iter()
        .map(|x| match l.purity {
            Purity::Real => Complex64::new(*x, 0.0),
            Purity::Imaginary => Complex64::new(0.0, *x),
        })
        .collect()
}
