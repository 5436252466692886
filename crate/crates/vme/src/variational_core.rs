//! The Lagrange-multiplier functional for `⟨φ_i|W|φ_j⟩`.
//!
//! All trial states are real. The observable part is handled through a real
//! matrix `M`: `M = W_R` in the real case and `M = Im(W_I)` (antisymmetric) in
//! the imaginary case, where `W_I = i·M`. Values in the imaginary case are
//! reported as the coefficient of `i`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::ansatz::{amplitude_jacobian, amplitudes, multiplier_as_complex, HypersphericalAngles, MultiplierVector, Purity};
use crate::error::Error;
use crate::linalg::{dot, norm, solve, Mat};
use crate::pauli_algebra::{to_dense, DenseHermitian, PauliSum};

/// The scalar multiplier fixed by first-order stationarity.
pub const LAMBDA: f64 = -0.5;
const NORM_TOL: f64 = 1e-10;
const ENERGY_EPS: f64 = 1e-9;
const RESIDUE_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Part {
    Real,
    Imaginary,
}

impl Part {
    pub fn purity(self) -> Purity {
        match self {
            Part::Real => Purity::Real,
            Part::Imaginary => Purity::Imaginary,
        }
    }

    fn unit(self) -> Complex64 {
        match self {
            Part::Real => Complex64::new(1.0, 0.0),
            Part::Imaginary => Complex64::new(0.0, 1.0),
        }
    }

    fn project(self, z: Complex64) -> f64 {
        match self {
            Part::Real => z.re,
            Part::Imaginary => z.im,
        }
    }

    fn residue(self, z: Complex64) -> f64 {
        match self {
            Part::Real => z.im,
            Part::Imaginary => z.re,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    I,
    J,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Nu {
    A,
    B,
}

/// Source of the computational-basis matrix elements of `H` and `M`.
pub trait Overlaps {
    fn h(&self) -> &Mat;
    fn w(&self) -> &Mat;
    fn part(&self) -> Part;
    fn dim(&self) -> usize {
        self.h().dim()
    }
}

#[derive(Clone, Debug)]
pub struct ProblemInstance {
    pub hamiltonian: PauliSum,
    pub w_part: DenseHermitian,
    pub part: Part,
    pub xi_a: f64,
    pub xi_b: f64,
    pub lambda: f64,
    h_dense: Mat,
    w_mat: Mat,
}

impl ProblemInstance {
    pub fn new(hamiltonian: PauliSum, w_part: DenseHermitian, part: Part) -> Result<Self, Error> {
        let h = to_dense(&hamiltonian);
        if !h.is_real() {
            return Err(Error::InvalidConfig("the Hamiltonian must be real in the computational basis".into()));
        }
        if h.dim() != w_part.dim() {
            return Err(Error::DimensionMismatch { expected: h.dim(), found: w_part.dim() });
        }
        w_part.check_hermitian()?;
        let (w_mat, xi_b) = match part {
            Part::Real if w_part.is_real() => (w_part.real_part(), 1.0),
            Part::Imaginary if w_part.is_imaginary() => (w_part.imag_part(), -1.0),
            _ => return Err(Error::InvalidConfig(format!("observable part does not match {part:?}"))),
        };
        Ok(ProblemInstance { hamiltonian, w_part, part, xi_a: 1.0, xi_b, lambda: LAMBDA, h_dense: h.real_part(), w_mat })
    }

    /// Only the stationary value `−1/2` is accepted.
    pub fn with_lambda(self, lambda: f64) -> Result<Self, Error> {
        if lambda != LAMBDA {
            return Err(Error::InvalidConfig(format!("lambda must be {LAMBDA}, got {lambda}")));
        }
        Ok(self)
    }
}

impl Overlaps for ProblemInstance {
    fn h(&self) -> &Mat {
        &self.h_dense
    }
    fn w(&self) -> &Mat {
        &self.w_mat
    }
    fn part(&self) -> Part {
        self.part
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MultiplierSet {
    pub l_ia: MultiplierVector,
    pub l_ib: MultiplierVector,
    pub l_ja: MultiplierVector,
    pub l_jb: MultiplierVector,
}

impl MultiplierSet {
    /// Assembles the set from the `b`-side coefficient vectors.
    pub fn from_b_coeffs(part: Part, v_i: Vec<f64>, v_j: Vec<f64>) -> Self {
        let p = part.purity();
        let l_ib = MultiplierVector { coeffs: v_i, purity: p };
        let l_jb = MultiplierVector { coeffs: v_j, purity: p };
        let (l_ia, l_ja) = match part {
            Part::Real => (l_ib.clone(), l_jb.clone()),
            Part::Imaginary => (l_ib.negated(), l_jb.negated()),
        };
        MultiplierSet { l_ia, l_ib, l_ja, l_jb }
    }

    pub fn zeros(part: Part, dim: usize) -> Self {
        MultiplierSet::from_b_coeffs(part, vec![0.0; dim], vec![0.0; dim])
    }

    pub fn exact<O: Overlaps>(src: &O, phi_i: &[f64], phi_j: &[f64]) -> Result<Self, Error> {
        let v_i = exact_multiplier(src, phi_i, phi_j, Side::I, Nu::B)?.coeffs;
        let v_j = exact_multiplier(src, phi_i, phi_j, Side::J, Nu::B)?.coeffs;
        Ok(MultiplierSet::from_b_coeffs(src.part(), v_i, v_j))
    }

    pub fn iterative<O: Overlaps>(src: &O, phi_i: &[f64], phi_j: &[f64], method: &IterativeMethod) -> Result<Self, Error> {
        let v_i = iterative_multiplier(src, phi_i, phi_j, Side::I, Nu::B, method)?.coeffs;
        let v_j = iterative_multiplier(src, phi_i, phi_j, Side::J, Nu::B, method)?.coeffs;
        Ok(MultiplierSet::from_b_coeffs(src.part(), v_i, v_j))
    }

    /// `L_a = L_b` for real parts, `L_a = −L_b` for imaginary parts.
    pub fn symmetry_holds(&self, part: Part) -> bool {
        let s = match part {
            Part::Real => 1.0,
            Part::Imaginary => -1.0,
        };
        let purity_ok = [&self.l_ia, &self.l_ib, &self.l_ja, &self.l_jb].iter().all(|l| l.purity == part.purity());
        let eq = |a: &MultiplierVector, b: &MultiplierVector| a.coeffs.iter().zip(&b.coeffs).all(|(x, y)| *x == s * y);
        purity_ok && eq(&self.l_ia, &self.l_ib) && eq(&self.l_ja, &self.l_jb)
    }
}

pub fn energy(state: &[f64], h: &Mat) -> Result<f64, Error> {
    let n = norm(state);
    if (n - 1.0).abs() > NORM_TOL {
        return Err(Error::NormViolation(n));
    }
    Ok(h.bilinear(state, state))
}

/// `H − H|φ⟩⟨φ|H / ⟨φ|H|φ⟩` together with `⟨φ|H|φ⟩`.
pub fn h_mod(h: &Mat, state: &[f64]) -> Result<(Mat, f64), Error> {
    let e = h.bilinear(state, state);
    Ok((modified(h, state, e)?, e))
}

fn modified(h: &Mat, state: &[f64], quad: f64) -> Result<Mat, Error> {
    if quad.abs() <= ENERGY_EPS {
        return Err(Error::NearZeroEnergy(quad));
    }
    let hp = h.mul_vec(state);
    Ok(Mat::from_fn(h.dim(), |r, c| h[(r, c)] - hp[r] * hp[c] / quad))
}

/// `H_mod − E` for the given side, with `E` the Rayleigh quotient when
/// `normalized` is false.
fn shifted<O: Overlaps>(src: &O, phi: &[f64], normalized: bool) -> Result<(Mat, f64), Error> {
    let quad = src.h().bilinear(phi, phi);
    let e = if normalized { quad } else { quad / dot(phi, phi) };
    Ok((modified(src.h(), phi, quad)?.sub_scaled_identity(e), e))
}

/// Right-hand side `r` of `(H_mod − E) v = r` for the `b` multiplier.
fn side_rhs<O: Overlaps>(src: &O, phi_i: &[f64], phi_j: &[f64], side: Side) -> Vec<f64> {
    let mv = match side {
        Side::I => src.w().mul_vec(phi_j),
        Side::J => src.w().transpose().mul_vec(phi_i),
    };
    mv.iter().map(|x| -0.5 * x).collect()
}

fn check_dims<O: Overlaps>(src: &O, vs: &[&[f64]]) -> Result<(), Error> {
    for v in vs {
        if v.len() != src.dim() {
            return Err(Error::DimensionMismatch { expected: src.dim(), found: v.len() });
        }
    }
    Ok(())
}

fn side_state<'a>(phi_i: &'a [f64], phi_j: &'a [f64], side: Side) -> &'a [f64] {
    match side {
        Side::I => phi_i,
        Side::J => phi_j,
    }
}

fn wrap(part: Part, nu: Nu, v: Vec<f64>) -> MultiplierVector {
    let l = MultiplierVector { coeffs: v, purity: part.purity() };
    match (part, nu) {
        (Part::Imaginary, Nu::A) => l.negated(),
        _ => l,
    }
}

/// Solves `(H_mod − E_side) L = −ξ W φ_other / 2` directly.
///
/// Signs follow the first-order conditions: in the imaginary case the
/// `i`-side and `j`-side right-hand sides differ by the antisymmetry of `W_I`,
/// and `L_a = −L_b`.
pub fn exact_multiplier<O: Overlaps>(src: &O, phi_i: &[f64], phi_j: &[f64], which: Side, nu: Nu) -> Result<MultiplierVector, Error> {
    check_dims(src, &[phi_i, phi_j])?;
    let (a, _) = shifted(src, side_state(phi_i, phi_j, which), true)?;
    let r = side_rhs(src, phi_i, phi_j, which);
    let v = solve(&a, &r)?;
    Ok(wrap(src.part(), nu, v))
}

/// `M(v) = vᵀ(H_mod − E)v − 2 vᵀ r`, with `v` the `b`-side coefficients.
///
/// In the real case `−2vᵀr = ⟨φ_other|W_R|L⟩`. In the imaginary case the same
/// linear term is used on the coefficient vector of `L = i·v`.
pub fn m_functional<O: Overlaps>(l: &MultiplierVector, src: &O, phi_i: &[f64], phi_j: &[f64], which: Side) -> Result<f64, Error> {
    m_value(l, src, phi_i, phi_j, which, 0.0, true)
}

/// [`m_functional`] plus `2·lam·⟨φ_side|v⟩`, with `E` the Rayleigh quotient.
pub fn m_functional_unnormalized<O: Overlaps>(l: &MultiplierVector, src: &O, phi_i: &[f64], phi_j: &[f64], which: Side, lam: f64) -> Result<f64, Error> {
    m_value(l, src, phi_i, phi_j, which, lam, false)
}

fn m_value<O: Overlaps>(l: &MultiplierVector, src: &O, phi_i: &[f64], phi_j: &[f64], which: Side, lam: f64, normalized: bool) -> Result<f64, Error> {
    check_dims(src, &[phi_i, phi_j, &l.coeffs])?;
    let phi = side_state(phi_i, phi_j, which);
    let (a, _) = shifted(src, phi, normalized)?;
    let r = side_rhs(src, phi_i, phi_j, which);
    let v = &l.coeffs;
    Ok(a.bilinear(v, v) - 2.0 * dot(v, &r) + 2.0 * lam * dot(phi, v))
}

/// Minimizer of [`m_functional_unnormalized`]: `(H_mod − E) v = r − lam·φ_side`.
pub fn exact_multiplier_unnormalized<O: Overlaps>(src: &O, phi_i: &[f64], phi_j: &[f64], which: Side, nu: Nu, lam: f64) -> Result<MultiplierVector, Error> {
    check_dims(src, &[phi_i, phi_j])?;
    let phi = side_state(phi_i, phi_j, which);
    let (a, _) = shifted(src, phi, false)?;
    let r: Vec<f64> = side_rhs(src, phi_i, phi_j, which).iter().zip(phi).map(|(r, p)| r - lam * p).collect();
    Ok(wrap(src.part(), nu, solve(&a, &r)?))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IterativeMethod {
    /// Sets `∂M/∂v = 0` and solves the resulting linear system.
    StationarySolve,
    /// Fixed-step gradient descent on `M` starting from `v = 0`.
    Descent { steps: usize, rate: f64, tolerance: Option<f64> },
}

pub fn iterative_multiplier<O: Overlaps>(src: &O, phi_i: &[f64], phi_j: &[f64], which: Side, nu: Nu, method: &IterativeMethod) -> Result<MultiplierVector, Error> {
    check_dims(src, &[phi_i, phi_j])?;
    let (a, _) = shifted(src, side_state(phi_i, phi_j, which), true)?;
    let r = side_rhs(src, phi_i, phi_j, which);
    let n = src.dim();
    // ∂M/∂v = (A + Aᵀ) v − 2r
    let hess = Mat::from_fn(n, |p, q| a[(p, q)] + a[(q, p)]);
    let v = match method {
        IterativeMethod::StationarySolve => solve(&hess, &r.iter().map(|x| 2.0 * x).collect::<Vec<_>>())?,
        IterativeMethod::Descent { steps, rate, tolerance } => {
            let mut v = vec![0.0; n];
            let mut met = false;
            for _ in 0..*steps {
                let g: Vec<f64> = hess.mul_vec(&v).iter().zip(&r).map(|(hv, rr)| hv - 2.0 * rr).collect();
                if let Some(tol) = tolerance {
                    if norm(&g) < *tol {
                        met = true;
                        break;
                    }
                }
                for (vi, gi) in v.iter_mut().zip(&g) {
                    *vi -= rate * gi;
                }
            }
            if let Some(tol) = tolerance {
                let g: Vec<f64> = hess.mul_vec(&v).iter().zip(&r).map(|(hv, rr)| hv - 2.0 * rr).collect();
                if !met && norm(&g) >= *tol {
                    return Err(Error::MaxIterations(*steps));
                }
            }
            v
        }
    };
    Ok(wrap(src.part(), nu, v))
}

struct Terms {
    value: Complex64,
    d_i: Vec<Complex64>,
    d_j: Vec<Complex64>,
}

/// Complex value of the six-term functional and its partial derivatives with
/// respect to the real components of `φ_i` and `φ_j`, multipliers and
/// energies held fixed.
fn terms<O: Overlaps>(src: &O, phi_i: &[f64], phi_j: &[f64], ls: &MultiplierSet, e_i: f64, e_j: f64) -> Result<Terms, Error> {
    let part = src.part();
    for l in [&ls.l_ia, &ls.l_ib, &ls.l_ja, &ls.l_jb] {
        if l.purity != part.purity() {
            return Err(Error::InvalidConfig("multiplier purity does not match the observable part".into()));
        }
        check_dims(src, &[&l.coeffs])?;
    }
    check_dims(src, &[phi_i, phi_j])?;
    let n = src.dim();
    let u = part.unit(); // W = u·M
    let h = src.h();
    let w = src.w();
    let wt = w.transpose();
    // λ[⟨φ_i|W|φ_j⟩ ∓ ⟨φ_j|W|φ_i⟩]: minus for real, plus for imaginary
    let lam_sign = match part {
        Part::Real => -1.0,
        Part::Imaginary => 1.0,
    };

    let cplx = |v: &[f64]| v.iter().map(|x| Complex64::new(*x, 0.0)).collect::<Vec<_>>();
    // (H − E) x for complex x
    let shifted_apply = |e: f64, x: &[Complex64]| -> Vec<Complex64> {
        (0..n).map(|r| (0..n).map(|c| x[c] * (h[(r, c)] - if r == c { e } else { 0.0 })).sum()).collect()
    };
    let dotc = |x: &[Complex64], y: &[Complex64]| -> Complex64 { x.iter().zip(y).map(|(a, b)| a * b).sum() };

    let pi = cplx(phi_i);
    let pj = cplx(phi_j);
    let l_ia: Vec<Complex64> = multiplier_as_complex(&ls.l_ia).iter().map(|z| z.conj()).collect();
    let l_ib = multiplier_as_complex(&ls.l_ib);
    let l_ja: Vec<Complex64> = multiplier_as_complex(&ls.l_ja).iter().map(|z| z.conj()).collect();
    let l_jb = multiplier_as_complex(&ls.l_jb);

    let w_ij = u * w.bilinear(phi_i, phi_j);
    let w_ji = u * w.bilinear(phi_j, phi_i);
    let hi_phi = shifted_apply(e_i, &pi);
    let hj_phi = shifted_apply(e_j, &pj);

    let value = w_ij
        + dotc(&l_ia, &hi_phi)
        + dotc(&hi_phi, &l_ib)
        + dotc(&l_ja, &hj_phi)
        + dotc(&hj_phi, &l_jb)
        + LAMBDA * (w_ij + lam_sign * w_ji);

    let w_pj = w.mul_vec(phi_j);
    let wt_pj = wt.mul_vec(phi_j);
    let wt_pi = wt.mul_vec(phi_i);
    let w_pi = w.mul_vec(phi_i);
    let sum_i: Vec<Complex64> = l_ia.iter().zip(&l_ib).map(|(a, b)| a + b).collect();
    let sum_j: Vec<Complex64> = l_ja.iter().zip(&l_jb).map(|(a, b)| a + b).collect();
    let hl_i = shifted_apply(e_i, &sum_i);
    let hl_j = shifted_apply(e_j, &sum_j);
    let d_i = (0..n).map(|k| u * w_pj[k] + hl_i[k] + LAMBDA * u * (w_pj[k] + lam_sign * wt_pj[k])).collect();
    let d_j = (0..n).map(|k| u * wt_pi[k] + hl_j[k] + LAMBDA * u * (wt_pi[k] + lam_sign * w_pi[k])).collect();
    Ok(Terms { value, d_i, d_j })
}

fn finish(part: Part, z: Complex64) -> Result<f64, Error> {
    let res = part.residue(z);
    if !res.is_finite() || res.abs() > RESIDUE_TOL {
        return Err(Error::ComplexResidue(res));
    }
    Ok(part.project(z))
}

pub fn functional_value<O: Overlaps>(src: &O, phi_i: &[f64], phi_j: &[f64], ls: &MultiplierSet, e_i: f64, e_j: f64) -> Result<f64, Error> {
    finish(src.part(), terms(src, phi_i, phi_j, ls, e_i, e_j)?.value)
}

/// Gradient over `(angles_i, angles_j)` with multipliers and the energies at
/// the current angles held fixed.
pub fn functional_gradient<O: Overlaps>(src: &O, angles_i: &HypersphericalAngles, angles_j: &HypersphericalAngles, ls: &MultiplierSet) -> Result<Vec<f64>, Error> {
    let phi_i = amplitudes(angles_i);
    let phi_j = amplitudes(angles_j);
    let e_i = src.h().bilinear(&phi_i, &phi_i);
    let e_j = src.h().bilinear(&phi_j, &phi_j);
    functional_gradient_frozen(src, angles_i, angles_j, ls, e_i, e_j)
}

/// As [`functional_gradient`] with explicit frozen energies.
pub fn functional_gradient_frozen<O: Overlaps>(src: &O, angles_i: &HypersphericalAngles, angles_j: &HypersphericalAngles, ls: &MultiplierSet, e_i: f64, e_j: f64) -> Result<Vec<f64>, Error> {
    let phi_i = amplitudes(angles_i);
    let phi_j = amplitudes(angles_j);
    let t = terms(src, &phi_i, &phi_j, ls, e_i, e_j)?;
    let part = src.part();
    let mut g = Vec::with_capacity(2 * (phi_i.len() - 1));
    for (angles, d) in [(angles_i, &t.d_i), (angles_j, &t.d_j)] {
        for col in amplitude_jacobian(angles) {
            g.push(col.iter().zip(d.iter()).map(|(c, z)| c * part.project(*z)).sum());
        }
    }
    Ok(g)
}

/// Functional for unnormalized states with the norm constraints
/// `lam_i(⟨φ_i|φ_i⟩ − 1) + lam_j(⟨φ_j|φ_j⟩ − 1)`. In the imaginary case the
/// multipliers `lam` are coefficients of `i`, like the returned value.
#[allow(clippy::too_many_arguments)]
pub fn functional_value_unnormalized<O: Overlaps>(src: &O, phi_i: &[f64], phi_j: &[f64], ls: &MultiplierSet, e_i: f64, e_j: f64, lam_i: f64, lam_j: f64) -> Result<f64, Error> {
    let t = terms(src, phi_i, phi_j, ls, e_i, e_j)?;
    let constraint = lam_i * (dot(phi_i, phi_i) - 1.0) + lam_j * (dot(phi_j, phi_j) - 1.0);
    finish(src.part(), t.value + src.part().unit() * constraint)
}

/// Gradient of [`functional_value_unnormalized`] over the raw coefficients of
/// `φ_i` then `φ_j`, everything else frozen.
#[allow(clippy::too_many_arguments)]
pub fn functional_gradient_unnormalized<O: Overlaps>(src: &O, phi_i: &[f64], phi_j: &[f64], ls: &MultiplierSet, e_i: f64, e_j: f64, lam_i: f64, lam_j: f64) -> Result<Vec<f64>, Error> {
    let t = terms(src, phi_i, phi_j, ls, e_i, e_j)?;
    let part = src.part();
    let gi = t.d_i.iter().zip(phi_i).map(|(z, p)| part.project(*z) + 2.0 * lam_i * p);
    let gj = t.d_j.iter().zip(phi_j).map(|(z, p)| part.project(*z) + 2.0 * lam_j * p);
    Ok(gi.chain(gj).collect())
}

/// `−⟨φ_i|W|φ_j⟩/2`, as a real number or as the coefficient of `i`.
pub fn lambda_ij<O: Overlaps>(phi_i: &[f64], phi_j: &[f64], src: &O) -> f64 {
    -0.5 * src.w().bilinear(phi_i, phi_j)
}

/// Energy as the Rayleigh quotient, for unnormalized states.
pub fn rayleigh(state: &[f64], h: &Mat) -> f64 {
    h.bilinear(state, state) / dot(state, state)
}
