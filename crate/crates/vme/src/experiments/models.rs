//! Built-in one- and two-qubit problems and user-supplied ones.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::ansatz::{angles_from_amplitudes, HypersphericalAngles};
use crate::error::Error;
use crate::pauli_algebra::{conjugate_to_computational, eig_hermitian, hadamard, hermitian_split, to_dense, DenseHermitian, PauliSum};
use crate::variational_core::{Part, ProblemInstance};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModelSpec {
    OneQubit,
    TwoQubit,
    Custom { hamiltonian: PauliSum, w: DenseHermitian },
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Observable of the one-qubit model in the `(|+⟩, |−⟩)` basis.
pub fn w_diag_one_qubit() -> DenseHermitian {
    DenseHermitian::from_rows(&[vec![c(5.0, 0.0), c(2.0, -2.0)], vec![c(2.0, 2.0), c(3.0, 0.0)]]).expect("static matrix")
}

/// Observable of the two-qubit model in the eigenbasis of its Hamiltonian,
/// ordered by ascending energy.
pub fn w_diag_two_qubit() -> DenseHermitian {
    DenseHermitian::from_rows(&[
        vec![c(1.0, 0.0), c(3.0, 1.0), c(5.0, -3.0), c(13.0, 8.0)],
        vec![c(3.0, -1.0), c(4.0, 0.0), c(20.0, 5.0), c(25.0, 10.0)],
        vec![c(5.0, 3.0), c(20.0, -5.0), c(7.0, 0.0), c(6.0, -15.0)],
        vec![c(13.0, -8.0), c(25.0, -10.0), c(6.0, 15.0), c(10.0, 0.0)],
    ])
    .expect("static matrix")
}

pub fn h_one_qubit() -> PauliSum {
    PauliSum::from_labels(&[(1.0, "X")]).expect("static labels")
}

pub fn h_two_qubit() -> PauliSum {
    PauliSum::from_labels(&[(2.0, "XI"), (1.0, "IX"), (2.0, "ZX")]).expect("static labels")
}

/// A fully resolved problem: Hamiltonian, observable in both bases, and the
/// Hamiltonian eigensystem.
#[derive(Clone, Debug)]
pub struct Model {
    pub hamiltonian: PauliSum,
    /// Observable in the computational basis.
    pub w: DenseHermitian,
    /// Observable in the energy eigenbasis, ascending energy.
    pub w_diag: DenseHermitian,
    pub energies: Vec<f64>,
    /// Real eigenvectors of the Hamiltonian, ascending energy.
    pub eigenstates: Vec<Vec<f64>>,
}

impl Model {
    pub fn resolve(spec: &ModelSpec) -> Result<Model, Error> {
        let hamiltonian = match spec {
            ModelSpec::OneQubit => h_one_qubit(),
            ModelSpec::TwoQubit => h_two_qubit(),
            ModelSpec::Custom { hamiltonian, .. } => hamiltonian.clone(),
        };
        let h = to_dense(&hamiltonian);
        let (energies, vecs) = eig_hermitian(&h)?;
        for w in energies.windows(2) {
            if w[1] - w[0] <= 1e-9 {
                return Err(Error::InvalidConfig("the Hamiltonian spectrum is degenerate".into()));
            }
        }
        let w = match spec {
            ModelSpec::OneQubit => conjugate_to_computational(&w_diag_one_qubit(), &hadamard())?,
            ModelSpec::TwoQubit => conjugate_to_computational(&w_diag_two_qubit(), &vecs)?,
            ModelSpec::Custom { w, .. } => {
                if w.dim() != h.dim() {
                    return Err(Error::DimensionMismatch { expected: h.dim(), found: w.dim() });
                }
                w.check_hermitian()?;
                w.clone()
            }
        };
        // Indexed like `energies`. The built-in matrices are taken verbatim so
        // that targets stay exact; the one-qubit matrix is stored in
        // (|+⟩, |−⟩) order and is reversed here.
        let w_diag = match spec {
            ModelSpec::OneQubit => {
                let d = w_diag_one_qubit();
                DenseHermitian::from_fn(2, |r, k| d.get(1 - r, 1 - k))
            }
            ModelSpec::TwoQubit => w_diag_two_qubit(),
            ModelSpec::Custom { .. } => vecs.adjoint().matmul(&w).matmul(&vecs),
        };
        let eigenstates = (0..h.dim())
            .map(|k| {
                let col = vecs.column(k);
                if col.iter().any(|z| z.im.abs() > 1e-10) {
                    return Err(Error::InvalidConfig("Hamiltonian eigenvectors must be real".into()));
                }
                Ok(col.iter().map(|z| z.re).collect())
            })
            .collect::<Result<Vec<Vec<f64>>, Error>>()?;
        Ok(Model { hamiltonian, w, w_diag, energies, eigenstates })
    }

    pub fn dim(&self) -> usize {
        self.w.dim()
    }

    pub fn problem(&self, part: Part) -> Result<ProblemInstance, Error> {
        let (wr, wi) = hermitian_split(&self.w)?;
        ProblemInstance::new(self.hamiltonian.clone(), if part == Part::Real { wr } else { wi }, part)
    }

    /// Hyperspherical angles of each eigenstate.
    pub fn optimal_angles(&self) -> Result<Vec<HypersphericalAngles>, Error> {
        self.eigenstates.iter().map(|v| angles_from_amplitudes(v)).collect()
    }

    /// Distinct real parts (or imaginary coefficients) of the eigenbasis
    /// observable, ascending.
    pub fn targets(&self, part: Part) -> Vec<f64> {
        let n = self.w_diag.dim();
        let mut v: Vec<f64> = (0..n)
            .flat_map(|r| (0..n).map(move |k| (r, k)))
            .map(|(r, k)| {
                let z = self.w_diag.get(r, k);
                if part == Part::Real {
                    z.re
                } else {
                    z.im
                }
            })
            .collect();
        v.sort_by(f64::total_cmp);
        v.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
        v.iter().map(|x| if x.abs() < 1e-12 { 0.0 } else { *x }).collect()
    }
}

pub fn default_targets(spec: &ModelSpec, part: Part) -> Result<Vec<f64>, Error> {
    Ok(Model::resolve(spec)?.targets(part))
}
