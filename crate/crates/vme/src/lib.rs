//! Variational estimation of observable matrix elements between Hamiltonian
//! eigenstates, with exact and shot-noise overlap estimators.

pub mod ansatz;
pub mod cli;
pub mod error;
pub mod estimator;
pub mod experiments;
pub mod linalg;
pub mod pauli_algebra;
pub mod variational_core;

pub use error::Error;
