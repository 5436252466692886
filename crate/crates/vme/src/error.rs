use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not Hermitian (max deviation {0:.3e})")]
    NonHermitianInput(f64),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension {0} is not supported here")]
    UnsupportedDimension(usize),
    #[error("eigensolver did not converge after {0} sweeps")]
    ConvergenceFailure(usize),
    #[error("state norm {0} differs from 1")]
    NormViolation(f64),
    #[error("energy expectation {0:.3e} is too close to zero")]
    NearZeroEnergy(f64),
    #[error("linear system is singular or ill-conditioned")]
    SingularSystem,
    #[error("iteration limit {0} reached before tolerance")]
    MaxIterations(usize),
    #[error("functional has an unexpected complex residue {0:.3e}")]
    ComplexResidue(f64),
    #[error("value {value} exceeds bound {bound}")]
    BoundViolation { value: f64, bound: f64 },
    #[error("group {0} has no records")]
    EmptyGroup(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid Pauli label: {0}")]
    InvalidPauli(String),
}
