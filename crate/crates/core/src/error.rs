use thiserror::Error;

use crate::field::Field;
use crate::lie::{IdealWitness, JacobiViolation};

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("mixed fields: {0} and {1}")]
    MixedFields(Field, Field),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("arity mismatch: form of degree {degree} given {given} arguments")]
    ArityMismatch { degree: usize, given: usize },

    #[error("degree {degree} out of range 0..={dim}")]
    DegreeOutOfRange { degree: usize, dim: usize },

    #[error("dimension {dim} exceeds the cap of {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("Jacobi identity fails at {} triple(s)", .0.len())]
    Jacobi(Vec<JacobiViolation>),

    #[error("subspace is not an ideal: {0}")]
    NotAnIdeal(IdealWitness),

    #[error("basis vectors are linearly dependent")]
    DependentBasis,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid document: {0}")]
    Document(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
