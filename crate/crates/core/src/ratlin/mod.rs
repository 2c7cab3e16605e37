//! Exact rational arithmetic and the linear algebra kernel.

mod matrix;
mod scalar;
mod sparse;

pub use matrix::{Inertia, Matrix, Rref, SparseMatrix};
pub use scalar::{q, Scalar};
pub use sparse::{EchelonSpace, SparseVec};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}
