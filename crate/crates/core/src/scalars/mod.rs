//! Exact arithmetic over ℚ, 𝔽_p and ℤ, and the dense matrix routines the rest
//! of the crate is built on. Nothing here uses floating point.

mod linsolve;
mod matrix;
mod scalar;

pub use linsolve::{LinearSystem, SolutionSet};
pub use matrix::{mat_mul, solve_affine, try_invert, Matrix};
pub use scalar::{Scalar, ScalarSpec};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("scalar ring mismatch: {left} vs {right}")]
    ScalarSpecMismatch { left: ScalarSpec, right: ScalarSpec },
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is not invertible over the base ring (det = {det})")]
    NotInvertible { det: Scalar },
    #[error("linear solving over the integers is not supported")]
    IntegerSpecUnsupported,
    #[error("{0} is not a supported prime modulus")]
    InvalidModulus(u64),
    #[error("cannot read {text:?} as an element of {spec}")]
    BadScalar { text: String, spec: ScalarSpec },
}
